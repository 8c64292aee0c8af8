// Finite-dimensional representations of a bound quiver and the morphisms
// between them.
//
// Comodule dictionary: a finite-dimensional right comodule is a
// representation where an arrow u -> v acts by a dim(v) x dim(u) matrix;
// a basis path of a coideal sits at its source vertex. Under this
// convention the projective at v has top S(v) and is spanned by paths
// leaving v, and the injective at v has socle S(v) and is dual to the paths
// entering v.
#pragma once

#include "arcoalg/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace arcoalg::rep {

using DimVector = std::map<VertexId, int>;  // only nonzero entries

class Representation {
public:
    Representation() = default;
    /// Validates matrix shapes and every relation; throws ContractViolation.
    Representation(PresentationPtr pres, std::vector<int> dims, std::vector<Matrix> actions);

    static Representation zero(PresentationPtr pres);
    static Representation simple(PresentationPtr pres, VertexId v);
    /// Builds from sparse data; vertices/arrows missing from the maps get
    /// dimension zero / zero matrices.
    static Representation from_maps(PresentationPtr pres, const std::map<VertexId, int>& dims,
                                    const std::map<ArrowId, Matrix>& actions);

    const PresentationPtr& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_->quiver(); }

    int dim(VertexId v) const { return dims_[quiver().vertex_index(v)]; }
    int dim_at(std::size_t vertex_index) const { return dims_[vertex_index]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    DimVector dim_vector() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& action(ArrowId a) const { return actions_[quiver().arrow_index(a)]; }
    const std::vector<Matrix>& actions() const { return actions_; }

    /// Composite matrix of a path walked from s (identity for the empty path).
    Matrix path_matrix(VertexId s, const Path& p) const;
    /// Action of a combination of basis classes, all from s to t.
    Matrix class_matrix(VertexId s, VertexId t, const Combination& c) const;

private:
    PresentationPtr pres_;
    std::vector<int> dims_;
    std::vector<Matrix> actions_;
};

class Morphism {
public:
    Morphism() = default;
    /// Validates block shapes and the intertwining identity.
    Morphism(Representation source, Representation target, std::vector<Matrix> blocks);

    static Morphism identity(const Representation& m);
    static Morphism zero(const Representation& source, const Representation& target);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& block(VertexId v) const { return blocks_[source_.quiver().vertex_index(v)]; }
    const std::vector<Matrix>& blocks() const { return blocks_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;
    bool is_zero() const;

    /// this then other (other ∘ this).
    Morphism then(const Morphism& other) const;
    Morphism operator+(const Morphism& o) const;
    Morphism operator*(const Rational& s) const;
    /// Vertexwise k-th power of an endomorphism.
    Morphism power(unsigned k) const;

private:
    Representation source_;
    Representation target_;
    std::vector<Matrix> blocks_;
};

struct ShortExactSeq {
    Representation left;
    Representation middle;
    Representation right;
    Morphism inj;
    Morphism surj;
    bool non_split = false;
};

/// Validates injectivity, surjectivity, image = kernel and dim additivity.
bool is_exact(const ShortExactSeq& s);

Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);

/// Sub/quotient object together with its structure map.
struct SubObject {
    Representation object;
    Morphism map;  // inclusion into, or projection from, the ambient object
};

/// Subrepresentation spanned vertexwise by the given column bases, which
/// must be stable under the arrows.
SubObject subrepresentation(const Representation& m, const std::vector<Matrix>& bases);
/// Quotient by a subrepresentation given by vertexwise column bases.
SubObject quotient(const Representation& m, const std::vector<Matrix>& bases);

bool same_presentation(const Representation& a, const Representation& b);

std::string dim_vector_string(const DimVector& d);

}  // namespace arcoalg::rep

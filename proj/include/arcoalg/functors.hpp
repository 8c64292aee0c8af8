// Hom spaces, kernels/cokernels, covers and envelopes, and the functor stack
// syzygy, cosyzygy, star, D, Nakayama, transpose and DTr.
//
// The algebra presented here is the dual algebra of a self-projective
// coalgebra, windowed. star(N) = ⊕_w DHom(I_w, N) where I_w runs over the
// complete projective-injectives, indexed by socle vertex w; an arrow
// u -> v acts on star(N) through precomposition with the map I_v -> I_u it
// induces. star lands over the opposite presentation; so do D and Tr.
#pragma once

#include "arcoalg/representation.hpp"

#include <vector>

namespace arcoalg::rep {

/// Basis of Hom(source, target), plus the coordinates of any morphism in it.
class HomSpace {
public:
    HomSpace(const Representation& source, const Representation& target);

    const std::vector<Morphism>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::vector<Rational> coordinates(const Morphism& f) const;
    Morphism combination(const std::vector<Rational>& coeffs) const;

private:
    Representation source_;
    Representation target_;
    std::vector<Morphism> basis_;
    // flattened unknown index of each free variable, one per basis element
    std::vector<std::size_t> free_;
    std::vector<std::size_t> offsets_;  // start of each vertex block
};

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

SubObject kernel(const Morphism& f);
SubObject image(const Morphism& f);
SubObject cokernel(const Morphism& f);

SubObject socle(const Representation& m);
SubObject radical(const Representation& m);
SubObject top(const Representation& m);

/// dim rad^k(m) for k = 0, 1, ... until zero, vertexwise.
std::vector<DimVector> radical_series(const Representation& m);
/// dim soc^k(m) for k = 1, 2, ... until the whole module, vertexwise.
std::vector<DimVector> socle_series(const Representation& m);

/// Path module at v: spanned by classes leaving v, graded by their target.
Representation projective(PresentationPtr pres, VertexId v);
/// Dual path module at v: dual to the classes entering v.
Representation injective(PresentationPtr pres, VertexId v);

/// Morphism determined by the image of the top generator of projective(v).
Morphism from_projective(PresentationPtr pres, VertexId v, const Representation& m,
                         const std::vector<Rational>& element);
/// Morphism to injective(v) determined by a functional on m at v.
Morphism to_injective(PresentationPtr pres, VertexId v, const Representation& m,
                      const std::vector<Rational>& functional);
/// The map injective(target) -> injective(source) induced by an arrow.
Morphism injective_arrow_map(PresentationPtr pres, ArrowId a);

struct Cover {
    Representation object;
    Morphism map;
};

/// Throws WindowExceeded when a needed projective is window-truncated.
Cover projective_cover(const Representation& m);
Cover injective_envelope(const Representation& m);

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
/// Ω^k for k > 0, Ω^{-k} for k < 0.
Representation syzygy_power(const Representation& m, int k);

Representation star(const Representation& m);
/// f: M -> N gives star(f): star(N) -> star(M).
Morphism star(const Morphism& f);

Representation vector_dual(const Representation& m);
/// f: M -> N gives D f: DN -> DM.
Morphism vector_dual(const Morphism& f);

Representation nakayama(const Representation& m);
Representation transpose(const Representation& m);
Representation dtr(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

}  // namespace arcoalg::rep

// Bound quivers: a finite quiver window, relations, and the finite basis of
// nonzero path classes of the quotient algebra.
//
// Paths are stored in traversal order: path[0] is the first arrow walked, so
// the path a_j ... a_i (written right to left) is {a_i, ..., a_j}.
#pragma once

#include "arcoalg/exactlin.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcoalg::rep {

using lin::Matrix;
using lin::Rational;
using VertexId = int;
using ArrowId = int;
using Path = std::vector<ArrowId>;

/// A (co)presentation needed a projective or injective that the finite
/// window cannot represent faithfully.
class WindowExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    ArrowId id = 0;
    VertexId source = 0;
    VertexId target = 0;
    std::string label;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(VertexId v) const { return vertex_index_.contains(v); }
    bool has_arrow(ArrowId a) const { return arrow_index_.contains(a); }
    std::size_t vertex_index(VertexId v) const;
    std::size_t arrow_index(ArrowId a) const;
    const Arrow& arrow(ArrowId a) const { return arrows_[arrow_index(a)]; }

    /// Arrows leaving / entering a vertex, in declaration order.
    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

    /// Same vertices, every arrow reversed; labels get an "^op" suffix.
    Quiver opposite() const;

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    std::vector<VertexId> vertices_;
    std::vector<Arrow> arrows_;
    std::map<VertexId, std::size_t> vertex_index_;
    std::map<ArrowId, std::size_t> arrow_index_;
    std::map<VertexId, std::vector<ArrowId>> out_;
    std::map<VertexId, std::vector<ArrowId>> in_;
};

struct Term {
    Rational coefficient;
    Path path;
    bool operator==(const Term&) const = default;
};

struct Relation {
    VertexId source = 0;
    VertexId target = 0;
    std::vector<Term> terms;
    bool operator==(const Relation&) const = default;
};

/// One nonzero class of the quotient path algebra, represented by a path.
struct PathClass {
    VertexId source = 0;
    VertexId target = 0;
    Path path;
    std::size_t length() const { return path.size(); }
};

/// Sparse linear combination of basis classes: (index into basis(), coefficient).
using Combination = std::vector<std::pair<std::size_t, Rational>>;

class AlgebraPresentation;
using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

class AlgebraPresentation : public std::enable_shared_from_this<AlgebraPresentation> {
public:
    /// Projectives/injectives at vertices outside `complete_projectives` /
    /// `complete_injectives` are truncated by the window; covers and
    /// envelopes that need them raise WindowExceeded. An empty optional
    /// means every vertex is complete.
    static PresentationPtr make(Quiver quiver, std::vector<Relation> relations, int nilpotency_bound,
                                std::optional<std::set<VertexId>> complete_projectives = std::nullopt,
                                std::optional<std::set<VertexId>> complete_injectives = std::nullopt,
                                std::string name = {});

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int nilpotency_bound() const { return bound_; }
    const std::string& name() const { return name_; }

    /// All nonzero path classes, sorted by length, then arrow ids, then source.
    const std::vector<PathClass>& basis() const { return basis_; }
    /// Indices into basis() of the classes from s to t, in basis order.
    const std::vector<std::size_t>& classes_between(VertexId s, VertexId t) const;
    /// Index of the idempotent class at v.
    std::size_t idempotent(VertexId v) const;

    /// Rewrites a path starting at s (possibly empty) into basis classes.
    Combination reduce(VertexId s, const Path& p) const;
    /// Product "first x, then y" of two basis classes.
    Combination multiply(std::size_t x, std::size_t y) const;

    bool projective_complete(VertexId v) const;
    bool injective_complete(VertexId v) const;
    const std::set<VertexId>& complete_projectives() const { return complete_proj_; }
    const std::set<VertexId>& complete_injectives() const { return complete_inj_; }

    /// Presentation of the opposite algebra (modules over it are the left
    /// modules here). opposite()->opposite() is the same object while this
    /// one is alive.
    PresentationPtr opposite() const;

    /// Canonical text identifying the presentation structurally.
    const std::string& fingerprint() const { return fingerprint_; }

private:
    AlgebraPresentation() = default;
    void build();

    Quiver quiver_;
    std::vector<Relation> relations_;
    int bound_ = 1;
    std::string name_;
    std::set<VertexId> complete_proj_;
    std::set<VertexId> complete_inj_;

    std::vector<PathClass> basis_;
    std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> between_;
    std::map<VertexId, std::size_t> idempotent_;
    // normal form of every path of length < bound, keyed by (source, path)
    std::map<std::pair<VertexId, Path>, Combination> normal_form_;
    std::string fingerprint_;

    mutable std::once_flag opposite_once_;
    mutable PresentationPtr opposite_;
    std::weak_ptr<const AlgebraPresentation> opposite_of_;
};

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Path target, walking from s; throws ContractViolation if not composable.
VertexId walk(const Quiver& q, VertexId s, const Path& p);

}  // namespace arcoalg::rep

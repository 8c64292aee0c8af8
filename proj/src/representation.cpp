#include "arcoalg/representation.hpp"

#include <numeric>
#include <sstream>

namespace arcoalg::rep {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// Every path of length `bound` must act as zero; depth first, pruned on
// zero partial products.
bool check_nilpotency(const Representation& m) {
    const Quiver& q = m.quiver();
    const int bound = m.presentation()->nilpotency_bound();
    struct Frame {
        VertexId at;
        Matrix product;
        int depth;
    };
    for (VertexId s : q.vertices()) {
        if (m.dim(s) == 0) continue;
        std::vector<Frame> stack{{s, Matrix::identity(m.dim(s)), 0}};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            if (f.product.is_zero()) continue;
            if (f.depth == bound) return false;
            for (ArrowId a : q.out_arrows(f.at)) {
                const VertexId t = q.arrow(a).target;
                stack.push_back({t, m.action(a) * f.product, f.depth + 1});
            }
        }
    }
    return true;
}

}  // namespace

Representation::Representation(PresentationPtr pres, std::vector<int> dims, std::vector<Matrix> actions)
    : pres_(std::move(pres)), dims_(std::move(dims)), actions_(std::move(actions)) {
    if (!pres_) throw ContractViolation("representation without presentation");
    const Quiver& q = pres_->quiver();
    if (dims_.size() != q.vertices().size()) throw ContractViolation("dimension list length mismatch");
    if (actions_.size() != q.arrows().size()) throw ContractViolation("action list length mismatch");
    for (int d : dims_)
        if (d < 0) throw ContractViolation("negative dimension");
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
        const Arrow& a = q.arrows()[i];
        const auto rows = static_cast<std::size_t>(dim(a.target));
        const auto cols = static_cast<std::size_t>(dim(a.source));
        if (actions_[i].rows() != rows || actions_[i].cols() != cols)
            throw ContractViolation("arrow " + a.label + " acts by a " + shape(actions_[i]) + " matrix, expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto& rel : pres_->relations()) {
        const auto rows = static_cast<std::size_t>(dim(rel.target));
        const auto cols = static_cast<std::size_t>(dim(rel.source));
        if (rows == 0 || cols == 0) continue;
        Matrix sum(rows, cols);
        for (const auto& t : rel.terms) sum += path_matrix(rel.source, t.path) * t.coefficient;
        if (!sum.is_zero()) throw ContractViolation("representation violates a relation");
    }
    if (!check_nilpotency(*this)) throw ContractViolation("representation has a nonzero path beyond the bound");
}

Representation Representation::zero(PresentationPtr pres) {
    const Quiver& q = pres->quiver();
    return Representation(pres, std::vector<int>(q.vertices().size(), 0), std::vector<Matrix>(q.arrows().size()));
}

Representation Representation::simple(PresentationPtr pres, VertexId v) {
    const Quiver& q = pres->quiver();
    std::vector<int> dims(q.vertices().size(), 0);
    dims[q.vertex_index(v)] = 1;
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows())
        acts.emplace_back(a.target == v ? 1 : 0, a.source == v ? 1 : 0);
    return Representation(std::move(pres), std::move(dims), std::move(acts));
}

Representation Representation::from_maps(PresentationPtr pres, const std::map<VertexId, int>& dims,
                                         const std::map<ArrowId, Matrix>& actions) {
    const Quiver& q = pres->quiver();
    std::vector<int> d(q.vertices().size(), 0);
    for (const auto& [v, n] : dims) d[q.vertex_index(v)] = n;
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        auto it = actions.find(a.id);
        if (it != actions.end())
            acts.push_back(it->second);
        else
            acts.emplace_back(d[q.vertex_index(a.target)], d[q.vertex_index(a.source)]);
    }
    for (const auto& [id, m] : actions) q.arrow_index(id);
    return Representation(std::move(pres), std::move(d), std::move(acts));
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

DimVector Representation::dim_vector() const {
    DimVector out;
    const auto& vs = quiver().vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (dims_[i]) out[vs[i]] = dims_[i];
    return out;
}

Matrix Representation::path_matrix(VertexId s, const Path& p) const {
    Matrix m = Matrix::identity(dim(s));
    VertexId at = s;
    for (ArrowId id : p) {
        const Arrow& a = quiver().arrow(id);
        if (a.source != at) throw ContractViolation("path is not composable");
        m = action(id) * m;
        at = a.target;
    }
    return m;
}

Matrix Representation::class_matrix(VertexId s, VertexId t, const Combination& c) const {
    Matrix m(dim(t), dim(s));
    for (const auto& [idx, coeff] : c) {
        const PathClass& pc = pres_->basis()[idx];
        if (pc.source != s || pc.target != t) throw ContractViolation("combination endpoints mismatch");
        m += path_matrix(s, pc.path) * coeff;
    }
    return m;
}

bool same_presentation(const Representation& a, const Representation& b) {
    return a.presentation() && b.presentation() && same_presentation(*a.presentation(), *b.presentation());
}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    if (!same_presentation(source_, target_)) throw ContractViolation("morphism between different presentations");
    const Quiver& q = source_.quiver();
    if (blocks_.size() != q.vertices().size()) throw ContractViolation("morphism block count mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].rows() != static_cast<std::size_t>(target_.dim_at(i)) ||
            blocks_[i].cols() != static_cast<std::size_t>(source_.dim_at(i)))
            throw ContractViolation("morphism block has shape " + shape(blocks_[i]));
    for (const auto& a : q.arrows()) {
        const auto u = q.vertex_index(a.source), v = q.vertex_index(a.target);
        if (blocks_[v] * source_.action(a.id) != target_.action(a.id) * blocks_[u])
            throw ContractViolation("morphism does not intertwine arrow " + a.label);
    }
}

Morphism Morphism::identity(const Representation& m) {
    std::vector<Matrix> blocks;
    for (int d : m.dims()) blocks.push_back(Matrix::identity(d));
    return Morphism(m, m, std::move(blocks));
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < source.dims().size(); ++i) blocks.emplace_back(target.dim_at(i), source.dim_at(i));
    return Morphism(source, target, std::move(blocks));
}

bool Morphism::is_injective() const {
    for (const auto& b : blocks_)
        if (lin::rank(b) != b.cols()) return false;
    return true;
}

bool Morphism::is_surjective() const {
    for (const auto& b : blocks_)
        if (lin::rank(b) != b.rows()) return false;
    return true;
}

bool Morphism::is_isomorphism() const {
    for (const auto& b : blocks_)
        if (!lin::is_invertible(b)) return false;
    return true;
}

bool Morphism::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

Morphism Morphism::then(const Morphism& other) const {
    if (!same_presentation(target_, other.source_) || target_.dims() != other.source_.dims())
        throw ContractViolation("morphisms are not composable");
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(other.blocks_[i] * blocks_[i]);
    return Morphism(source_, other.target_, std::move(blocks));
}

Morphism Morphism::operator+(const Morphism& o) const {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + o.blocks_[i]);
    return Morphism(source_, target_, std::move(blocks));
}

Morphism Morphism::operator*(const Rational& s) const {
    std::vector<Matrix> blocks;
    for (const auto& b : blocks_) blocks.push_back(b * s);
    return Morphism(source_, target_, std::move(blocks));
}

Morphism Morphism::power(unsigned k) const {
    if (source_.dims() != target_.dims()) throw ContractViolation("power of a non-endomorphism");
    std::vector<Matrix> blocks;
    for (const auto& b : blocks_) blocks.push_back(lin::power(b, k));
    return Morphism(source_, target_, std::move(blocks));
}

bool is_exact(const ShortExactSeq& s) {
    if (!s.inj.is_injective() || !s.surj.is_surjective()) return false;
    const auto& q = s.middle.quiver();
    for (std::size_t i = 0; i < q.vertices().size(); ++i) {
        if (s.middle.dim_at(i) != s.left.dim_at(i) + s.right.dim_at(i)) return false;
        if (!(s.surj.blocks()[i] * s.inj.blocks()[i]).is_zero()) return false;
    }
    // composite zero plus dimension count gives image = kernel
    return true;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw ContractViolation("direct sum of nothing");
    const auto& pres = parts.front().presentation();
    for (const auto& p : parts)
        if (!same_presentation(p, parts.front())) throw ContractViolation("direct sum across presentations");
    const Quiver& q = pres->quiver();
    std::vector<int> dims(q.vertices().size(), 0);
    for (const auto& p : parts)
        for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += p.dim_at(i);
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.actions()[a]);
        acts.push_back(lin::block_diagonal(blocks));
    }
    return Representation(pres, std::move(dims), std::move(acts));
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({a, b}); }

SubObject subrepresentation(const Representation& m, const std::vector<Matrix>& bases) {
    const Quiver& q = m.quiver();
    if (bases.size() != q.vertices().size()) throw ContractViolation("subrepresentation basis count mismatch");
    std::vector<int> dims;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i].rows() != static_cast<std::size_t>(m.dim_at(i)))
            throw ContractViolation("subrepresentation basis lives in the wrong space");
        dims.push_back(static_cast<int>(bases[i].cols()));
    }
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        const auto u = q.vertex_index(a.source), v = q.vertex_index(a.target);
        auto x = lin::solve(bases[v], m.action(a.id) * bases[u]);
        if (!x) throw ContractViolation("subspace is not stable under arrow " + a.label);
        acts.push_back(std::move(*x));
    }
    Representation sub(m.presentation(), std::move(dims), std::move(acts));
    Morphism inc(sub, m, bases);
    return {std::move(sub), std::move(inc)};
}

SubObject quotient(const Representation& m, const std::vector<Matrix>& bases) {
    const Quiver& q = m.quiver();
    if (bases.size() != q.vertices().size()) throw ContractViolation("quotient basis count mismatch");
    std::vector<Matrix> proj, right_inv;
    std::vector<int> dims;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        proj.push_back(lin::cokernel_projection(bases[i], static_cast<std::size_t>(m.dim_at(i))));
        dims.push_back(static_cast<int>(proj.back().rows()));
        right_inv.push_back(*lin::solve(proj.back(), Matrix::identity(proj.back().rows())));
    }
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        const auto u = q.vertex_index(a.source), v = q.vertex_index(a.target);
        acts.push_back(proj[v] * m.action(a.id) * right_inv[u]);
    }
    Representation quo(m.presentation(), std::move(dims), std::move(acts));
    Morphism pi(m, quo, std::move(proj));
    return {std::move(quo), std::move(pi)};
}

std::string dim_vector_string(const DimVector& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, n] : d) {
        if (!first) os << ' ';
        first = false;
        os << v << ':' << n;
    }
    return os.str();
}

}  // namespace arcoalg::rep

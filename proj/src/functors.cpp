#include "arcoalg/functors.hpp"

#include <numeric>

namespace arcoalg::rep {

namespace {

std::size_t sz(int d) { return static_cast<std::size_t>(d); }

std::vector<Matrix> zero_bases(const Representation& m) {
    std::vector<Matrix> out;
    for (int d : m.dims()) out.emplace_back(sz(d), 0);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Hom

HomSpace::HomSpace(const Representation& source, const Representation& target) : source_(source), target_(target) {
    if (!same_presentation(source, target)) throw ContractViolation("Hom between different presentations");
    const Quiver& q = source.quiver();
    const std::size_t nv = q.vertices().size();
    offsets_.resize(nv + 1, 0);
    for (std::size_t i = 0; i < nv; ++i)
        offsets_[i + 1] = offsets_[i] + sz(target.dim_at(i)) * sz(source.dim_at(i));
    const std::size_t unknowns = offsets_[nv];

    // X_v A - B X_u = 0 for each arrow u -> v
    std::size_t rows = 0;
    for (const auto& a : q.arrows()) rows += sz(target.dim(a.target)) * sz(source.dim(a.source));
    Matrix c(rows, unknowns);
    std::size_t row = 0;
    for (const auto& a : q.arrows()) {
        const std::size_t u = q.vertex_index(a.source), v = q.vertex_index(a.target);
        const Matrix& A = source.action(a.id);
        const Matrix& B = target.action(a.id);
        const std::size_t mu = sz(source.dim_at(u)), mv = sz(source.dim_at(v));
        const std::size_t nu = sz(target.dim_at(u)), nvv = sz(target.dim_at(v));
        for (std::size_t r = 0; r < nvv; ++r)
            for (std::size_t col = 0; col < mu; ++col, ++row) {
                for (std::size_t k = 0; k < mv; ++k)
                    if (sgn(A(k, col)) != 0) c(row, offsets_[v] + r * mv + k) += A(k, col);
                for (std::size_t k = 0; k < nu; ++k)
                    if (sgn(B(r, k)) != 0) c(row, offsets_[u] + k * mu + col) -= B(r, k);
            }
    }
    const lin::Rref red = lin::rref(c);
    std::vector<bool> pivot(unknowns, false);
    for (auto p : red.pivot_cols) pivot[p] = true;
    for (std::size_t x = 0; x < unknowns; ++x)
        if (!pivot[x]) free_.push_back(x);

    for (std::size_t f : free_) {
        std::vector<Rational> flat(unknowns);
        flat[f] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) flat[red.pivot_cols[r]] = -red.reduced(r, f);
        std::vector<Matrix> blocks;
        for (std::size_t i = 0; i < nv; ++i) {
            const std::size_t rr = sz(target.dim_at(i)), cc = sz(source.dim_at(i));
            Matrix b(rr, cc);
            for (std::size_t x = 0; x < rr; ++x)
                for (std::size_t y = 0; y < cc; ++y) b(x, y) = flat[offsets_[i] + x * cc + y];
            blocks.push_back(std::move(b));
        }
        basis_.emplace_back(source, target, std::move(blocks));
    }
}

std::vector<Rational> HomSpace::coordinates(const Morphism& f) const {
    std::vector<Rational> out;
    out.reserve(free_.size());
    const auto& blocks = f.blocks();
    std::size_t vi = 0;
    for (std::size_t x : free_) {
        while (offsets_[vi + 1] <= x) ++vi;
        const std::size_t local = x - offsets_[vi];
        const std::size_t cc = blocks[vi].cols();
        out.push_back(blocks[vi](local / cc, local % cc));
    }
    return out;
}

Morphism HomSpace::combination(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw ContractViolation("coefficient count mismatch");
    Morphism f = Morphism::zero(source_, target_);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (sgn(coeffs[k]) != 0) f = f + basis_[k] * coeffs[k];
    return f;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n).basis(); }
std::size_t hom_dim(const Representation& m, const Representation& n) { return HomSpace(m, n).dim(); }

// ---------------------------------------------------------------- sub/quotients

SubObject kernel(const Morphism& f) {
    std::vector<Matrix> bases;
    for (const auto& b : f.blocks()) bases.push_back(lin::nullspace_basis(b));
    return subrepresentation(f.source(), bases);
}

SubObject image(const Morphism& f) {
    std::vector<Matrix> bases;
    for (const auto& b : f.blocks()) bases.push_back(lin::image_basis(b));
    return subrepresentation(f.target(), bases);
}

SubObject cokernel(const Morphism& f) {
    std::vector<Matrix> bases;
    for (const auto& b : f.blocks()) bases.push_back(lin::image_basis(b));
    return quotient(f.target(), bases);
}

SubObject socle(const Representation& m) {
    const Quiver& q = m.quiver();
    std::vector<Matrix> bases;
    for (VertexId v : q.vertices()) {
        Matrix stacked(0, sz(m.dim(v)));
        for (ArrowId a : q.out_arrows(v)) stacked = lin::vstack(stacked, m.action(a));
        bases.push_back(lin::nullspace_basis(stacked));
    }
    return subrepresentation(m, bases);
}

SubObject radical(const Representation& m) {
    const Quiver& q = m.quiver();
    std::vector<Matrix> bases;
    for (VertexId v : q.vertices()) {
        Matrix images(sz(m.dim(v)), 0);
        for (ArrowId a : q.in_arrows(v)) images = lin::hstack(images, m.action(a));
        bases.push_back(lin::image_basis(images));
    }
    return subrepresentation(m, bases);
}

SubObject top(const Representation& m) {
    const SubObject rad = radical(m);
    return cokernel(rad.map);
}

std::vector<DimVector> radical_series(const Representation& m) {
    const Quiver& q = m.quiver();
    std::vector<Matrix> layer;
    for (int d : m.dims()) layer.push_back(Matrix::identity(sz(d)));
    std::vector<DimVector> out;
    for (;;) {
        DimVector dv;
        bool nonzero = false;
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (layer[i].cols()) {
                dv[q.vertices()[i]] = static_cast<int>(layer[i].cols());
                nonzero = true;
            }
        out.push_back(dv);
        if (!nonzero) break;
        std::vector<Matrix> next;
        for (VertexId v : q.vertices()) {
            Matrix images(sz(m.dim(v)), 0);
            for (ArrowId a : q.in_arrows(v))
                images = lin::hstack(images, m.action(a) * layer[q.vertex_index(q.arrow(a).source)]);
            next.push_back(lin::image_basis(images));
        }
        layer = std::move(next);
    }
    return out;
}

std::vector<DimVector> socle_series(const Representation& m) {
    const Quiver& q = m.quiver();
    std::vector<Matrix> layer = zero_bases(m);
    std::vector<DimVector> out;
    const int total = m.total_dim();
    for (;;) {
        std::vector<Matrix> proj;
        for (std::size_t i = 0; i < layer.size(); ++i)
            proj.push_back(lin::cokernel_projection(layer[i], sz(m.dim_at(i))));
        std::vector<Matrix> next;
        for (VertexId v : q.vertices()) {
            Matrix stacked(0, sz(m.dim(v)));
            for (ArrowId a : q.out_arrows(v))
                stacked = lin::vstack(stacked, proj[q.vertex_index(q.arrow(a).target)] * m.action(a));
            next.push_back(lin::nullspace_basis(stacked));
        }
        layer = std::move(next);
        DimVector dv;
        int sum = 0;
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (layer[i].cols()) {
                dv[q.vertices()[i]] = static_cast<int>(layer[i].cols());
                sum += static_cast<int>(layer[i].cols());
            }
        out.push_back(dv);
        if (sum == total) break;
    }
    return out;
}

// ---------------------------------------------------------------- projectives / injectives

namespace {

// Coefficient of basis class `idx` in a combination.
Rational coefficient(const Combination& c, std::size_t idx) {
    for (const auto& [i, v] : c)
        if (i == idx) return v;
    return 0;
}

Path append(const Path& p, ArrowId a) {
    Path out = p;
    out.push_back(a);
    return out;
}

Path prepend(ArrowId a, const Path& p) {
    Path out{a};
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

Representation projective(PresentationPtr pres, VertexId v) {
    const Quiver& q = pres->quiver();
    q.vertex_index(v);
    std::vector<int> dims;
    for (VertexId x : q.vertices()) dims.push_back(static_cast<int>(pres->classes_between(v, x).size()));
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        const auto& from = pres->classes_between(v, a.source);
        const auto& to = pres->classes_between(v, a.target);
        Matrix m(to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            const Combination img = pres->reduce(v, append(pres->basis()[from[c]].path, a.id));
            for (std::size_t r = 0; r < to.size(); ++r) m(r, c) = coefficient(img, to[r]);
        }
        acts.push_back(std::move(m));
    }
    return Representation(std::move(pres), std::move(dims), std::move(acts));
}

Representation injective(PresentationPtr pres, VertexId v) {
    const Quiver& q = pres->quiver();
    q.vertex_index(v);
    std::vector<int> dims;
    for (VertexId x : q.vertices()) dims.push_back(static_cast<int>(pres->classes_between(x, v).size()));
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        const auto& from = pres->classes_between(a.source, v);
        const auto& to = pres->classes_between(a.target, v);
        Matrix m(to.size(), from.size());
        for (std::size_t r = 0; r < to.size(); ++r) {
            const Combination img = pres->reduce(a.source, prepend(a.id, pres->basis()[to[r]].path));
            for (std::size_t c = 0; c < from.size(); ++c) m(r, c) = coefficient(img, from[c]);
        }
        acts.push_back(std::move(m));
    }
    return Representation(std::move(pres), std::move(dims), std::move(acts));
}

Morphism from_projective(PresentationPtr pres, VertexId v, const Representation& m,
                         const std::vector<Rational>& element) {
    const Quiver& q = pres->quiver();
    if (element.size() != sz(m.dim(v))) throw ContractViolation("element has the wrong length");
    const Matrix x = Matrix::from_columns(element.size(), {element});
    std::vector<Matrix> blocks;
    for (VertexId t : q.vertices()) {
        const auto& classes = pres->classes_between(v, t);
        Matrix b(sz(m.dim(t)), classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const Matrix col = m.path_matrix(v, pres->basis()[classes[c]].path) * x;
            for (std::size_t r = 0; r < b.rows(); ++r) b(r, c) = col(r, 0);
        }
        blocks.push_back(std::move(b));
    }
    return Morphism(projective(pres, v), m, std::move(blocks));
}

Morphism to_injective(PresentationPtr pres, VertexId v, const Representation& m,
                      const std::vector<Rational>& functional) {
    const Quiver& q = pres->quiver();
    if (functional.size() != sz(m.dim(v))) throw ContractViolation("functional has the wrong length");
    const Matrix phi = Matrix::from_columns(functional.size(), {functional}).transpose();
    std::vector<Matrix> blocks;
    for (VertexId s : q.vertices()) {
        const auto& classes = pres->classes_between(s, v);
        Matrix b(classes.size(), sz(m.dim(s)));
        for (std::size_t r = 0; r < classes.size(); ++r) {
            const Matrix row = phi * m.path_matrix(s, pres->basis()[classes[r]].path);
            for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = row(0, c);
        }
        blocks.push_back(std::move(b));
    }
    return Morphism(m, injective(pres, v), std::move(blocks));
}

Morphism injective_arrow_map(PresentationPtr pres, ArrowId id) {
    const Quiver& q = pres->quiver();
    const Arrow& a = q.arrow(id);
    std::vector<Matrix> blocks;
    for (VertexId x : q.vertices()) {
        const auto& rows = pres->classes_between(x, a.source);
        const auto& cols = pres->classes_between(x, a.target);
        Matrix b(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Combination img = pres->reduce(x, append(pres->basis()[rows[r]].path, a.id));
            for (std::size_t c = 0; c < cols.size(); ++c) b(r, c) = coefficient(img, cols[c]);
        }
        blocks.push_back(std::move(b));
    }
    return Morphism(injective(pres, a.target), injective(pres, a.source), std::move(blocks));
}

// ---------------------------------------------------------------- covers / envelopes

namespace {

// Concatenates maps into one target along the source direct sum.
Morphism from_sum(const std::vector<Morphism>& parts, const Representation& target) {
    std::vector<Representation> sources;
    for (const auto& p : parts) sources.push_back(p.source());
    const Representation sum = direct_sum(sources);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < target.dims().size(); ++i) {
        Matrix b(sz(target.dim_at(i)), 0);
        for (const auto& p : parts) b = lin::hstack(b, p.blocks()[i]);
        blocks.push_back(std::move(b));
    }
    return Morphism(sum, target, std::move(blocks));
}

Morphism into_sum(const Representation& source, const std::vector<Morphism>& parts) {
    std::vector<Representation> targets;
    for (const auto& p : parts) targets.push_back(p.target());
    const Representation sum = direct_sum(targets);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < source.dims().size(); ++i) {
        Matrix b(0, sz(source.dim_at(i)));
        for (const auto& p : parts) b = lin::vstack(b, p.blocks()[i]);
        blocks.push_back(std::move(b));
    }
    return Morphism(source, sum, std::move(blocks));
}

}  // namespace

Cover projective_cover(const Representation& m) {
    const PresentationPtr& pres = m.presentation();
    const Quiver& q = m.quiver();
    if (m.is_zero()) return {m, Morphism::identity(m)};
    const SubObject rad = radical(m);
    std::vector<Morphism> parts;
    for (VertexId v : q.vertices()) {
        const std::size_t i = q.vertex_index(v);
        const Matrix& r = rad.map.blocks()[i];
        if (r.cols() == r.rows()) continue;
        if (!pres->projective_complete(v))
            throw WindowExceeded("projective cover needs the projective at vertex " + std::to_string(v) +
                                 ", which the window truncates");
        // extend a radical basis by standard vectors; the added ones lift the top
        const lin::Rref ext = lin::rref(lin::hstack(r, Matrix::identity(r.rows())));
        for (auto p : ext.pivot_cols)
            if (p >= r.cols()) {
                std::vector<Rational> e(r.rows());
                e[p - r.cols()] = 1;
                parts.push_back(from_projective(pres, v, m, e));
            }
    }
    Morphism map = from_sum(parts, m);
    if (!map.is_surjective()) throw ContractViolation("projective cover is not surjective");
    return {map.source(), std::move(map)};
}

Cover injective_envelope(const Representation& m) {
    const PresentationPtr& pres = m.presentation();
    const Quiver& q = m.quiver();
    if (m.is_zero()) return {m, Morphism::identity(m)};
    const SubObject soc = socle(m);
    std::vector<Morphism> parts;
    for (VertexId v : q.vertices()) {
        const Matrix& s = soc.map.blocks()[q.vertex_index(v)];
        if (s.cols() == 0) continue;
        if (!pres->injective_complete(v))
            throw WindowExceeded("injective envelope needs the injective at vertex " + std::to_string(v) +
                                 ", which the window truncates");
        // column k of `dual` is a functional taking socle basis vector j to δ_jk
        const Matrix dual = *lin::solve(s.transpose(), Matrix::identity(s.cols()));
        for (std::size_t k = 0; k < dual.cols(); ++k) parts.push_back(to_injective(pres, v, m, dual.column(k)));
    }
    Morphism map = into_sum(m, parts);
    if (!map.is_injective()) throw ContractViolation("injective envelope is not injective");
    return {map.target(), std::move(map)};
}

Representation syzygy(const Representation& m) { return kernel(projective_cover(m).map).object; }
Representation cosyzygy(const Representation& m) { return cokernel(injective_envelope(m).map).object; }

Representation syzygy_power(const Representation& m, int k) {
    Representation out = m;
    for (; k > 0; --k) out = syzygy(out);
    for (; k < 0; ++k) out = cosyzygy(out);
    return out;
}

bool is_projective(const Representation& m) { return projective_cover(m).object.total_dim() == m.total_dim(); }
bool is_injective(const Representation& m) { return injective_envelope(m).object.total_dim() == m.total_dim(); }

// ---------------------------------------------------------------- star, D, ν, Tr

namespace {

struct StarData {
    std::vector<VertexId> vertices;   // complete injective vertices
    std::vector<HomSpace> homs;       // Hom(I_w, m) per such vertex
};

StarData star_data(const Representation& m) {
    const PresentationPtr& pres = m.presentation();
    StarData d;
    int total = 0;
    for (VertexId w : pres->quiver().vertices()) {
        if (!pres->injective_complete(w)) continue;
        d.vertices.push_back(w);
        d.homs.emplace_back(injective(pres, w), m);
        total += static_cast<int>(d.homs.back().dim());
    }
    if (total != m.total_dim())
        throw WindowExceeded("star needs projective-injectives outside the window (found " + std::to_string(total) +
                             " of " + std::to_string(m.total_dim()) + " dimensions)");
    return d;
}

const HomSpace* hom_at(const StarData& d, VertexId w) {
    for (std::size_t k = 0; k < d.vertices.size(); ++k)
        if (d.vertices[k] == w) return &d.homs[k];
    return nullptr;
}

}  // namespace

Representation star(const Representation& m) {
    const PresentationPtr& pres = m.presentation();
    const PresentationPtr op = pres->opposite();
    const Quiver& q = pres->quiver();
    const StarData d = star_data(m);
    std::vector<int> dims;
    for (VertexId w : q.vertices()) {
        const HomSpace* h = hom_at(d, w);
        dims.push_back(h ? static_cast<int>(h->dim()) : 0);
    }
    // original arrow u -> v is opposite arrow v -> u; acts by the dual of
    // Hom(I_u, m) -> Hom(I_v, m), f |-> f ∘ (I_v -> I_u)
    std::vector<Matrix> acts;
    for (const auto& a : q.arrows()) {
        const HomSpace* hu = hom_at(d, a.source);
        const HomSpace* hv = hom_at(d, a.target);
        const std::size_t du = hu ? hu->dim() : 0, dv = hv ? hv->dim() : 0;
        Matrix pre(dv, du);
        if (du && dv) {
            const Morphism phi = injective_arrow_map(pres, a.id);
            for (std::size_t k = 0; k < du; ++k) {
                const auto coords = hv->coordinates(phi.then(hu->basis()[k]));
                for (std::size_t r = 0; r < dv; ++r) pre(r, k) = coords[r];
            }
        }
        acts.push_back(pre.transpose());
    }
    return Representation(op, std::move(dims), std::move(acts));
}

Morphism star(const Morphism& f) {
    const Representation sm = star(f.source());
    const Representation sn = star(f.target());
    const Quiver& q = f.source().quiver();
    const StarData dm = star_data(f.source());
    const StarData dn = star_data(f.target());
    std::vector<Matrix> blocks;
    for (VertexId w : q.vertices()) {
        const HomSpace* hm = hom_at(dm, w);
        const HomSpace* hn = hom_at(dn, w);
        const std::size_t a = hm ? hm->dim() : 0, b = hn ? hn->dim() : 0;
        Matrix post(b, a);
        for (std::size_t k = 0; k < a && b; ++k) {
            const auto coords = hn->coordinates(hm->basis()[k].then(f));
            for (std::size_t r = 0; r < b; ++r) post(r, k) = coords[r];
        }
        blocks.push_back(post.transpose());
    }
    return Morphism(sn, sm, std::move(blocks));
}

Representation vector_dual(const Representation& m) {
    std::vector<Matrix> acts;
    for (const auto& a : m.actions()) acts.push_back(a.transpose());
    return Representation(m.presentation()->opposite(), m.dims(), std::move(acts));
}

Morphism vector_dual(const Morphism& f) {
    std::vector<Matrix> blocks;
    for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
    return Morphism(vector_dual(f.target()), vector_dual(f.source()), std::move(blocks));
}

Representation nakayama(const Representation& m) { return vector_dual(star(m)); }

Representation transpose(const Representation& m) {
    const Cover i0 = injective_envelope(m);
    const SubObject co = cokernel(i0.map);
    if (co.object.is_zero()) return Representation::zero(m.presentation()->opposite());
    const Cover i1 = injective_envelope(co.object);
    const Morphism g = co.map.then(i1.map);
    return kernel(star(g)).object;
}

Representation dtr(const Representation& m) { return vector_dual(transpose(m)); }

}  // namespace arcoalg::rep

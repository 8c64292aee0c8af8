#include "arcoalg/decompose.hpp"

#include <algorithm>
#include <array>

namespace arcoalg::rep {

bool search_hom(const HomSpace& hom, const std::function<bool(const Morphism&)>& visit) {
    const auto& basis = hom.basis();
    const std::size_t d = basis.size();
    for (const auto& f : basis)
        if (visit(f)) return true;
    if (d >= 2) {
        std::vector<Rational> ones(d, 1), ramp(d);
        for (std::size_t k = 0; k < d; ++k) ramp[k] = static_cast<long>(k + 1);
        if (visit(hom.combination(ones)) || visit(hom.combination(ramp))) return true;
    }
    static constexpr std::array<long, 4> kCoeffs{1, -1, 2, -2};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (long ci : kCoeffs)
                for (long cj : kCoeffs) {
                    if (visit(basis[i] * Rational(ci) + basis[j] * Rational(cj))) return true;
                }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k)
                for (long ci : kCoeffs)
                    for (long cj : kCoeffs)
                        for (long ck : kCoeffs)
                            if (visit(basis[i] * Rational(ci) + basis[j] * Rational(cj) + basis[k] * Rational(ck)))
                                return true;
    return false;
}

IsoVerdict is_isomorphic(const Representation& m, const Representation& n) {
    if (!same_presentation(m, n)) throw ContractViolation("isomorphism test across presentations");
    IsoVerdict v;
    if (m.dims() != n.dims()) {
        v.reason = "dimension vectors differ";
        return v;
    }
    if (m.is_zero()) {
        v.isomorphic = true;
        v.certificate = Morphism::identity(m);
        return v;
    }
    if (radical_series(m) != radical_series(n)) {
        v.reason = "radical series differ";
        return v;
    }
    if (socle_series(m) != socle_series(n)) {
        v.reason = "socle series differ";
        return v;
    }
    const HomSpace mn(m, n);
    const std::size_t end_m = hom_dim(m, m);
    if (mn.dim() != end_m || hom_dim(n, n) != end_m) {
        v.reason = "Hom dimensions differ";
        return v;
    }
    search_hom(mn, [&](const Morphism& f) {
        if (!f.is_isomorphism()) return false;
        v.isomorphic = true;
        v.certificate = f;
        return true;
    });
    if (!v.isomorphic) {
        v.reason = "no invertible intertwiner within budget";
        v.budget_limited = true;
    }
    return v;
}

namespace {

void split_into(const Representation& m, std::vector<Representation>& out) {
    if (m.is_zero()) return;
    const auto n = static_cast<unsigned>(m.total_dim());
    const HomSpace end(m, m);
    const Morphism id = Morphism::identity(m);
    std::optional<std::pair<Representation, Representation>> parts;
    search_hom(end, [&](const Morphism& f) {
        for (long shift : {0L, 1L, -1L, 2L, -2L}) {
            const Morphism h = shift ? f + id * Rational(-shift) : f;
            const Morphism p = h.power(n);
            std::size_t r = 0;
            for (const auto& b : p.blocks()) r += lin::rank(b);
            if (r == 0 || r == n) continue;
            parts.emplace(kernel(p).object, image(p).object);
            return true;
        }
        return false;
    });
    if (!parts) {
        out.push_back(m);
        return;
    }
    split_into(parts->first, out);
    split_into(parts->second, out);
}

}  // namespace

Decomposition fitting_decompose(const Representation& m) {
    std::vector<Representation> factors;
    split_into(m, factors);
    std::vector<std::pair<std::size_t, Representation>> keyed;
    for (auto& f : factors) keyed.emplace_back(hom_dim(f, f), std::move(f));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        const auto da = a.second.dim_vector(), db = b.second.dim_vector();
        if (da != db) return da < db;
        return a.first < b.first;
    });
    Decomposition d;
    for (auto& [e, f] : keyed) {
        d.endomorphism_dims.push_back(e);
        d.factors.push_back(std::move(f));
    }
    return d;
}

bool same_multiset(const std::vector<Representation>& a, const std::vector<Representation>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size() && !matched; ++j) {
            if (used[j] || !is_isomorphic(x, b[j])) continue;
            used[j] = true;
            matched = true;
        }
        if (!matched) return false;
    }
    return true;
}

bool has_retraction(const Morphism& f) {
    const Representation& a = f.source();
    if (a.is_zero()) return true;
    const HomSpace back(f.target(), a);
    if (back.dim() == 0) return false;
    std::vector<std::vector<Rational>> cols;
    for (const auto& g : back.basis()) {
        std::vector<Rational> flat;
        const Morphism gf = f.then(g);
        for (const auto& blk : gf.blocks()) flat.insert(flat.end(), blk.entries().begin(), blk.entries().end());
        cols.push_back(std::move(flat));
    }
    std::vector<Rational> rhs;
    const Morphism id = Morphism::identity(a);
    for (const auto& blk : id.blocks())
        rhs.insert(rhs.end(), blk.entries().begin(), blk.entries().end());
    const Matrix system = Matrix::from_columns(rhs.size(), cols);
    return lin::solve(system, Matrix::from_columns(rhs.size(), {rhs})).has_value();
}

std::optional<ShortExactSeq> realize_ses(const Representation& a, const Representation& b, const Representation& c) {
    if (!same_presentation(a, b) || !same_presentation(b, c)) throw ContractViolation("sequence across presentations");
    for (std::size_t i = 0; i < b.dims().size(); ++i)
        if (b.dim_at(i) != a.dim_at(i) + c.dim_at(i)) return std::nullopt;
    std::optional<ShortExactSeq> found;
    auto attempt = [&](const Morphism& f) {
        if (!f.is_injective()) return false;
        const SubObject q = cokernel(f);
        IsoVerdict iso = is_isomorphic(q.object, c);
        if (!iso) return false;
        ShortExactSeq s{a, b, c, f, q.map.then(*iso.certificate), false};
        s.non_split = !has_retraction(f);
        found = std::move(s);
        return true;
    };
    if (a.is_zero()) {
        attempt(Morphism::zero(a, b));
        return found;
    }
    search_hom(HomSpace(a, b), attempt);
    return found;
}

}  // namespace arcoalg::rep

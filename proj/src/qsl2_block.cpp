#include "arcoalg/qsl2_block.hpp"

#include "arcoalg/decompose.hpp"
#include "arcoalg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace arcoalg::qsl2 {

using rep::Representation;
using rep::WindowExceeded;

std::string to_string(const StringObject& s) {
    const std::string simple = "S " + std::to_string(s.n);
    return s.k == 0 ? simple : "O^" + std::to_string(s.k) + " " + simple;
}

std::string to_string(const Term& t) {
    return t.injective ? "I " + std::to_string(t.n) : to_string(StringObject{t.k, t.n});
}

Term parse_term(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    Term t;
    auto read_n = [&] {
        if (!(is >> t.n) || t.n < 0) throw ContractViolation("expected a vertex >= 0 in \"" + text + "\"");
    };
    if (head == "I") {
        t.injective = true;
        read_n();
    } else {
        if (head.rfind("O^", 0) == 0) {
            try {
                std::size_t used = 0;
                t.k = std::stoi(head.substr(2), &used);
                if (used != head.size() - 2) throw std::invalid_argument(head);
            } catch (const std::exception&) {
                throw ContractViolation("bad power in \"" + text + "\"");
            }
            if (!(is >> head)) head.clear();
        }
        if (head != "S") throw ContractViolation("expected \"S n\", \"O^k S n\" or \"I n\", got \"" + text + "\"");
        read_n();
    }
    std::string rest;
    if (is >> rest) throw ContractViolation("trailing input in \"" + text + "\"");
    return t;
}

StringObject omega(const StringObject& s, int steps) { return {s.k + steps, s.n}; }

std::string to_string(const SymSequence& s) {
    std::string mid;
    for (const auto& t : s.middle) mid += (mid.empty() ? "" : " + ") + to_string(t);
    return to_string(s.left) + " -> " + mid + " -> " + to_string(s.right);
}

namespace {

rep::PresentationPtr make_presentation(int w) {
    std::vector<rep::VertexId> vertices;
    for (int v = 0; v <= w; ++v) vertices.push_back(v);
    std::vector<rep::Arrow> arrows;
    for (int i = 0; i < w; ++i) {
        arrows.push_back({2 * i, i, i + 1, "a" + std::to_string(i)});
        arrows.push_back({2 * i + 1, i + 1, i, "b" + std::to_string(i)});
    }
    auto a = [](int i) { return 2 * i; };
    auto b = [](int i) { return 2 * i + 1; };
    std::vector<rep::Relation> rels;
    for (int i = 0; i + 1 < w; ++i) {
        rels.push_back({i, i + 2, {{1, {a(i), a(i + 1)}}}});
        rels.push_back({i + 2, i, {{1, {b(i + 1), b(i)}}}});
        rels.push_back({i + 1, i + 1, {{1, {b(i), a(i)}}, {-1, {a(i + 1), b(i + 1)}}}});
    }
    std::set<rep::VertexId> complete;
    for (int v = 0; v < w; ++v) complete.insert(v);
    return rep::AlgebraPresentation::make(rep::Quiver(std::move(vertices), std::move(arrows)), std::move(rels), 3,
                                          complete, complete, "qsl2 block [0," + std::to_string(w) + "]");
}

}  // namespace

BlockFamily::BlockFamily(int w, int margin) : w_(w), margin_(margin) {
    if (w < 4) throw ContractViolation("qsl2 window needs w >= 4");
    if (margin < 1 || margin > w) throw ContractViolation("qsl2 margin must lie in [1, w]");
    pres_ = make_presentation(w);
}

bool BlockFamily::safe(const StringObject& s, int extra) const {
    return s.n >= 0 && s.n + std::abs(s.k) + extra <= w_ - margin_;
}

Representation BlockFamily::injective(int n) const {
    if (n < 0 || n > w_ - 1) throw WindowExceeded("I " + std::to_string(n) + " is truncated by the window [0," +
                                                  std::to_string(w_) + "]");
    return rep::injective(pres_, n);
}

Representation BlockFamily::simple(int n) const {
    if (n < 0 || n > w_) throw WindowExceeded("vertex " + std::to_string(n) + " is outside the window");
    return Representation::simple(pres_, n);
}

Representation BlockFamily::realize(const StringObject& s) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(s); it != cache_.end()) return it->second;
    }
    Representation m;
    if (s.k == 0)
        m = simple(s.n);
    else if (s.k > 0)
        m = rep::syzygy(realize(StringObject{s.k - 1, s.n}));
    else
        m = rep::cosyzygy(realize(StringObject{s.k + 1, s.n}));
    if (m.is_zero() || rep::fitting_decompose(m).factors.size() != 1)
        throw ContractViolation(to_string(s) + " did not come out indecomposable");
    std::lock_guard lock(cache_mutex_);
    return cache_.emplace(s, std::move(m)).first->second;
}

Representation BlockFamily::realize(const Term& t) const {
    return t.injective ? injective(t.n) : realize(StringObject{t.k, t.n});
}

rep::DimVector BlockFamily::dim_vector(const StringObject& s) const { return realize(s).dim_vector(); }

SymSequence BlockFamily::almost_split(const StringObject& s) const {
    const int i = s.k - 1;
    SymSequence q;
    q.left = s;
    if (s.n >= 1) q.middle.push_back(Term::string({i, s.n - 1}));
    q.middle.push_back(Term::string({i, s.n + 1}));
    if (i == 0) q.middle.push_back(Term::inj(s.n));
    q.right = {i - 1, s.n};
    return q;
}

namespace {

std::string string_id(const StringObject& s) { return "O:" + std::to_string(s.k) + ":" + std::to_string(s.n); }
std::string injective_id(int n) { return "I:" + std::to_string(n); }

}  // namespace

ar::ARQuiver BlockFamily::ar_quiver(int k_max, int n_max, unsigned threads) const {
    if (k_max < 0 || n_max < 0) throw ContractViolation("k_max and n_max must be >= 0");
    std::vector<StringObject> objects;
    for (int n = 0; n <= n_max; ++n)
        for (int k = k_max; k >= -k_max; --k) objects.push_back({k, n});
    std::vector<int> dims(objects.size());
    parallel_for(objects.size(), threads, [&](std::size_t x) { dims[x] = realize(objects[x]).total_dim(); });

    auto present = [&](int k, int n) { return std::abs(k) <= k_max && n >= 0 && n <= n_max; };
    ar::ARQuiver q;
    for (std::size_t x = 0; x < objects.size(); ++x) {
        const auto [k, n] = objects[x];
        ar::Node node;
        node.id = string_id(objects[x]);
        node.label = to_string(objects[x]);
        node.dim = dims[x];
        node.row = n;
        node.col = k_max - k;
        node.component = ((k + n) % 2 + 2) % 2;
        bool missing = !present(k - 2, n) || !present(k + 2, n);
        for (int dn : {-1, 1})
            if (n + dn >= 0) missing = missing || !present(k - 1, n + dn) || !present(k + 1, n + dn);
        node.incomplete = missing;
        q.add_node(std::move(node));
        if (k == -1) {
            ar::Node inj;
            inj.id = injective_id(n);
            inj.label = "I " + std::to_string(n);
            inj.dim = injective(n).total_dim();
            inj.injective = true;
            inj.row = n;
            inj.col = k_max;
            inj.component = (n + 1) % 2;
            inj.incomplete = k_max < 1;
            q.add_node(std::move(inj));
        }
    }
    for (const auto& s : objects) {
        for (int dn : {-1, 1})
            if (present(s.k - 1, s.n + dn)) q.add_arrow(string_id(s), string_id({s.k - 1, s.n + dn}));
        if (s.k == 1) q.add_arrow(string_id(s), injective_id(s.n));
        if (s.k == -1) q.add_arrow(injective_id(s.n), string_id(s));
        if (present(s.k - 2, s.n)) q.set_translation(string_id(s), string_id({s.k - 2, s.n}));
    }
    return q;
}

// ---------------------------------------------------------------- sequences

bool SequenceReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); });
}

namespace {

rep::DimVector add(rep::DimVector a, const rep::DimVector& b) {
    for (const auto& [v, d] : b) a[v] += d;
    return a;
}

SequenceEntry check_sequence(const BlockFamily& fam, const StringObject& left) {
    SequenceEntry e;
    e.sequence = fam.almost_split(left);
    try {
        const Representation l = fam.realize(e.sequence.left);
        const Representation r = fam.realize(e.sequence.right);
        std::vector<Representation> mids;
        rep::DimVector mid_dims;
        for (const auto& t : e.sequence.middle) {
            mids.push_back(fam.realize(t));
            mid_dims = add(mid_dims, mids.back().dim_vector());
        }
        e.dims_add = add(l.dim_vector(), r.dim_vector()) == mid_dims;
        const auto ses = rep::realize_ses(l, rep::direct_sum(mids), r);
        e.realized = ses.has_value();
        e.exact = ses && rep::is_exact(*ses);
        e.non_split = ses && ses->non_split;
        e.right_is_omega_inv2 = rep::is_isomorphic(rep::syzygy_power(l, -2), r).isomorphic;
        try {
            e.dtr_check = rep::is_isomorphic(rep::dtr(l), r).isomorphic ? "pass" : "fail";
        } catch (const WindowExceeded&) {
            e.dtr_check = "skipped: window";
        }
        e.detail = e.pass() ? "ok" : "see flags";
    } catch (const WindowExceeded& ex) {
        e.detail = std::string("window exceeded: ") + ex.what();
    }
    return e;
}

}  // namespace

SequenceReport verify_sequences(const BlockFamily& fam, int i_min, int i_max, int n_max, unsigned threads) {
    std::vector<StringObject> lefts;
    for (int n = 0; n <= n_max; ++n)
        for (int i = i_min; i <= i_max; ++i) lefts.push_back({i + 1, n});
    SequenceReport r;
    r.window = fam.window();
    r.entries.resize(lefts.size());
    parallel_for(lefts.size(), threads, [&](std::size_t x) { r.entries[x] = check_sequence(fam, lefts[x]); });
    return r;
}

// ---------------------------------------------------------------- symmetry

lin::Matrix gram_matrix(const BlockFamily& fam) {
    const auto& pres = *fam.presentation();
    const int inner = fam.window() - 1;
    std::vector<std::size_t> classes;
    for (std::size_t x = 0; x < pres.basis().size(); ++x) {
        const auto& c = pres.basis()[x];
        if (c.source <= inner && c.target <= inner) classes.push_back(x);
    }
    auto form = [&](const rep::Combination& comb) {
        lin::Rational total = 0;
        for (const auto& [idx, coeff] : comb) {
            const auto& c = pres.basis()[idx];
            if (c.length() == 2 && c.source == c.target && c.source <= inner) total += coeff;
        }
        return total;
    };
    lin::Matrix g(classes.size(), classes.size());
    for (std::size_t r = 0; r < classes.size(); ++r)
        for (std::size_t c = 0; c < classes.size(); ++c) g(r, c) = form(pres.multiply(classes[r], classes[c]));
    return g;
}

bool SymmetryReport::all_pass() const {
    return gram_symmetric && gram_rank == interior_dim &&
           std::all_of(nakayama.begin(), nakayama.end(), [](const auto& f) { return f.fixed; });
}

SymmetryReport check_symmetric(const BlockFamily& fam, int k_max, int n_max, unsigned threads) {
    SymmetryReport r;
    const lin::Matrix g = gram_matrix(fam);
    r.interior_dim = g.rows();
    r.gram_rank = lin::rank(g);
    r.gram_symmetric = g == g.transpose();
    std::vector<StringObject> objects;
    for (int n = 0; n <= n_max; ++n)
        for (int k = -k_max; k <= k_max; ++k) objects.push_back({k, n});
    r.nakayama.resize(objects.size());
    parallel_for(objects.size(), threads, [&](std::size_t x) {
        auto& f = r.nakayama[x];
        f.object = objects[x];
        try {
            const Representation m = fam.realize(objects[x]);
            const rep::IsoVerdict v = rep::is_isomorphic(rep::nakayama(m), m);
            f.fixed = v.isomorphic;
            f.detail = v.isomorphic ? "isomorphic" : v.reason;
        } catch (const WindowExceeded& ex) {
            f.detail = std::string("window exceeded: ") + ex.what();
        }
    });
    return r;
}

// ---------------------------------------------------------------- reports

std::string to_tsv(const SequenceReport& r) {
    std::ostringstream os;
    os << "sequence\tdims_add\trealized\texact\tnon_split\tright_is_omega_inv2\tdtr\tstatus\tdetail\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& e : r.entries)
        os << to_string(e.sequence) << '\t' << yn(e.dims_add) << '\t' << yn(e.realized) << '\t' << yn(e.exact) << '\t'
           << yn(e.non_split) << '\t' << yn(e.right_is_omega_inv2) << '\t' << e.dtr_check << '\t'
           << (e.pass() ? "PASS" : "FAIL") << '\t' << e.detail << '\n';
    return os.str();
}

std::string to_json(const SequenceReport& r) {
    nlohmann::ordered_json j;
    j["family"] = "qsl2";
    j["window"] = r.window;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json mid = nlohmann::ordered_json::array();
        for (const auto& t : e.sequence.middle) mid.push_back(to_string(t));
        rows.push_back({{"left", to_string(e.sequence.left)},
                        {"middle", std::move(mid)},
                        {"right", to_string(e.sequence.right)},
                        {"dims_add", e.dims_add},
                        {"realized", e.realized},
                        {"exact", e.exact},
                        {"non_split", e.non_split},
                        {"right_is_omega_inv2", e.right_is_omega_inv2},
                        {"dtr", e.dtr_check},
                        {"pass", e.pass()},
                        {"detail", e.detail}});
    }
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string to_tsv(const SymmetryReport& r) {
    std::ostringstream os;
    os << "check\tsubject\tstatus\tdetail\n";
    os << "gram_symmetric\tinterior\t" << (r.gram_symmetric ? "PASS" : "FAIL") << "\t\n";
    os << "gram_rank\tinterior\t" << (r.gram_rank == r.interior_dim ? "PASS" : "FAIL") << '\t' << r.gram_rank << " of "
       << r.interior_dim << '\n';
    for (const auto& f : r.nakayama)
        os << "nakayama_fixed\t" << to_string(f.object) << '\t' << (f.fixed ? "PASS" : "FAIL") << '\t' << f.detail
           << '\n';
    return os.str();
}

std::string to_json(const SymmetryReport& r) {
    nlohmann::ordered_json j;
    j["interior_dim"] = r.interior_dim;
    j["gram_rank"] = r.gram_rank;
    j["gram_symmetric"] = r.gram_symmetric;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& f : r.nakayama)
        rows.push_back({{"object", to_string(f.object)}, {"fixed", f.fixed}, {"detail", f.detail}});
    j["nakayama"] = std::move(rows);
    j["pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

}  // namespace arcoalg::qsl2

#include "arcoalg/serial_family.hpp"

#include "arcoalg/decompose.hpp"
#include "arcoalg/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace arcoalg::serial {

using rep::Representation;
using rep::WindowExceeded;

std::string to_string(const Interval& v) {
    if (v.is_zero()) return "0";
    return std::string(v.side == Side::V ? "V " : "U ") + std::to_string(v.i) + " " + std::to_string(v.j);
}

Interval parse_interval(const std::string& text, int n) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    auto read = [&](int& x) {
        if (!(is >> x)) throw ContractViolation("expected an integer in interval \"" + text + "\"");
    };
    Interval out;
    if (kind == "V" || kind == "U") {
        out.side = kind == "V" ? Side::V : Side::U;
        read(out.i);
        read(out.j);
    } else if (kind == "S") {
        read(out.i);
        out.j = out.i;
    } else if (kind == "I") {
        read(out.j);
        out.i = out.j - n;
    } else {
        throw ContractViolation("unknown interval kind \"" + kind + "\" (use V, U, S or I)");
    }
    std::string rest;
    if (is >> rest) throw ContractViolation("trailing input in interval \"" + text + "\"");
    if (out.j < out.i - 1 || out.j - out.i > n)
        throw ContractViolation("interval \"" + text + "\" needs i - 1 <= j <= i + n");
    return out;
}

namespace {

rep::PresentationPtr make_presentation(int n, int lo, int hi) {
    std::vector<rep::VertexId> vertices;
    for (int v = lo; v <= hi; ++v) vertices.push_back(v);
    std::vector<rep::Arrow> arrows;
    for (int t = lo; t < hi; ++t) arrows.push_back({t - lo, t, t + 1, "a" + std::to_string(t)});
    std::set<rep::VertexId> proj, inj;
    for (int v = lo; v <= hi; ++v) {
        if (v + n <= hi) proj.insert(v);
        if (v - n >= lo) inj.insert(v);
    }
    return rep::AlgebraPresentation::make(rep::Quiver(std::move(vertices), std::move(arrows)), {}, n + 1,
                                          std::move(proj), std::move(inj),
                                          "serial n=" + std::to_string(n) + " [" + std::to_string(lo) + "," +
                                              std::to_string(hi) + "]");
}

Interval shift(const Interval& v, int di, int dj, Side side) {
    if (v.is_zero()) return Interval::zero(side);
    return {side, v.i + di, v.j + dj};
}

Side other(Side s) { return s == Side::V ? Side::U : Side::V; }

}  // namespace

SerialFamily::SerialFamily(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
    if (n < 1) throw ContractViolation("serial family needs n >= 1");
    if (hi - lo < n + 2) throw ContractViolation("serial window must satisfy hi - lo >= n + 2");
    pres_ = make_presentation(n, lo, hi);
}

bool SerialFamily::in_window(const Interval& v) const { return v.is_zero() || (v.i >= lo_ && v.j <= hi_); }

Interval SerialFamily::checked(Interval v) const {
    if (!in_window(v)) throw WindowExceeded(to_string(v) + " leaves the window [" + std::to_string(lo_) + "," +
                                            std::to_string(hi_) + "]");
    return v;
}

Representation SerialFamily::realize(const Interval& v) const {
    if (v.j - v.i > n_) throw ContractViolation(to_string(v) + " is longer than n+1");
    checked(v);
    const auto& q = pres_->quiver();
    std::vector<int> dims;
    for (int x : q.vertices()) dims.push_back(!v.is_zero() && x >= v.i && x <= v.j ? 1 : 0);
    std::vector<lin::Matrix> acts;
    for (const auto& a : q.arrows()) {
        const bool inside = !v.is_zero() && a.source >= v.i && a.target <= v.j;
        acts.push_back(inside ? lin::Matrix::identity(1) : lin::Matrix(dims[q.vertex_index(a.target)],
                                                                     dims[q.vertex_index(a.source)]));
    }
    Representation m(pres_, std::move(dims), std::move(acts));
    return v.side == Side::V ? m : rep::vector_dual(m);
}

Interval SerialFamily::injective_of_simple(int s) const { return checked({Side::V, s - n_, s}); }

Interval SerialFamily::syzygy(const Interval& v) const {
    if (v.is_zero() || is_injective(v)) return Interval::zero(v.side);
    if (v.side == Side::V) return checked({Side::V, v.j + 1, v.i + n_});
    return checked({Side::U, v.j - n_, v.i - 1});
}

Interval SerialFamily::cosyzygy(const Interval& v) const {
    if (v.is_zero() || is_injective(v)) return Interval::zero(v.side);
    if (v.side == Side::V) return checked({Side::V, v.j - n_, v.i - 1});
    return checked({Side::U, v.j + 1, v.i + n_});
}

Interval SerialFamily::cosyzygy2(const Interval& v) const {
    if (is_injective(v)) return Interval::zero(v.side);
    const int d = v.side == Side::V ? -(n_ + 1) : n_ + 1;
    return checked(shift(v, d, d, v.side));
}

Interval SerialFamily::nakayama(const Interval& v) const {
    const int d = v.side == Side::V ? n_ : -n_;
    return checked(shift(v, d, d, v.side));
}

Interval SerialFamily::star(const Interval& v) const {
    const int d = v.side == Side::V ? n_ : -n_;
    return checked(shift(v, d, d, other(v.side)));
}

Interval SerialFamily::transpose(const Interval& v) const {
    if (is_injective(v)) return Interval::zero(other(v.side));
    const int d = v.side == Side::V ? -1 : 1;
    return checked(shift(v, d, d, other(v.side)));
}

Interval SerialFamily::dtr(const Interval& v) const {
    if (is_injective(v)) return Interval::zero(v.side);
    const int d = v.side == Side::V ? -1 : 1;
    return checked(shift(v, d, d, v.side));
}

Interval SerialFamily::vector_dual(const Interval& v) const { return shift(v, 0, 0, other(v.side)); }

SerialFamily::AlmostSplit SerialFamily::almost_split(const Interval& v) const {
    if (v.is_zero()) throw ContractViolation("almost split sequence of the zero object");
    if (is_injective(v)) throw ContractViolation(to_string(v) + " is injective");
    AlmostSplit s;
    s.left = checked(v);
    const int d = v.side == Side::V ? -1 : 1;
    // V: V i-1 j and V i j-1; U mirrors to U i j+1 and U i+1 j
    const Interval a = v.side == Side::V ? Interval{v.side, v.i - 1, v.j} : Interval{v.side, v.i, v.j + 1};
    const Interval b = v.side == Side::V ? Interval{v.side, v.i, v.j - 1} : Interval{v.side, v.i + 1, v.j};
    for (const Interval& m : {a, b})
        if (!m.is_zero()) s.middle.push_back(checked(m));
    s.right = checked(shift(v, d, d, v.side));
    return s;
}

bool SerialFamily::oracle_safe(const Interval& v) const {
    if (v.is_zero()) return true;
    if (v.side == Side::V) return v.i - n_ - 1 >= lo_ && v.j + n_ <= hi_;
    return v.i - n_ >= lo_ && v.j + n_ + 1 <= hi_;
}

std::vector<Interval> SerialFamily::intervals() const {
    std::vector<Interval> out;
    for (int len = 1; len <= n_ + 1; ++len)
        for (int i = hi_ - len + 1; i >= lo_; --i) out.push_back({Side::V, i, i + len - 1});
    return out;
}

std::string node_id(const Interval& v) {
    return std::string(v.side == Side::V ? "V:" : "U:") + std::to_string(v.i) + ":" + std::to_string(v.j);
}

ar::ARQuiver SerialFamily::ar_quiver() const {
    ar::ARQuiver q;
    const auto all = intervals();
    auto legal = [&](const Interval& v) { return !v.is_zero() && v.j - v.i <= n_ && in_window(v); };
    for (const auto& v : all) {
        ar::Node node;
        node.id = node_id(v);
        if (is_injective(v))
            node.label = "I " + std::to_string(v.j);
        else if (v.i == v.j)
            node.label = "S " + std::to_string(v.i);
        else
            node.label = to_string(v);
        node.dim = v.length();
        node.injective = is_injective(v);
        node.row = v.length() - 1;
        node.col = 2 * hi_ - (v.i + v.j);
        // neighbours forced by the meshes through v
        std::vector<Interval> expected;
        auto want = [&](Interval w) {
            if (!w.is_zero() && w.j - w.i <= n_) expected.push_back(w);
        };
        want({Side::V, v.i - 1, v.j});
        want({Side::V, v.i, v.j - 1});
        want({Side::V, v.i + 1, v.j});
        want({Side::V, v.i, v.j + 1});
        if (!node.injective) {
            want({Side::V, v.i - 1, v.j - 1});
            want({Side::V, v.i + 1, v.j + 1});
        }
        node.incomplete = std::any_of(expected.begin(), expected.end(), [&](const auto& w) { return !in_window(w); });
        q.add_node(std::move(node));
    }
    for (const auto& v : all) {
        for (const Interval w : {Interval{Side::V, v.i - 1, v.j}, Interval{Side::V, v.i, v.j - 1}})
            if (legal(w)) q.add_arrow(node_id(v), node_id(w));
        const Interval t{Side::V, v.i - 1, v.j - 1};
        if (!is_injective(v) && legal(t)) q.set_translation(node_id(v), node_id(t));
    }
    return q;
}

// ---------------------------------------------------------------- verify

const std::vector<std::string>& verify_ops() {
    static const std::vector<std::string> ops{"omega",   "omega_inv", "omega_inv2", "star",         "nakayama",
                                              "transpose", "dtr",     "almost_split", "non_symmetric"};
    return ops;
}

bool VerifyReport::all_pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

namespace {

std::string matches(const Representation& oracle, const Representation& expected, bool& pass) {
    if (expected.is_zero()) {
        pass = oracle.is_zero();
        return pass ? "oracle is zero" : "oracle is nonzero";
    }
    const rep::IsoVerdict v = rep::is_isomorphic(oracle, expected);
    pass = v.isomorphic;
    return pass ? "isomorphic" : v.reason;
}

// The printed U-input statements put the result on the V side; that object
// lives over the other presentation, so only the U reading is comparable.
constexpr const char* kSideNote = "; printed V-side reading lands over the other presentation";

VerifyEntry check(const SerialFamily& fam, const std::string& op, const Interval& v) {
    VerifyEntry e{op, v, "", false, ""};
    try {
        const Representation m = fam.realize(v);
        auto compare = [&](const Interval& cf, const Representation& oracle) {
            e.expected = to_string(cf);
            e.detail = matches(oracle, cf.is_zero() ? Representation::zero(oracle.presentation()) : fam.realize(cf),
                               e.pass);
        };
        if (op == "omega") {
            compare(fam.syzygy(v), rep::syzygy(m));
        } else if (op == "omega_inv") {
            compare(fam.cosyzygy(v), rep::cosyzygy(m));
        } else if (op == "omega_inv2") {
            compare(fam.cosyzygy2(v), rep::syzygy_power(m, -2));
        } else if (op == "star") {
            compare(fam.star(v), rep::star(m));
        } else if (op == "nakayama") {
            compare(fam.nakayama(v), rep::nakayama(m));
        } else if (op == "transpose") {
            compare(fam.transpose(v), rep::transpose(m));
        } else if (op == "dtr") {
            compare(fam.dtr(v), rep::dtr(m));
        } else if (op == "almost_split") {
            const auto s = fam.almost_split(v);
            std::vector<Representation> mids;
            std::string label;
            for (const auto& x : s.middle) {
                mids.push_back(fam.realize(x));
                label += (label.empty() ? "" : " + ") + to_string(x);
            }
            e.expected = to_string(s.left) + " -> " + label + " -> " + to_string(s.right);
            const Representation right = fam.realize(s.right);
            const auto ses = rep::realize_ses(m, rep::direct_sum(mids), right);
            if (!ses) {
                e.detail = "no exact sequence found";
            } else if (!rep::is_exact(*ses)) {
                e.detail = "sequence not exact";
            } else if (!ses->non_split) {
                e.detail = "sequence splits";
            } else {
                bool ok = false;
                const std::string d = matches(rep::dtr(m), right, ok);
                e.pass = ok;
                e.detail = ok ? "exact, non-split, right end = DTr(left)" : "right end vs DTr: " + d;
            }
        } else if (op == "non_symmetric") {
            e.expected = "not " + to_string(v);
            const rep::IsoVerdict iso = rep::is_isomorphic(rep::nakayama(m), m);
            e.pass = !iso.isomorphic;
            e.detail = iso.isomorphic ? "nakayama fixes the object" : "nakayama moves the object";
        } else {
            throw ContractViolation("unknown operation " + op);
        }
        if (v.side == Side::U && (op == "omega_inv2" || op == "nakayama" || op == "dtr")) e.detail += kSideNote;
    } catch (const WindowExceeded& ex) {
        e.pass = false;
        e.detail = std::string("window exceeded: ") + ex.what();
    }
    return e;
}

bool applies(const SerialFamily& fam, const std::string& op, const Interval& v) {
    if (op == "almost_split" || op == "non_symmetric") return !fam.is_injective(v);
    return true;
}

}  // namespace

VerifyReport verify(const SerialFamily& fam, const std::vector<std::string>& ops, unsigned threads) {
    for (const auto& op : ops)
        if (std::find(verify_ops().begin(), verify_ops().end(), op) == verify_ops().end())
            throw ContractViolation("unknown operation " + op);
    std::vector<Interval> inputs;
    for (Side side : {Side::V, Side::U})
        for (Interval v : fam.intervals()) {
            v.side = side;
            if (fam.oracle_safe(v)) inputs.push_back(v);
        }
    std::vector<std::vector<VerifyEntry>> per_input(inputs.size());
    parallel_for(inputs.size(), threads, [&](std::size_t k) {
        for (const auto& op : ops)
            if (applies(fam, op, inputs[k])) per_input[k].push_back(check(fam, op, inputs[k]));
    });
    VerifyReport r{fam.n(), fam.lo(), fam.hi(), {}};
    for (auto& block : per_input)
        for (auto& e : block) r.entries.push_back(std::move(e));
    return r;
}

std::string to_tsv(const VerifyReport& r) {
    std::ostringstream os;
    os << "op\tinput\texpected\tstatus\tdetail\n";
    for (const auto& e : r.entries)
        os << e.op << '\t' << to_string(e.input) << '\t' << e.expected << '\t' << (e.pass ? "PASS" : "FAIL") << '\t'
           << e.detail << '\n';
    return os.str();
}

std::string to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["family"] = "serial";
    j["n"] = r.n;
    j["window"] = {r.lo, r.hi};
    j["passed"] = r.entries.size() - r.failures();
    j["failed"] = r.failures();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : r.entries)
        rows.push_back({{"op", e.op},
                        {"input", to_string(e.input)},
                        {"expected", e.expected},
                        {"pass", e.pass},
                        {"detail", e.detail}});
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace arcoalg::serial

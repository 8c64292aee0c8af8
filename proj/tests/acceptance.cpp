// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "arcoalg/cli.hpp"
#include "arcoalg/decompose.hpp"
#include "arcoalg/parallel.hpp"
#include "arcoalg/qsl2_block.hpp"
#include "arcoalg/serial_family.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace arcoalg;
using serial::Interval;
using serial::SerialFamily;
using serial::Side;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

bool iso(const rep::Representation& a, const rep::Representation& b) { return rep::is_isomorphic(a, b).isomorphic; }

SerialFamily serial_window(int n) { return SerialFamily(n, -3 * n - 2, n + 2); }

Outcome serial_closed_forms() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto fam = serial_window(n);
        const auto r = serial::verify(fam, {"omega_inv2", "nakayama", "transpose", "dtr", "star"}, threads_from_env());
        checked += r.entries.size();
        for (const auto& e : r.entries)
            if (!e.pass) o.fail("n=" + std::to_string(n) + " " + e.op + " " + serial::to_string(e.input) + ": " + e.detail);
    }
    if (o.pass) o.detail = std::to_string(checked) + " oracle comparisons";
    return o;
}

Outcome serial_sequences() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto r = serial::verify(serial_window(n), {"almost_split"}, threads_from_env());
        checked += r.entries.size();
        for (const auto& e : r.entries)
            if (!e.pass) o.fail("n=" + std::to_string(n) + " " + serial::to_string(e.input) + ": " + e.detail);
    }

    // n = 4 quiver: five rows, arrows shrink an end by one, translation shifts by one
    SerialFamily fam(4, -8, 4);
    const auto q = fam.ar_quiver();
    std::set<int> rows;
    for (const auto& node : q.nodes()) rows.insert(node.row);
    if (rows != std::set<int>{0, 1, 2, 3, 4}) o.fail("n=4 quiver does not have 5 rows");
    auto parse = [](const std::string& id) {
        int i = 0, j = 0;
        std::sscanf(id.c_str(), "V:%d:%d", &i, &j);
        return std::pair{i, j};
    };
    for (const auto& e : q.arrows()) {
        const auto [i, j] = parse(e.source);
        const auto t = parse(e.target);
        if (t != std::pair{i - 1, j} && t != std::pair{i, j - 1}) o.fail("unexpected arrow " + e.source + " -> " + e.target);
    }
    for (const auto& e : q.translation()) {
        const auto [i, j] = parse(e.source);
        if (parse(e.target) != std::pair{i - 1, j - 1}) o.fail("translation " + e.source + " -> " + e.target);
    }
    if (!ar::mesh_lint(q).empty()) o.fail("mesh violations in the n=4 quiver");

    // stable part: a 4-row grid where every complete node has one or two
    // successors, one per neighbouring row
    const auto st = ar::stable(q);
    rows.clear();
    for (const auto& node : st.nodes()) {
        rows.insert(node.row);
        if (node.injective) o.fail("stable quiver keeps " + node.id);
        if (node.incomplete) continue;
        std::set<int> next;
        for (const auto& t : st.targets_of(node.id)) next.insert(st.node(t).row);
        std::set<int> expect;
        if (node.row > 0) expect.insert(node.row - 1);
        if (node.row < 3) expect.insert(node.row + 1);
        if (next != expect) o.fail("stable node " + node.id + " is not a ZA_4 grid point");
    }
    if (rows != std::set<int>{0, 1, 2, 3}) o.fail("stable quiver does not have 4 rows");
    if (!ar::mesh_lint(st).empty()) o.fail("mesh violations in the stable quiver");
    if (o.pass) o.detail = std::to_string(checked) + " sequences, n=4 quiver is a 5-row mesh, stable part ZA_4";
    return o;
}

Outcome serial_non_symmetric() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto fam = serial_window(n);
        for (const auto& v : fam.intervals()) {
            if (!fam.oracle_safe(v)) continue;
            const auto m = fam.realize(v);
            const auto nu = rep::nakayama(m);
            ++checked;
            if (fam.is_injective(v)) {
                if (!rep::is_injective(nu) || !rep::is_projective(nu)) o.fail("nu " + serial::to_string(v) + " not projective-injective");
            } else if (iso(nu, m)) {
                o.fail("nu fixes " + serial::to_string(v));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " intervals";
    return o;
}

Outcome qsl2_injectives() {
    Outcome o;
    qsl2::BlockFamily fam(8);
    for (int n = 0; n <= 6; ++n) {
        const auto i = fam.injective(n);
        const auto tag = "I " + std::to_string(n);
        rep::DimVector expect = n == 0 ? rep::DimVector{{0, 2}, {1, 1}} : rep::DimVector{{n - 1, 1}, {n, 2}, {n + 1, 1}};
        if (i.dim_vector() != expect) o.fail(tag + " has the wrong dimension vector");
        if (i.total_dim() != (n == 0 ? 3 : 4)) o.fail(tag + " has the wrong dimension");
        if (!iso(rep::top(i).object, fam.simple(n))) o.fail(tag + " top");
        if (!iso(rep::socle(i).object, fam.simple(n))) o.fail(tag + " socle");
        const auto rad = rep::radical(i).object;
        const auto middle = rep::cokernel(rep::socle(rad).map).object;
        const auto expected = n == 0 ? fam.simple(1) : rep::direct_sum(fam.simple(n - 1), fam.simple(n + 1));
        if (!iso(middle, expected)) o.fail(tag + " rad/soc");
    }
    if (o.pass) o.detail = "n = 0..6 in window [0,8]";
    return o;
}

Outcome qsl2_sequences() {
    Outcome o;
    qsl2::BlockFamily fam(10);
    const auto r = qsl2::verify_sequences(fam, -2, 2, 4, threads_from_env());
    for (const auto& e : r.entries)
        if (!e.pass() || !e.dims_add) o.fail(qsl2::to_string(e.sequence) + ": " + e.detail);
    if (o.pass) o.detail = std::to_string(r.entries.size()) + " sequences in window [0,10]";
    return o;
}

Outcome qsl2_symmetric() {
    Outcome o;
    qsl2::BlockFamily fam(8);
    const auto r = qsl2::check_symmetric(fam, 2, 4, threads_from_env());
    if (!r.gram_symmetric) o.fail("Gram matrix not symmetric");
    if (r.gram_rank != r.interior_dim) o.fail("Gram matrix rank " + std::to_string(r.gram_rank) + " of " + std::to_string(r.interior_dim));
    for (const auto& f : r.nakayama)
        if (!f.fixed) o.fail("nu moves " + qsl2::to_string(f.object) + ": " + f.detail);
    if (o.pass) o.detail = "rank " + std::to_string(r.gram_rank) + ", " + std::to_string(r.nakayama.size()) + " objects fixed by nu";
    return o;
}

Outcome functor_calculus() {
    Outcome o;
    std::size_t objects = 0, sequences = 0;
    auto inverse = [&](const rep::Representation& m, const std::string& tag) {
        ++objects;
        if (!iso(rep::cosyzygy(rep::syzygy(m)), m)) o.fail("cosyzygy of syzygy moves " + tag);
        if (!iso(rep::syzygy(rep::cosyzygy(m)), m)) o.fail("syzygy of cosyzygy moves " + tag);
    };
    auto star_exact = [&](const rep::ShortExactSeq& s, const std::string& tag) {
        ++sequences;
        const rep::ShortExactSeq starred{rep::star(s.right), rep::star(s.middle), rep::star(s.left), rep::star(s.surj),
                                         rep::star(s.inj), false};
        if (!rep::is_exact(starred)) o.fail("star not exact on " + tag);
    };

    for (int n = 1; n <= 4; ++n) {
        const auto fam = serial_window(n);
        for (const auto& v : fam.intervals()) {
            if (fam.is_injective(v) || !fam.oracle_safe(v)) continue;
            for (const auto side : {Side::V, Side::U}) {
                const Interval x{side, v.i, v.j};
                if (!fam.oracle_safe(x)) continue;
                inverse(fam.realize(x), serial::to_string(x));
            }
            const auto s = fam.almost_split(v);
            std::vector<rep::Representation> mids;
            for (const auto& x : s.middle) mids.push_back(fam.realize(x));
            const auto ses = rep::realize_ses(fam.realize(s.left), rep::direct_sum(mids), fam.realize(s.right));
            if (!ses) o.fail("no sequence for " + serial::to_string(v));
            else star_exact(*ses, serial::to_string(v));
        }
    }

    qsl2::BlockFamily block(10);
    for (int n = 0; n <= 4; ++n)
        for (int k = -2; k <= 2; ++k) inverse(block.realize(qsl2::StringObject{k, n}), qsl2::to_string(qsl2::StringObject{k, n}));
    for (int n = 0; n <= 3; ++n)
        for (int i = -1; i <= 1; ++i) {
            const auto s = block.almost_split({i + 1, n});
            std::vector<rep::Representation> mids;
            for (const auto& t : s.middle) mids.push_back(block.realize(t));
            const auto ses = rep::realize_ses(block.realize(s.left), rep::direct_sum(mids), block.realize(s.right));
            if (!ses) o.fail("no sequence for " + qsl2::to_string(s));
            else star_exact(*ses, qsl2::to_string(s));
        }
    if (sequences < 10) o.fail("only " + std::to_string(sequences) + " sequences");
    if (o.pass) o.detail = std::to_string(objects) + " objects, star exact on " + std::to_string(sequences) + " sequences";
    return o;
}

Outcome decomposition() {
    Outcome o;
    SerialFamily fam(3, -11, 5);
    std::vector<rep::Representation> serial_pool;
    for (const auto& v : fam.intervals()) serial_pool.push_back(fam.realize(v));
    qsl2::BlockFamily block(8);
    std::vector<rep::Representation> block_pool;
    for (int n = 0; n <= 4; ++n) {
        block_pool.push_back(block.injective(n));
        for (int k = -2; k <= 2; ++k) block_pool.push_back(block.realize(qsl2::StringObject{k, n}));
    }

    std::mt19937 rng(20260415);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& pool = trial % 2 == 0 ? serial_pool : block_pool;
        std::vector<rep::Representation> parts;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int p = 0; p < count; ++p) parts.push_back(pool[rng() % pool.size()]);
        const auto d = rep::fitting_decompose(rep::direct_sum(parts));
        if (!rep::same_multiset(d.factors, parts)) o.fail("trial " + std::to_string(trial) + " recovered a different multiset");
    }
    if (o.pass) o.detail = "50 sums of up to 4 summands";
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    Outcome o;
    const std::string dir = ARCOALG_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"serial", "ar", "--n", "4", "--window", "-8:4"}, "serial_n4"},
        {{"qsl2", "ar"}, "qsl2"},
    };
    std::size_t runs = 0;
    for (const char* threads : {"1", "4", "1", "4"}) {
        ::setenv("ARCOALG_THREADS", threads, 1);
        for (const auto& [args, stem] : cases)
            for (const char* format : {"dot", "ascii", "json"}) {
                auto full = args;
                full.insert(full.end(), {"--format", format});
                std::ostringstream out, err;
                const int code = cli::run(full, out, err);
                ++runs;
                const auto golden = read_file(dir + "/" + stem + "." + format);
                if (code != 0 || golden.empty() || out.str() != golden)
                    o.fail(stem + "." + format + " differs with " + threads + " thread(s)");
            }
    }
    ::unsetenv("ARCOALG_THREADS");
    if (o.pass) o.detail = std::to_string(runs) + " runs byte-identical to the golden files";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"serial closed forms match the oracle", serial_closed_forms},
        {"serial almost split sequences and AR quiver", serial_sequences},
        {"serial family is not symmetric", serial_non_symmetric},
        {"qsl2 injectives", qsl2_injectives},
        {"qsl2 almost split sequences", qsl2_sequences},
        {"qsl2 symmetry", qsl2_symmetric},
        {"functor calculus", functor_calculus},
        {"decomposition recovers summands", decomposition},
        {"golden outputs are deterministic", determinism},
    };
    bool all = true;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c + 1 << ": " << criteria[c].first << " (" << o.detail
                  << ", " << ms << " ms)" << std::endl;
    }
    return all ? 0 : 1;
}

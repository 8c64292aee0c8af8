// The truncated path coalgebra of type A∞∞: comodules spanned by paths of
// length at most n on the doubly infinite line quiver t -> t+1.
//
// Indecomposables are intervals. V i j is the right comodule with top at i
// and socle at j (a one-dimensional space at each vertex i..j, identity
// maps); U i j = D(V i j) is the left one. Intervals of length n are the
// projective-injectives, I j = V j-n j.
//
// Closed forms (V side; the U side is the mirror t -> -t):
//   Ω V i j = V j+1 i+n        Ω⁻¹ V i j = V j-n i-1    Ω⁻² V i j = V i-n-1 j-n-1
//   ν V i j = V i+n j+n        star V i j = U i+n j+n
//   Tr V i j = U i-1 j-1       DTr V i j = V i-1 j-1
// Every function here works symbolically; realize() hands intervals to the
// representation oracle over a finite vertex window.
#pragma once

#include "arcoalg/arquiver.hpp"
#include "arcoalg/functors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arcoalg::serial {

enum class Side { V, U };

/// V/U i j with j - i <= n; j = i - 1 is the zero object.
struct Interval {
    Side side = Side::V;
    int i = 0;
    int j = 0;

    static Interval zero(Side s = Side::V) { return {s, 0, -1}; }
    bool is_zero() const { return j < i; }
    int length() const { return is_zero() ? 0 : j - i + 1; }
    bool operator==(const Interval& o) const {
        return side == o.side && (is_zero() ? o.is_zero() : (i == o.i && j == o.j));
    }
};

/// "V i j", "U i j" or "0".
std::string to_string(const Interval& v);
/// Accepts "V i j", "U i j", "S i", "I i" (the latter two need n).
Interval parse_interval(const std::string& text, int n);

class SerialFamily {
public:
    /// Requires n >= 1 and hi - lo >= n + 2.
    SerialFamily(int n, int lo, int hi);

    int n() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    /// Bound path algebra on [lo, hi]: arrows a_t: t -> t+1, paths of length
    /// n+1 vanish. The projective at v is complete iff v + n <= hi, the
    /// injective iff v - n >= lo.
    const rep::PresentationPtr& presentation() const { return pres_; }

    bool in_window(const Interval& v) const;
    bool is_injective(const Interval& v) const { return !v.is_zero() && v.j - v.i == n_; }

    /// Throws WindowExceeded if the interval leaves the window, and
    /// ContractViolation if it is longer than n+1.
    rep::Representation realize(const Interval& v) const;

    Interval injective_of_simple(int s) const;

    // Closed forms. Injective inputs give the zero interval for Ω, Ω⁻¹,
    // Ω⁻², Tr and DTr. Results outside the window raise WindowExceeded.
    Interval syzygy(const Interval& v) const;
    Interval cosyzygy(const Interval& v) const;
    Interval cosyzygy2(const Interval& v) const;
    Interval nakayama(const Interval& v) const;
    Interval star(const Interval& v) const;
    Interval transpose(const Interval& v) const;
    Interval dtr(const Interval& v) const;
    Interval vector_dual(const Interval& v) const;

    struct AlmostSplit {
        Interval left;
        std::vector<Interval> middle;  // zero terms dropped
        Interval right;
    };
    /// 0 -> V i j -> V i-1 j ⊕ V i j-1 -> V i-1 j-1 -> 0, mirrored for U.
    AlmostSplit almost_split(const Interval& v) const;

    /// Whether every oracle computation on v stays inside the window:
    /// [i-n-1, j+n] on the V side, [i-n, j+n+1] on the U side.
    bool oracle_safe(const Interval& v) const;

    /// All V intervals inside the window, ordered by (length, -i).
    std::vector<Interval> intervals() const;

    ar::ARQuiver ar_quiver() const;

private:
    Interval checked(Interval v) const;

    int n_;
    int lo_;
    int hi_;
    rep::PresentationPtr pres_;
};

std::string node_id(const Interval& v);

/// One row per (operation, input): oracle result compared with the closed form.
struct VerifyEntry {
    std::string op;
    Interval input;
    std::string expected;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    int lo = 0;
    int hi = 0;
    std::vector<VerifyEntry> entries;
    bool all_pass() const;
    std::size_t failures() const;
};

/// Operation names accepted by verify().
const std::vector<std::string>& verify_ops();

/// Checks each selected operation on every oracle-safe interval of both
/// sides. threads > 1 evaluates intervals concurrently; the report order
/// does not depend on it.
VerifyReport verify(const SerialFamily& fam, const std::vector<std::string>& ops, unsigned threads = 1);

std::string to_tsv(const VerifyReport& r);
std::string to_json(const VerifyReport& r);

}  // namespace arcoalg::serial

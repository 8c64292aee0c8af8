// The nontrivial block of quantum SL(2) at a root of unity, on the vertex
// window [0, w].
//
// Quiver 0 ⇄ 1 ⇄ 2 ⇄ ... with a_i: i -> i+1 and b_i: i+1 -> i. The dual
// algebra kills the length-two paths absent from the coalgebra and
// identifies the two loops at each inner vertex:
//   a_i then a_{i+1} = 0,  b_{i+1} then b_i = 0,
//   b_i then a_i = a_{i+1} then b_{i+1},  paths of length 3 vanish.
// The loop at the boundary vertex w is kept, so the window algebra is eAe
// for the idempotent e of [0, w]. Projectives and injectives are complete
// at vertices 0..w-1.
//
// Non-injective indecomposables are the string objects Ω^k S(n), realized by
// iterating the oracle's syzygy and cosyzygy on the simple S(n).
#pragma once

#include "arcoalg/arquiver.hpp"
#include "arcoalg/functors.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace arcoalg::qsl2 {

/// Ω^k S(n).
struct StringObject {
    int k = 0;
    int n = 0;
    bool operator==(const StringObject&) const = default;
    auto operator<=>(const StringObject&) const = default;
};

/// A term of a sequence: a string object or the injective I_n.
struct Term {
    bool injective = false;
    int k = 0;
    int n = 0;
    static Term string(StringObject s) { return {false, s.k, s.n}; }
    static Term inj(int n) { return {true, 0, n}; }
    bool operator==(const Term&) const = default;
};

/// "S n", "O^k S n".
std::string to_string(const StringObject& s);
/// "I n" or the string object form.
std::string to_string(const Term& t);
/// Accepts "S n", "O^k S n" and "I n".
Term parse_term(const std::string& text);

StringObject omega(const StringObject& s, int steps);

/// 0 -> Ω^{i+1}S(n) -> Ω^i S(n-1) ⊕ Ω^i S(n+1) [⊕ I_n if i = 0] -> Ω^{i-1}S(n) -> 0
struct SymSequence {
    StringObject left;
    std::vector<Term> middle;
    StringObject right;
};

std::string to_string(const SymSequence& s);

class BlockFamily {
public:
    /// Requires w >= 4 and 1 <= margin <= w.
    explicit BlockFamily(int w, int margin = 1);

    int window() const { return w_; }
    int margin() const { return margin_; }
    const rep::PresentationPtr& presentation() const { return pres_; }

    /// Whether Ω^k S(n) plus `extra` further (co)syzygy steps stays in the
    /// guaranteed sub-window [0, w - margin].
    bool safe(const StringObject& s, int extra = 0) const;

    rep::Representation injective(int n) const;
    rep::Representation simple(int n) const;
    /// Ω^k S(n) by iterated (co)syzygy; cached, checked indecomposable.
    rep::Representation realize(const StringObject& s) const;
    rep::Representation realize(const Term& t) const;
    rep::DimVector dim_vector(const StringObject& s) const;

    SymSequence almost_split(const StringObject& s) const;

    ar::ARQuiver ar_quiver(int k_max, int n_max, unsigned threads = 1) const;

private:
    int w_;
    int margin_;
    rep::PresentationPtr pres_;
    mutable std::mutex cache_mutex_;
    mutable std::map<StringObject, rep::Representation> cache_;
};

struct SequenceEntry {
    SymSequence sequence;
    bool dims_add = false;
    bool realized = false;
    bool exact = false;
    bool non_split = false;
    bool right_is_omega_inv2 = false;
    std::string dtr_check;  // "pass", "fail" or why it was not run
    bool pass() const { return dims_add && realized && exact && non_split && right_is_omega_inv2 && dtr_check != "fail"; }
    std::string detail;
};

struct SequenceReport {
    int window = 0;
    std::vector<SequenceEntry> entries;
    bool all_pass() const;
};

/// Sequences with left end Ω^{i+1}S(n) for i in [i_min, i_max], n in [0, n_max].
SequenceReport verify_sequences(const BlockFamily& fam, int i_min, int i_max, int n_max, unsigned threads = 1);

struct SymmetryReport {
    std::size_t interior_dim = 0;
    std::size_t gram_rank = 0;
    bool gram_symmetric = false;
    struct Fixed {
        StringObject object;
        bool fixed = false;
        std::string detail;
    };
    std::vector<Fixed> nakayama;
    bool all_pass() const;
};

/// Gram matrix of the form (loop classes at inner vertices -> 1, other
/// classes -> 0) on the classes with both ends in [0, w-1], and ν(M) ≅ M
/// for Ω^k S(n), |k| <= k_max, n <= n_max.
SymmetryReport check_symmetric(const BlockFamily& fam, int k_max, int n_max, unsigned threads = 1);
/// The Gram matrix alone, rows and columns in basis order of the interior classes.
lin::Matrix gram_matrix(const BlockFamily& fam);

std::string to_tsv(const SequenceReport& r);
std::string to_json(const SequenceReport& r);
std::string to_tsv(const SymmetryReport& r);
std::string to_json(const SymmetryReport& r);

}  // namespace arcoalg::qsl2

// Isomorphism testing, Krull-Schmidt splitting via Fitting's lemma, and
// witnesses for short exact sequences.
//
// All three search a Hom space with the same deterministic budget: the
// basis elements, two dense probes (all-ones and 1,2,3,... weights), then
// every combination of two or three basis elements with coefficients in
// {1,-1,2,-2}.
#pragma once

#include "arcoalg/functors.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arcoalg::rep {

/// Calls visit on candidates in budget order until it returns true.
/// Returns whether some candidate was accepted.
bool search_hom(const HomSpace& hom, const std::function<bool(const Morphism&)>& visit);

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<Morphism> certificate;  // set when isomorphic
    std::string reason;                   // distinguishing invariant when not
    bool budget_limited = false;          // No reached only by exhausting the search
    explicit operator bool() const { return isomorphic; }
};

IsoVerdict is_isomorphic(const Representation& m, const Representation& n);

struct Decomposition {
    std::vector<Representation> factors;
    std::vector<std::size_t> endomorphism_dims;  // dim End of each factor
};

/// Splits m into indecomposables, ordered by (dimension vector, dim End).
Decomposition fitting_decompose(const Representation& m);

/// Whether the multisets agree up to isomorphism.
bool same_multiset(const std::vector<Representation>& a, const std::vector<Representation>& b);

/// Searches Hom(a, b) for an injection with cokernel isomorphic to c.
/// The non_split flag is decided exactly: the sequence splits iff the
/// injection has a retraction, a linear condition on Hom(b, a).
std::optional<ShortExactSeq> realize_ses(const Representation& a, const Representation& b, const Representation& c);

/// Exact split test for an injection f: a -> b.
bool has_retraction(const Morphism& f);

}  // namespace arcoalg::rep

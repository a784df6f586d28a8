#ifndef ETAQ_BASIS_SEARCH_HPP
#define ETAQ_BASIS_SEARCH_HPP

#include "etaq/etacore.hpp"

#include <vector>

namespace etaq {

struct SearchBounds {
    long r_max = 24;          // per-divisor exponent cap |r_delta| <= r_max
    long max_results = 100000; // enumeration cutoff
};

struct EnumerationResult {
    std::vector<EtaQuotient> quotients;
    bool complete = true; // false when max_results cut the enumeration short
};

/// All exponent maps over the divisors of N with sum r = 2k, both mod-24
/// congruences satisfied, character matching the requested discriminant,
/// non-negative order at every cusp, and |r_delta| <= r_max.  Output is
/// ordered lexicographically by the divisor-sorted exponent vector.
EnumerationResult enumerate_eta_quotients(long N, long k, const SearchBounds& bounds,
                                          long character_discriminant = 1);

/// Greedy maximal linearly-independent subset, by exact rank on q-expansions
/// truncated at the given precision (which must exceed the Sturm bound).
/// Deterministic given the input order.
std::vector<EtaQuotient> prune_to_rank_basis(const std::vector<EtaQuotient>& candidates,
                                             long precision);

} // namespace etaq

#endif

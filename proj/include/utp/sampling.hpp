#pragma once

#include <cstdint>

#include "utp/predicate.hpp"

namespace utp {

// Random predicates for the theorem-sampling harness. Membership of each
// binding is a pure function of (seed, rank), so a sampled predicate is
// identical across thread counts and platforms. density_pct varies the row
// density so the checks see near-empty, mid, and near-full predicates.
Predicate sample_predicate(const AlphabetPtr& a, std::uint64_t seed, unsigned density_pct);

// derives the density from the seed (cycles through sparse to dense)
Predicate sample_predicate(const AlphabetPtr& a, std::uint64_t seed);

// a refinement-ordered pair: second refines first
std::pair<Predicate, Predicate> sample_ordered_pair(const AlphabetPtr& a, std::uint64_t seed);

}  // namespace utp

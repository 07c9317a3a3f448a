#include "utp/sampling.hpp"

#include "utp/relops.hpp"
#include "utp/rng.hpp"

namespace utp {

Predicate sample_predicate(const AlphabetPtr& a, std::uint64_t seed, unsigned density_pct) {
  return Predicate::of_rows(a, [seed, density_pct](std::uint64_t r) {
    return Rng::mix(seed, r) % 100 < density_pct;
  });
}

Predicate sample_predicate(const AlphabetPtr& a, std::uint64_t seed) {
  static constexpr unsigned kDensities[] = {2, 10, 25, 50, 75, 95};
  return sample_predicate(a, seed, kDensities[seed % 6]);
}

std::pair<Predicate, Predicate> sample_ordered_pair(const AlphabetPtr& a, std::uint64_t seed) {
  Predicate weaker = sample_predicate(a, Rng::mix(seed, 1));
  Predicate stronger = conj(weaker, sample_predicate(a, Rng::mix(seed, 2)));
  return {std::move(weaker), std::move(stronger)};
}

}  // namespace utp

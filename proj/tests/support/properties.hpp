#pragma once

// Randomized invariant checks shared by the property suite and the
// acceptance runner. Each returns how many cases ran and which failed.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && cases > 0; }
  std::string summary() const;
};

/// k_verdict level and family agree on the golden curves under `frames` random frames.
Result frame_invariance(int frames, std::uint64_t seed);
/// hm_index(p, k w) = k hm_index(p, w) for k = 2, 3 on pairs with semi-invariant q.
Result hm_homogeneity(int trials, std::uint64_t seed);
/// hm_index(p, -w) = -hm_index(p, w) for pairs fixed by the 1-PS.
Result hm_inverse(int trials, std::uint64_t seed);
/// one_ps_limit is idempotent and lands on semi-invariant forms.
Result limit_idempotence(int trials, std::uint64_t seed);
/// parse_poly(str(p)) = p in all three variable conventions.
Result parse_roundtrip(int trials, std::uint64_t seed);
/// classify_germ against the Milnor number oracle.
Result germ_oracle(int a_germs, int d4_germs, std::uint64_t seed);
/// extract_pair(sarkisov_cubic(p)) = p, and the integrality flag matches gcd triviality.
Result sarkisov_roundtrip(int trials, std::uint64_t seed);

}  // namespace props

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/git/hilbert_mumford.hpp"

namespace fanostab {

struct Certificate {
  OnePS ps;
  HMValue value;
  std::string frame_origin;  // "identity", "user #k", "quadric normal form", ...
};

struct SearchFrame {
  RMatrix frame;
  std::string origin;
};

/// Primitive nonzero integer vectors with sum 0 and max |w_i| <= bound,
/// ordered by (max |w_i|, sum |w_i|, lexicographic).
std::vector<std::vector<long>> weight_candidates(int bound);

/// The frames tried by the search, in order: identity, the supplied ones, then
/// frames adapted to p (quadric normal form, common linear factor, singular points).
std::vector<SearchFrame> search_frames(const CurvePair& p, const std::vector<RMatrix>& frames);

/// Bounded search for a 1-PS with mu^t < 0. Candidates are ordered frame by
/// frame and then by weight_candidates; the first hit in that order is
/// returned regardless of `threads`. A returned certificate is exact; not
/// finding one proves nothing. t must lie in [0, 2/3] (OutOfRange).
std::optional<Certificate> destabilizer_search(const CurvePair& p, const Rat& t,
                                               const std::vector<RMatrix>& frames = {}, int bound = 9,
                                               int threads = 1);

}  // namespace fanostab

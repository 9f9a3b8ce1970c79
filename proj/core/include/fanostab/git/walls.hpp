#pragma once

#include <string>
#include <vector>

#include "fanostab/algebra/rational.hpp"

namespace fanostab {

/// 0, 2/9, 2/5, 1/2, 2/3 as T0..T4.
const std::vector<Rat>& vgit_walls();

struct Chamber {
  bool is_wall = false;
  int index = 0;  // wall T_index, or the chamber (T_index, T_index+1)
  Rat lo;
  Rat hi;

  /// "Wall(T1=2/9)" or "Chamber(2/5, 1/2)".
  std::string str() const;
  friend bool operator==(const Chamber& a, const Chamber& b) = default;
};

/// OutOfRange outside [0, 2/3].
Chamber chamber_of(const Rat& t);

enum class HKDirection { AlphaToT, TToAlpha };

/// t = (34a - 16) / (33a - 14) on a in [8/17, 5/9], and its inverse
/// a = (16 - 14t) / (34 - 33t) on t in [0, 2/3]. OutOfRange otherwise.
Rat hk_map(const Rat& x, HKDirection dir);

}  // namespace fanostab

#include "fanostab/git/walls.hpp"

namespace fanostab {

const std::vector<Rat>& vgit_walls() {
  static const std::vector<Rat> w{Rat(0), Rat(2, 9), Rat(2, 5), Rat(1, 2), Rat(2, 3)};
  return w;
}

std::string Chamber::str() const {
  if (is_wall) return "Wall(T" + std::to_string(index) + "=" + lo.str() + ")";
  return "Chamber(" + lo.str() + ", " + hi.str() + ")";
}

Chamber chamber_of(const Rat& t) {
  const auto& w = vgit_walls();
  if (t < w.front() || t > w.back()) throw Error(ErrorCode::OutOfRange, "t = " + t.str() + " is outside [0, 2/3]");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (t == w[i]) return {true, static_cast<int>(i), w[i], w[i]};
    if (t < w[i + 1]) return {false, static_cast<int>(i), w[i], w[i + 1]};
  }
  return {};  // unreachable
}

Rat hk_map(const Rat& x, HKDirection dir) {
  if (dir == HKDirection::AlphaToT) {
    if (x < Rat(8, 17) || x > Rat(5, 9))
      throw Error(ErrorCode::OutOfRange, "alpha = " + x.str() + " is outside [8/17, 5/9]");
    return (Rat(34) * x - Rat(16)) / (Rat(33) * x - Rat(14));
  }
  if (x < Rat(0) || x > Rat(2, 3)) throw Error(ErrorCode::OutOfRange, "t = " + x.str() + " is outside [0, 2/3]");
  return (Rat(16) - Rat(14) * x) / (Rat(34) - Rat(33) * x);
}

}  // namespace fanostab

#pragma once

#include <optional>

#include "fanostab/algebra/matrix.hpp"

namespace fanostab {

/// x0*x3 - x1*x2 and x1*x3 - x2^2 in x0..x3.
Poly smooth_quadric_model();
Poly cone_model();

struct QuadricInfo {
  int rank = 0;
  /// x = F y with q(F y) = lambda * model(y); model is the smooth quadric for
  /// rank 4 and the cone for rank 3 (vertex at y = [1:0:0:0]).
  std::optional<QMatrix> frame;
  QuadNum lambda{1};
  /// The frame has rational entries.
  bool exact = false;
};

/// Rank of the Gram matrix plus a normal frame when one exists over Q or a
/// single quadratic extension. Frames are verified by substitution.
QuadricInfo quadric_normal_form(const Poly& q);

}  // namespace fanostab

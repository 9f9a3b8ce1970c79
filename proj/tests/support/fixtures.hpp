#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fanostab/git/curve_pair.hpp"
#include "fanostab/io/parse.hpp"

namespace fx {

using fanostab::CurvePair;
using fanostab::Poly;
using fanostab::RMatrix;
using Rng = std::mt19937_64;

Poly p3(const std::string& text);
Poly p4(const std::string& text);
Poly bideg(const std::string& text);
/// Ring with local variables x, y for germs.
const fanostab::VarList& xy_vars();
Poly germ(const std::string& text);

CurvePair pair(const std::string& q, const std::string& g);

// Golden curves.
CurvePair c2a5();
CurvePair three_conics(int c1 = 1, int c2 = 2, int c3 = 3);
CurvePair smooth_curve();
CurvePair cone_a1();
CurvePair cone_worse();
CurvePair rank2();
CurvePair destabilized_pair();  // q = x1*x2 with a cubic of weight -3 under (-1,1,1,-1)
CurvePair cone_hm();            // (x1*x3 - x2^2, x0*x1^2 + x2^3 + x3^3)
CurvePair nine_node_grid();     // (u^3 + v^3)(s^3 + w^3)

int uniform(Rng& rng, int lo, int hi);
/// Invertible integer matrix with entries in [lo, hi].
RMatrix random_frame(Rng& rng, int lo = -2, int hi = 2);
/// Random form of the given degree; each monomial present with probability `density`.
/// Coefficients are integers in [-3, 3], or p/q with q in 1..4 when `fractions`.
Poly random_form(Rng& rng, const fanostab::VarList& vars, int degree, double density = 0.5, bool fractions = false);
/// Random zero-sum nonzero weight vector with entries in [-b, b].
std::vector<long> random_weights(Rng& rng, int b = 3);
/// Random pair with gcd(q, g) = 1.
CurvePair random_ci_pair(Rng& rng);
/// Random pair sharing a linear factor.
CurvePair random_non_ci_pair(Rng& rng);

struct GermCase {
  Poly f;
  int milnor;  // expected by construction
  bool d4;
};
/// unit * (y - a(x))^2 - c * x^k with k in [2, 10], optionally in random linear coordinates.
GermCase random_a_germ(Rng& rng);
/// Three distinct tangent lines plus higher-order terms.
GermCase random_d4_germ(Rng& rng);

}  // namespace fx

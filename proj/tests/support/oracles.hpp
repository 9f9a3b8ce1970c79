#pragma once

// Independent reference computations. None of these call into the library's
// elimination, germ or lattice code; they use GMP directly.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fanostab/algebra/mpoly.hpp"

namespace oracle {

/// Determinant of the Sylvester matrix of a and b (coefficients low to high,
/// formal degrees = size - 1), by Bareiss elimination over Z.
mpz_class sylvester_resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

/// Exact determinant over Q by plain Gaussian elimination.
mpq_class determinant(std::vector<std::vector<mpq_class>> m);

/// Rank over Q.
int rank(std::vector<std::vector<mpq_class>> m);

/// Milnor number of a germ f(x, y) at the origin as dim Q[x,y]/(f_x, f_y, m^N),
/// increasing N until two consecutive values agree. -1 if no agreement up to max_n.
int milnor_number(const fanostab::Poly& f, int max_n = 40);

/// a/b + c/d, a/b * c/d on small fractions with 128-bit cross multiplication;
/// returns (num, den) unreduced.
struct Frac {
  __int128 n, d;
};
Frac frac_add(Frac x, Frac y);
Frac frac_mul(Frac x, Frac y);
bool frac_equals(Frac x, const mpq_class& q);

/// v^T G w with plain integers.
long gram_pair(const std::vector<std::vector<long>>& g, const std::vector<long>& v, const std::vector<long>& w);

}  // namespace oracle

#pragma once

#include <array>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace fanostab {

/// Prime factorization by trial division, finishing with a probable-prime
/// test on the cofactor. Returns nullopt when the cofactor is composite and
/// too large to split by trial division.
std::optional<std::vector<std::pair<mpz_class, int>>> factor_integer(const mpz_class& n);

/// A nontrivial integer solution of a x^2 + b y^2 + c z^2 = 0 for nonzero
/// integers a, b, c, or nullopt if none exists (or factoring gave up).
std::optional<std::array<mpz_class, 3>> solve_ternary(const mpz_class& a, const mpz_class& b, const mpz_class& c);

}  // namespace fanostab

#include "fanostab/algebra/legendre.hpp"

namespace fanostab {

namespace {

constexpr unsigned long kTrialLimit = 2000000;

using Triple = std::array<mpz_class, 3>;

// n = core * square^2 with core square-free (sign kept in core).
bool squarefree_decompose(const mpz_class& n, mpz_class& core, mpz_class& square) {
  const auto f = factor_integer(n);
  if (!f) return false;
  core = sgn(n) < 0 ? -1 : 1;
  square = 1;
  for (const auto& [p, e] : *f) {
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) core *= p;
  }
  return true;
}

// Square root of a modulo an odd prime or 2.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
  mpz_class a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return mpz_class(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // Tonelli-Shanks.
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class c, t, r, tmp;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  tmp = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), tmp.get_mpz_t(), p.get_mpz_t());
  unsigned long mm = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
      if (i == mm) return std::nullopt;
    }
    mpz_class b = c;
    for (unsigned long k = 0; k + i + 1 < mm; ++k) b = (b * b) % p;
    mm = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

// Square root of a modulo a square-free modulus, by CRT over its prime factors.
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& a, const mpz_class& m) {
  const auto f = factor_integer(m);
  if (!f) return std::nullopt;
  mpz_class r = 0, mod = 1;
  for (const auto& [p, e] : *f) {
    if (e != 1) return std::nullopt;
    const auto rp = sqrt_mod_prime(a, p);
    if (!rp) return std::nullopt;
    // r' = r + mod * k with r' = rp (mod p)
    mpz_class inv, diff = (*rp - r) % p;
    if (diff < 0) diff += p;
    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
    const mpz_class k = (diff * inv) % p;
    r += mod * k;
    mod *= p;
  }
  return r;
}

// X^2 = A Y^2 + B Z^2 with A, B nonzero and square-free.
std::optional<Triple> descend(const mpz_class& A, const mpz_class& B, int depth) {
  if (depth > 4000) return std::nullopt;
  if (A == 1) return Triple{1, 1, 0};
  if (B == 1) return Triple{1, 0, 1};
  if (A < 0 && B < 0) return std::nullopt;
  if (A + B == 0) return Triple{0, 1, 1};
  if (abs(A) > abs(B)) {
    auto s = descend(B, A, depth + 1);
    if (!s) return std::nullopt;
    return Triple{(*s)[0], (*s)[2], (*s)[1]};
  }
  const mpz_class absb = abs(B);
  auto root = sqrt_mod_squarefree(A, absb);
  if (!root) return std::nullopt;
  mpz_class r = *root % absb;
  if (r < 0) r += absb;
  if (2 * r > absb) r -= absb;
  const mpz_class num = r * r - A;
  if (num % B != 0) return std::nullopt;
  const mpz_class T = num / B;
  if (T == 0) return std::nullopt;
  mpz_class core, k;
  if (!squarefree_decompose(T, core, k)) return std::nullopt;
  auto s = descend(A, core, depth + 1);
  if (!s) return std::nullopt;
  const auto& [x, y, z] = *s;
  return Triple{r * x + A * y, x + r * y, core * k * z};
}

}  // namespace

std::optional<std::vector<std::pair<mpz_class, int>>> factor_integer(const mpz_class& n_in) {
  std::vector<std::pair<mpz_class, int>> out;
  mpz_class n = abs(n_in);
  if (n == 0) return std::nullopt;
  auto take = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(p), e);
  };
  take(2);
  unsigned long p = 3;
  for (; p <= kTrialLimit && mpz_class(p) * p <= n; p += 2) take(p);
  if (n > 1) {
    if (mpz_class(p) * p > n || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      out.emplace_back(n, 1);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<std::array<mpz_class, 3>> solve_ternary(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (a == 0 || b == 0 || c == 0) {
    if (a == 0) return Triple{1, 0, 0};
    if (b == 0) return Triple{0, 1, 0};
    return Triple{0, 0, 1};
  }
  // Multiply through by c: (c z)^2 = (-a c) x^2 + (-b c) y^2.
  mpz_class A0, sA, B0, sB;
  if (!squarefree_decompose(-a * c, A0, sA) || !squarefree_decompose(-b * c, B0, sB)) return std::nullopt;
  const auto s = descend(A0, B0, 0);
  if (!s) return std::nullopt;
  const mpz_class X = (*s)[0] * sA * sB, Y = (*s)[1] * sB, Z = (*s)[2] * sA;
  Triple t{c * Y, c * Z, X};
  mpz_class g = 0;
  for (const auto& v : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return std::nullopt;
  for (auto& v : t) v /= g;
  if (a * t[0] * t[0] + b * t[1] * t[1] + c * t[2] * t[2] != 0) return std::nullopt;
  return t;
}

}  // namespace fanostab

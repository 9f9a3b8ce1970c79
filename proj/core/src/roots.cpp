#include "fanostab/algebra/roots.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace fanostab {

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_changes(const std::vector<RPoly>& chain, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Positive integer L such that every rational root has denominator dividing L.
mpz_class denominator_bound(const RPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    const mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  const Rat lc = p.lc();
  mpz_class lead = lc.num() * (l / lc.den()) / g;
  return abs(lead);
}

Rat cauchy_bound(const RPoly& p) {
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeffs()[i] / p.lc()).abs());
  return m + Rat(1);
}

}  // namespace

int sturm_count(const std::vector<RPoly>& chain, const Rat& lo, const Rat& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<Rat> rational_roots(const RPoly& p) {
  std::vector<Rat> roots;
  if (p.degree() <= 0) return roots;
  RPoly sf = squarefree_part(p);
  while (sf.degree() > 0) {
    if (sf.coeff(0).is_zero()) {
      roots.emplace_back(0);
      sf = sf / RPoly::x();
      continue;
    }
    if (sf.degree() == 1) {
      roots.push_back(-sf.coeff(0) / sf.coeff(1));
      break;
    }
    const Rat L(denominator_bound(sf));
    const auto chain = sturm_chain(sf);
    const Rat m = cauchy_bound(sf);
    std::vector<std::pair<Rat, Rat>> todo{{-m, m}};
    std::vector<Rat> found;
    std::optional<Rat> exact;
    while (!todo.empty() && !exact) {
      auto [lo, hi] = todo.back();
      todo.pop_back();
      const int cnt = sturm_count(chain, lo, hi);
      if (cnt == 0) continue;
      if (cnt == 1 && (hi - lo) * L < Rat(1)) {
        const Rat c(floor(hi * L), L.num());
        if (c > lo && sf.eval(c).is_zero()) found.push_back(c);
        continue;
      }
      const Rat mid = (lo + hi) / Rat(2);
      if (sf.eval(mid).is_zero()) {
        exact = mid;
        break;
      }
      todo.emplace_back(lo, mid);
      todo.emplace_back(mid, hi);
    }
    if (exact) {
      // An endpoint hit a root: divide it out and isolate again.
      roots.push_back(*exact);
      sf = sf / RPoly(std::vector<Rat>{-*exact, Rat(1)});
      continue;
    }
    roots.insert(roots.end(), found.begin(), found.end());
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

bool all_rational(const QUPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const QuadNum& c) { return c.is_rational(); });
}

RPoly rational_part(const QUPoly& p) {
  std::vector<Rat> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational());
  return RPoly(std::move(c));
}

QUPoly conj_poly(const QUPoly& p) {
  std::vector<QuadNum> c;
  for (const auto& x : p.coeffs()) c.push_back(x.conj());
  return QUPoly(std::move(c));
}

QUPoly linear(const QuadNum& r) { return QUPoly(std::vector<QuadNum>{-r, QuadNum(1)}); }

}  // namespace

FieldRoots field_roots(const QUPoly& p) {
  FieldRoots out;
  if (p.degree() <= 0) return out;
  QUPoly rem = squarefree_part(p);
  std::vector<Rat> candidates;
  if (all_rational(rem)) {
    candidates = rational_roots(rational_part(rem));
  } else {
    // Rational roots of p are among those of its norm p * conj(p).
    const QUPoly n = rem * conj_poly(rem);
    candidates = rational_roots(rational_part(n));
  }
  for (const Rat& r : candidates) {
    if (!rem.eval(QuadNum(r)).is_zero()) continue;
    out.roots.emplace_back(r);
    rem = rem / linear(QuadNum(r));
  }
  if (rem.degree() == 1) {
    out.roots.push_back(-rem.coeff(0) / rem.coeff(1));
  } else if (rem.degree() == 2) {
    bool solved = false;
    try {
      const QuadNum a = rem.coeff(2), b = rem.coeff(1), c = rem.coeff(0);
      const auto s = (b * b - QuadNum(4) * a * c).sqrt();
      if (s) {
        const QuadNum r1 = (-b + *s) / (QuadNum(2) * a), r2 = (-b - *s) / (QuadNum(2) * a);
        if (rem.eval(r1).is_zero() && rem.eval(r2).is_zero()) {
          out.roots.push_back(r1);
          out.roots.push_back(r2);
          solved = true;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedField) throw;
    }
    if (!solved) out.unresolved.push_back(rem);
  } else if (rem.degree() >= 3) {
    out.unresolved.push_back(rem);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace fanostab

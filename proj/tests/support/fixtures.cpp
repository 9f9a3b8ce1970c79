#include "fixtures.hpp"

#include <algorithm>

#include "fanostab/sing/points.hpp"
#include "fanostab/verdict/sarkisov.hpp"

namespace fx {

using namespace fanostab;

Poly p3(const std::string& text) { return parse_poly(text, Convention::P3).poly; }
Poly p4(const std::string& text) { return parse_poly(text, Convention::P4).poly; }
Poly bideg(const std::string& text) { return parse_poly(text, Convention::Bidegree).poly; }

const VarList& xy_vars() {
  static const VarList v = make_vars({"x", "y"});
  return v;
}

Poly germ(const std::string& text) {
  // Reuse the P3 parser on x0, x1 and rename.
  std::string t;
  for (char c : text) {
    if (c == 'x') t += "x0";
    else if (c == 'y') t += "x1";
    else t += c;
  }
  const Poly f = p3(t);
  Poly out(xy_vars());
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1]}, c);
  return out;
}

CurvePair pair(const std::string& q, const std::string& g) { return CurvePair::make(p3(q), p3(g)); }

CurvePair c2a5() { return pair("x0*x3 - x1*x2", "x0*x2^2 + x1^2*x3"); }

CurvePair three_conics(int c1, int c2, int c3) {
  const std::string f = "(u*s - " + std::to_string(c1) + "*v*w)*(u*s - " + std::to_string(c2) + "*v*w)*(u*s - " +
                        std::to_string(c3) + "*v*w)";
  return pair_from_bidegree(bideg(f));
}

CurvePair smooth_curve() {
  return pair("x0*x3 - x1*x2", "x0^3 + 2*x1^3 - x2^3 + 3*x3^3 + x0*x1*x2 - x1*x2*x3 + 5*x0^2*x3");
}

CurvePair cone_a1() { return pair("x1*x3 - x2^2", "x0^2*x2 + x1^3 + x3^3"); }
CurvePair cone_worse() { return pair("x1*x3 - x2^2", "x0^2*x1 + x0*x3^2"); }
CurvePair rank2() { return pair("x0*x1", "x2^3 + x3^3 + x0*x2*x3"); }
CurvePair destabilized_pair() { return pair("x1*x2", "x0^3 + x0^2*x3 + x0*x3^2 + x3^3"); }
CurvePair cone_hm() { return pair("x1*x3 - x2^2", "x0*x1^2 + x2^3 + x3^3"); }
CurvePair nine_node_grid() { return pair("x0*x3 - x1*x2", "x0^3 + x1^3 + x2^3 + x3^3"); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RMatrix random_frame(Rng& rng, int lo, int hi) {
  RMatrix m(4, 4);
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = Rat(uniform(rng, lo, hi));
  } while (m.det().is_zero());
  return m;
}

namespace {

void monomials(int nvars, int degree, Exponents& cur, int i, std::vector<Exponents>& out) {
  if (i == nvars - 1) {
    cur[i] = degree;
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[i] = k;
    monomials(nvars, degree - k, cur, i + 1, out);
  }
}

}  // namespace

Poly random_form(Rng& rng, const VarList& vars, int degree, double density, bool fractions) {
  const int n = static_cast<int>(vars->size());
  std::vector<Exponents> monos;
  Exponents cur(n, 0);
  monomials(n, degree, cur, 0, monos);
  std::bernoulli_distribution keep(density);
  for (;;) {
    Poly f(vars);
    for (const auto& m : monos) {
      if (!keep(rng)) continue;
      Rat c(uniform(rng, -3, 3));
      if (fractions) c /= Rat(uniform(rng, 1, 4));
      f.add_term(m, c);
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<long> random_weights(Rng& rng, int b) {
  for (;;) {
    std::vector<long> w(4);
    long s = 0;
    for (int i = 0; i < 3; ++i) s += (w[i] = uniform(rng, -b, b));
    w[3] = -s;
    if (w[3] < -b || w[3] > b) continue;
    if (w[0] || w[1] || w[2] || w[3]) return w;
  }
}

CurvePair random_ci_pair(Rng& rng) {
  for (;;) {
    const CurvePair p = CurvePair::make(random_form(rng, p3_vars(), 2, 0.6), random_form(rng, p3_vars(), 3, 0.4));
    if (is_complete_intersection(p)) return p;
  }
}

CurvePair random_non_ci_pair(Rng& rng) {
  const Poly l = random_form(rng, p3_vars(), 1, 0.7);
  return CurvePair::make(l * random_form(rng, p3_vars(), 1, 0.7), l * random_form(rng, p3_vars(), 2, 0.5));
}

namespace {

Poly X() { return Poly::variable(xy_vars(), 0); }
Poly Y() { return Poly::variable(xy_vars(), 1); }
Poly C(long c) { return Poly::constant(xy_vars(), Rat(c)); }

// Random invertible linear change of the local coordinates.
Poly random_linear_change(Rng& rng, const Poly& f) {
  long a, b, c, d;
  do {
    a = uniform(rng, -2, 2);
    b = uniform(rng, -2, 2);
    c = uniform(rng, -2, 2);
    d = uniform(rng, -2, 2);
  } while (a * d - b * c == 0);
  return f.substitute({C(a) * X() + C(b) * Y(), C(c) * X() + C(d) * Y()});
}

}  // namespace

GermCase random_a_germ(Rng& rng) {
  const int k = uniform(rng, 2, 10);
  long u0;
  do u0 = uniform(rng, -3, 3);
  while (u0 == 0);
  long c;
  do c = uniform(rng, -3, 3);
  while (c == 0);
  const Poly unit = C(u0) + C(uniform(rng, -2, 2)) * X() + C(uniform(rng, -2, 2)) * Y();
  const Poly a = C(uniform(rng, -2, 2)) * X() + C(uniform(rng, -2, 2)) * X().pow(2) + C(uniform(rng, -1, 1)) * X().pow(3);
  const Poly br = Y() - a;
  Poly f = unit * br * br - C(c) * X().pow(k);
  if (uniform(rng, 0, 1)) f = random_linear_change(rng, f);
  return {f, k - 1, false};
}

GermCase random_d4_germ(Rng& rng) {
  // Lines y = m_i x with distinct slopes, one of them possibly vertical.
  std::vector<int> slopes;
  while (slopes.size() < 3) {
    const int m = uniform(rng, -3, 3);
    if (std::find(slopes.begin(), slopes.end(), m) == slopes.end()) slopes.push_back(m);
  }
  Poly f = C(1);
  for (int m : slopes) f = f * (Y() - C(m) * X());
  f = f + C(uniform(rng, -2, 2)) * X().pow(4) + C(uniform(rng, -2, 2)) * X() * Y().pow(3) +
      C(uniform(rng, -2, 2)) * Y().pow(5);
  if (uniform(rng, 0, 1)) f = random_linear_change(rng, f);
  return {f, 4, true};
}

}  // namespace fx

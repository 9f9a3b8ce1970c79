#include "fanostab/sing/quadric.hpp"

#include <numeric>

#include "fanostab/algebra/legendre.hpp"
#include "fanostab/git/curve_pair.hpp"

namespace fanostab {

Poly smooth_quadric_model() {
  const auto& v = p3_vars();
  return Poly::monomial(v, {1, 0, 0, 1}, Rat(1)) - Poly::monomial(v, {0, 1, 1, 0}, Rat(1));
}

Poly cone_model() {
  const auto& v = p3_vars();
  return Poly::monomial(v, {0, 1, 0, 1}, Rat(1)) - Poly::monomial(v, {0, 0, 2, 0}, Rat(1));
}

namespace {

using QVec = std::vector<QuadNum>;
using RVec = std::vector<Rat>;

template <class K>
K bilinear(const Matrix<K>& a, const std::vector<K>& x, const std::vector<K>& y) {
  K s(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) s += x[i] * a(i, j) * y[j];
  return s;
}

template <class K>
std::vector<K> axpy(const K& a, const std::vector<K>& x, const std::vector<K>& y) {
  std::vector<K> r = y;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * x[i];
  return r;
}

template <class K>
std::vector<K> scaled(const K& a, std::vector<K> x) {
  for (auto& c : x) c *= a;
  return x;
}

QVec to_q(const RVec& v) { return QVec(v.begin(), v.end()); }

bool all_rational(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return false;
  return true;
}

// Orthogonal basis b_i with q(b_i) = d_i; kernel vectors get d_i = 0.
void diagonalize(const RMatrix& a, std::vector<RVec>& basis, RVec& d) {
  std::vector<RVec> rest;
  for (int i = 0; i < 4; ++i) {
    RVec e(4, Rat(0));
    e[i] = Rat(1);
    rest.push_back(e);
  }
  while (!rest.empty()) {
    std::size_t pick = rest.size();
    for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
      if (!bilinear(a, rest[i], rest[i]).is_zero()) pick = i;
    if (pick == rest.size()) {
      for (std::size_t i = 0; i < rest.size() && pick == rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
          if (!bilinear(a, rest[i], rest[j]).is_zero()) {
            rest[i] = axpy(Rat(1), rest[j], rest[i]);
            pick = i;
            break;
          }
    }
    if (pick == rest.size()) {
      for (auto& v : rest) {
        basis.push_back(v);
        d.push_back(Rat(0));
      }
      return;
    }
    const RVec x = rest[pick];
    const Rat qx = bilinear(a, x, x);
    rest.erase(rest.begin() + static_cast<long>(pick));
    for (auto& y : rest) y = axpy(-bilinear(a, y, x) / qx, x, y);
    basis.push_back(x);
    d.push_back(qx);
  }
}

mpz_class common_denominator(const RVec& d) {
  mpz_class l = 1;
  for (const Rat& x : d) {
    const mpz_class den = x.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

// Candidate isotropic vectors outside the kernel, rational ones first.
std::vector<QVec> isotropic_candidates(const std::vector<RVec>& basis, const RVec& d) {
  std::vector<int> nd;
  for (int i = 0; i < 4; ++i)
    if (!d[i].is_zero()) nd.push_back(i);
  const mpz_class den = common_denominator(d);
  RVec di(4);
  std::vector<mpz_class> z(4);
  for (int i = 0; i < 4; ++i) {
    di[i] = d[i] * Rat(den);
    z[i] = di[i].num();
  }
  std::vector<QVec> out;

  auto combo = [&](const std::vector<std::pair<int, Rat>>& cs) {
    RVec v(4, Rat(0));
    for (const auto& [i, c] : cs) v = axpy(c, basis[i], v);
    return to_q(v);
  };

  // Pairs whose ratio is minus a square.
  for (std::size_t i = 0; i < nd.size(); ++i)
    for (std::size_t j = i + 1; j < nd.size(); ++j) {
      Rat r;
      if (rational_sqrt(-d[nd[j]] / d[nd[i]], r)) out.push_back(combo({{nd[i], r}, {nd[j], Rat(1)}}));
    }
  if (!out.empty()) return out;

  // Ternary subforms, then (rank 4) the first two against small values of the other two.
  if (nd.size() >= 3) {
    for (std::size_t i = 0; i < nd.size(); ++i)
      for (std::size_t j = i + 1; j < nd.size(); ++j)
        for (std::size_t k = j + 1; k < nd.size(); ++k)
          if (auto s = solve_ternary(z[nd[i]], z[nd[j]], z[nd[k]]))
            out.push_back(combo({{nd[i], Rat((*s)[0])}, {nd[j], Rat((*s)[1])}, {nd[k], Rat((*s)[2])}}));
    if (!out.empty()) return out;
  }
  if (nd.size() == 4) {
    for (long m = 1; m <= 8 && out.empty(); ++m)
      for (long a = 1; a <= m && out.empty(); ++a) {
        const long b = m - a + 1;
        for (long sb : {b, -b}) {
          if (std::gcd(a, sb) != 1) continue;
          const mpz_class c = z[nd[2]] * a * a + z[nd[3]] * sb * sb;
          if (c == 0) continue;
          if (auto s = solve_ternary(z[nd[0]], z[nd[1]], c)) {
            const Rat u((*s)[2]);
            out.push_back(combo({{nd[0], Rat((*s)[0])}, {nd[1], Rat((*s)[1])}, {nd[2], u * Rat(a)}, {nd[3], u * Rat(sb)}}));
            break;
          }
        }
      }
    if (!out.empty()) return out;
  }

  // One quadratic extension: b_j + sqrt(-d_j/d_i) b_i.
  for (std::size_t i = 0; i < nd.size(); ++i)
    for (std::size_t j = i + 1; j < nd.size(); ++j) {
      const QuadNum r = QuadNum::sqrt_of(-d[nd[j]] / d[nd[i]]);
      QVec v = to_q(basis[nd[j]]);
      v = axpy(r, to_q(basis[nd[i]]), v);
      out.push_back(v);
    }
  return out;
}

// A second isotropic vector w with B(v, w) != 0.
std::optional<QVec> partner(const QMatrix& a, const QVec& v) {
  for (int i = 0; i < 4; ++i) {
    QVec e(4, QuadNum(0));
    e[i] = QuadNum(1);
    const QuadNum bve = bilinear(a, v, e);
    if (bve.is_zero()) continue;
    return axpy(-bilinear(a, e, e) / (QuadNum(2) * bve), v, e);
  }
  return std::nullopt;
}

std::vector<QVec> orthogonal_complement(const QMatrix& a, const QVec& v, const QVec& w) {
  return QMatrix::from_rows({a.apply(v), a.apply(w)}).nullspace();
}

std::optional<QMatrix> rank4_frame(const QMatrix& a, const QVec& v) {
  const auto w = partner(a, v);
  if (!w) return std::nullopt;
  const QVec f3 = scaled(QuadNum(1) / (QuadNum(2) * bilinear(a, v, *w)), *w);
  const auto u = orthogonal_complement(a, v, *w);
  if (u.size() != 2) return std::nullopt;
  const QuadNum qa = bilinear(a, u[0], u[0]), qb = bilinear(a, u[0], u[1]), qc = bilinear(a, u[1], u[1]);
  QVec p1, p2;
  if (qa.is_zero()) {
    p1 = u[0];
    p2 = axpy(QuadNum(-2) * qb, u[1], scaled(qc, u[0]));
  } else {
    const auto root = (qb * qb - qa * qc).sqrt();
    if (!root || !QuadNum::compatible(*root, qa) || !QuadNum::compatible(*root, qb)) return std::nullopt;
    p1 = axpy((-qb + *root) / qa, u[0], u[1]);
    p2 = axpy((-qb - *root) / qa, u[0], u[1]);
  }
  const QuadNum b12 = bilinear(a, p1, p2);
  if (b12.is_zero()) return std::nullopt;
  const QVec f2 = scaled(QuadNum(-1) / (QuadNum(2) * b12), p2);
  return QMatrix::from_columns({v, p1, f2, f3});
}

std::optional<QMatrix> rank3_frame(const QMatrix& a, const QVec& v, QuadNum& lambda) {
  const auto ker = a.nullspace();
  if (ker.size() != 1) return std::nullopt;
  const auto w = partner(a, v);
  if (!w) return std::nullopt;
  for (const QVec& u : orthogonal_complement(a, v, *w)) {
    const QuadNum c = bilinear(a, u, u);
    if (c.is_zero()) continue;
    const QVec f3 = scaled(-c / (QuadNum(2) * bilinear(a, v, *w)), *w);
    lambda = -c;
    return QMatrix::from_columns({ker[0], v, u, f3});
  }
  return std::nullopt;
}

}  // namespace

QuadricInfo quadric_normal_form(const Poly& q) {
  if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2 || q.nvars() != 4)
    throw Error(ErrorCode::WrongDegree, "not a quadratic form in four variables: " + q.str());
  QuadricInfo info;
  const Poly q4 = q.with_vars(p3_vars());
  const RMatrix a = gram_matrix(q4);
  info.rank = a.rank();
  if (info.rank < 3) return info;

  const Poly model = info.rank == 4 ? smooth_quadric_model() : cone_model();
  const Rat c = q4.leading_coeff() / model.leading_coeff();
  if (q4 == model * c) {
    info.frame = to_quad(RMatrix::identity(4));
    info.lambda = c;
    info.exact = true;
    return info;
  }

  std::vector<RVec> basis;
  RVec d;
  diagonalize(a, basis, d);
  const QMatrix qa = to_quad(a);
  const QPoly qq = to_quad(q4), qmodel = to_quad(model);
  std::optional<QuadricInfo> fallback;
  for (const QVec& v : isotropic_candidates(basis, d)) {
    try {
      QuadNum lambda(1);
      const auto f = info.rank == 4 ? rank4_frame(qa, v) : rank3_frame(qa, v, lambda);
      if (!f || f->det().is_zero()) continue;
      if (apply_frame(qq, *f) != qmodel * lambda) continue;
      QuadricInfo r = info;
      r.frame = f;
      r.lambda = lambda;
      r.exact = all_rational(*f) && lambda.is_rational();
      if (r.exact) return r;
      if (!fallback) fallback = r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedField) throw;
    }
  }
  return fallback ? *fallback : info;
}

}  // namespace fanostab

#include "fanostab/git/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "fanostab/algebra/gcd.hpp"
#include "fanostab/sing/points.hpp"

namespace fanostab {

std::vector<std::vector<long>> weight_candidates(int bound) {
  std::vector<std::vector<long>> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        const long d = -(a + b + c);
        if (std::labs(d) > bound) continue;
        const long g = std::gcd(std::gcd(a, b), std::gcd(c, d));
        if (g != 1) continue;
        out.push_back({a, b, c, d});
      }
  auto key = [](const std::vector<long>& w) {
    long mx = 0, sum = 0;
    for (long x : w) {
      mx = std::max(mx, std::labs(x));
      sum += std::labs(x);
    }
    return std::make_pair(mx, sum);
  };
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    const auto kx = key(x), ky = key(y);
    return kx != ky ? kx < ky : x < y;
  });
  return out;
}

namespace {

std::optional<RMatrix> rational_matrix(const QMatrix& m) {
  RMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      r(i, j) = m(i, j).rational();
    }
  return r;
}

// Frame whose first new coordinate is the linear form with coefficients `row`.
std::optional<RMatrix> frame_from_form(const std::vector<Rat>& row) {
  std::vector<std::vector<Rat>> rows{row};
  for (int j = 0; j < 4 && rows.size() < 4; ++j) {
    std::vector<Rat> e(4, Rat(0));
    e[j] = Rat(1);
    rows.push_back(e);
    if (RMatrix::from_rows(rows).rank() < static_cast<int>(rows.size())) rows.pop_back();
  }
  if (rows.size() < 4) return std::nullopt;
  return RMatrix::from_rows(rows).inverse();
}

// Frame sending [1:0:0:0] to the point, then a basis of the tangent plane, then the rest.
std::optional<RMatrix> point_frame(const Poly& q, const std::vector<Rat>& pt) {
  std::vector<Rat> grad;
  for (int i = 0; i < 4; ++i) grad.push_back(q.derivative(i).eval(pt));
  std::vector<std::vector<Rat>> cols{pt};
  auto try_add = [&](const std::vector<Rat>& v) {
    cols.push_back(v);
    if (RMatrix::from_columns(cols).rank() < static_cast<int>(cols.size())) cols.pop_back();
  };
  for (const auto& v : RMatrix::from_rows({grad}).nullspace()) try_add(v);
  for (int j = 0; j < 4 && cols.size() < 4; ++j) {
    std::vector<Rat> e(4, Rat(0));
    e[j] = Rat(1);
    try_add(e);
  }
  if (cols.size() < 4) return std::nullopt;
  return RMatrix::from_columns(cols);
}

// P^1 automorphism taking (1:0) to (a:b), as a 2x2 matrix.
std::array<std::array<Rat, 2>, 2> p1_mover(const Rat& a, const Rat& b) {
  if (a.is_zero()) return {{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
  return {{{a, Rat(0)}, {b, Rat(1)}}};
}

void push_unique(std::vector<SearchFrame>& out, const RMatrix& f, const std::string& origin) {
  for (const auto& s : out)
    if (s.frame == f) return;
  out.push_back({f, origin});
}

void adapted_frames(const CurvePair& p, std::vector<SearchFrame>& out) {
  // Common linear factor of q and g.
  const Poly h = poly_gcd(p.q, p.g);
  if (h.total_degree() == 1) {
    std::vector<Rat> row;
    for (int i = 0; i < 4; ++i) {
      Exponents e(4, 0);
      e[i] = 1;
      row.push_back(h.coeff(e));
    }
    if (auto f = frame_from_form(row)) push_unique(out, *f, "common linear factor");
  }

  const QuadricInfo info = quadric_normal_form(p.q);
  if (!info.frame || !info.exact) return;
  const RMatrix nf = *rational_matrix(*info.frame);
  push_unique(out, nf, "quadric normal form");
  if (h.total_degree() > 0 || !is_reduced(p, info)) return;

  SingularLocus loc;
  try {
    loc = singular_points(p, info);
  } catch (const Error&) {
    return;
  }
  for (const SurfacePoint& sp : loc.points) {
    bool rational = true;
    for (const QuadNum& c : sp.p3) rational = rational && c.is_rational();
    for (const QuadNum& c : sp.model) rational = rational && c.is_rational();
    if (!rational) continue;
    std::vector<Rat> pt, m;
    for (const QuadNum& c : sp.p3) pt.push_back(c.rational());
    for (const QuadNum& c : sp.model) m.push_back(c.rational());
    const std::string origin = "singular point " + sp.str();
    if (info.rank == 4) {
      // Rulings through the point become coordinate lines of the new frame.
      const auto a = p1_mover(m[0], m[1]), b = p1_mover(m[2], m[3]);
      RMatrix k(4, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) k(2 * i + j, 2 * r + s) = a[i][r] * b[j][s];
      push_unique(out, nf * k, origin + " (rulings)");
    }
    if (auto f = point_frame(p.q, pt)) push_unique(out, *f, origin);
  }
}

}  // namespace

std::vector<SearchFrame> search_frames(const CurvePair& p, const std::vector<RMatrix>& frames) {
  std::vector<SearchFrame> out{{RMatrix::identity(4), "identity"}};
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].rows() != 4 || frames[i].cols() != 4 || frames[i].det().is_zero())
      throw Error(ErrorCode::InvalidInput, "user frame " + std::to_string(i + 1) + " is not an invertible 4x4 matrix");
    push_unique(out, frames[i], "user #" + std::to_string(i + 1));
  }
  adapted_frames(p, out);
  return out;
}

std::optional<Certificate> destabilizer_search(const CurvePair& p, const Rat& t, const std::vector<RMatrix>& frames,
                                               int bound, int threads) {
  if (t < Rat(0) || t > Rat(2, 3)) throw Error(ErrorCode::OutOfRange, "t = " + t.str() + " is outside [0, 2/3]");
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "search bound must be positive");
  const auto fr = search_frames(p, frames);
  const auto ws = weight_candidates(bound);

  std::vector<std::optional<Certificate>> found(fr.size());
  std::atomic<std::size_t> best{fr.size()};
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < fr.size(); i = next++) {
      if (i > best.load()) continue;
      const CurvePair tp = transform(p, fr[i].frame);
      for (const auto& w : ws) {
        if (i > best.load()) break;
        const OnePS diag{RMatrix::identity(4), w};
        const auto v = hm_index_general(tp, diag);
        if (!v || v->at(t).sign() >= 0) continue;
        found[i] = Certificate{OnePS{fr[i].frame, w}, *v, fr[i].origin};
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(fr.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& c : found)
    if (c) return c;
  return std::nullopt;
}

}  // namespace fanostab

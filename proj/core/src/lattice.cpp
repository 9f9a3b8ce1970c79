#include "fanostab/k3/lattice.hpp"

namespace fanostab {

EpsNum operator*(const EpsNum& a, const EpsNum& b) {
  const Rat e3 = a.c1 * b.c2 + a.c2 * b.c1, e4 = a.c2 * b.c2;
  if (!e3.is_zero() || !e4.is_zero()) throw Error(ErrorCode::OutOfRange, "product needs eps^3");
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

std::strong_ordering operator<=>(const EpsNum& a, const EpsNum& b) {
  if (auto c = a.c0 <=> b.c0; c != 0) return c;
  if (auto c = a.c1 <=> b.c1; c != 0) return c;
  return a.c2 <=> b.c2;
}

int EpsNum::sign() const {
  if (!c0.is_zero()) return c0.sign();
  if (!c1.is_zero()) return c1.sign();
  return c2.sign();
}

std::string EpsNum::str() const {
  std::string s = c0.str();
  auto term = [&](const Rat& c, const char* e) {
    if (c.is_zero()) return;
    s += c.sign() > 0 ? " + " : " - ";
    if (!c.abs().is_one()) s += c.abs().str() + "*";
    s += e;
  };
  term(c1, "eps");
  term(c2, "eps^2");
  return s;
}

GramLattice::GramLattice(std::vector<std::string> names, std::vector<std::vector<long>> gram)
    : names_(std::move(names)), gram_(std::move(gram)) {
  const std::size_t n = names_.size();
  if (gram_.size() != n) throw Error(ErrorCode::DimensionMismatch, "gram size differs from the number of names");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorCode::InvalidInput, "gram matrix is not symmetric");
  }
}

bool GramLattice::is_even() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_[i][i] % 2) return false;
  return true;
}

LatticeVector GramLattice::basis(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) {
      LatticeVector v(rank(), Rat(0));
      v[i] = Rat(1);
      return v;
    }
  throw Error(ErrorCode::InvalidInput, "no basis vector named " + name);
}

LatticeVector GramLattice::vec(const std::vector<std::pair<std::string, Rat>>& terms) const {
  LatticeVector v(rank(), Rat(0));
  for (const auto& [n, c] : terms) {
    const LatticeVector b = basis(n);
    for (int i = 0; i < rank(); ++i) v[i] += c * b[i];
  }
  return v;
}

namespace {

Rat lift(const Rat& x, Rat*) { return x; }
EpsNum lift(const Rat& x, EpsNum*) { return {x, Rat(0), Rat(0)}; }

template <class T>
T pair_impl(const GramLattice& lat, const std::vector<T>& v, const std::vector<T>& w) {
  if (static_cast<int>(v.size()) != lat.rank() || static_cast<int>(w.size()) != lat.rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from the lattice rank");
  T s = lift(Rat(0), static_cast<T*>(nullptr));
  for (int i = 0; i < lat.rank(); ++i)
    for (int j = 0; j < lat.rank(); ++j)
      if (lat.entry(i, j)) s = s + v[i] * lift(Rat(lat.entry(i, j)), static_cast<T*>(nullptr)) * w[j];
  return s;
}

// Sign changes in a coefficient list, zeros skipped.
int variations(const std::vector<Rat>& c) {
  int n = 0, last = 0;
  for (const Rat& x : c) {
    if (x.is_zero()) continue;
    if (last && x.sign() != last) ++n;
    last = x.sign();
  }
  return n;
}

}  // namespace

Rat pair(const GramLattice& lat, const LatticeVector& v, const LatticeVector& w) { return pair_impl(lat, v, w); }
EpsNum pair(const GramLattice& lat, const EpsVector& v, const EpsVector& w) { return pair_impl(lat, v, w); }

std::pair<int, int> signature(const GramLattice& lat) {
  // Faddeev-LeVerrier: coefficients of det(xI - G).
  const int n = lat.rank();
  RMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Rat(lat.entry(i, j));
  std::vector<Rat> c(n + 1, Rat(0));  // c[k] multiplies x^(n-k)
  c[0] = Rat(1);
  RMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    RMatrix mk = g * m;
    for (int i = 0; i < n; ++i) mk(i, i) += c[k - 1];
    m = mk;
    const RMatrix gm = g * m;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += gm(i, i);
    c[k] = -tr / Rat(k);
  }
  // Real-rooted, so Descartes' rule is exact.
  std::vector<Rat> neg = c;
  for (int k = 0; k <= n; ++k)
    if ((n - k) % 2) neg[k] = -neg[k];
  return {variations(c), variations(neg)};
}

GramLattice lambda0() { return GramLattice({"L", "Q"}, {{6, 0}, {0, -2}}); }
GramLattice anticanonical_k3_lattice() { return GramLattice({"H", "E"}, {{4, 6}, {6, 6}}); }

EpsVector lambda0_h1() { return {EpsNum{Rat(1), Rat(0), Rat(0)}, EpsNum{Rat(0), Rat(-1), Rat(0)}}; }
EpsVector lambda0_h2() { return {EpsNum{Rat(2), Rat(0), Rat(0)}, EpsNum{Rat(-1), Rat(1), Rat(0)}}; }

int rr_h0(int d) {
  if (d % 2) throw Error(ErrorCode::NotEven, "degree " + std::to_string(d) + " is odd");
  if (d < 2) throw Error(ErrorCode::OutOfRange, "degree must be at least 2");
  return d / 2 + 2;
}

namespace {

std::string combo(long a, const std::string& x, long b, const std::string& y) {
  std::string s;
  auto add = [&](long c, const std::string& n) {
    if (c == 0) return;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    if (std::labs(c) != 1) s += std::to_string(std::labs(c));
    s += n;
  };
  add(a, x);
  add(b, y);
  return s.empty() ? "0" : s;
}

}  // namespace

UnigonalReport unigonal_obstruction(UnigonalCase which, int scale) {
  if (scale < 1) throw Error(ErrorCode::InvalidInput, "box scale must be positive");
  UnigonalReport r;
  r.which = which;
  if (which == UnigonalCase::Smooth) {
    // Fiber F and negative section Sigma; L = 12F + Sigma.
    r.lattice = GramLattice({"F", "Sigma"}, {{0, 1}, {1, -2}});
    const LatticeVector l = r.lattice.vec({{"F", Rat(12)}, {"Sigma", Rat(1)}});
    for (long a = 0; a <= 24L * scale; ++a)
      for (long b = 0; b <= 2L * scale; ++b) {
        const LatticeVector g{Rat(a), Rat(b)};
        if (pair(r.lattice, l, g) != Rat(2)) continue;
        const Rat sq = pair(r.lattice, g, g);
        const std::string name = combo(a, "F", b, "Sigma");
        if (r.forced.empty()) r.forced = name;
        r.table.push_back({name, "(Gamma^2) = -2", sq, sq == Rat(-2)});
        if (sq == Rat(-2)) r.solutions.push_back(name);
      }
    return r;
  }

  // Blow-up of the A1 point: strict transform F1 of the fiber and exceptional E.
  // (L~.F1) = 1 and (L~.E) = 0 force Gamma = 2F1 + bE and Gamma' = 8F1 + cE.
  r.lattice = GramLattice({"F1", "E"}, {{-2, 2}, {2, -2}});
  const long box = 24L * scale;
  for (long b = -box; b <= box; ++b) {
    const LatticeVector g{Rat(2), Rat(b)};
    if (pair(r.lattice, g, g) != Rat(-2)) continue;
    r.b_values.push_back(b);
    for (long c = -box; c <= box; ++c) {
      const LatticeVector gp{Rat(8), Rat(c)};
      if (pair(r.lattice, g, gp) != Rat(4)) continue;
      r.c_values.push_back(c);
      const Rat sq = pair(r.lattice, gp, gp);
      const std::string name = "Gamma = " + combo(2, "F1", b, "E") + ", Gamma' = " + combo(8, "F1", c, "E");
      r.table.push_back({name, "(Gamma'^2) = -2", sq, sq == Rat(-2)});
      if (sq == Rat(-2)) r.solutions.push_back(name);
    }
  }
  return r;
}

GramLattice unigonal_nef_lattice(long fq, long eq) {
  return GramLattice({"F", "E", "Q"}, {{0, 1, fq}, {1, -2, eq}, {fq, eq, -2}});
}

std::vector<NefRow> nef_check_unigonal(const GramLattice& lat, const std::vector<LatticeVector>& tests) {
  const LatticeVector two_l = lat.vec({{"F", Rat(8)}, {"E", Rat(2)}});
  const LatticeVector q = lat.basis("Q");
  std::vector<NefRow> out;
  for (const auto& c : tests) {
    NefRow row{c, pair(lat, two_l, c), pair(lat, q, c), Rat(0)};
    row.value = row.two_l - row.q;
    out.push_back(row);
  }
  return out;
}

}  // namespace fanostab

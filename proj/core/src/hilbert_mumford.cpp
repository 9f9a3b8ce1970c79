#include "fanostab/git/hilbert_mumford.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "fanostab/git/span.hpp"

namespace fanostab {

OnePS OnePS::make(const RMatrix& frame, const std::vector<long>& weights) {
  if (frame.rows() != 4 || frame.cols() != 4) throw Error(ErrorCode::InvalidInput, "frame must be 4x4");
  if (weights.size() != 4) throw Error(ErrorCode::InvalidInput, "weights must have four entries");
  if (std::accumulate(weights.begin(), weights.end(), 0L) != 0)
    throw Error(ErrorCode::InvalidInput, "weights must sum to zero");
  if (frame.det().is_zero()) throw Error(ErrorCode::InvalidInput, "frame is not invertible");
  return {frame, weights};
}

bool OnePS::trivial() const {
  return std::all_of(weights.begin(), weights.end(), [](long w) { return w == 0; });
}

std::string HMValue::str() const {
  std::ostringstream os;
  if (!slope.is_zero()) {
    if (slope == Rat(-1)) os << "-";
    else if (!slope.is_one()) os << slope.str();
    os << "t";
    if (constant.sign() > 0) os << "+" << constant.str();
    else if (constant.sign() < 0) os << constant.str();
  } else {
    os << constant.str();
  }
  return os.str();
}

long weight(const std::vector<long>& w, const Exponents& m) {
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m[i];
  return s;
}

namespace {

// Weight-homogeneous components, keyed by weight.
std::map<long, Poly> by_weight(const Poly& f, const std::vector<long>& w) {
  std::map<long, Poly> parts;
  for (const auto& [e, c] : f.terms()) {
    auto it = parts.try_emplace(weight(w, e), Poly(f.vars_ptr())).first;
    it->second.add_term(e, c);
  }
  return parts;
}

}  // namespace

bool is_semi_invariant(const Poly& f, const OnePS& l) {
  return by_weight(apply_frame(f, l.frame), l.weights).size() <= 1;
}

HMValue hm_index(const CurvePair& p, const OnePS& l) {
  const CurvePair t = transform(p, l.frame);
  const auto qparts = by_weight(t.q, l.weights);
  if (qparts.size() != 1) {
    std::string ws;
    for (const auto& [e, c] : t.q.terms()) ws += (ws.empty() ? "" : ",") + std::to_string(weight(l.weights, e));
    throw Error(ErrorCode::NotSemiInvariant, "q is not semi-invariant; monomial weights {" + ws + "}");
  }
  const long c = qparts.begin()->first;

  // Weight-graded fiber reduction: q*x_i has weight c + w_i, so each graded
  // piece of g is reduced against the products of matching weight.
  std::map<long, std::vector<Poly>> graded;
  for (int i = 0; i < 4; ++i)
    graded[c + l.weights[i]].push_back(t.q * Poly::variable(t.q.vars_ptr(), i));
  for (const auto& [k, gk] : by_weight(t.g, l.weights)) {
    auto it = graded.find(k);
    const bool inside = it != graded.end() && SpanReducer(it->second).contains(gk);
    if (!inside) return {Rat(-c), Rat(-k)};
  }
  throw Error(ErrorCode::NotInFiber, "g lies in q*(linear forms)");
}

std::optional<HMValue> hm_index_general(const CurvePair& p, const OnePS& l) {
  const CurvePair t = transform(p, l.frame);
  const auto qparts = by_weight(t.q, l.weights);
  const long c = qparts.begin()->first;
  const Poly& q0 = qparts.begin()->second;

  Poly g = t.g;
  while (!g.is_zero()) {
    const auto gparts = by_weight(g, l.weights);
    const long k = gparts.begin()->first;
    std::vector<int> idx;
    std::vector<Poly> gens;
    for (int i = 0; i < 4; ++i)
      if (c + l.weights[i] == k) {
        idx.push_back(i);
        gens.push_back(q0 * Poly::variable(g.vars_ptr(), i));
      }
    const auto sol = gens.empty() ? std::nullopt : express_in_span(gparts.begin()->second, gens);
    if (!sol) return HMValue{Rat(-c), Rat(-k)};
    Poly lin(g.vars_ptr());
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (!(*sol)[j].is_zero()) lin += Poly::variable(g.vars_ptr(), idx[j]) * (*sol)[j];
    g -= t.q * lin;
  }
  return std::nullopt;
}

CurvePair one_ps_limit(const CurvePair& p, const OnePS& l) {
  if (l.trivial()) return p;
  const CurvePair t = transform(p, l.frame);
  const RMatrix inv = l.frame.inverse();
  const Poly q = by_weight(t.q, l.weights).rbegin()->second;
  const Poly g = by_weight(t.g, l.weights).rbegin()->second;
  return {apply_frame(q, inv), apply_frame(g, inv)};
}

}  // namespace fanostab

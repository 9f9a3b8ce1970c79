#include "fanostab/git/span.hpp"

#include <map>

#include "fanostab/algebra/matrix.hpp"

namespace fanostab {

SpanReducer::SpanReducer(const std::vector<Poly>& gens) {
  for (const Poly& g : gens) {
    Poly r = reduce(g);
    if (r.is_zero()) continue;
    r = r.monic();
    const Exponents lead = r.leading_exponents();
    for (Poly& b : basis_) {
      const Rat c = b.coeff(lead);
      if (!c.is_zero()) b -= r * c;
    }
    basis_.push_back(std::move(r));
  }
}

Poly SpanReducer::reduce(const Poly& f) const {
  Poly r = f;
  for (const Poly& b : basis_) {
    const Rat c = r.coeff(b.leading_exponents());
    if (!c.is_zero()) r -= b * c;
  }
  return r;
}

std::optional<std::vector<Rat>> express_in_span(const Poly& f, const std::vector<Poly>& gens) {
  std::map<Exponents, int, LexGreater> rows;
  for (const auto& [e, c] : f.terms()) rows.emplace(e, 0);
  for (const Poly& g : gens)
    for (const auto& [e, c] : g.terms()) rows.emplace(e, 0);
  int n = 0;
  for (auto& [e, i] : rows) i = n++;
  RMatrix m(n, static_cast<int>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (const auto& [e, c] : gens[j].terms()) m(rows.at(e), static_cast<int>(j)) = c;
  std::vector<Rat> b(n, Rat(0));
  for (const auto& [e, c] : f.terms()) b[rows.at(e)] = c;
  if (gens.empty()) {
    if (f.is_zero()) return std::vector<Rat>{};
    return std::nullopt;
  }
  return m.solve(b);
}

}  // namespace fanostab

#include "fanostab/io/parse.hpp"

#include <cctype>

#include "fanostab/algebra/errors.hpp"
#include "fanostab/git/curve_pair.hpp"
#include "fanostab/sing/points.hpp"
#include "fanostab/verdict/sarkisov.hpp"

namespace fanostab {

const VarList& convention_vars(Convention c) {
  switch (c) {
    case Convention::P3: return p3_vars();
    case Convention::P4: return p4_vars();
    case Convention::Bidegree: return bidegree_vars();
  }
  throw Error(ErrorCode::InvalidInput, "unknown convention");
}

std::string to_string(Convention c) {
  switch (c) {
    case Convention::P3: return "x0..x3";
    case Convention::P4: return "x0..x4";
    case Convention::Bidegree: return "u,v;s,w";
  }
  return "?";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

  Poly run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expr() {
    Poly acc(vars_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  // A factor can start here (implicit multiplication).
  bool factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  Poly term() {
    Poly t = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        t = t * factor();
      } else if (factor_start()) {
        t = t * factor();
      } else {
        return t;
      }
    }
  }

  Poly factor() {
    Poly b = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      if (pos_ - start > 4) fail("exponent too large");
      b = b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return b;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        lit += "/" + den;
      }
      return Poly::constant(vars_, Rat::parse(lit));
    }
    // Longest variable name matching here.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      const std::string& n = (*vars_)[i];
      if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) fail("unknown symbol");
    // x1 must not swallow the prefix of x10.
    if (pos_ + best_len < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + best_len])) &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + best_len - 1])))
      fail("unknown symbol");
    pos_ += best_len;
    return Poly::variable(vars_, best);
  }

  std::string_view s_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

void check_degree(const Poly& p, Convention c, int degree) {
  if (p.is_zero()) throw Error(ErrorCode::DegreeMismatch, "zero polynomial has no degree");
  if (c != Convention::Bidegree) {
    if (!p.is_homogeneous() || p.total_degree() != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "expected a form of degree " + std::to_string(degree) + ", got '" + p.str() + "'");
    return;
  }
  for (const auto& [e, coef] : p.terms())
    if (e[0] + e[1] != degree || e[2] + e[3] != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "expected bidegree (" + std::to_string(degree) + "," + std::to_string(degree) + "), got '" +
                      p.str() + "'");
}

}  // namespace

PolyExpr parse_poly(std::string_view text, Convention c, int degree) {
  const VarList& vars = convention_vars(c);
  PolyExpr out{std::string(text), Parser(text, vars).run(), c};
  if (degree >= 0) check_degree(out.poly, c, degree);
  return out;
}

}  // namespace fanostab

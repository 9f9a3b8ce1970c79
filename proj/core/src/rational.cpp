#include "fanostab/algebra/rational.hpp"

#include <cctype>

namespace fanostab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::IncompleteSubstitution: return "IncompleteSubstitution";
    case ErrorCode::WrongMultiplicity: return "WrongMultiplicity";
    case ErrorCode::NeedsLinearPreparation: return "NeedsLinearPreparation";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotSemiInvariant: return "NotSemiInvariant";
    case ErrorCode::NotInFiber: return "NotInFiber";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::UnsupportedQuadric: return "UnsupportedQuadric";
    case ErrorCode::UnresolvedRoots: return "UnresolvedRoots";
    case ErrorCode::IncompleteGeometry: return "IncompleteGeometry";
    case ErrorCode::NotADoublePoint: return "NotADoublePoint";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view ns = s.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds))
    throw Error(ErrorCode::SyntaxError, "not a rational literal: '" + std::string(text) + "'");
  mpz_class n(std::string(ns), 10), d(std::string(ds), 10);
  if (neg) n = -n;
  return Rat(n, d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

bool rational_sqrt(const Rat& x, Rat& root) {
  if (x.sign() < 0) return false;
  const mpz_class n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rat(rn, rd);
  return true;
}

mpz_class floor(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

}  // namespace fanostab

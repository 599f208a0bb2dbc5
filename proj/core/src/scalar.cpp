#include "superlie/scalar.hpp"

#include <cctype>

#include "superlie/errors.hpp"

namespace superlie {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace superlie

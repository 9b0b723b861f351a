#include "ckc/rational.hpp"

#include <cctype>

#include "ckc/errors.hpp"

namespace ckc {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den)) {
    throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

Rational sum_at(std::span<const Rational> values, std::span<const int> indices) {
  Rational total = 0;
  for (int i : indices) total += values[static_cast<std::size_t>(i)];
  return total;
}

mpz_class common_denominator(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace ckc

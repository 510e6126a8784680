#include "lambda_osc/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lambda_osc {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Parses an unsigned decimal "123", "12.5" or "12.5e-3" into an exact rational.
Rational parse_decimal(std::string_view s) {
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    std::string exp_text(s.substr(i + 1));
    if (exp_text.empty()) throw std::invalid_argument("malformed exponent: '" + std::string(s) + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent: '" + std::string(s) + "'");
    }
    if (used != exp_text.size()) throw std::invalid_argument("malformed exponent: '" + std::string(s) + "'");
  }
  mpz_class mantissa(digits, 10);
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    q = parse_decimal(s);
  } else {
    Rational num = parse_decimal(s.substr(0, slash));
    Rational den = parse_decimal(s.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = num / den;
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
  // mpq_get_d truncates toward zero; pick the nearest of the neighbouring doubles.
  double d = q.get_d();
  double best = d;
  Rational best_err = abs(Rational(d) - q);
  for (double cand : {std::nextafter(d, -HUGE_VAL), std::nextafter(d, HUGE_VAL)}) {
    if (!std::isfinite(cand)) continue;
    Rational err = abs(Rational(cand) - q);
    if (err < best_err) {
      best_err = err;
      best = cand;
    }
  }
  return best;
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  Rational q(x);
  q.canonicalize();
  return q;
}

}  // namespace lambda_osc

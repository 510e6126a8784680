#include "lambda_osc/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace lambda_osc {

Rational evaluate_at(const LambdaScalar& p, const Rational& value) { return p.evaluate(value); }

std::string to_string(const LambdaScalar& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += to_string(mag);
    if (i >= 1) {
      out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

LambdaScalar parse_lambda_scalar(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty parameter polynomial");
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    // A term ends at the next sign that is not part of an exponent.
    std::size_t end = pos;
    while (end < s.size()) {
      char ch = s[end];
      if ((ch == '+' || ch == '-') && end > pos && s[end - 1] != 'e' && s[end - 1] != 'E') break;
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("malformed parameter polynomial: '" + std::string(text) + "'");
    std::size_t power = 0;
    std::string coeff_text = term;
    auto var_pos = term.find(std::string(var));
    if (var_pos != std::string::npos) {
      coeff_text = term.substr(0, var_pos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
      if (coeff_text.empty()) coeff_text = "1";
      std::string rest = term.substr(var_pos + var.size());
      if (rest.empty()) {
        power = 1;
      } else if (rest.front() == '^') {
        try {
          std::size_t used = 0;
          power = std::stoul(rest.substr(1), &used);
          if (used + 1 != rest.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw std::invalid_argument("malformed power in '" + term + "'");
        }
      } else {
        throw std::invalid_argument("malformed term '" + term + "'");
      }
    }
    Rational c = parse_rational(coeff_text);
    if (negative) c = -c;
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += c;
  }
  return LambdaScalar(std::move(coeffs));
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly q;
  QPoly r = num;
  const Rational& lead = den.leading();
  while (!r.is_zero() && r.degree() >= den.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - den.degree());
    QPoly t = QPoly::monomial(Rational(r.leading() / lead), shift);
    q += t;
    r -= t * den;
  }
  return {q, r};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.leading();
  return a * inv;
}

RationalFunction::RationalFunction(LambdaScalar num, LambdaScalar den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LambdaScalar();
    den_ = QPoly::constant(Rational(1));
    return;
  }
  QPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  Rational inv = 1 / den.leading();
  num_ = num * inv;
  den_ = den * inv;
}

Rational RationalFunction::evaluate_at(const Rational& value) const {
  Rational d = den_.evaluate(value);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(value) / d;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return lambda_osc::to_string(num_, var);
  return "(" + lambda_osc::to_string(num_, var) + ")/(" + lambda_osc::to_string(den_, var) + ")";
}

}  // namespace lambda_osc

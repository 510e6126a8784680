#include "lambda_osc/hermite.hpp"

#include "lambda_osc/ladder_function.hpp"

#include <stdexcept>

namespace lambda_osc {

namespace {

template <class C>
C lift(const Rational& q) {
  return ring_traits<C>::from_rational(q);
}

template <class C>
C lift(long v) {
  return ring_traits<C>::from_rational(Rational(v));
}

template <class C>
Polynomial<C> y_var() {
  return Polynomial<C>::variable();
}

Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// Sign of a ring element near L = 0+: for the generic ring that is the sign
// of its lowest-order nonzero coefficient.
int sign_near_zero(const Rational& q) { return sgn(q); }

int sign_near_zero(const LambdaScalar& p) {
  for (const auto& c : p.coeffs()) {
    if (sgn(c) != 0) return sgn(c);
  }
  return 0;
}

template <class C>
ratio_t<C> ratio_constant(const Rational& q) {
  if constexpr (is_generic_v<C>) {
    return RationalFunction::constant(q);
  } else {
    return q;
  }
}

std::string coeff_to_string(const Rational& q) { return to_string(q); }
std::string coeff_to_string(const LambdaScalar& p) { return to_string(p); }

template <class C>
std::string poly_to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (ring_traits<C>::is_zero(p.coeffs()[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeff_to_string(p.coeffs()[i]) + ")";
    if (i >= 1) out += "*y";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::series_h1: return "series_h1";
    case Normalization::series_h2: return "series_h2";
    case Normalization::rodrigues: return "rodrigues";
    case Normalization::generating: return "generating";
  }
  return "unknown";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "series_h1") return Normalization::series_h1;
  if (text == "series_h2") return Normalization::series_h2;
  if (text == "rodrigues") return Normalization::rodrigues;
  if (text == "generating") return Normalization::generating;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

template <class C>
bool LambdaPoly<C>::parity_consistent() const {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (static_cast<int>(i % 2) != n % 2 && !ring_traits<C>::is_zero(poly.coeffs()[i])) return false;
  }
  return true;
}

template <class C>
std::vector<C> series_coefficients(const C& two_e_minus_1, const C& lambda, int count, Parity parity) {
  std::vector<C> a(static_cast<std::size_t>(std::max(count, 0)), ring_traits<C>::zero());
  const int start = parity == Parity::even ? 0 : 1;
  if (start >= count) return a;
  a[start] = ring_traits<C>::one();
  for (int n = start; n + 2 < count; n += 2) {
    // a_{n+2} = -a_n [n(Ln - 2) + (2e - 1)] / ((n+2)(n+1))
    C bracket = lambda * lift<C>(static_cast<long>(n) * n) - lift<C>(2L * n) + two_e_minus_1;
    a[n + 2] = a[n] * bracket * lift<C>(Rational(-1, (n + 2) * (n + 1)));
  }
  return a;
}

template <class C>
LambdaPoly<C> series_solution(int p, const C& lambda) {
  if (p < 0) throw std::invalid_argument("series_solution: negative degree");
  const C e = lift<C>(2L * p) - lambda * lift<C>(static_cast<long>(p) * p);
  const Parity parity = p % 2 == 0 ? Parity::even : Parity::odd;
  std::vector<C> a = series_coefficients(e, lambda, p + 1, parity);
  LambdaPoly<C> out;
  out.n = p;
  out.normalization = parity == Parity::even ? Normalization::series_h1 : Normalization::series_h2;
  out.lambda = lambda;
  out.poly = Polynomial<C>(std::move(a));
  return out;
}

FixedPoly rodrigues(int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("rodrigues: negative index");
  if (sgn(lambda) == 0) throw std::invalid_argument("rodrigues: L = 0 has no Rodrigues weight; use the Hermite limit");
  const Rational c = 1 / lambda + Rational(1, 2);
  LadderFunction f = LadderFunction::weight(lambda, Rational(n - c));
  for (int i = 0; i < n; ++i) f = f.derivative();
  f = f.times_z_power(c);
  if (sgn(f.exponent()) != 0) throw std::logic_error("rodrigues: residual z exponent after differentiation");
  FixedPoly out;
  out.n = n;
  out.normalization = Normalization::rodrigues;
  out.lambda = lambda;
  out.poly = n % 2 == 0 ? f.poly() : -f.poly();
  return out;
}

template <class C>
LambdaPoly<C> generating_poly(int n, const C& lambda) {
  if (n < 0) throw std::invalid_argument("generating_poly: negative index");
  // weight_k = prod_{j<k} (1 - jL) / k!
  std::vector<C> weight;
  weight.reserve(static_cast<std::size_t>(n) + 1);
  C w = ring_traits<C>::one();
  for (int k = 0; k <= n; ++k) {
    weight.push_back(w * lift<C>(Rational(1) / factorial(k)));
    w = w * (ring_traits<C>::one() - lambda * lift<C>(static_cast<long>(k)));
  }
  Polynomial<C> sum;
  const Rational nf = factorial(n);
  for (int k = (n + 1) / 2; k <= n; ++k) {
    const int power = 2 * k - n;
    Rational scalar = nf * binomial(k, n - k);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(power));
    scalar *= Rational(two_pow);
    if ((n - k) % 2 != 0) scalar = -scalar;
    sum += Polynomial<C>::monomial(weight[k] * lift<C>(scalar), static_cast<std::size_t>(power));
  }
  LambdaPoly<C> out;
  out.n = n;
  out.normalization = Normalization::generating;
  out.lambda = lambda;
  out.poly = std::move(sum);
  return out;
}

template <class C>
std::vector<LambdaPoly<C>> generating_coeffs(int n_max, const C& lambda) {
  if (n_max < 0) throw std::invalid_argument("generating_coeffs: negative n_max");
  std::vector<LambdaPoly<C>> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(generating_poly(n, lambda));
  return out;
}

template <class C>
LambdaPoly<C> three_term_next(const LambdaPoly<C>& hn, const LambdaPoly<C>& hnm1, int n) {
  if (n < 1) throw std::invalid_argument("three_term_next: n must be at least 1");
  if (hn.normalization != Normalization::generating || hnm1.normalization != Normalization::generating) {
    throw std::invalid_argument("three_term_next: inputs must use the generating normalization");
  }
  if (hn.n != n || hnm1.n != n - 1) throw std::invalid_argument("three_term_next: inputs are not H_n, H_{n-1}");
  if (!(hn.lambda == hnm1.lambda)) throw std::invalid_argument("three_term_next: parameter mismatch");
  const C& L = hn.lambda;
  C a = lift<C>(2L) * (ring_traits<C>::one() - L * lift<C>(static_cast<long>(n)));
  C b = lift<C>(static_cast<long>(n)) * (lift<C>(2L) - L * lift<C>(static_cast<long>(n - 1)));
  LambdaPoly<C> out;
  out.n = n + 1;
  out.normalization = Normalization::generating;
  out.lambda = L;
  out.poly = y_var<C>() * hn.poly * a - hnm1.poly * b;
  return out;
}

template <class C>
bool derivative_relation_check(const std::vector<LambdaPoly<C>>& family, int n) {
  if (n < 0 || family.size() < static_cast<std::size_t>(n) + 3) {
    throw std::invalid_argument("derivative_relation_check: family must contain H_n .. H_{n+2}");
  }
  for (int k = n; k <= n + 2; ++k) {
    if (family[k].n != k || family[k].normalization != Normalization::generating) {
      throw std::invalid_argument("derivative_relation_check: family[k] must be the generating H_k");
    }
  }
  const C& L = family[n].lambda;
  const auto d0 = family[n].poly.derivative();
  const auto d1 = family[n + 1].poly.derivative();
  const auto d2 = family[n + 2].poly.derivative();
  C scale = L * lift<C>(static_cast<long>(n + 2));
  auto lhs = d2 + (y_var<C>() * d1 * lift<C>(2L) - d0 * lift<C>(static_cast<long>(n + 1))) * scale;
  auto rhs = family[n + 1].poly * lift<C>(2L * (n + 2));
  return lhs == rhs;
}

template <class C>
std::optional<ratio_t<C>> proportionality(const LambdaPoly<C>& a, const LambdaPoly<C>& b) {
  if (!(a.lambda == b.lambda)) throw std::invalid_argument("proportionality: parameter mismatch");
  if (b.poly.is_zero()) {
    if (a.poly.is_zero()) return ratio_constant<C>(Rational(1));
    return std::nullopt;
  }
  if (a.poly.is_zero()) return ratio_constant<C>(Rational(0));
  if (a.poly.degree() != b.poly.degree()) return std::nullopt;
  const C& num = a.poly.leading();
  const C& den = b.poly.leading();
  for (std::size_t i = 0; i < b.poly.size(); ++i) {
    if (!(a.poly.coeffs()[i] * den == b.poly.coeffs()[i] * num)) return std::nullopt;
  }
  if constexpr (is_generic_v<C>) {
    return RationalFunction(num, den);
  } else {
    return Rational(num / den);
  }
}

template <class C>
C leading_coefficient(int m, const C& lambda) {
  if (m < 0) throw std::invalid_argument("leading_coefficient: negative index");
  C out = ring_traits<C>::one();
  for (int r = m; r <= 2 * m - 1; ++r) out = out * (lift<C>(2L) - lambda * lift<C>(static_cast<long>(r)));
  return out;
}

template <class C>
bool satisfies_ode(const Polynomial<C>& h, int p, const C& lambda) {
  const Polynomial<C> z(std::vector<C>{ring_traits<C>::one(), ring_traits<C>::zero(), lambda});
  const Polynomial<C> drift = Polynomial<C>::monomial(C(lambda - lift<C>(2L)), 1);
  const C e = lift<C>(2L * p) - lambda * lift<C>(static_cast<long>(p) * p);
  const auto d1 = h.derivative();
  const auto d2 = d1.derivative();
  return (z * d2 + drift * d1 + h * e).is_zero();
}

template <class C>
LambdaPoly<C> canonicalize_sign(LambdaPoly<C> p) {
  if (p.poly.is_zero()) return p;
  if (sign_near_zero(p.poly.leading()) < 0) p.poly = -p.poly;
  return p;
}

FixedPoly specialize(const GenericPoly& p, const Rational& lambda) {
  FixedPoly out;
  out.n = p.n;
  out.normalization = p.normalization;
  out.lambda = lambda;
  out.poly = p.poly.map_coeffs([&](const LambdaScalar& c) { return evaluate_at(c, lambda); });
  return out;
}

std::vector<double> to_double_coeffs(const QPoly& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

namespace {

template <class C>
nlohmann::json to_json_impl(const LambdaPoly<C>& p, std::string lambda_text) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.poly.coeffs()) coeffs.push_back(coeff_to_string(c));
  return {{"n", p.n}, {"normalization", to_string(p.normalization)}, {"lambda", std::move(lambda_text)}, {"coeffs", coeffs}};
}

template <class C, class Parse>
LambdaPoly<C> from_json_impl(const nlohmann::json& j, Parse parse) {
  try {
    LambdaPoly<C> out;
    out.n = j.at("n").get<int>();
    out.normalization = parse_normalization(j.at("normalization").get<std::string>());
    std::vector<C> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse(c.get<std::string>()));
    out.poly = Polynomial<C>(std::move(coeffs));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial document: ") + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const FixedPoly& p) { return to_json_impl(p, to_string(p.lambda)); }

nlohmann::json to_json(const GenericPoly& p) { return to_json_impl(p, "generic"); }

FixedPoly fixed_poly_from_json(const nlohmann::json& j) {
  const std::string lambda = j.value("lambda", std::string());
  if (lambda.empty() || lambda == "generic") throw std::invalid_argument("expected a fixed-parameter polynomial");
  FixedPoly out = from_json_impl<Rational>(j, [](const std::string& s) { return parse_rational(s); });
  out.lambda = parse_rational(lambda);
  return out;
}

GenericPoly generic_poly_from_json(const nlohmann::json& j) {
  if (j.value("lambda", std::string()) != "generic") throw std::invalid_argument("expected a generic polynomial");
  GenericPoly out = from_json_impl<LambdaScalar>(j, [](const std::string& s) { return parse_lambda_scalar(s); });
  out.lambda = generic_lambda();
  return out;
}

std::string to_string(const GenericPoly& p) { return poly_to_string(p.poly); }
std::string to_string(const FixedPoly& p) { return poly_to_string(p.poly); }

#define LAMBDA_OSC_INSTANTIATE(C)                                                                    \
  template struct LambdaPoly<C>;                                                                     \
  template std::vector<C> series_coefficients<C>(const C&, const C&, int, Parity);                   \
  template LambdaPoly<C> series_solution<C>(int, const C&);                                          \
  template LambdaPoly<C> generating_poly<C>(int, const C&);                                          \
  template std::vector<LambdaPoly<C>> generating_coeffs<C>(int, const C&);                           \
  template LambdaPoly<C> three_term_next<C>(const LambdaPoly<C>&, const LambdaPoly<C>&, int);        \
  template bool derivative_relation_check<C>(const std::vector<LambdaPoly<C>>&, int);                \
  template std::optional<ratio_t<C>> proportionality<C>(const LambdaPoly<C>&, const LambdaPoly<C>&); \
  template C leading_coefficient<C>(int, const C&);                                                  \
  template bool satisfies_ode<C>(const Polynomial<C>&, int, const C&);                               \
  template LambdaPoly<C> canonicalize_sign<C>(LambdaPoly<C>);

LAMBDA_OSC_INSTANTIATE(Rational)
LAMBDA_OSC_INSTANTIATE(LambdaScalar)

#undef LAMBDA_OSC_INSTANTIATE

}  // namespace lambda_osc

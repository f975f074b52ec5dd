#include "pseudoherm/opalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseudoherm/errors.hpp"

namespace pseudoherm {

namespace {

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

double factorial(int n) {
  double result = 1.0;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void check_powers(int j, int k) {
  if (j < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "ladder powers must be non-negative");
  if (j + k > LadderPoly::kMaxDegree) {
    throw Error(ErrorKind::Degree, "monomial degree " + std::to_string(j + k) + " exceeds " +
                                       std::to_string(LadderPoly::kMaxDegree));
  }
}

}  // namespace

LadderPoly LadderPoly::constant(Complex c) { return monomial(0, 0, c); }
LadderPoly LadderPoly::annihilation() { return monomial(0, 1); }
LadderPoly LadderPoly::creation() { return monomial(1, 0); }

LadderPoly LadderPoly::monomial(int creation_power, int annihilation_power, Complex c) {
  LadderPoly p;
  p.add_term(creation_power, annihilation_power, c);
  return p;
}

Complex LadderPoly::coefficient(int creation_power, int annihilation_power) const {
  auto it = terms_.find({creation_power, annihilation_power});
  return it == terms_.end() ? Complex{} : it->second;
}

int LadderPoly::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

void LadderPoly::add_term(int creation_power, int annihilation_power, Complex c) {
  check_powers(creation_power, annihilation_power);
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace({creation_power, annihilation_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

double LadderPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

LadderPoly& LadderPoly::operator+=(const LadderPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

LadderPoly& LadderPoly::operator-=(const LadderPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

LadderPoly& LadderPoly::operator*=(Complex s) {
  if (s == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  std::erase_if(terms_, [](const auto& entry) { return entry.second == Complex{}; });
  return *this;
}

std::string LadderPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    if (key.first > 0) os << " a†^" << key.first;
    if (key.second > 0) os << " a^" << key.second;
  }
  return os.str();
}

// a^k (a†)^l = Σ_r C(k,r) C(l,r) r! (a†)^(l-r) a^(k-r)
LadderPoly normal_product(const LadderPoly& p, const LadderPoly& q) {
  LadderPoly result;
  for (const auto& [pk, pc] : p.terms()) {
    const auto [j, k] = pk;
    for (const auto& [qk, qc] : q.terms()) {
      const auto [l, m] = qk;
      if (j + k + l + m > LadderPoly::kMaxDegree) {
        throw Error(ErrorKind::Degree, "product degree exceeds " + std::to_string(LadderPoly::kMaxDegree));
      }
      for (int r = 0; r <= std::min(k, l); ++r) {
        const double weight = binomial(k, r) * binomial(l, r) * factorial(r);
        result.add_term(j + l - r, k + m - r, pc * qc * weight);
      }
    }
  }
  return result;
}

LadderPoly adjoint(const LadderPoly& p) {
  LadderPoly result;
  for (const auto& [key, c] : p.terms()) result.add_term(key.second, key.first, std::conj(c));
  return result;
}

LadderPoly pt_transform(const LadderPoly& p) {
  LadderPoly result;
  for (const auto& [key, c] : p.terms()) {
    const double sign = (key.first + key.second) % 2 == 0 ? 1.0 : -1.0;
    result.add_term(key.first, key.second, sign * std::conj(c));
  }
  return result;
}

double distance(const LadderPoly& p, const LadderPoly& q) { return (p - q).max_abs_coefficient(); }

QuadraticXP QuadraticXP::gauge_oscillator(double mass, double big_omega, double gauge) {
  if (!(mass > 0.0)) throw Error(ErrorKind::Domain, "mass must be positive");
  return QuadraticXP{.c_pp = 1.0 / (2.0 * mass),
                     .c_xx = mass * big_omega * big_omega / 2.0,
                     .c_xp_sym = Complex(0.0, gauge),
                     .c_0 = 0.0,
                     .mass = mass};
}

namespace {

LadderPoly substitute(const QuadraticXP& h, const LadderPoly& x, const LadderPoly& p) {
  const LadderPoly pp = normal_product(p, p);
  const LadderPoly xx = normal_product(x, x);
  const LadderPoly sym = (normal_product(x, p) + normal_product(p, x)) * Complex(0.5);
  return pp * h.c_pp + xx * h.c_xx + sym * h.c_xp_sym + LadderPoly::constant(h.c_0);
}

}  // namespace

LadderPoly from_xp_scheme_one(const QuadraticXP& h, double big_omega) {
  if (!(big_omega > 0.0)) throw Error(ErrorKind::Domain, "scheme one needs Omega > 0");
  if (!(h.mass > 0.0)) throw Error(ErrorKind::Domain, "mass must be positive");
  const LadderPoly ad_plus_a = LadderPoly::creation() + LadderPoly::annihilation();
  const LadderPoly ad_minus_a = LadderPoly::creation() - LadderPoly::annihilation();
  const LadderPoly x = ad_plus_a * Complex(std::sqrt(1.0 / (2.0 * h.mass * big_omega)));
  const LadderPoly p = ad_minus_a * Complex(0.0, std::sqrt(h.mass * big_omega / 2.0));
  return substitute(h, x, p);
}

LadderPoly from_xp_scheme_two(const QuadraticXP& h) {
  const double s = 1.0 / std::sqrt(2.0);
  const LadderPoly x = (LadderPoly::creation() + LadderPoly::annihilation()) * Complex(s);
  const LadderPoly p = (LadderPoly::creation() - LadderPoly::annihilation()) * Complex(0.0, s);
  return substitute(h, x, p);
}

SwansonParams extract_swanson(const LadderPoly& p, double relative_tol) {
  const double floor = relative_tol * p.max_abs_coefficient();
  for (const auto& [key, c] : p.terms()) {
    const bool allowed = key == LadderPoly::Monomial{1, 1} || key == LadderPoly::Monomial{0, 2} ||
                         key == LadderPoly::Monomial{2, 0} || key == LadderPoly::Monomial{0, 0};
    if (!allowed && std::abs(c) > floor) {
      throw Error(ErrorKind::Shape, "term a†^" + std::to_string(key.first) + " a^" + std::to_string(key.second) +
                                        " is not part of the Swanson form");
    }
  }
  const Complex number = p.coefficient(1, 1);
  const Complex zero_point = p.coefficient(0, 0);
  const double tol = 1e-10 * std::max(1.0, std::abs(number));
  if (std::abs(number.imag()) > tol) throw Error(ErrorKind::Consistency, "a†a coefficient is not real");
  if (std::abs(zero_point - 0.5 * number) > tol) {
    throw Error(ErrorKind::Consistency, "constant term is not half the a†a coefficient");
  }
  return SwansonParams{.omega0 = number.real(), .alpha = p.coefficient(0, 2), .beta = p.coefficient(2, 0)};
}

LadderPoly swanson_operator(const SwansonParams& params) {
  LadderPoly h;
  h.add_term(1, 1, params.omega0);
  h.add_term(0, 0, 0.5 * params.omega0);
  h.add_term(0, 2, params.alpha);
  h.add_term(2, 0, params.beta);
  return h;
}

}  // namespace pseudoherm

#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace pseudoherm {

using Complex = std::complex<double>;

/// Polynomial in bosonic ladder operators with [a, a†] = 1, stored in normal
/// order: key (j, k) holds the coefficient of (a†)^j a^k. Exact zeros are
/// never stored, so equal operators have identical term maps.
class LadderPoly {
 public:
  using Monomial = std::pair<int, int>;
  using TermMap = std::map<Monomial, Complex>;

  /// Products whose total degree would exceed this raise a Degree error.
  static constexpr int kMaxDegree = 8;

  LadderPoly() = default;

  static LadderPoly constant(Complex c);
  static LadderPoly annihilation();
  static LadderPoly creation();
  static LadderPoly monomial(int creation_power, int annihilation_power, Complex c = 1.0);

  const TermMap& terms() const { return terms_; }
  Complex coefficient(int creation_power, int annihilation_power) const;
  int degree() const;
  bool empty() const { return terms_.empty(); }

  /// Adds c (a†)^j a^k, pruning the entry if it cancels exactly.
  void add_term(int creation_power, int annihilation_power, Complex c);

  /// Largest coefficient magnitude, or 0 for the zero operator.
  double max_abs_coefficient() const;

  LadderPoly& operator+=(const LadderPoly& rhs);
  LadderPoly& operator-=(const LadderPoly& rhs);
  LadderPoly& operator*=(Complex s);

  friend LadderPoly operator+(LadderPoly lhs, const LadderPoly& rhs) { return lhs += rhs; }
  friend LadderPoly operator-(LadderPoly lhs, const LadderPoly& rhs) { return lhs -= rhs; }
  friend LadderPoly operator*(LadderPoly lhs, Complex s) { return lhs *= s; }
  friend LadderPoly operator*(Complex s, LadderPoly rhs) { return rhs *= s; }
  friend bool operator==(const LadderPoly&, const LadderPoly&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Normal-ordered form of the operator product P Q.
LadderPoly normal_product(const LadderPoly& p, const LadderPoly& q);

/// Hermitian adjoint: c (a†)^j a^k -> conj(c) (a†)^k a^j.
LadderPoly adjoint(const LadderPoly& p);

/// PT action a -> -a, a† -> -a†, i -> -i.
LadderPoly pt_transform(const LadderPoly& p);

/// Max coefficient distance between two operators (0 for identical maps).
double distance(const LadderPoly& p, const LadderPoly& q);

/// c_pp p² + c_xx x² + c_xp_sym (xp + px)/2 + c_0, with ħ = 1.
struct QuadraticXP {
  Complex c_pp;
  Complex c_xx;
  Complex c_xp_sym;
  Complex c_0;
  double mass = 1.0;

  /// p²/2m + mΩ²x²/2 + (iΛ/2)(xp + px): the imaginary-gauge oscillator.
  static QuadraticXP gauge_oscillator(double mass, double big_omega, double gauge);
};

/// Realization with a = (ip + mΩx)/√(2mΩ); requires Ω > 0.
LadderPoly from_xp_scheme_one(const QuadraticXP& h, double big_omega);

/// Realization with a = (ip + x)/√2.
LadderPoly from_xp_scheme_two(const QuadraticXP& h);

/// Parameters of Ω₀(a†a + ½) + α a² + β (a†)².
struct SwansonParams {
  double omega0 = 0.0;
  Complex alpha;
  Complex beta;
};

/// Reads (Ω₀, α, β) off a Swanson-shaped operator. Terms below
/// `relative_tol` times the largest coefficient count as absent.
SwansonParams extract_swanson(const LadderPoly& p, double relative_tol = 1e-12);

/// The Swanson operator built from its parameters.
LadderPoly swanson_operator(const SwansonParams& params);

}  // namespace pseudoherm

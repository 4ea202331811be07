#pragma once

#include <map>
#include <set>
#include <vector>

#include "preproj/quiver.hpp"
#include "preproj/scalar.hpp"

namespace preproj {

/// Polynomial f(Δ) in the quadratic Casimir, rational coefficients, low degree first.
class CasimirPolynomial {
 public:
  CasimirPolynomial() = default;
  explicit CasimirPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool has_constant_term() const { return !coeffs_.empty() && sgn(coeffs_.front()) != 0; }
  Rational operator()(const Rational& x) const;

  friend bool operator==(const CasimirPolynomial&, const CasimirPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros stripped
};

/// Scalar by which the Casimir acts on the (i+1)-dimensional sl2-irreducible.
Rational casimir_scalar(std::int64_t i);

/// Vertex function λ: a base generator giving a value everywhere, plus a
/// finite patch that overrides it.
class Weight {
 public:
  enum class Base { Zero, Explicit, Khare };

  Weight() = default;
  static Weight zero() { return {}; }
  /// values[k] sits at vertex start + k; every other vertex is 0.
  static Weight explicit_values(std::vector<Scalar> values, Vertex start = 0);
  /// λ_i = (i+1)(1 + f(b_i)) for i ≥ 0; negative vertices evaluate to 0.
  static Weight khare(CasimirPolynomial f);

  Scalar operator[](Vertex v) const;
  Weight with(Vertex v, Scalar value) const;

  Base base() const { return base_; }
  Vertex explicit_start() const { return start_; }
  const std::vector<Scalar>& explicit_base_values() const { return values_; }
  const CasimirPolynomial& khare_polynomial() const { return f_; }
  const std::map<Vertex, Scalar>& patch() const { return patch_; }

  bool equal_on(const Weight& other, const std::set<Vertex>& window) const;

 private:
  Base base_ = Base::Zero;
  Vertex start_ = 0;
  std::vector<Scalar> values_;
  CasimirPolynomial f_;
  std::map<Vertex, Scalar> patch_;
};

/// λ·α = Σ λ_i α_i.
Scalar weight_dot(const Weight& lambda, const DimVector& alpha);

/// ν(α): the weight with ν(α)_j = (α, ε_j).
Weight cartan_apply(const Quiver& q, const DimVector& alpha);

}  // namespace preproj

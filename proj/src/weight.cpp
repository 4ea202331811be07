#include "preproj/weight.hpp"

namespace preproj {

CasimirPolynomial::CasimirPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational CasimirPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational casimir_scalar(std::int64_t i) {
  if (i < 0) throw ValidationError("Casimir scalar needs i >= 0");
  Rational b(mpz_class(static_cast<long>(i * (i + 2))), mpz_class(8));
  b.canonicalize();
  return b;
}

Weight Weight::explicit_values(std::vector<Scalar> values, Vertex start) {
  Weight w;
  w.base_ = Base::Explicit;
  w.values_ = std::move(values);
  w.start_ = start;
  return w;
}

Weight Weight::khare(CasimirPolynomial f) {
  Weight w;
  w.base_ = Base::Khare;
  w.f_ = std::move(f);
  return w;
}

Scalar Weight::operator[](Vertex v) const {
  if (auto it = patch_.find(v); it != patch_.end()) return it->second;
  switch (base_) {
    case Base::Zero: return Scalar();
    case Base::Explicit: {
      if (v < start_) return Scalar();
      auto k = static_cast<std::size_t>(v - start_);
      return k < values_.size() ? values_[k] : Scalar();
    }
    case Base::Khare: {
      if (v < 0) return Scalar();
      return Scalar(Rational(static_cast<long>(v + 1)) * (1 + f_(casimir_scalar(v))));
    }
  }
  return Scalar();
}

Weight Weight::with(Vertex v, Scalar value) const {
  Weight w = *this;
  w.patch_[v] = std::move(value);
  return w;
}

bool Weight::equal_on(const Weight& other, const std::set<Vertex>& window) const {
  for (Vertex v : window)
    if ((*this)[v] != other[v]) return false;
  return true;
}

Scalar weight_dot(const Weight& lambda, const DimVector& alpha) {
  Scalar sum;
  for (const auto& [v, x] : alpha.entries()) sum += lambda[v] * Scalar(static_cast<long>(x));
  return sum;
}

Weight cartan_apply(const Quiver& q, const DimVector& alpha) {
  std::map<Vertex, std::int64_t> values;
  for (const auto& [i, x] : alpha.entries()) {
    values[i] += x * q.cartan(i, i);
    for (Vertex j : q.neighbors(i)) values[j] += x * q.cartan(i, j);
  }
  Weight w;
  for (const auto& [v, x] : values)
    if (x != 0) w = w.with(v, Scalar(static_cast<long>(x)));
  return w;
}

}  // namespace preproj

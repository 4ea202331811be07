#pragma once

#include <string>
#include <vector>

#include "preproj/weight.hpp"

namespace preproj {

/// V(r, s) = ⊕_{i=s}^r V(i), with V(i) the (i+1)-dimensional sl2-irreducible.
struct VrsModule {
  std::int64_t s = 0, r = 0;
  std::int64_t dimension() const { return (r + 1) * (r + 2) / 2 - s * (s + 1) / 2; }
  auto operator<=>(const VrsModule&) const = default;
};

/// λ_i = (i+1)(1 + f(b_i)) on A+∞.
Weight khare_lambda(const CasimirPolynomial& f);

/// All (s, r) with r ≤ r_max such that Σ_{i=s}^r (i+1)(1+f(b_i)) = 0 and
/// Σ_{i=k}^r (i+1)(1+f(b_i)) ≠ 0 for s < k ≤ r, ordered by (s, r).
std::vector<VrsModule> enumerate_Vrs(const CasimirPolynomial& f, std::int64_t r_max);

enum class ReductiveGroup { SL2, O2, GL1 };

ReductiveGroup parse_group(const std::string& name);

struct MoritaParams {
  Weight lambda;
  Scalar nu;
};

/// (λ, ν) = (khare_lambda(f), 2k) for c = (1 + f(Δ)) δ_e on SL(2).
/// Other groups throw DomainError.
MoritaParams morita_params(ReductiveGroup group, const CasimirPolynomial& f, const Scalar& k);

}  // namespace preproj

#include "preproj/khare.hpp"

namespace preproj {

Weight khare_lambda(const CasimirPolynomial& f) { return Weight::khare(f); }

std::vector<VrsModule> enumerate_Vrs(const CasimirPolynomial& f, std::int64_t r_max) {
  if (r_max < 0) throw ValidationError("r_max must be nonnegative");
  std::vector<Rational> x;
  for (std::int64_t i = 0; i <= r_max; ++i) x.push_back(Rational(i + 1) * (1 + f(casimir_scalar(i))));
  std::vector<VrsModule> out;
  for (std::int64_t s = 0; s <= r_max; ++s) {
    for (std::int64_t r = s; r <= r_max; ++r) {
      Rational tail = 0;
      bool ok = true;
      for (std::int64_t k = r; k > s && ok; --k) {
        tail += x[static_cast<std::size_t>(k)];
        ok = sgn(tail) != 0;
      }
      if (ok && sgn(tail + x[static_cast<std::size_t>(s)]) == 0) out.push_back({s, r});
    }
  }
  return out;
}

ReductiveGroup parse_group(const std::string& name) {
  if (name == "SL2") return ReductiveGroup::SL2;
  if (name == "O2") return ReductiveGroup::O2;
  if (name == "GL1") return ReductiveGroup::GL1;
  throw ValidationError("unknown group '" + name + "' (expected SL2, O2 or GL1)");
}

MoritaParams morita_params(ReductiveGroup group, const CasimirPolynomial& f, const Scalar& k) {
  if (group != ReductiveGroup::SL2) throw DomainError("the parameter dictionary is implemented for SL2 only");
  return {khare_lambda(f), k * Scalar(2)};
}

}  // namespace preproj

#pragma once

#include <vector>

#include "preproj/rep.hpp"
#include "preproj/roots.hpp"

namespace preproj {

/// (λ, ν) ∈ Λ_i for rank n: λ_i ± pν ≠ 0 for p = 0, …, n−1.
bool in_lambda_i(const Weight& lambda, const Scalar& nu, Vertex i, int n);

struct Reflected {
  WreathRep module;
  Weight weight;  // r_i λ
};

/// F_i(V) for V over (λ, ν). Component spaces are kernel bases from exact
/// row reduction; arrows at i are reoriented internally so that i is a sink.
///
/// Throws ValidationError when V fails its relations or i carries a loop.
Reflected reflect(const WreathRep& v, const Weight& lambda, const Scalar& nu, Vertex i);

struct WordReflection {
  WreathRep module;
  Weight weight;
  /// Letters (in application order) whose current parameter was outside Λ_i.
  std::vector<Vertex> outside_lambda;
};

/// F_w = F_{j_m} ⋯ F_{j_1}: the rightmost letter is applied first.
WordReflection reflect_word(const WreathRep& v, const Weight& lambda, const Scalar& nu, const ReflectionWord& word);

}  // namespace preproj

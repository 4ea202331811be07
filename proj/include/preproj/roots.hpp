#pragma once

#include <set>
#include <vector>

#include "preproj/quiver.hpp"
#include "preproj/weight.hpp"

namespace preproj {

/// Word in simple reflections, written left to right as w = s_{j_m} ⋯ s_{j_1};
/// the rightmost letter acts first.
using ReflectionWord = std::vector<Vertex>;

/// s_i(α) = α − (α, ε_i) ε_i.
DimVector simple_reflection(const Quiver& q, Vertex i, const DimVector& alpha);

/// r_i λ = λ − λ_i ν(ε_i); the adjoint of s_i under the pairing λ·α.
Weight dual_reflection(const Quiver& q, Vertex i, const Weight& lambda);

/// Applies the word (rightmost letter first).
DimVector apply_word(const Quiver& q, const ReflectionWord& w, DimVector alpha);
Weight apply_word(const Quiver& q, const ReflectionWord& w, Weight lambda);

/// Positive roots of the full subquiver on `window` (a union of Dynkin
/// diagrams), sorted by height then lexicographically. Throws DomainError when
/// the closure does not terminate within a safety bound (non-Dynkin window).
std::vector<DimVector> enumerate_positive_roots(const Quiver& q, const std::set<Vertex>& window);

struct Dominance {
  Weight weight;
  ReflectionWord word;
};

/// Greedy reduction to a weakly J-dominant weight: while some λ_j ≺ 0 with
/// j ∈ J, reflect at the ≺-smallest such j (ties broken by vertex id).
Dominance dominate(const Quiver& q, const Weight& lambda, const std::set<Vertex>& window);

bool is_weakly_dominant(const Weight& lambda, const std::set<Vertex>& window);

}  // namespace preproj

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "preproj/rep.hpp"

namespace preproj {

struct InductionVerdict {
  bool rectangular = false;
  bool orthogonal = false;
  bool orthogonality_checked = false;  // false for a single part
  bool weight_equation = false;
  std::vector<std::optional<std::pair<int, int>>> shapes;  // (a_l, b_l) = (rows, columns)
  std::optional<bool> relation_check;

  bool pass() const { return rectangular && orthogonal && weight_equation; }
};

/// Conditions for X ⊗ Y↑ to deform, with Y_l concentrated on the root β_(l):
/// (i) every X_l is an a_l × b_l rectangle, (ii) (β_(l), β_(m)) = 0 for l ≠ m,
/// (iii) λ·β_(l) = (a_l − b_l) ν.
InductionVerdict check_extension_conditions(const Quiver& q, const std::vector<int>& partition,
                                            const std::vector<YoungDiagram>& diagrams,
                                            const std::vector<DimVector>& roots, const Weight& lambda,
                                            const Scalar& nu);

/// Vertex form: β_(l) = ε_{i_l}.
InductionVerdict check_extension_conditions(const Quiver& q, const std::vector<int>& partition,
                                            const std::vector<YoungDiagram>& diagrams,
                                            const std::vector<Vertex>& vertices, const Weight& lambda,
                                            const Scalar& nu);

/// X ⊗ 𝒩↑ with 𝒩 = ⊗_l S(i_l)^{⊗ n_l} and every arrow acting by zero.
WreathRep zero_arrow_module(const Quiver& q, const std::vector<int>& partition,
                            const std::vector<YoungDiagram>& diagrams, const std::vector<Vertex>& vertices);

/// Whether zero_arrow_module satisfies the relations for (λ, ν). With zero
/// arrows, relation (I) reads −λ_{i_l} Id = ν Σ_{m≠l, i_m=i_l} σ_{ml}; relation
/// (II) additionally requires ν = 0 or no two vertices i_l, i_m adjacent.
/// Requires n ≤ 5.
bool verify_relation_I_with_zero_arrows(const Quiver& q, const std::vector<int>& partition,
                                        const std::vector<YoungDiagram>& diagrams,
                                        const std::vector<Vertex>& vertices, const Weight& lambda, const Scalar& nu);

}  // namespace preproj

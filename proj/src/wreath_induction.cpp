#include "preproj/wreath_induction.hpp"

namespace preproj {

namespace {

void check_shapes(const std::vector<int>& partition, const std::vector<YoungDiagram>& diagrams, std::size_t parts) {
  if (partition.empty()) throw ValidationError("partition must be nonempty");
  if (diagrams.size() != partition.size() || parts != partition.size())
    throw ValidationError("partition, diagrams and roots must have equal length");
  for (std::size_t l = 0; l < partition.size(); ++l) {
    if (partition[l] < 1) throw ValidationError("partition parts must be positive");
    if (diagrams[l].size() != partition[l])
      throw ValidationError("diagram " + diagrams[l].to_string() + " does not have size " +
                            std::to_string(partition[l]));
  }
}

}  // namespace

InductionVerdict check_extension_conditions(const Quiver& q, const std::vector<int>& partition,
                                            const std::vector<YoungDiagram>& diagrams,
                                            const std::vector<DimVector>& roots, const Weight& lambda,
                                            const Scalar& nu) {
  check_shapes(partition, diagrams, roots.size());
  InductionVerdict v;
  v.rectangular = true;
  for (const auto& d : diagrams) {
    v.shapes.push_back(is_rectangular(d));
    if (!v.shapes.back()) v.rectangular = false;
  }
  v.orthogonal = true;
  v.orthogonality_checked = roots.size() > 1;
  for (std::size_t l = 0; l < roots.size(); ++l)
    for (std::size_t m = l + 1; m < roots.size(); ++m)
      if (symmetrized_form(q, roots[l], roots[m]) != 0) v.orthogonal = false;
  v.weight_equation = v.rectangular;
  for (std::size_t l = 0; l < roots.size() && v.weight_equation; ++l) {
    const auto [a, b] = *v.shapes[l];
    if (weight_dot(lambda, roots[l]) != nu * Scalar(static_cast<long>(a - b))) v.weight_equation = false;
  }
  return v;
}

InductionVerdict check_extension_conditions(const Quiver& q, const std::vector<int>& partition,
                                            const std::vector<YoungDiagram>& diagrams,
                                            const std::vector<Vertex>& vertices, const Weight& lambda,
                                            const Scalar& nu) {
  std::vector<DimVector> roots;
  for (Vertex v : vertices) {
    q.require_vertex(v);
    roots.push_back(DimVector::unit(v));
  }
  return check_extension_conditions(q, partition, diagrams, roots, lambda, nu);
}

WreathRep zero_arrow_module(const Quiver& q, const std::vector<int>& partition,
                            const std::vector<YoungDiagram>& diagrams, const std::vector<Vertex>& vertices) {
  check_shapes(partition, diagrams, vertices.size());
  std::vector<Rep> ys;
  for (Vertex v : vertices) {
    q.require_vertex(v);
    ys.emplace_back(q, DimVector::unit(v), std::map<DoubleArrow, Matrix>{});
  }
  std::vector<SymmetricIrrep> irreps;
  for (const auto& d : diagrams) irreps.push_back(symmetric_group_irrep(d));
  return induce_module(partition, irreps, ys);
}

bool verify_relation_I_with_zero_arrows(const Quiver& q, const std::vector<int>& partition,
                                        const std::vector<YoungDiagram>& diagrams,
                                        const std::vector<Vertex>& vertices, const Weight& lambda, const Scalar& nu) {
  int n = 0;
  for (int p : partition) n += p;
  if (n > 5) throw DomainError("direct relation check supports n <= 5");
  return check_wreath(zero_arrow_module(q, partition, diagrams, vertices), lambda, nu).pass();
}

}  // namespace preproj

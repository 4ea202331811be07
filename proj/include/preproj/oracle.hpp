#pragma once

#include <map>
#include <optional>
#include <vector>

#include "preproj/rep.hpp"

namespace preproj {

struct ChainSolution {
  Vertex s = 0, r = 0;
  std::vector<Scalar> u;  // u[k − s] on the edge k → k+1
  Rep rep;
};

/// Dimension 1 on [s, r], a = 1 and a* = u_k on every edge. Returns a
/// solution iff the relations hold with every u_k ≠ 0.
std::optional<ChainSolution> solve_chain(const Quiver& q, const Weight& lambda, Vertex s, Vertex r);

struct TreeFlow {
  std::map<Arrow, Scalar> u;
  Rep rep;
};

/// Scalar flow solution for a multiplicity-free α on a tree: u_a is the
/// λ-sum of the side of a containing h(a). Requires all u_a ≠ 0 and λ·α = 0.
std::optional<TreeFlow> solve_tree_flow(const Quiver& q, const Weight& lambda, const DimVector& alpha);

/// Throws DomainError when α has an entry ≥ 2.
bool oracle_exists_simple(const Quiver& q, const Weight& lambda, const DimVector& alpha);

}  // namespace preproj

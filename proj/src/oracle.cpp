#include "preproj/oracle.hpp"

#include <deque>

namespace preproj {

std::optional<ChainSolution> solve_chain(const Quiver& q, const Weight& lambda, Vertex s, Vertex r) {
  if (!q.is_type_a()) throw ValidationError("chains need a type-A quiver");
  if (s > r) throw ValidationError("interval needs s <= r");
  q.require_vertex(s);
  q.require_vertex(r);
  ChainSolution sol;
  sol.s = s;
  sol.r = r;
  Scalar acc;
  std::map<DoubleArrow, Matrix> maps;
  for (Vertex k = s; k < r; ++k) {
    acc += lambda[k];
    Scalar u = -acc;
    if (u.is_zero()) return std::nullopt;
    Arrow a{k, k + 1, 0};
    maps[{a, false}] = Matrix::of(Scalar(1));
    maps[{a, true}] = Matrix::of(u);
    sol.u.push_back(u);
  }
  if (!(acc + lambda[r]).is_zero()) return std::nullopt;
  sol.rep = Rep(q, DimVector::interval(s, r), std::move(maps));
  return sol;
}

std::optional<TreeFlow> solve_tree_flow(const Quiver& q, const Weight& lambda, const DimVector& alpha) {
  if (alpha.is_zero()) throw ValidationError("dimension vector must be nonzero");
  for (const auto& [v, x] : alpha.entries()) {
    q.require_vertex(v);
    if (x < 0) throw ValidationError("dimension vector must be nonnegative");
    if (x > 1) throw DomainError("oracle handles multiplicity-free dimension vectors only");
  }
  auto supp_vec = alpha.support();
  std::set<Vertex> supp(supp_vec.begin(), supp_vec.end());
  if (!q.is_connected(supp)) return std::nullopt;
  const auto edges = q.arrows_within(supp);
  if (edges.size() + 1 != supp.size()) throw DomainError("support is not a tree");
  if (!weight_dot(lambda, alpha).is_zero()) return std::nullopt;

  TreeFlow flow;
  std::map<DoubleArrow, Matrix> maps;
  for (const auto& a : edges) {
    // Collect the side of a containing its head.
    std::set<Vertex> side{a.head};
    std::deque<Vertex> todo{a.head};
    while (!todo.empty()) {
      Vertex v = todo.front();
      todo.pop_front();
      for (const auto& b : edges) {
        if (b == a) continue;
        Vertex w = b.tail == v ? b.head : (b.head == v ? b.tail : v);
        if (w != v && side.insert(w).second) todo.push_back(w);
      }
    }
    Scalar u;
    for (Vertex v : side) u += lambda[v];
    if (u.is_zero()) return std::nullopt;
    flow.u[a] = u;
    maps[{a, false}] = Matrix::of(Scalar(1));
    maps[{a, true}] = Matrix::of(u);
  }
  flow.rep = Rep(q, alpha, std::move(maps));
  return flow;
}

bool oracle_exists_simple(const Quiver& q, const Weight& lambda, const DimVector& alpha) {
  return solve_tree_flow(q, lambda, alpha).has_value();
}

}  // namespace preproj

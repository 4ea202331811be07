#include "preproj/roots.hpp"

#include <algorithm>
#include <deque>

namespace preproj {

DimVector simple_reflection(const Quiver& q, Vertex i, const DimVector& alpha) {
  q.require_vertex(i);
  std::int64_t pairing = 0;
  for (const auto& [j, x] : alpha.entries()) pairing += x * q.cartan(j, i);
  DimVector out = alpha;
  out.add(i, -pairing);
  return out;
}

Weight dual_reflection(const Quiver& q, Vertex i, const Weight& lambda) {
  q.require_vertex(i);
  Scalar li = lambda[i];
  if (li.is_zero()) return lambda;
  Weight out = lambda.with(i, lambda[i] - Scalar(static_cast<long>(q.cartan(i, i))) * li);
  for (Vertex j : q.neighbors(i)) out = out.with(j, lambda[j] - Scalar(static_cast<long>(q.cartan(i, j))) * li);
  return out;
}

DimVector apply_word(const Quiver& q, const ReflectionWord& w, DimVector alpha) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) alpha = simple_reflection(q, *it, alpha);
  return alpha;
}

Weight apply_word(const Quiver& q, const ReflectionWord& w, Weight lambda) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) lambda = dual_reflection(q, *it, lambda);
  return lambda;
}

std::vector<DimVector> enumerate_positive_roots(const Quiver& q, const std::set<Vertex>& window) {
  constexpr std::size_t kMaxRoots = 20000;
  for (Vertex v : window) q.require_vertex(v);
  std::set<DimVector> roots;
  std::deque<DimVector> todo;
  for (Vertex v : window) {
    roots.insert(DimVector::unit(v));
    todo.push_back(DimVector::unit(v));
  }
  while (!todo.empty()) {
    DimVector beta = todo.front();
    todo.pop_front();
    for (Vertex j : window) {
      // (β, ε_j) only involves window vertices since supp β ⊂ window.
      std::int64_t pairing = 0;
      for (const auto& [v, x] : beta.entries()) pairing += x * q.cartan(v, j);
      if (pairing == 0) continue;
      DimVector next = beta;
      next.add(j, -pairing);
      if (next.is_zero() || !next.is_nonnegative()) continue;
      if (roots.insert(next).second) {
        if (roots.size() > kMaxRoots) throw DomainError("root closure does not terminate: window is not Dynkin");
        todo.push_back(std::move(next));
      }
    }
  }
  std::vector<DimVector> out(roots.begin(), roots.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const DimVector& a, const DimVector& b) { return a.height() < b.height(); });
  return out;
}

bool is_weakly_dominant(const Weight& lambda, const std::set<Vertex>& window) {
  for (Vertex j : window)
    if (precedes(lambda[j], Scalar())) return false;
  return true;
}

Dominance dominate(const Quiver& q, const Weight& lambda, const std::set<Vertex>& window) {
  constexpr std::size_t kMaxSteps = 100000;
  Dominance d{lambda, {}};
  for (Vertex v : window) q.require_vertex(v);
  for (std::size_t step = 0;; ++step) {
    if (step > kMaxSteps) throw DomainError("dominance reduction did not terminate: window is not Dynkin");
    const Vertex* worst = nullptr;
    Scalar worst_value;
    for (const Vertex& j : window) {
      Scalar x = d.weight[j];
      if (!precedes(x, Scalar())) continue;
      if (worst == nullptr || precedes(x, worst_value)) {
        worst = &j;
        worst_value = x;
      }
    }
    if (worst == nullptr) break;
    d.weight = dual_reflection(q, *worst, d.weight);
    d.word.insert(d.word.begin(), *worst);
  }
  return d;
}

}  // namespace preproj

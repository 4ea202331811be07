#pragma once

// Seeded random instances shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "preproj/oracle.hpp"
#include "preproj/reflection.hpp"
#include "preproj/rep.hpp"
#include "preproj/roots.hpp"
#include "preproj/wreath_induction.hpp"

namespace preproj::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

  /// Small rational, often an integer, so that sums cancel now and then.
  Rational rational(std::int64_t range = 3) {
    Rational r(integer(-range, range), coin(0.7) ? 1 : integer(1, 3));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(std::int64_t range = 3) {
    for (;;) {
      Rational r = rational(range);
      if (sgn(r) != 0) return r;
    }
  }
  Scalar scalar(double complex_p = 0.0) {
    if (coin(complex_p)) return Scalar(rational(), rational());
    return Scalar(rational());
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Explicit weight with random values on `window` (zero elsewhere).
inline Weight random_weight(Gen& g, const std::set<Vertex>& window, double complex_p = 0.0) {
  Weight w;
  for (Vertex v : window) w = w.with(v, g.scalar(complex_p));
  return w;
}

/// Adjusts one support vertex of α so that λ·α = 0.
inline Weight balance(const Weight& lambda, const DimVector& alpha, Vertex at) {
  Scalar rest = weight_dot(lambda, alpha) - lambda[at] * Scalar(static_cast<long>(alpha[at]));
  return lambda.with(at, -rest / Scalar(static_cast<long>(alpha[at])));
}

inline std::vector<DimVector> multiplicity_free(const std::vector<DimVector>& roots) {
  std::vector<DimVector> out;
  for (const auto& r : roots)
    if (r.is_multiplicity_free()) out.push_back(r);
  return out;
}

/// A module together with the parameters it satisfies.
struct Instance {
  WreathRep module;
  Weight lambda;
  Scalar nu;
};

inline bool small_components(const WreathRep& v, std::size_t max_dim) {
  return std::all_of(v.components().begin(), v.components().end(),
                     [&](const auto& c) { return c.second <= max_dim; });
}

/// Oracle simple at a random multiplicity-free root of `window` with a
/// random weight orthogonal to it; retries until the oracle succeeds.
inline std::pair<Rep, Weight> random_simple(Gen& g, const Quiver& q, const std::set<Vertex>& window) {
  const auto roots = multiplicity_free(enumerate_positive_roots(q, window));
  for (;;) {
    const DimVector& alpha = g.pick(roots);
    Weight lambda = random_weight(g, window);
    auto supp = alpha.support();
    lambda = balance(lambda, alpha, g.pick(supp));
    if (auto flow = solve_tree_flow(q, lambda, alpha)) return {flow->rep, lambda};
  }
}

/// Rank-1 Q-representation (a* = 0) at λ = 0 with random integer maps.
inline Rep random_q_rep(Gen& g, const Quiver& q, const std::set<Vertex>& window, std::int64_t max_dim) {
  DimVector dims;
  for (Vertex v : window) dims.set(v, g.integer(0, max_dim));
  std::map<DoubleArrow, Matrix> maps;
  for (const auto& a : q.arrows_within(window)) {
    Matrix m(static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Scalar(g.integer(-2, 2));
    maps[{a, false}] = m;
  }
  return Rep(q, dims, std::move(maps));
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
  std::map<DoubleArrow, Matrix> maps;
  std::set<DoubleArrow> keys;
  for (const auto& [k, m] : a.maps()) keys.insert(k);
  for (const auto& [k, m] : b.maps()) keys.insert(k);
  for (const auto& k : keys) {
    Matrix ma = a.map(k), mb = b.map(k);
    Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    m.set_block(0, 0, ma);
    m.set_block(ma.rows(), ma.cols(), mb);
    maps[k] = m;
  }
  return Rep(a.quiver(), a.dims() + b.dims(), std::move(maps));
}

/// Applies up to `max_len` random reflections at window vertices, keeping the
/// result only while every component stays within `max_dim`.
inline Instance scramble(Gen& g, Instance inst, const std::set<Vertex>& window, int max_len, std::size_t max_dim) {
  std::vector<Vertex> wv(window.begin(), window.end());
  const int len = static_cast<int>(g.integer(0, max_len));
  for (int k = 0; k < len; ++k) {
    Vertex i = g.pick(wv);
    auto next = reflect(inst.module, inst.lambda, inst.nu, i);
    if (!small_components(next.module, max_dim) || next.module.components().empty()) break;
    inst.module = std::move(next.module);
    inst.lambda = std::move(next.weight);
  }
  return inst;
}

/// Random relation-passing module of rank 1 or 2 supported in `window`, with
/// component dimensions at most `max_dim`.
inline Instance random_instance(Gen& g, const Quiver& q, const std::set<Vertex>& window, int rank,
                                std::size_t max_dim = 2) {
  std::vector<Vertex> wv(window.begin(), window.end());
  for (;;) {
    Instance inst;
    if (rank == 1) {
      switch (g.integer(0, 2)) {
        case 0: {
          auto [rep, lambda] = random_simple(g, q, window);
          inst = {to_wreath(rep), lambda, Scalar()};
          break;
        }
        case 1: {
          Weight lambda;
          for (Vertex v : window) lambda = lambda.with(v, Scalar());
          inst = {to_wreath(random_q_rep(g, q, window, 2)), lambda, Scalar()};
          break;
        }
        default: {
          auto [a, lambda] = random_simple(g, q, window);
          // A second simple for the same λ, if one is found quickly.
          Rep b = a;
          for (const auto& alpha : multiplicity_free(enumerate_positive_roots(q, window)))
            if (auto flow = solve_tree_flow(q, lambda, alpha); flow && g.coin()) {
              b = flow->rep;
              break;
            }
          inst = {to_wreath(direct_sum(a, b)), lambda, Scalar()};
        }
      }
    } else {
      if (g.coin()) {
        // ν = 0: outer tensor product of simples, induced.
        auto [y1, lambda] = random_simple(g, q, window);
        if (g.coin()) {
          YoungDiagram d = g.coin() ? YoungDiagram({2}) : YoungDiagram({1, 1});
          inst = {outer_tensor_induce({2}, {d}, {y1}, lambda), lambda, Scalar()};
        } else {
          Rep y2 = y1;
          for (const auto& alpha : multiplicity_free(enumerate_positive_roots(q, window)))
            if (auto flow = solve_tree_flow(q, lambda, alpha); flow && g.coin(0.3)) {
              y2 = flow->rep;
              break;
            }
          inst = {outer_tensor_induce({1, 1}, {YoungDiagram({1}), YoungDiagram({1})}, {y1, y2}, lambda), lambda,
                  Scalar()};
        }
      } else {
        // ν ≠ 0: zero-arrow module satisfying the relations.
        Scalar nu(g.nonzero_rational(2));
        Weight lambda = random_weight(g, window);
        Vertex i = g.pick(wv);
        if (g.coin()) {
          YoungDiagram d = g.coin() ? YoungDiagram({2}) : YoungDiagram({1, 1});
          auto [a, b] = *is_rectangular(d);
          lambda = lambda.with(i, nu * Scalar(static_cast<long>(a - b)));
          inst = {zero_arrow_module(q, {2}, {d}, {i}), lambda, nu};
        } else {
          std::vector<Vertex> far;
          for (Vertex j : wv)
            if (j != i && q.cartan(i, j) == 0) far.push_back(j);
          if (far.empty()) continue;
          Vertex j = g.pick(far);
          lambda = lambda.with(i, Scalar()).with(j, Scalar());
          inst = {zero_arrow_module(q, {1, 1}, {YoungDiagram({1}), YoungDiagram({1})}, {i, j}), lambda, nu};
        }
      }
    }
    if (!small_components(inst.module, max_dim)) continue;
    return scramble(g, std::move(inst), window, 3, max_dim);
  }
}

}  // namespace preproj::testgen

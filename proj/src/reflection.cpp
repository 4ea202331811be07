#include "preproj/reflection.hpp"

#include <algorithm>
#include <optional>

namespace preproj {

bool in_lambda_i(const Weight& lambda, const Scalar& nu, Vertex i, int n) {
  const Scalar li = lambda[i];
  for (int p = 0; p < n; ++p) {
    Scalar pn = nu * Scalar(static_cast<long>(p));
    if ((li + pn).is_zero() || (li - pn).is_zero()) return false;
  }
  return true;
}

namespace {

// An arrow of the sink orientation at i. `in` is the double-quiver arrow
// ending at i; its dual r* is stored as `sign` times the original map
// (sign −1 for arrows that were reversed to make i a sink).
struct SinkArrow {
  DoubleArrow in;
  int sign = 1;
  Vertex tail() const { return in.tail(); }
};

// ξ is stored over all n positions, −1 marking positions outside D.
using Xi = std::vector<int>;

struct Layout {
  Tuple j;
  std::vector<int> positions;  // D, ascending
  std::vector<Xi> xis;         // block order
  std::vector<Tuple> tuples;   // t(j, ξ)
  std::vector<std::size_t> offset, dims;
  std::size_t total = 0;
};

struct Component {
  Layout layout;
  Kernel kernel;
};

class Reflector {
 public:
  Reflector(const WreathRep& v, const Weight& lambda, const Scalar& nu, Vertex i)
      : v_(v), lambda_(lambda), nu_(nu), i_(i), n_(v.rank()) {
    const Quiver& q = v.quiver();
    for (const auto& a : q.arrows_in(i)) r_.push_back({DoubleArrow{a, false}, 1});
    for (const auto& b : q.arrows_out(i)) r_.push_back({DoubleArrow{b, true}, -1});
  }

  WreathRep run() {
    build_components();
    std::map<Tuple, std::size_t> dims;
    for (const auto& [t, c] : comps_) dims[t] = c.kernel.dim();
    std::map<ArrowKey, Matrix> arrows;
    std::map<SigmaKey, Matrix> sigma;
    const Quiver& q = v_.quiver();
    for (const auto& [j, c] : comps_) {
      for (int l = 0; l < n_; ++l) {
        for (const auto& d : q.double_arrows_from(j[static_cast<std::size_t>(l)])) {
          Tuple k = j;
          k[static_cast<std::size_t>(l)] = d.head();
          auto target = comps_.find(k);
          if (target == comps_.end()) continue;
          Matrix big = arrow_matrix(c.layout, target->second.layout, l, d);
          Matrix m = restrict(big, c, target->second);
          if (!m.is_zero()) arrows[ArrowKey{j, l, d}] = std::move(m);
        }
      }
      for (int k = 0; k + 1 < n_; ++k) {
        const auto& target = comps_.at(swap_positions(j, k));
        sigma[SigmaKey{j, k}] = restrict(sigma_matrix(c.layout, target.layout, k), c, target);
      }
    }
    return WreathRep(q, n_, std::move(dims), std::move(arrows), std::move(sigma));
  }

 private:
  std::size_t radix() const { return r_.size(); }

  Tuple t_of(const Tuple& j, const Xi& xi) const {
    Tuple t = j;
    for (std::size_t m = 0; m < t.size(); ++m)
      if (xi[m] >= 0) t[m] = r_[static_cast<std::size_t>(xi[m])].tail();
    return t;
  }

  Layout layout(const Tuple& j, std::vector<int> positions) const {
    Layout lay;
    lay.j = j;
    lay.positions = std::move(positions);
    std::size_t count = 1;
    for (std::size_t k = 0; k < lay.positions.size(); ++k) count *= radix();
    for (std::size_t idx = 0; idx < count; ++idx) {
      Xi xi(static_cast<std::size_t>(n_), -1);
      std::size_t rest = idx;
      for (std::size_t k = lay.positions.size(); k-- > 0;) {
        xi[static_cast<std::size_t>(lay.positions[k])] = static_cast<int>(rest % radix());
        rest /= radix();
      }
      Tuple t = t_of(j, xi);
      const std::size_t d = v_.dim(t);
      lay.xis.push_back(std::move(xi));
      lay.tuples.push_back(std::move(t));
      lay.offset.push_back(lay.total);
      lay.dims.push_back(d);
      lay.total += d;
    }
    return lay;
  }

  std::size_t block_of(const Layout& lay, const Xi& xi) const {
    std::size_t idx = 0;
    for (int p : lay.positions) {
      if (xi[static_cast<std::size_t>(p)] < 0) throw std::logic_error("ξ undefined on D");
      idx = idx * radix() + static_cast<std::size_t>(xi[static_cast<std::size_t>(p)]);
    }
    return idx;
  }

  std::vector<int> delta(const Tuple& j) const {
    std::vector<int> out;
    for (std::size_t m = 0; m < j.size(); ++m)
      if (j[m] == i_) out.push_back(static_cast<int>(m));
    return out;
  }

  static std::vector<int> without(std::vector<int> d, int p) {
    d.erase(std::remove(d.begin(), d.end(), p), d.end());
    return d;
  }

  // M_r at position p on V_t, or nullopt for zero.
  const Matrix* map_r(const Tuple& t, int p, std::size_t r) const { return v_.arrow(t, p, r_[r].in); }

  std::optional<Matrix> map_rstar(const Tuple& t, int p, std::size_t r) const {
    const Matrix* m = v_.arrow(t, p, r_[r].in.dual());
    if (!m) return std::nullopt;
    return r_[r].sign == 1 ? *m : -*m;
  }

  // π_{j,p}(D): V(j, D) → V(j, D∖{p}).
  Matrix pi(const Layout& src, const Layout& dst, int p) const {
    Matrix out(dst.total, src.total);
    for (std::size_t b = 0; b < src.xis.size(); ++b) {
      if (src.dims[b] == 0) continue;
      const std::size_t r = static_cast<std::size_t>(src.xis[b][static_cast<std::size_t>(p)]);
      const Matrix* m = map_r(src.tuples[b], p, r);
      if (!m) continue;
      Xi eta = src.xis[b];
      eta[static_cast<std::size_t>(p)] = -1;
      out.set_block(dst.offset[block_of(dst, eta)], src.offset[b], *m);
    }
    return out;
  }

  // μ_{j,p}(D): V(j, D∖{p}) → V(j, D).
  Matrix mu(const Layout& src, const Layout& dst, int p) const {
    Matrix out(dst.total, src.total);
    for (std::size_t b = 0; b < src.xis.size(); ++b) {
      if (src.dims[b] == 0) continue;
      for (std::size_t r = 0; r < radix(); ++r) {
        auto m = map_rstar(src.tuples[b], p, r);
        if (!m) continue;
        Xi xi = src.xis[b];
        xi[static_cast<std::size_t>(p)] = static_cast<int>(r);
        out.set_block(dst.offset[block_of(dst, xi)], src.offset[b], *m);
      }
    }
    return out;
  }

  void build_components() {
    std::set<Vertex> tails;
    for (const auto& r : r_) tails.insert(r.tail());
    std::set<Tuple> candidates;
    for (const auto& [c, d] : v_.components()) {
      if (std::find(c.begin(), c.end(), i_) != c.end()) continue;
      std::vector<std::size_t> movable;
      for (std::size_t m = 0; m < c.size(); ++m)
        if (tails.count(c[m])) movable.push_back(m);
      for (std::size_t mask = 0; mask < (std::size_t{1} << movable.size()); ++mask) {
        Tuple j = c;
        for (std::size_t k = 0; k < movable.size(); ++k)
          if (mask >> k & 1) j[movable[k]] = i_;
        candidates.insert(j);
      }
    }
    for (const Tuple& j : candidates) {
      const auto d = delta(j);
      Layout lay = layout(j, d);
      if (lay.total == 0) continue;
      std::vector<Matrix> parts;
      for (int p : d) parts.push_back(pi(lay, layout(j, without(d, p)), p));
      Kernel k = nullspace(Matrix::vstack(parts, lay.total), lay.total);
      if (k.dim() == 0) continue;
      comps_.emplace(j, Component{std::move(lay), std::move(k)});
    }
  }

  Matrix restrict(const Matrix& big, const Component& src, const Component& dst) const {
    return dst.kernel.coordinates(big * src.kernel.basis);
  }

  Matrix arrow_matrix(const Layout& src, const Layout& dst, int l, const DoubleArrow& d) const {
    if (d.tail() != i_ && d.head() != i_) {
      // Case I: act blockwise, ξ unchanged.
      Matrix out(dst.total, src.total);
      for (std::size_t b = 0; b < src.xis.size(); ++b) {
        if (src.dims[b] == 0) continue;
        const Matrix* m = v_.arrow(src.tuples[b], l, d);
        if (m) out.set_block(dst.offset[block_of(dst, src.xis[b])], src.offset[b], *m);
      }
      return out;
    }
    if (d.tail() == i_) {
      // Case II: d = ±r* for the sink arrow r = d*; project onto ξ(l) = r.
      std::size_t r = find_r(d.dual());
      Matrix out(dst.total, src.total);
      for (std::size_t b = 0; b < src.xis.size(); ++b) {
        if (src.dims[b] == 0 || src.xis[b][static_cast<std::size_t>(l)] != static_cast<int>(r)) continue;
        Xi eta = src.xis[b];
        eta[static_cast<std::size_t>(l)] = -1;
        out.set_block(dst.offset[block_of(dst, eta)], src.offset[b], Matrix::identity(src.dims[b]));
      }
      return r_[r].sign == 1 ? out : -out;
    }
    // Case III: d = r ends at i; θ = (−λ_i + μ_l π_l + ν Σ_{m∈D} σ_{ml}) τ_!.
    const std::size_t r = find_r(d);
    Matrix tau(dst.total, src.total);
    for (std::size_t b = 0; b < src.xis.size(); ++b) {
      if (src.dims[b] == 0) continue;
      Xi xi = src.xis[b];
      xi[static_cast<std::size_t>(l)] = static_cast<int>(r);
      tau.set_block(dst.offset[block_of(dst, xi)], src.offset[b], Matrix::identity(src.dims[b]));
    }
    Matrix op = Matrix::scalar(dst.total, -lambda_[i_]);
    Layout mid = layout(dst.j, without(dst.positions, l));
    op += mu(mid, dst, l) * pi(dst, mid, l);
    if (!nu_.is_zero()) {
      for (int m : src.positions) {
        Matrix s(dst.total, dst.total);
        for (std::size_t b = 0; b < dst.xis.size(); ++b) {
          if (dst.dims[b] == 0) continue;
          Xi xi = dst.xis[b];
          std::swap(xi[static_cast<std::size_t>(m)], xi[static_cast<std::size_t>(l)]);
          s.set_block(dst.offset[block_of(dst, xi)], dst.offset[b], v_.transposition(dst.tuples[b], m, l));
        }
        op += s * nu_;
      }
    }
    return op * tau;
  }

  // Adjacent transposition s_k: block ξ ↦ ξ∘s_k.
  Matrix sigma_matrix(const Layout& src, const Layout& dst, int k) const {
    Matrix out(dst.total, src.total);
    for (std::size_t b = 0; b < src.xis.size(); ++b) {
      if (src.dims[b] == 0) continue;
      Xi xi = src.xis[b];
      std::swap(xi[static_cast<std::size_t>(k)], xi[static_cast<std::size_t>(k) + 1]);
      out.set_block(dst.offset[block_of(dst, xi)], src.offset[b], v_.sigma(src.tuples[b], k));
    }
    return out;
  }

  std::size_t find_r(const DoubleArrow& in) const {
    for (std::size_t r = 0; r < r_.size(); ++r)
      if (r_[r].in == in) return r;
    throw std::logic_error("arrow " + in.name() + " does not end at the reflected vertex");
  }

  const WreathRep& v_;
  const Weight& lambda_;
  const Scalar& nu_;
  Vertex i_;
  int n_;
  std::vector<SinkArrow> r_;
  std::map<Tuple, Component> comps_;
};

}  // namespace

Reflected reflect(const WreathRep& v, const Weight& lambda, const Scalar& nu, Vertex i) {
  const Quiver& q = v.quiver();
  q.require_vertex(i);
  if (q.has_loop(i)) throw ValidationError("vertex " + std::to_string(i) + " carries a loop");
  auto report = check_wreath(v, lambda, nu);
  if (!report.pass())
    throw ValidationError("input module fails relation " + report.violations.front().relation + " at " +
                          report.violations.front().location);
  Reflector reflector(v, lambda, nu, i);
  return {reflector.run(), dual_reflection(q, i, lambda)};
}

WordReflection reflect_word(const WreathRep& v, const Weight& lambda, const Scalar& nu, const ReflectionWord& word) {
  WordReflection out{v, lambda, {}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!in_lambda_i(out.weight, nu, *it, v.rank())) out.outside_lambda.push_back(*it);
    auto step = reflect(out.module, out.weight, nu, *it);
    out.module = std::move(step.module);
    out.weight = std::move(step.weight);
  }
  return out;
}

}  // namespace preproj

#include "preproj/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

namespace preproj {

namespace {

std::string vertex_location(Vertex v) { return "vertex " + std::to_string(v); }

Tuple replaced(Tuple t, int l, Vertex v) {
  t[static_cast<std::size_t>(l)] = v;
  return t;
}

}  // namespace

std::string tuple_string(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  os << ')';
  return os.str();
}

Tuple swap_positions(Tuple t, int k) {
  std::swap(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k) + 1]);
  return t;
}

// ---------------------------------------------------------------------- Rep

Rep::Rep(Quiver quiver, DimVector dims, std::map<DoubleArrow, Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  for (const auto& [v, d] : dims_.entries()) {
    quiver_.require_vertex(v);
    if (d < 0) throw ValidationError("negative dimension at " + vertex_location(v));
  }
  for (const auto& [a, m] : maps_)
    if (!quiver_.is_arrow(a.base)) throw ValidationError("arrow " + a.name() + " is not in the quiver");
}

Matrix Rep::map(const DoubleArrow& a) const {
  if (auto it = maps_.find(a); it != maps_.end()) return it->second;
  return Matrix(dim(a.head()), dim(a.tail()));
}

CheckReport check_rank1(const Rep& m, const Weight& lambda) {
  CheckReport report;
  for (const auto& [a, mat] : m.maps()) {
    if (mat.rows() != m.dim(a.head()) || mat.cols() != m.dim(a.tail())) {
      std::ostringstream os;
      os << a.name() << " is " << mat.rows() << "x" << mat.cols() << ", expected " << m.dim(a.head()) << "x"
         << m.dim(a.tail());
      report.add("shape", os.str());
    }
  }
  if (!report.pass()) return report;
  const Quiver& q = m.quiver();
  for (Vertex v : m.dims().support()) {
    const std::size_t d = m.dim(v);
    Matrix sum = Matrix::scalar(d, -lambda[v]);
    for (const auto& a : q.arrows_in(v)) {
      if (m.dim(a.tail) == 0) continue;
      sum += m.map({a, false}) * m.map({a, true});
    }
    for (const auto& a : q.arrows_out(v)) {
      if (m.dim(a.head) == 0) continue;
      sum -= m.map({a, true}) * m.map({a, false});
    }
    if (!sum.is_zero()) report.add("preprojective", vertex_location(v), sum);
  }
  return report;
}

// ---------------------------------------------------------------- WreathRep

WreathRep::WreathRep(Quiver quiver, int n, std::map<Tuple, std::size_t> dims, std::map<ArrowKey, Matrix> arrows,
                     std::map<SigmaKey, Matrix> sigma)
    : quiver_(std::move(quiver)), n_(n), arrows_(std::move(arrows)), sigma_(std::move(sigma)) {
  if (n_ < 1) throw ValidationError("rank must be at least 1");
  for (auto& [t, d] : dims)
    if (d > 0) dims_.emplace(t, d);
  for (auto it = arrows_.begin(); it != arrows_.end();) {
    if (it->second.is_zero())
      it = arrows_.erase(it);
    else
      ++it;
  }
  for (auto it = sigma_.begin(); it != sigma_.end();) {
    if (!dims_.count(it->first.tuple) && it->second.empty())
      it = sigma_.erase(it);
    else
      ++it;
  }
  validate();
}

std::size_t WreathRep::dim(const Tuple& t) const {
  auto it = dims_.find(t);
  return it == dims_.end() ? 0 : it->second;
}

std::size_t WreathRep::total_dim() const {
  std::size_t total = 0;
  for (const auto& [t, d] : dims_) total += d;
  return total;
}

std::set<Vertex> WreathRep::support() const {
  std::set<Vertex> s;
  for (const auto& [t, d] : dims_) s.insert(t.begin(), t.end());
  return s;
}

const Matrix* WreathRep::arrow(const Tuple& t, int l, const DoubleArrow& a) const {
  auto it = arrows_.find(ArrowKey{t, l, a});
  return it == arrows_.end() ? nullptr : &it->second;
}

Matrix WreathRep::arrow_or_zero(const Tuple& t, int l, const DoubleArrow& a) const {
  if (const Matrix* m = arrow(t, l, a)) return *m;
  return Matrix(dim(replaced(t, l, a.head())), dim(t));
}

const Matrix& WreathRep::sigma(const Tuple& t, int k) const {
  auto it = sigma_.find(SigmaKey{t, k});
  if (it == sigma_.end()) throw std::logic_error("missing transposition at " + tuple_string(t));
  return it->second;
}

Matrix WreathRep::transposition(const Tuple& t, int m, int l) const {
  if (m == l) throw std::logic_error("transposition needs distinct positions");
  if (m > l) std::swap(m, l);
  std::vector<int> word;
  for (int k = m; k < l; ++k) word.push_back(k);
  for (int k = l - 2; k >= m; --k) word.push_back(k);
  Matrix acc = Matrix::identity(dim(t));
  Tuple cur = t;
  for (int k : word) {
    acc = sigma(cur, k) * acc;
    cur = swap_positions(cur, k);
  }
  return acc;
}

void WreathRep::validate() const {
  for (const auto& [t, d] : dims_) {
    if (static_cast<int>(t.size()) != n_) throw ValidationError("component tuple " + tuple_string(t) + " has wrong length");
    for (Vertex v : t) quiver_.require_vertex(v);
  }
  for (const auto& [key, m] : arrows_) {
    const std::string where = key.arrow.name() + " at position " + std::to_string(key.position + 1) + " on " +
                              tuple_string(key.tuple);
    if (!dims_.count(key.tuple)) throw ValidationError("arrow map from a missing component: " + where);
    if (key.position < 0 || key.position >= n_) throw ValidationError("bad position: " + where);
    if (!quiver_.is_arrow(key.arrow.base)) throw ValidationError("unknown arrow: " + where);
    if (key.tuple[static_cast<std::size_t>(key.position)] != key.arrow.tail())
      throw ValidationError("arrow tail does not match the tuple: " + where);
    Tuple target = replaced(key.tuple, key.position, key.arrow.head());
    if (m.rows() != dim(target) || m.cols() != dim(key.tuple)) throw ValidationError("shape mismatch: " + where);
  }
  for (const auto& [key, m] : sigma_) {
    if (!dims_.count(key.tuple)) throw ValidationError("transposition on a missing component " + tuple_string(key.tuple));
    if (key.k < 0 || key.k + 1 >= n_) throw ValidationError("bad transposition index");
  }
  for (const auto& [t, d] : dims_) {
    for (int k = 0; k + 1 < n_; ++k) {
      auto it = sigma_.find(SigmaKey{t, k});
      const std::string where = "s_" + std::to_string(k + 1) + " on " + tuple_string(t);
      if (it == sigma_.end()) throw ValidationError("missing transposition " + where);
      Tuple target = swap_positions(t, k);
      if (it->second.rows() != dim(target) || it->second.cols() != d) throw ValidationError("shape mismatch: " + where);
    }
  }
  // Coxeter relations.
  for (const auto& [t, d] : dims_) {
    for (int k = 0; k + 1 < n_; ++k) {
      Tuple tk = swap_positions(t, k);
      if (!(sigma(tk, k) * sigma(t, k)).is_identity())
        throw ValidationError("s_" + std::to_string(k + 1) + " is not an involution on " + tuple_string(t));
      for (int j = k + 1; j + 1 < n_; ++j) {
        Tuple tj = swap_positions(t, j);
        if (j == k + 1) {
          Tuple a1 = tk, a2 = swap_positions(a1, j);
          Matrix lhs = sigma(a2, k) * sigma(a1, j) * sigma(t, k);
          Tuple b1 = tj, b2 = swap_positions(b1, k);
          Matrix rhs = sigma(b2, j) * sigma(b1, k) * sigma(t, j);
          if (!(lhs == rhs)) throw ValidationError("braid relation fails on " + tuple_string(t));
        } else {
          Matrix lhs = sigma(tk, j) * sigma(t, k);
          Matrix rhs = sigma(tj, k) * sigma(t, j);
          if (!(lhs == rhs)) throw ValidationError("commutation relation fails on " + tuple_string(t));
        }
      }
    }
  }
}

WreathRep to_wreath(const Rep& m) {
  std::map<Tuple, std::size_t> dims;
  for (const auto& [v, d] : m.dims().entries()) dims[{v}] = static_cast<std::size_t>(d);
  std::map<ArrowKey, Matrix> arrows;
  for (const auto& [a, mat] : m.maps()) {
    if (m.dim(a.tail()) == 0 || m.dim(a.head()) == 0) continue;
    arrows[ArrowKey{{a.tail()}, 0, a}] = mat;
  }
  return WreathRep(m.quiver(), 1, std::move(dims), std::move(arrows), {});
}

Rep to_rank1(const WreathRep& v) {
  if (v.rank() != 1) throw ValidationError("module has rank " + std::to_string(v.rank()) + ", expected 1");
  DimVector dims;
  for (const auto& [t, d] : v.components()) dims.set(t[0], static_cast<std::int64_t>(d));
  std::map<DoubleArrow, Matrix> maps;
  for (const auto& [key, mat] : v.arrows()) maps[key.arrow] = mat;
  return Rep(v.quiver(), std::move(dims), std::move(maps));
}

// ------------------------------------------------------------ check_wreath

CheckReport check_wreath(const WreathRep& v, const Weight& lambda, const Scalar& nu) {
  CheckReport report;
  const Quiver& q = v.quiver();
  const int n = v.rank();
  std::map<std::tuple<Tuple, int, int>, Matrix> sigma_cache;
  auto sigma_ml = [&](const Tuple& t, int m, int l) -> const Matrix& {
    auto key = std::make_tuple(t, std::min(m, l), std::max(m, l));
    auto it = sigma_cache.find(key);
    if (it == sigma_cache.end()) it = sigma_cache.emplace(key, v.transposition(t, m, l)).first;
    return it->second;
  };

  // (I): (R_{i_l} − λ_{i_l})_l|_ī = ν Σ_{m≠l, i_m=i_l} σ_{ml}|_ī.
  for (const auto& [t, d] : v.components()) {
    for (int l = 0; l < n; ++l) {
      const Vertex i = t[static_cast<std::size_t>(l)];
      Matrix residual = Matrix::scalar(d, -lambda[i]);
      for (const auto& a : q.arrows_in(i)) {
        const Matrix* down = v.arrow(t, l, {a, true});
        if (!down) continue;
        const Matrix* up = v.arrow(replaced(t, l, a.tail), l, {a, false});
        if (up) residual += *up * *down;
      }
      for (const auto& a : q.arrows_out(i)) {
        const Matrix* up = v.arrow(t, l, {a, false});
        if (!up) continue;
        const Matrix* down = v.arrow(replaced(t, l, a.head), l, {a, true});
        if (down) residual -= *down * *up;
      }
      if (!nu.is_zero())
        for (int m = 0; m < n; ++m)
          if (m != l && t[static_cast<std::size_t>(m)] == i) residual -= sigma_ml(t, m, l) * nu;
      if (!residual.is_zero())
        report.add("I", "tuple " + tuple_string(t) + ", l=" + std::to_string(l + 1), residual);
    }
  }

  // (II): arrows at distinct positions commute up to ±ν σ_{lm}.
  for (const auto& [t, d] : v.components()) {
    for (int l = 0; l < n; ++l) {
      for (int m = l + 1; m < n; ++m) {
        const auto from_l = q.double_arrows_from(t[static_cast<std::size_t>(l)]);
        const auto from_m = q.double_arrows_from(t[static_cast<std::size_t>(m)]);
        for (const auto& a : from_l) {
          for (const auto& b : from_m) {
            Tuple tb = replaced(t, m, b.head());
            Tuple ta = replaced(t, l, a.head());
            Tuple tab = replaced(tb, l, a.head());
            int sign = 0;
            if (!b.star && a == b.dual()) sign = 1;
            if (!a.star && b == a.dual()) sign = -1;
            const Matrix* b1 = v.arrow(t, m, b);
            const Matrix* a1 = b1 ? v.arrow(tb, l, a) : nullptr;
            const Matrix* a2 = v.arrow(t, l, a);
            const Matrix* b2 = a2 ? v.arrow(ta, m, b) : nullptr;
            const bool rhs_zero = sign == 0 || nu.is_zero();
            if (!a1 && !b2 && rhs_zero) continue;
            Matrix residual(v.dim(tab), d);
            if (a1) residual += *a1 * *b1;
            if (b2) residual -= *b2 * *a2;
            if (!rhs_zero) residual -= sigma_ml(t, l, m) * (nu * Scalar(sign));
            if (!residual.is_zero())
              report.add("II", "tuple " + tuple_string(t) + ", l=" + std::to_string(l + 1) + ", m=" +
                                   std::to_string(m + 1) + ", a=" + a.name() + ", b=" + b.name(),
                         residual);
          }
        }
      }
    }
  }

  // S_n-equivariance: s_k a_l = a_{s_k(l)} s_k.
  for (const auto& [t, d] : v.components()) {
    for (int k = 0; k + 1 < n; ++k) {
      const Tuple tk = swap_positions(t, k);
      for (int l = 0; l < n; ++l) {
        const int lk = l == k ? k + 1 : (l == k + 1 ? k : l);
        for (const auto& a : q.double_arrows_from(t[static_cast<std::size_t>(l)])) {
          const Matrix* left = v.arrow(t, l, a);
          const Matrix* right = v.arrow(tk, lk, a);
          if (!left && !right) continue;
          Tuple ta = replaced(t, l, a.head());
          Matrix residual(v.dim(swap_positions(ta, k)), d);
          if (left) residual += v.sigma(ta, k) * *left;
          if (right) residual -= *right * v.sigma(t, k);
          if (!residual.is_zero())
            report.add("equivariance", "tuple " + tuple_string(t) + ", k=" + std::to_string(k + 1) + ", l=" +
                                           std::to_string(l + 1) + ", a=" + a.name(),
                       residual);
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ intertwiners

namespace {

// Row-reduced system grown one equation at a time.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

  void add(std::vector<Scalar> row) {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (row[p].is_zero()) continue;
      Scalar f = row[p];
      const auto& prow = rows_[k];
      for (std::size_t c = 0; c < cols_; ++c)
        if (!prow[c].is_zero()) row[c] -= f * prow[c];
    }
    std::size_t p = 0;
    while (p < cols_ && row[p].is_zero()) ++p;
    if (p == cols_) return;
    Scalar inv = Scalar(1) / row[p];
    for (auto& x : row)
      if (!x.is_zero()) x *= inv;
    for (auto& other : rows_) {
      if (other[p].is_zero()) continue;
      Scalar f = other[p];
      for (std::size_t c = 0; c < cols_; ++c)
        if (!row[c].is_zero()) other[c] -= f * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
  }

  bool full() const { return pivots_.size() == cols_; }

  std::vector<std::vector<Scalar>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Scalar> x(cols_);
      x[f] = Scalar(1);
      for (std::size_t k = 0; k < pivots_.size(); ++k)
        if (!rows_[k][f].is_zero()) x[pivots_[k]] = -rows_[k][f];
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

struct HomLayout {
  std::map<Tuple, std::size_t> offset;
  std::size_t unknowns = 0;
};

// Adds the equations W.f ∘ φ_src − φ_dst ∘ V.f = 0 for one structure map f.
void add_commutation(IncrementalEchelon& sys, const HomLayout& lay, const WreathRep& v, const WreathRep& w,
                     const Tuple& src, const Tuple& dst, const Matrix* vf, const Matrix* wf) {
  const std::size_t v_src = v.dim(src), v_dst = v.dim(dst), w_src = w.dim(src), w_dst = w.dim(dst);
  auto src_off = lay.offset.find(src);
  auto dst_off = lay.offset.find(dst);
  for (std::size_t r = 0; r < w_dst; ++r) {
    for (std::size_t c = 0; c < v_src; ++c) {
      std::vector<Scalar> row(lay.unknowns);
      bool any = false;
      if (wf && src_off != lay.offset.end())
        for (std::size_t s = 0; s < w_src; ++s)
          if (!(*wf)(r, s).is_zero()) {
            row[src_off->second + s * v_src + c] += (*wf)(r, s);
            any = true;
          }
      if (vf && dst_off != lay.offset.end())
        for (std::size_t s = 0; s < v_dst; ++s)
          if (!(*vf)(s, c).is_zero()) {
            row[dst_off->second + r * v_dst + s] -= (*vf)(s, c);
            any = true;
          }
      if (any) sys.add(std::move(row));
    }
  }
}

}  // namespace

std::vector<Hom> intertwiner_space(const WreathRep& v, const WreathRep& w, const Weight& lambda, const Scalar& nu) {
  if (!(v.quiver() == w.quiver()) || v.rank() != w.rank())
    throw ValidationError("intertwiners need modules over the same quiver and rank");
  if (!check_wreath(v, lambda, nu).pass() || !check_wreath(w, lambda, nu).pass())
    throw ValidationError("parameter mismatch: a module does not satisfy the relations for (lambda, nu)");

  HomLayout lay;
  for (const auto& [t, d] : v.components()) {
    std::size_t dw = w.dim(t);
    if (dw == 0) continue;
    lay.offset[t] = lay.unknowns;
    lay.unknowns += d * dw;
  }
  if (lay.unknowns == 0) return {};

  std::set<Tuple> tuples;
  for (const auto& [t, d] : v.components()) tuples.insert(t);
  for (const auto& [t, d] : w.components()) tuples.insert(t);

  IncrementalEchelon sys(lay.unknowns);
  const Quiver& q = v.quiver();
  for (const Tuple& t : tuples) {
    for (int l = 0; l < v.rank() && !sys.full(); ++l) {
      for (const auto& a : q.double_arrows_from(t[static_cast<std::size_t>(l)])) {
        const Matrix* vf = v.dim(t) ? v.arrow(t, l, a) : nullptr;
        const Matrix* wf = w.dim(t) ? w.arrow(t, l, a) : nullptr;
        if (!vf && !wf) continue;
        add_commutation(sys, lay, v, w, t, replaced(t, l, a.head()), vf, wf);
      }
    }
    for (int k = 0; k + 1 < v.rank() && !sys.full(); ++k) {
      const Matrix* vf = v.dim(t) ? &v.sigma(t, k) : nullptr;
      const Matrix* wf = w.dim(t) ? &w.sigma(t, k) : nullptr;
      add_commutation(sys, lay, v, w, t, swap_positions(t, k), vf, wf);
    }
  }

  std::vector<Hom> basis;
  for (const auto& x : sys.kernel()) {
    Hom h;
    for (const auto& [t, off] : lay.offset) {
      const std::size_t dv = v.dim(t), dw = w.dim(t);
      Matrix m(dw, dv);
      for (std::size_t r = 0; r < dw; ++r)
        for (std::size_t c = 0; c < dv; ++c) m(r, c) = x[off + r * dv + c];
      h[t] = std::move(m);
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

IsomorphismResult is_isomorphic(const WreathRep& v, const WreathRep& w, const Weight& lambda, const Scalar& nu,
                                std::uint64_t seed) {
  IsomorphismResult result;
  if (v.components() != w.components()) return result;
  if (v.components().empty()) {
    result.isomorphic = true;
    result.forward = Hom{};
    result.inverse = Hom{};
    return result;
  }
  auto basis = intertwiner_space(v, w, lambda, nu);
  if (basis.empty()) return result;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-7, 7);
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Hom phi;
    for (const auto& [t, d] : v.components()) phi[t] = Matrix(d, d);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      int c = basis.size() == 1 ? 1 : coeff(rng);
      if (c == 0) continue;
      for (auto& [t, m] : phi) m += basis[b].at(t) * Scalar(c);
    }
    Hom inv;
    bool ok = true;
    for (const auto& [t, m] : phi) {
      auto mi = inverse(m);
      if (!mi || !(*mi * m).is_identity() || !(m * *mi).is_identity()) {
        ok = false;
        break;
      }
      inv[t] = std::move(*mi);
    }
    if (ok) {
      result.isomorphic = true;
      result.forward = std::move(phi);
      result.inverse = std::move(inv);
      return result;
    }
    if (basis.size() == 1) break;
  }
  return result;
}

// --------------------------------------------------------------- induction

namespace {

struct Block {
  std::size_t word = 0;
  std::size_t offset = 0;
  std::vector<std::size_t> radices;  // X dimension, then one Y dimension per position
  std::size_t size = 0;
};

std::size_t encode(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& radices) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) idx = idx * radices[k] + digits[k];
  return idx;
}

// Calls f on every digit vector of the mixed radix.
void for_each_digits(const std::vector<std::size_t>& radices, const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (auto r : radices)
    if (r == 0) return;
  std::vector<std::size_t> digits(radices.size(), 0);
  while (true) {
    f(digits);
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < radices[k]) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (digits.empty()) return;
  }
}

void words_rec(std::vector<int>& remaining, std::vector<int>& cur, std::size_t n, std::vector<std::vector<int>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k < remaining.size(); ++k) {
    if (remaining[k] == 0) continue;
    --remaining[k];
    cur.push_back(static_cast<int>(k));
    words_rec(remaining, cur, n, out);
    cur.pop_back();
    ++remaining[k];
  }
}

}  // namespace

WreathRep induce_module(const std::vector<int>& partition, const std::vector<SymmetricIrrep>& x,
                        const std::vector<Rep>& y) {
  const std::size_t r = partition.size();
  if (r == 0 || x.size() != r || y.size() != r) throw ValidationError("partition, diagrams and modules must have equal length");
  int n = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (partition[k] < 1) throw ValidationError("partition parts must be positive");
    if (x[k].shape.size() != partition[k]) throw ValidationError("diagram size does not match its partition part");
    if (!(y[k].quiver() == y.front().quiver())) throw ValidationError("modules live on different quivers");
    n += partition[k];
  }
  const Quiver& q = y.front().quiver();

  std::vector<std::vector<int>> words;
  {
    std::vector<int> remaining = partition, cur;
    words_rec(remaining, cur, static_cast<std::size_t>(n), words);
  }
  std::size_t dim_x = 1;
  std::vector<std::size_t> x_radices;
  for (const auto& xi : x) {
    dim_x *= xi.dim;
    x_radices.push_back(xi.dim);
  }

  std::map<Tuple, std::size_t> dims;
  std::map<std::pair<Tuple, std::size_t>, Block> blocks;
  std::map<Tuple, std::vector<Block>> layout;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    const auto& c = words[wi];
    std::vector<std::vector<Vertex>> choices;
    for (int letter : c) choices.push_back(y[static_cast<std::size_t>(letter)].dims().support());
    std::vector<std::size_t> choice_radices;
    for (const auto& ch : choices) choice_radices.push_back(ch.size());
    for_each_digits(choice_radices, [&](const std::vector<std::size_t>& pick) {
      Tuple t(static_cast<std::size_t>(n));
      Block b;
      b.word = wi;
      b.radices.push_back(dim_x);
      b.size = dim_x;
      for (std::size_t p = 0; p < t.size(); ++p) {
        t[p] = choices[p][pick[p]];
        std::size_t dy = y[static_cast<std::size_t>(c[p])].dim(t[p]);
        b.radices.push_back(dy);
        b.size *= dy;
      }
      b.offset = dims[t];
      dims[t] += b.size;
      blocks[{t, wi}] = b;
      layout[t].push_back(b);
    });
  }

  std::map<ArrowKey, Matrix> arrows;
  std::map<SigmaKey, Matrix> sigma;
  for (const auto& [t, d] : dims) {
    for (int l = 0; l < n; ++l) {
      const std::size_t pos = static_cast<std::size_t>(l) + 1;  // digit index of position l
      for (const auto& a : q.double_arrows_from(t[static_cast<std::size_t>(l)])) {
        Tuple target = replaced(t, l, a.head());
        auto dt = dims.find(target);
        if (dt == dims.end()) continue;
        Matrix m(dt->second, d);
        bool any = false;
        for (const auto& b : layout[t]) {
          const Matrix ym = y[static_cast<std::size_t>(words[b.word][static_cast<std::size_t>(l)])].map(a);
          if (ym.is_zero()) continue;
          const Block& tb = blocks.at({target, b.word});
          for_each_digits(b.radices, [&](const std::vector<std::size_t>& digits) {
            auto out = digits;
            for (std::size_t row = 0; row < ym.rows(); ++row) {
              const Scalar& val = ym(row, digits[pos]);
              if (val.is_zero()) continue;
              out[pos] = row;
              m(tb.offset + encode(out, tb.radices), b.offset + encode(digits, b.radices)) = val;
              any = true;
            }
          });
        }
        if (any) arrows[ArrowKey{t, l, a}] = std::move(m);
      }
    }
    for (int k = 0; k + 1 < n; ++k) {
      Tuple target = swap_positions(t, k);
      Matrix m(dims.at(target), d);
      for (const auto& b : layout[t]) {
        auto c = words[b.word];
        const int letter = c[static_cast<std::size_t>(k)];
        const bool same = letter == c[static_cast<std::size_t>(k) + 1];
        std::swap(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k) + 1]);
        const std::size_t target_word =
            static_cast<std::size_t>(std::find(words.begin(), words.end(), c) - words.begin());
        const Block& tb = blocks.at({target, target_word});
        const Matrix* gen = nullptr;
        if (same) {
          const auto& w = words[b.word];
          const auto occurrence = static_cast<std::size_t>(std::count(w.begin(), w.begin() + k, letter));
          gen = &x[static_cast<std::size_t>(letter)].generators[occurrence];
        }
        for_each_digits(b.radices, [&](const std::vector<std::size_t>& digits) {
          auto out = digits;
          std::swap(out[static_cast<std::size_t>(k) + 1], out[static_cast<std::size_t>(k) + 2]);
          const std::size_t col = b.offset + encode(digits, b.radices);
          if (!gen) {
            m(tb.offset + encode(out, tb.radices), col) = Scalar(1);
            return;
          }
          // Split the X digit into per-letter digits and act on the letter's factor.
          std::vector<std::size_t> xd(r);
          std::size_t rest = digits[0];
          for (std::size_t j = r; j-- > 0;) {
            xd[j] = rest % x_radices[j];
            rest /= x_radices[j];
          }
          const auto li = static_cast<std::size_t>(letter);
          for (std::size_t u = 0; u < gen->rows(); ++u) {
            const Scalar& val = (*gen)(u, xd[li]);
            if (val.is_zero()) continue;
            auto xo = xd;
            xo[li] = u;
            out[0] = encode(xo, x_radices);
            m(tb.offset + encode(out, tb.radices), col) = val;
          }
        });
      }
      sigma[SigmaKey{t, k}] = std::move(m);
    }
  }
  return WreathRep(q, n, std::move(dims), std::move(arrows), std::move(sigma));
}

WreathRep outer_tensor_induce(const std::vector<int>& partition, const std::vector<YoungDiagram>& x,
                              const std::vector<Rep>& y, const Weight& lambda0) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!check_rank1(y[k], lambda0).pass())
      throw ValidationError("module Y_" + std::to_string(k + 1) + " fails its preprojective relations");
  std::vector<SymmetricIrrep> irreps;
  for (const auto& d : x) irreps.push_back(symmetric_group_irrep(d));
  return induce_module(partition, irreps, y);
}

}  // namespace preproj

#include "preproj/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "preproj/matrix.hpp"

namespace preproj {

std::string family_name(Family f) {
  switch (f) {
    case Family::A_inf: return "A_inf";
    case Family::A_plus_inf: return "A_plus_inf";
    case Family::D_inf: return "D_inf";
    case Family::Explicit: return "explicit";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A_inf") return Family::A_inf;
  if (name == "A_plus_inf") return Family::A_plus_inf;
  if (name == "D_inf") return Family::D_inf;
  if (name == "explicit") return Family::Explicit;
  throw ValidationError("unknown quiver family '" + name + "'");
}

std::string Arrow::name() const {
  std::string s = "a_" + std::to_string(tail) + "_" + std::to_string(head);
  if (index > 0) s += "_" + std::to_string(index);
  return s;
}

std::string DoubleArrow::name() const {
  std::string s = base.name();
  return star ? "astar" + s.substr(1) : s;
}

DoubleArrow DoubleArrow::parse(const std::string& name) {
  DoubleArrow d;
  std::string rest;
  if (name.rfind("astar_", 0) == 0) {
    d.star = true;
    rest = name.substr(6);
  } else if (name.rfind("a_", 0) == 0) {
    rest = name.substr(2);
  } else {
    throw ValidationError("malformed arrow name '" + name + "'");
  }
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  // Vertex ids may be negative, so split on '_' only.
  while (pos <= rest.size()) {
    auto next = rest.find('_', pos);
    std::string tok = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("malformed arrow name '" + name + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) throw ValidationError("malformed arrow name '" + name + "'");
  d.base.tail = parts[0];
  d.base.head = parts[1];
  d.base.index = parts.size() == 3 ? static_cast<int>(parts[2]) : 0;
  return d;
}

// ---------------------------------------------------------------- DimVector

DimVector::DimVector(std::initializer_list<std::pair<const Vertex, std::int64_t>> init) {
  for (const auto& [v, x] : init) add(v, x);
}

DimVector DimVector::interval(Vertex s, Vertex r) {
  DimVector d;
  for (Vertex v = s; v <= r; ++v) d.set(v, 1);
  return d;
}

std::int64_t DimVector::operator[](Vertex v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

void DimVector::set(Vertex v, std::int64_t value) {
  if (value == 0)
    entries_.erase(v);
  else
    entries_[v] = value;
}

std::vector<Vertex> DimVector::support() const {
  std::vector<Vertex> s;
  for (const auto& [v, x] : entries_) s.push_back(v);
  return s;
}

bool DimVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

bool DimVector::is_multiplicity_free() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
}

std::int64_t DimVector::height() const {
  std::int64_t h = 0;
  for (const auto& [v, x] : entries_) h += x;
  return h;
}

DimVector& DimVector::operator+=(const DimVector& o) {
  for (const auto& [v, x] : o.entries_) add(v, x);
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  for (const auto& [v, x] : o.entries_) add(v, -x);
  return *this;
}

DimVector DimVector::operator-() const { return scaled(-1); }

DimVector DimVector::scaled(std::int64_t k) const {
  DimVector d;
  for (const auto& [v, x] : entries_) d.set(v, k * x);
  return d;
}

bool DimVector::dominated_by(const DimVector& b) const {
  for (const auto& [v, x] : entries_)
    if (x > b[v]) return false;
  for (const auto& [v, x] : b.entries_)
    if (x < 0 && (*this)[v] > x) return false;
  return true;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, x] : entries_) {
    if (!first) os << ", ";
    os << v << ':' << x;
    first = false;
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------------------- Quiver

Quiver Quiver::family(Family f) {
  if (f == Family::Explicit) throw ValidationError("explicit quivers need vertices and arrows");
  return Quiver(f);
}

Quiver Quiver::explicit_quiver(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& arrows) {
  auto data = std::make_shared<ExplicitData>();
  for (Vertex v : vertices)
    if (!data->vertex_set.insert(v).second) throw ValidationError("duplicate vertex id " + std::to_string(v));
  data->vertices = std::move(vertices);
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (const auto& [t, h] : arrows) {
    if (!data->vertex_set.count(t) || !data->vertex_set.count(h))
      throw ValidationError("arrow endpoint is not a vertex: " + std::to_string(t) + "->" + std::to_string(h));
    Arrow a{t, h, seen[{t, h}]++};
    data->arrows.push_back(a);
    data->out[t].push_back(a);
    data->in[h].push_back(a);
  }
  Quiver q(Family::Explicit);
  q.data_ = std::move(data);
  return q;
}

bool Quiver::is_vertex(Vertex v) const {
  switch (family_) {
    case Family::A_inf: return true;
    case Family::A_plus_inf:
    case Family::D_inf: return v >= 0;
    case Family::Explicit: return data_->vertex_set.count(v) > 0;
  }
  return false;
}

void Quiver::require_vertex(Vertex v) const {
  if (!is_vertex(v)) throw ValidationError("not a vertex of the " + family_name(family_) + " quiver: " + std::to_string(v));
}

std::vector<Arrow> Quiver::arrows_out(Vertex v) const {
  if (!is_vertex(v)) return {};
  switch (family_) {
    case Family::A_inf:
    case Family::A_plus_inf: return {Arrow{v, v + 1, 0}};
    case Family::D_inf:
      if (v <= 1) return {Arrow{v, 2, 0}};
      return {Arrow{v, v + 1, 0}};
    case Family::Explicit: {
      auto it = data_->out.find(v);
      return it == data_->out.end() ? std::vector<Arrow>{} : it->second;
    }
  }
  return {};
}

std::vector<Arrow> Quiver::arrows_in(Vertex v) const {
  if (!is_vertex(v)) return {};
  switch (family_) {
    case Family::A_inf: return {Arrow{v - 1, v, 0}};
    case Family::A_plus_inf:
      if (v == 0) return {};
      return {Arrow{v - 1, v, 0}};
    case Family::D_inf:
      if (v <= 1) return {};
      if (v == 2) return {Arrow{0, 2, 0}, Arrow{1, 2, 0}};
      return {Arrow{v - 1, v, 0}};
    case Family::Explicit: {
      auto it = data_->in.find(v);
      return it == data_->in.end() ? std::vector<Arrow>{} : it->second;
    }
  }
  return {};
}

std::vector<DoubleArrow> Quiver::double_arrows_from(Vertex v) const {
  std::vector<DoubleArrow> out;
  for (const auto& a : arrows_out(v)) out.push_back({a, false});
  for (const auto& a : arrows_in(v)) out.push_back({a, true});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Quiver::neighbors(Vertex v) const {
  std::set<Vertex> n;
  for (const auto& a : arrows_out(v))
    if (a.head != v) n.insert(a.head);
  for (const auto& a : arrows_in(v))
    if (a.tail != v) n.insert(a.tail);
  return {n.begin(), n.end()};
}

bool Quiver::has_loop(Vertex v) const {
  for (const auto& a : arrows_out(v))
    if (a.head == v) return true;
  return false;
}

bool Quiver::is_arrow(const Arrow& a) const {
  auto out = arrows_out(a.tail);
  return std::find(out.begin(), out.end(), a) != out.end();
}

std::int64_t Quiver::cartan(Vertex i, Vertex j) const {
  std::int64_t value = i == j ? 2 : 0;
  for (const auto& a : arrows_out(i))
    if (a.head == j) value -= 1;
  for (const auto& a : arrows_in(i))
    if (a.tail == j) value -= 1;
  return value;
}

std::vector<Vertex> Quiver::canonical_vertices(std::size_t k) const {
  std::vector<Vertex> out;
  if (family_ == Family::Explicit) {
    if (k > data_->vertices.size()) throw ValidationError("explicit quiver has fewer than k vertices");
    out.assign(data_->vertices.begin(), data_->vertices.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }
  for (std::size_t v = 0; v < k; ++v) out.push_back(static_cast<Vertex>(v));
  return out;
}

const std::vector<Vertex>& Quiver::explicit_vertices() const {
  if (family_ != Family::Explicit) throw ValidationError("infinite quiver has no finite vertex list");
  return data_->vertices;
}

std::vector<Arrow> Quiver::explicit_arrows() const {
  if (family_ != Family::Explicit) throw ValidationError("infinite quiver has no finite arrow list");
  return data_->arrows;
}

std::vector<Arrow> Quiver::arrows_within(const std::set<Vertex>& window) const {
  std::vector<Arrow> out;
  for (Vertex v : window)
    for (const auto& a : arrows_out(v))
      if (window.count(a.head)) out.push_back(a);
  return out;
}

Quiver Quiver::full_subquiver(const std::set<Vertex>& window) const {
  for (Vertex v : window) require_vertex(v);
  std::vector<std::pair<Vertex, Vertex>> arrows;
  for (const auto& a : arrows_within(window)) arrows.emplace_back(a.tail, a.head);
  return explicit_quiver({window.begin(), window.end()}, arrows);
}

Quiver Quiver::with_reversed(const Arrow& target) const {
  if (family_ != Family::Explicit) throw ValidationError("reorientation needs an explicit quiver; take a window first");
  std::vector<std::pair<Vertex, Vertex>> arrows;
  bool found = false;
  for (const auto& a : data_->arrows) {
    if (!found && a == target) {
      arrows.emplace_back(a.head, a.tail);
      found = true;
    } else {
      arrows.emplace_back(a.tail, a.head);
    }
  }
  if (!found) throw ValidationError("arrow " + target.name() + " not in quiver");
  return explicit_quiver(data_->vertices, arrows);
}

bool Quiver::is_connected(const std::set<Vertex>& window) const {
  if (window.empty()) return true;
  std::set<Vertex> seen{*window.begin()};
  std::queue<Vertex> todo;
  todo.push(*window.begin());
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (Vertex w : neighbors(v))
      if (window.count(w) && seen.insert(w).second) todo.push(w);
  }
  return seen.size() == window.size();
}

std::set<Vertex> Quiver::connected_hull(const std::set<Vertex>& vertices) const {
  if (vertices.empty()) return {};
  for (Vertex v : vertices) require_vertex(v);
  // A connected candidate region, then prune leaves that are not required.
  std::set<Vertex> region;
  Vertex lo = *vertices.begin();
  Vertex hi = *vertices.rbegin();
  switch (family_) {
    case Family::A_inf:
    case Family::A_plus_inf:
      for (Vertex v = lo; v <= hi; ++v) region.insert(v);
      break;
    case Family::D_inf:
      if (lo <= 1) lo = 0;
      for (Vertex v = lo; v <= std::max<Vertex>(hi, 2); ++v) region.insert(v);
      break;
    case Family::Explicit: {
      // Component of the first vertex.
      std::queue<Vertex> todo;
      todo.push(lo);
      region.insert(lo);
      while (!todo.empty()) {
        Vertex v = todo.front();
        todo.pop();
        for (Vertex w : neighbors(v))
          if (region.insert(w).second) todo.push(w);
      }
      for (Vertex v : vertices)
        if (!region.count(v)) return region;  // disconnected: caller checks
      break;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = region.begin(); it != region.end();) {
      Vertex v = *it;
      if (!vertices.count(v)) {
        std::size_t degree = 0;
        for (Vertex w : neighbors(v))
          if (region.count(w)) ++degree;
        if (degree <= 1) {
          it = region.erase(it);
          changed = true;
          continue;
        }
      }
      ++it;
    }
  }
  return region;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.family_ != b.family_) return false;
  if (a.family_ != Family::Explicit) return true;
  return a.data_ == b.data_ || (a.data_->vertices == b.data_->vertices && a.data_->arrows == b.data_->arrows);
}

// -------------------------------------------------------------------- forms

std::int64_t ringel_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
  std::int64_t value = 0;
  for (const auto& [v, x] : alpha.entries()) {
    value += x * beta[v];
    for (const auto& a : q.arrows_out(v)) value -= x * beta[a.head];
  }
  return value;
}

std::int64_t symmetrized_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
  return ringel_form(q, alpha, beta) + ringel_form(q, beta, alpha);
}

std::vector<std::int64_t> delta_prefix(const Quiver& q, std::size_t k) {
  if (k == 0) throw ValidationError("delta_prefix needs k >= 1");
  std::vector<std::int64_t> d;
  switch (q.kind()) {
    case Family::A_inf:
      // Bounded kernel vector: every GL(1) character is one-dimensional.
      d.assign(k, 1);
      return d;
    case Family::A_plus_inf:
      for (std::size_t v = 0; v < k; ++v) d.push_back(static_cast<std::int64_t>(v) + 1);
      return d;
    case Family::D_inf: {
      // Fork rows force δ_0 = δ_1 = δ_2 / 2; spine rows 2δ_i = δ_{i-1} + δ_{i+1}.
      std::vector<std::int64_t> full{1, 1, 2};
      while (full.size() < k) {
        std::size_t i = full.size() - 1;
        std::int64_t prev = i == 2 ? full[0] + full[1] : full[i - 1];
        full.push_back(2 * full[i] - prev);
      }
      full.resize(k);
      return full;
    }
    case Family::Explicit: {
      const auto& verts = q.explicit_vertices();
      const std::size_t n = verts.size();
      Matrix cartan(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cartan(r, c) = Scalar(static_cast<long>(q.cartan(verts[r], verts[c])));
      auto ker = nullspace(cartan, n);
      if (ker.dim() != 1) throw DomainError("Cartan kernel is not one-dimensional");
      mpz_class lcm = 1;
      for (std::size_t r = 0; r < n; ++r) lcm = ::lcm(lcm, ker.basis(r, 0).re().get_den());
      std::vector<mpz_class> ints;
      mpz_class g = 0;
      for (std::size_t r = 0; r < n; ++r) {
        mpz_class x = ker.basis(r, 0).re().get_num() * (lcm / ker.basis(r, 0).re().get_den());
        ints.push_back(x);
        g = gcd(g, x);
      }
      if (ints.front() < 0) g = -g;
      for (auto& x : ints) {
        x /= g;
        if (x <= 0) throw DomainError("Cartan kernel has no positive generator");
      }
      if (k > n) throw ValidationError("explicit quiver has fewer than k vertices");
      for (std::size_t r = 0; r < k; ++r) d.push_back(ints[r].get_si());
      return d;
    }
  }
  return d;
}

}  // namespace preproj

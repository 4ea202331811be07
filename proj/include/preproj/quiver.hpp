#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "preproj/scalar.hpp"

namespace preproj {

using Vertex = std::int64_t;

enum class Family { A_inf, A_plus_inf, D_inf, Explicit };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Arrow of Q. `index` distinguishes parallel arrows with the same endpoints.
struct Arrow {
  Vertex tail = 0;
  Vertex head = 0;
  int index = 0;

  std::string name() const;
  auto operator<=>(const Arrow&) const = default;
};

/// Arrow of the double quiver: either a ∈ Q or its reverse a*.
struct DoubleArrow {
  Arrow base;
  bool star = false;

  Vertex tail() const { return star ? base.head : base.tail; }
  Vertex head() const { return star ? base.tail : base.head; }
  DoubleArrow dual() const { return {base, !star}; }
  std::string name() const;
  static DoubleArrow parse(const std::string& name);
  auto operator<=>(const DoubleArrow&) const = default;
};

/// Finitely supported integer vector on vertices. Entries are usually
/// nonnegative (dimension vectors); reflections may produce negative ones.
class DimVector {
 public:
  DimVector() = default;
  DimVector(std::initializer_list<std::pair<const Vertex, std::int64_t>> init);
  static DimVector unit(Vertex v) { return DimVector{{v, 1}}; }
  /// Ones on the interval [s, r].
  static DimVector interval(Vertex s, Vertex r);

  std::int64_t operator[](Vertex v) const;
  void set(Vertex v, std::int64_t value);
  void add(Vertex v, std::int64_t delta) { set(v, (*this)[v] + delta); }

  const std::map<Vertex, std::int64_t>& entries() const { return entries_; }
  std::vector<Vertex> support() const;
  bool is_zero() const { return entries_.empty(); }
  bool is_nonnegative() const;
  bool is_multiplicity_free() const;
  std::int64_t height() const;

  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  DimVector operator-() const;
  DimVector scaled(std::int64_t k) const;

  /// a ≤ b componentwise.
  bool dominated_by(const DimVector& b) const;

  auto operator<=>(const DimVector&) const = default;
  std::string to_string() const;

 private:
  std::map<Vertex, std::int64_t> entries_;
};

/// One of the infinite affine families, or an explicit finite quiver.
///
/// Canonical conventions:
///   A+∞: vertices 0,1,2,… with arrows i→i+1.
///   A∞ : vertices ℤ with arrows i→i+1.
///   D∞ : vertices 0,1,2,… with arrows 0→2, 1→2 and i→i+1 for i ≥ 2.
class Quiver {
 public:
  static Quiver a_infinity() { return Quiver(Family::A_inf); }
  static Quiver a_plus_infinity() { return Quiver(Family::A_plus_inf); }
  static Quiver d_infinity() { return Quiver(Family::D_inf); }
  static Quiver family(Family f);
  /// Arrows are given as (tail, head) pairs; parallel arrows get increasing indices.
  static Quiver explicit_quiver(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& arrows);

  Family kind() const { return family_; }
  bool is_type_a() const { return family_ == Family::A_inf || family_ == Family::A_plus_inf; }
  bool is_vertex(Vertex v) const;
  void require_vertex(Vertex v) const;

  std::vector<Arrow> arrows_out(Vertex v) const;
  std::vector<Arrow> arrows_in(Vertex v) const;
  /// Arrows of Q̄ with tail v.
  std::vector<DoubleArrow> double_arrows_from(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  bool has_loop(Vertex v) const;
  bool is_arrow(const Arrow& a) const;

  /// Entry (ε_i, ε_j) of the Cartan matrix.
  std::int64_t cartan(Vertex i, Vertex j) const;

  /// First k vertices in canonical order (0,1,2,… for the families; the
  /// listed order for explicit quivers).
  std::vector<Vertex> canonical_vertices(std::size_t k) const;
  /// All vertices of an explicit quiver.
  const std::vector<Vertex>& explicit_vertices() const;
  std::vector<Arrow> explicit_arrows() const;

  /// Arrows of Q with both endpoints in `window`.
  std::vector<Arrow> arrows_within(const std::set<Vertex>& window) const;
  /// The full subquiver on `window`, as an explicit quiver.
  Quiver full_subquiver(const std::set<Vertex>& window) const;
  /// Explicit quiver with the given arrow reversed.
  Quiver with_reversed(const Arrow& a) const;

  bool is_connected(const std::set<Vertex>& window) const;
  /// Smallest connected vertex set containing `vertices` (tree quivers),
  /// or a connected superset for explicit quivers with cycles.
  std::set<Vertex> connected_hull(const std::set<Vertex>& vertices) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  explicit Quiver(Family f) : family_(f) {}

  struct ExplicitData {
    std::vector<Vertex> vertices;
    std::set<Vertex> vertex_set;
    std::vector<Arrow> arrows;
    std::map<Vertex, std::vector<Arrow>> out, in;
  };

  Family family_;
  std::shared_ptr<const ExplicitData> data_;
};

/// ⟨α,β⟩ = Σ α_i β_i − Σ_a α_{t(a)} β_{h(a)}.
std::int64_t ringel_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);
/// (α,β) = ⟨α,β⟩ + ⟨β,α⟩.
std::int64_t symmetrized_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

/// First k coordinates of the kernel vector δ of the Cartan matrix, normalized
/// to minimal positive integers.
std::vector<std::int64_t> delta_prefix(const Quiver& q, std::size_t k);

}  // namespace preproj

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "preproj/matrix.hpp"
#include "preproj/quiver.hpp"
#include "preproj/weight.hpp"
#include "preproj/young.hpp"

namespace preproj {

struct Violation {
  std::string relation;  // "shape", "preprojective", "I", "II", "equivariance", ...
  std::string location;
  Matrix residual;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void add(std::string relation, std::string location, Matrix residual = {}) {
    violations.push_back({std::move(relation), std::move(location), std::move(residual)});
  }
};

/// Finite-dimensional representation of the double quiver Q̄ (rank 1).
///
/// Only support vertices carry spaces; maps touching a zero space are
/// implicit zeros. Matrix shapes are not enforced here: check_rank1 reports
/// mismatches.
class Rep {
 public:
  Rep() = default;
  Rep(Quiver quiver, DimVector dims, std::map<DoubleArrow, Matrix> maps);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(Vertex v) const { return static_cast<std::size_t>(dims_[v]); }
  std::size_t total_dim() const { return static_cast<std::size_t>(dims_.height()); }
  const std::map<DoubleArrow, Matrix>& maps() const { return maps_; }
  /// Matrix of a, or the zero matrix of shape dim(h(a)) × dim(t(a)).
  Matrix map(const DoubleArrow& a) const;

 private:
  Quiver quiver_ = Quiver::a_plus_infinity();
  DimVector dims_;
  std::map<DoubleArrow, Matrix> maps_;
};

/// Σ_{h(a)=i} M_a M_{a*} − Σ_{t(a)=i} M_{a*} M_a = λ_i Id at every support vertex.
CheckReport check_rank1(const Rep& m, const Weight& lambda);

using Tuple = std::vector<Vertex>;

std::string tuple_string(const Tuple& t);

struct ArrowKey {
  Tuple tuple;
  int position = 0;  // 0-based l
  DoubleArrow arrow;
  auto operator<=>(const ArrowKey&) const = default;
};

struct SigmaKey {
  Tuple tuple;
  int k = 0;  // adjacent transposition swapping positions k, k+1 (0-based)
  auto operator<=>(const SigmaKey&) const = default;
};

/// Tuple with positions k and k+1 exchanged.
Tuple swap_positions(Tuple t, int k);

/// Finite-dimensional module over the rank-n algebra, stored componentwise:
/// V = ⊕ V_ī over tuples ī ∈ Iⁿ, arrow maps a_l|_ī : V_ī → V_{a_l(ī)} and
/// adjacent transpositions s_k|_ī : V_ī → V_{s_k(ī)}.
///
/// Construction validates shapes and the Coxeter relations of S_n.
class WreathRep {
 public:
  WreathRep() = default;
  WreathRep(Quiver quiver, int n, std::map<Tuple, std::size_t> dims, std::map<ArrowKey, Matrix> arrows,
            std::map<SigmaKey, Matrix> sigma);

  const Quiver& quiver() const { return quiver_; }
  int rank() const { return n_; }
  const std::map<Tuple, std::size_t>& components() const { return dims_; }
  std::size_t dim(const Tuple& t) const;
  std::size_t total_dim() const;
  std::set<Vertex> support() const;
  const std::map<ArrowKey, Matrix>& arrows() const { return arrows_; }
  const std::map<SigmaKey, Matrix>& sigmas() const { return sigma_; }

  /// a_l|_ī, or nullptr when it is zero (not stored).
  const Matrix* arrow(const Tuple& t, int l, const DoubleArrow& a) const;
  Matrix arrow_or_zero(const Tuple& t, int l, const DoubleArrow& a) const;
  const Matrix& sigma(const Tuple& t, int k) const;
  /// σ_{ml}|_ī : V_ī → V_{σ_{ml}(ī)} for any m ≠ l, composed from adjacent ones.
  Matrix transposition(const Tuple& t, int m, int l) const;

 private:
  void validate() const;

  Quiver quiver_ = Quiver::a_plus_infinity();
  int n_ = 1;
  std::map<Tuple, std::size_t> dims_;
  std::map<ArrowKey, Matrix> arrows_;
  std::map<SigmaKey, Matrix> sigma_;
};

WreathRep to_wreath(const Rep& m);
Rep to_rank1(const WreathRep& v);

/// Relations (I) and (II) of the rank-n algebra with parameters (λ, ν), plus
/// S_n-equivariance of the arrow action. Exact.
CheckReport check_wreath(const WreathRep& v, const Weight& lambda, const Scalar& nu);

/// Module map V → W given componentwise.
using Hom = std::map<Tuple, Matrix>;

/// Basis of all maps commuting with every arrow and every transposition.
/// Both modules must satisfy the relations for (λ, ν).
std::vector<Hom> intertwiner_space(const WreathRep& v, const WreathRep& w, const Weight& lambda, const Scalar& nu);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<Hom> forward;
  std::optional<Hom> inverse;
};

/// Tries seeded random integer combinations of the intertwiner basis and
/// certifies the first invertible one by an explicit inverse.
IsomorphismResult is_isomorphic(const WreathRep& v, const WreathRep& w, const Weight& lambda, const Scalar& nu,
                                std::uint64_t seed = 0x5eed);

/// Ind_{S_{n⃗}}^{S_n}(X ⊗ Y_1^{⊗n_1} ⊗ ⋯ ⊗ Y_r^{⊗n_r}) with arrows acting
/// factorwise. No relation check on the inputs.
WreathRep induce_module(const std::vector<int>& partition, const std::vector<SymmetricIrrep>& x,
                        const std::vector<Rep>& y);

/// Same construction over (λ0, ν = 0); every Y_l must pass check_rank1(λ0).
WreathRep outer_tensor_induce(const std::vector<int>& partition, const std::vector<YoungDiagram>& x,
                              const std::vector<Rep>& y, const Weight& lambda0);

}  // namespace preproj

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "preproj/quiver.hpp"
#include "preproj/weight.hpp"

namespace preproj {

/// p(α) = 1 + Σ_a α_{t(a)} α_{h(a)} − Σ_i α_i².
std::int64_t p_value(const Quiver& q, const DimVector& alpha);

enum class SimpleReason { Simple, NotARoot, PairingNonzero, Blocked };

std::string reason_name(SimpleReason r);

struct EdgeScalar {
  Arrow arrow;
  Scalar value;  // a* when a = 1
};

struct SimpleCertificate {
  DimVector alpha;
  std::set<Vertex> window;  // connected hull of supp α
  bool exists = false;
  SimpleReason reason = SimpleReason::NotARoot;
  Scalar pairing;                       // λ·α
  std::vector<DimVector> decomposition;  // blocking decomposition when reason == Blocked
  std::vector<EdgeScalar> edge_scalars;  // positive verdicts on type A intervals
};

/// Decides whether a simple module of dimension α exists: α is a positive root
/// of its support window, λ·α = 0, and α is not a sum of two or more positive
/// roots each orthogonal to λ.
SimpleCertificate exists_simple(const Quiver& q, const Weight& lambda, const DimVector& alpha);

/// Type A: Σ_{s..r} λ = 0 and Σ_{k..r} λ ≠ 0 for s < k ≤ r.
bool interval_conditions(const Quiver& q, const Weight& lambda, Vertex s, Vertex r);

/// Positive certificates for every positive root of the window, in root order.
std::vector<SimpleCertificate> enumerate_simples(const Quiver& q, const Weight& lambda, const std::set<Vertex>& window,
                                                 unsigned jobs = 1);

}  // namespace preproj

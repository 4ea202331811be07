#include "preproj/classification.hpp"

#include <algorithm>
#include <future>

#include "preproj/roots.hpp"

namespace preproj {

std::int64_t p_value(const Quiver& q, const DimVector& alpha) {
  std::int64_t p = 1;
  std::set<Vertex> supp;
  for (const auto& [v, x] : alpha.entries()) {
    p -= x * x;
    supp.insert(v);
  }
  for (const auto& a : q.arrows_within(supp)) p += alpha[a.tail] * alpha[a.head];
  return p;
}

std::string reason_name(SimpleReason r) {
  switch (r) {
    case SimpleReason::Simple: return "simple";
    case SimpleReason::NotARoot: return "not_a_root";
    case SimpleReason::PairingNonzero: return "pairing_nonzero";
    case SimpleReason::Blocked: return "blocking_decomposition";
  }
  return "?";
}

namespace {

// Writes `rest` as a sum of parts[k..]; failures are memoized.
bool decompose(const std::vector<DimVector>& parts, std::size_t k, const DimVector& rest,
               std::vector<DimVector>& used, std::set<std::pair<std::size_t, DimVector>>& dead) {
  if (rest.is_zero()) return true;
  if (dead.count({k, rest})) return false;
  for (std::size_t j = k; j < parts.size(); ++j) {
    if (!parts[j].dominated_by(rest)) continue;
    used.push_back(parts[j]);
    if (decompose(parts, j, rest - parts[j], used, dead)) return true;
    used.pop_back();
  }
  dead.insert({k, rest});
  return false;
}

}  // namespace

SimpleCertificate exists_simple(const Quiver& q, const Weight& lambda, const DimVector& alpha) {
  if (alpha.is_zero()) throw ValidationError("dimension vector must be nonzero");
  if (!alpha.is_nonnegative()) throw ValidationError("dimension vector must be nonnegative");
  SimpleCertificate cert;
  cert.alpha = alpha;
  auto supp = alpha.support();
  for (Vertex v : supp) q.require_vertex(v);
  cert.window = q.connected_hull({supp.begin(), supp.end()});
  cert.pairing = weight_dot(lambda, alpha);

  const auto roots = enumerate_positive_roots(q, cert.window);
  if (!std::binary_search(roots.begin(), roots.end(), alpha, [](const DimVector& a, const DimVector& b) {
        return a.height() != b.height() ? a.height() < b.height() : a < b;
      })) {
    cert.reason = SimpleReason::NotARoot;
    return cert;
  }
  if (!cert.pairing.is_zero()) {
    cert.reason = SimpleReason::PairingNonzero;
    return cert;
  }
  std::vector<DimVector> parts;
  for (const auto& beta : roots)
    if (beta != alpha && beta.dominated_by(alpha) && weight_dot(lambda, beta).is_zero()) parts.push_back(beta);
  // Larger roots first keeps the search shallow.
  std::reverse(parts.begin(), parts.end());
  std::vector<DimVector> used;
  std::set<std::pair<std::size_t, DimVector>> dead;
  if (decompose(parts, 0, alpha, used, dead)) {
    cert.reason = SimpleReason::Blocked;
    cert.decomposition = std::move(used);
    return cert;
  }
  cert.exists = true;
  cert.reason = SimpleReason::Simple;
  if (q.is_type_a() && supp.size() > 1) {
    // a = 1 on each edge k → k+1 forces a* = −Σ_{i≤k} λ_i.
    Scalar acc;
    for (Vertex k = supp.front(); k < supp.back(); ++k) {
      acc += lambda[k];
      cert.edge_scalars.push_back({Arrow{k, k + 1, 0}, -acc});
    }
  }
  return cert;
}

bool interval_conditions(const Quiver& q, const Weight& lambda, Vertex s, Vertex r) {
  if (!q.is_type_a()) throw ValidationError("interval conditions need a type-A quiver");
  if (s > r) throw ValidationError("interval needs s <= r");
  q.require_vertex(s);
  q.require_vertex(r);
  Scalar tail;
  for (Vertex k = r; k > s; --k) {
    tail += lambda[k];
    if (tail.is_zero()) return false;
  }
  return (tail + lambda[s]).is_zero();
}

std::vector<SimpleCertificate> enumerate_simples(const Quiver& q, const Weight& lambda, const std::set<Vertex>& window,
                                                 unsigned jobs) {
  const auto roots = enumerate_positive_roots(q, window);
  std::vector<SimpleCertificate> certs(roots.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(roots.size())));
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < roots.size(); k += jobs) certs[k] = exists_simple(q, lambda, roots[k]);
    }));
  for (auto& f : workers) f.get();
  std::vector<SimpleCertificate> out;
  for (auto& c : certs)
    if (c.exists) out.push_back(std::move(c));
  return out;
}

}  // namespace preproj

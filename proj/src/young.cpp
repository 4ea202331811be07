#include "preproj/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace preproj {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] <= 0) throw ValidationError("Young diagram rows must be positive");
    if (k > 0 && rows_[k] > rows_[k - 1]) throw ValidationError("Young diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(rows_[k]);
  }
  return s + ")";
}

std::optional<std::pair<int, int>> is_rectangular(const YoungDiagram& d) {
  const auto& r = d.rows();
  if (r.empty()) return std::nullopt;
  if (std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) != r.end()) return std::nullopt;
  return std::make_pair(d.num_rows(), d.num_cols());
}

std::int64_t content_sum(const YoungDiagram& d) {
  std::int64_t sum = 0;
  for (int row = 0; row < d.num_rows(); ++row)
    for (int col = 0; col < d.rows()[row]; ++col) sum += col - row;
  return sum;
}

std::int64_t hook_length_dimension(const YoungDiagram& d) {
  const int n = d.size();
  std::vector<int> col_len(d.num_cols(), 0);
  for (int r : d.rows())
    for (int c = 0; c < r; ++c) ++col_len[c];
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (int row = 0; row < d.num_rows(); ++row)
    for (int col = 0; col < d.rows()[row]; ++col) den *= (d.rows()[row] - col - 1) + (col_len[col] - row - 1) + 1;
  return mpz_class(num / den).get_si();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

struct Box {
  int row, col;
};

// Standard tableaux as box positions of the entries 0..n-1.
void tableaux_rec(const YoungDiagram& d, std::vector<int>& filled, std::vector<Box>& cur,
                  std::vector<std::vector<Box>>& out) {
  const int n = d.size();
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int row = 0; row < d.num_rows(); ++row) {
    int col = filled[row];
    if (col >= d.rows()[row]) continue;
    if (row > 0 && filled[row - 1] <= col) continue;
    ++filled[row];
    cur.push_back({row, col});
    tableaux_rec(d, filled, cur, out);
    cur.pop_back();
    --filled[row];
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  if (n == 0) return {YoungDiagram()};
  partitions_rec(n, n, cur, out);
  return out;
}

SymmetricIrrep symmetric_group_irrep(const YoungDiagram& d) {
  const int n = d.size();
  if (n > kMaxIrrepSize)
    throw DomainError("Young diagram of size " + std::to_string(n) + " exceeds the supported size " +
                      std::to_string(kMaxIrrepSize));
  std::vector<std::vector<Box>> tableaux;
  std::vector<int> filled(d.num_rows(), 0);
  std::vector<Box> cur;
  tableaux_rec(d, filled, cur, tableaux);

  std::map<std::vector<std::pair<int, int>>, std::size_t> index;
  auto key = [](const std::vector<Box>& t) {
    std::vector<std::pair<int, int>> k;
    for (const auto& b : t) k.emplace_back(b.row, b.col);
    return k;
  };
  for (std::size_t t = 0; t < tableaux.size(); ++t) index[key(tableaux[t])] = t;

  SymmetricIrrep irrep;
  irrep.shape = d;
  irrep.dim = tableaux.size();
  for (int k = 0; k + 1 < n; ++k) {
    Matrix g(irrep.dim, irrep.dim);
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
      const Box& a = tableaux[t][k];
      const Box& b = tableaux[t][k + 1];
      if (a.row == b.row) {
        g(t, t) = Scalar(1);
      } else if (a.col == b.col) {
        g(t, t) = Scalar(-1);
      } else {
        // Axial distance ρ = c(k+1) − c(k); s_k v_T = v_T/ρ + (1 + 1/ρ) v_{s_k T}.
        Rational rho((b.col - b.row) - (a.col - a.row));
        Rational inv = 1 / rho;
        auto swapped = tableaux[t];
        std::swap(swapped[k], swapped[k + 1]);
        std::size_t u = index.at(key(swapped));
        g(t, t) = Scalar(inv);
        g(u, t) = Scalar(Rational(1 + inv));
      }
    }
    irrep.generators.push_back(std::move(g));
  }
  return irrep;
}

}  // namespace preproj

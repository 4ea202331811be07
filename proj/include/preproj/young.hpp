#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preproj/matrix.hpp"

namespace preproj {

/// Integer partition drawn as a Young diagram (row lengths, weakly decreasing).
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }

  std::string to_string() const;
  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> rows_;
};

/// (a, b) = (number of rows, number of columns) when every row has the same length.
std::optional<std::pair<int, int>> is_rectangular(const YoungDiagram& d);

/// Σ over boxes of (column − row), 0-indexed.
std::int64_t content_sum(const YoungDiagram& d);

std::int64_t hook_length_dimension(const YoungDiagram& d);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<YoungDiagram> partitions_of(int n);

/// Irreducible S_n-module in Young's seminormal form. generators[k] is the
/// matrix of the adjacent transposition swapping k and k+1 (0-based).
struct SymmetricIrrep {
  YoungDiagram shape;
  std::size_t dim = 0;
  std::vector<Matrix> generators;
};

constexpr int kMaxIrrepSize = 7;

/// Throws DomainError for diagrams with more than kMaxIrrepSize boxes.
SymmetricIrrep symmetric_group_irrep(const YoungDiagram& d);

}  // namespace preproj

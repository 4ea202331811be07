#include <doctest.h>

#include "preproj/young.hpp"

using namespace preproj;

namespace {

Matrix compose(const SymmetricIrrep& x, const std::vector<int>& word) {
  Matrix m = Matrix::identity(x.dim);
  for (int k : word) m = x.generators[static_cast<std::size_t>(k)] * m;
  return m;
}

}  // namespace

TEST_CASE("rectangles") {
  CHECK(is_rectangular(YoungDiagram({3, 3})) == std::pair<int, int>{2, 3});
  CHECK(is_rectangular(YoungDiagram({1, 1, 1})) == std::pair<int, int>{3, 1});
  CHECK_FALSE(is_rectangular(YoungDiagram({2, 1})).has_value());
}

TEST_CASE("content sums") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(content_sum(YoungDiagram({n})) == n * (n - 1) / 2);
    CHECK(content_sum(YoungDiagram(std::vector<int>(static_cast<std::size_t>(n), 1))) == -n * (n - 1) / 2);
  }
  CHECK(content_sum(YoungDiagram({2, 1})) == 0);
}

TEST_CASE("invalid diagrams") {
  CHECK_THROWS_AS(YoungDiagram({1, 2}), ValidationError);
  CHECK_THROWS_AS(YoungDiagram({2, 0}), ValidationError);
}

TEST_CASE("partition counts") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) CHECK(partitions_of(n).size() == expected[n]);
  CHECK(partitions_of(3).front() == YoungDiagram({3}));
}

TEST_CASE("seminormal form satisfies the Coxeter relations") {
  for (int n = 1; n <= 5; ++n) {
    std::int64_t sum_sq = 0;
    for (const auto& d : partitions_of(n)) {
      auto x = symmetric_group_irrep(d);
      CHECK(static_cast<std::int64_t>(x.dim) == hook_length_dimension(d));
      sum_sq += static_cast<std::int64_t>(x.dim * x.dim);
      REQUIRE(x.generators.size() == static_cast<std::size_t>(n - 1));
      for (int k = 0; k + 1 < n; ++k) {
        CHECK(compose(x, {k, k}).is_identity());
        if (k + 2 < n) CHECK(compose(x, {k, k + 1, k}) == compose(x, {k + 1, k, k + 1}));
        for (int j = k + 2; j + 1 < n; ++j) CHECK(compose(x, {k, j}) == compose(x, {j, k}));
      }
      // the sum of transpositions acts by the content sum
      if (n >= 2) {
        Matrix jm(x.dim, x.dim);
        for (int l = 0; l < n; ++l)
          for (int m = l + 1; m < n; ++m) {
            std::vector<int> w;
            for (int k = m - 1; k > l; --k) w.push_back(k);
            w.push_back(l);
            for (int k = l + 1; k < m; ++k) w.push_back(k);
            jm += compose(x, w);
          }
        CHECK(jm == Matrix::scalar(x.dim, Scalar(static_cast<long>(content_sum(d)))));
      }
    }
    std::int64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(sum_sq == fact);
  }
}

TEST_CASE("trivial and sign") {
  auto t = symmetric_group_irrep(YoungDiagram({3}));
  auto s = symmetric_group_irrep(YoungDiagram({1, 1, 1}));
  CHECK(t.generators[0] == Matrix::of(1));
  CHECK(s.generators[1] == Matrix::of(-1));
  CHECK_THROWS_AS(symmetric_group_irrep(YoungDiagram({8})), DomainError);
}

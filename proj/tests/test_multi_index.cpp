#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>
#include <stdexcept>

#include "wnoise/multi_index.hpp"
#include "wnoise/rng.hpp"

using namespace wnoise;

namespace {

MultiIndex random_index(std::uint64_t seed, std::uint64_t stream, std::size_t width,
                        std::uint32_t max_entry) {
  std::vector<std::uint32_t> entries(width);
  for (std::size_t i = 0; i < width; ++i) {
    entries[i] = static_cast<std::uint32_t>(uniform_draw(seed, stream, i) * (max_entry + 1));
  }
  return MultiIndex(std::move(entries));
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(MultiIndex{1, 2, 0, 0} == MultiIndex{1, 2});
  CHECK(MultiIndex{}.is_empty());
  CHECK(MultiIndex{0, 0}.is_empty());
  CHECK(MultiIndex{1, 2}.degree() == 3);
  CHECK(MultiIndex{3, 0, 2}.max_position() == 3);
  CHECK(MultiIndex{3, 0, 2}.entry(2) == 0);
  CHECK(MultiIndex{3, 0, 2}.entry(7) == 0);
}

TEST_CASE("factorial on small indices") {
  CHECK(factorial(MultiIndex{}) == 1);
  CHECK(factorial(MultiIndex{2, 1}) == 2);
  CHECK(factorial(MultiIndex{3, 0, 2}) == 12);
}

TEST_CASE("factorial overflows loudly") {
  CHECK(factorial(MultiIndex{20}) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(MultiIndex{21}), std::overflow_error);
  CHECK_THROWS_AS(factorial(MultiIndex{15, 15}), std::overflow_error);
}

TEST_CASE("weight_2n examples") {
  CHECK(weight_2n(MultiIndex::unit(1), 1.0) == doctest::Approx(2.0));
  CHECK(weight_2n(MultiIndex{1, 1}, 1.0) == doctest::Approx(8.0));
  CHECK(weight_2n(MultiIndex{2, 0, 1}, -1.0) == doctest::Approx(1.0 / 24.0));
  CHECK(weight_2n(MultiIndex{}, 7.0) == 1.0);
  // floating range blowups are returned, not trapped
  std::vector<std::uint32_t> far(400, 0);
  far[399] = 1000;
  CHECK(weight_2n(MultiIndex(far), 50.0) == std::numeric_limits<double>::infinity());
  CHECK(weight_2n(MultiIndex(far), -50.0) == 0.0);
}

TEST_CASE("add and subtract_unit examples") {
  CHECK(add(MultiIndex{1, 2}, MultiIndex{0, 1}) == MultiIndex{1, 3});
  CHECK(subtract_unit(MultiIndex{2, 1}, 1) == MultiIndex{1, 1});
  CHECK_THROWS_AS(subtract_unit(MultiIndex{0, 1}, 1), std::domain_error);
  // re-canonicalization when the last entry drops to zero
  CHECK(subtract_unit(MultiIndex{1, 1}, 2) == MultiIndex{1});
}

TEST_CASE("enumerate_basis fixed ordering") {
  CHECK(enumerate_basis(1, 5) == std::vector<std::uint32_t>{5});
  CHECK(enumerate_basis(2, 1) == std::vector<std::uint32_t>{1, 1});
  CHECK(enumerate_basis(2, 2) == std::vector<std::uint32_t>{1, 2});
  CHECK(enumerate_basis(2, 3) == std::vector<std::uint32_t>{2, 1});
  CHECK(enumerate_basis(2, 6) == std::vector<std::uint32_t>{3, 1});
}

TEST_CASE("enumerate_basis is injective and degree-monotone up to 1e4") {
  for (std::size_t d : {2, 3}) {
    std::set<std::vector<std::uint32_t>> seen;
    std::uint64_t prev_degree = 0;
    for (std::uint64_t j = 1; j <= 10000; ++j) {
      const auto delta = enumerate_basis(d, j);
      REQUIRE(delta.size() == d);
      std::uint64_t degree = 0;
      for (auto v : delta) {
        REQUIRE(v >= 1);
        degree += v;
      }
      CHECK(degree >= prev_degree);
      prev_degree = degree;
      CHECK(seen.insert(delta).second);
    }
  }
}

TEST_CASE("basis_table matches enumerate_basis") {
  for (std::size_t d : {1, 2, 4}) {
    const auto table = basis_table(d, 500);
    REQUIRE(table.size() == 500);
    for (std::uint64_t j = 1; j <= 500; ++j) {
      CHECK(table[j - 1] == enumerate_basis(d, j));
    }
  }
  // the d=2 sheet expansions run this out to a few thousand entries
  const auto wide = basis_table(2, 3000);
  for (std::uint64_t j = 2990; j <= 3000; ++j) {
    CHECK(wide[j - 1] == enumerate_basis(2, j));
  }
}

TEST_CASE("add is commutative and associative") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const MultiIndex a = random_index(11, 3 * s, 6, 4);
    const MultiIndex b = random_index(11, 3 * s + 1, 4, 4);
    const MultiIndex c = random_index(11, 3 * s + 2, 8, 3);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
  }
}

TEST_CASE("factorial recurrence under unit increments") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const MultiIndex a = random_index(13, s, 5, 6);
    for (std::size_t k = 1; k <= 5; ++k) {
      const std::uint64_t expected = factorial(a) * (a.entry(k) + 1);
      CHECK(factorial(add(a, MultiIndex::unit(k))) == expected);
    }
  }
}

TEST_CASE("weight_2n is multiplicative in the exponent") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const MultiIndex a = random_index(17, s, 6, 5);
    const double q1 = -2.0 + 4.0 * uniform_draw(19, s, 0);
    const double q2 = -2.0 + 4.0 * uniform_draw(19, s, 1);
    const double combined = weight_2n(a, q1 + q2);
    const double split = weight_2n(a, q1) * weight_2n(a, q2);
    CHECK(combined == doctest::Approx(split).epsilon(1e-12));
  }
}

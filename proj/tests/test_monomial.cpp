#include <doctest.h>

#include <algorithm>
#include <set>

#include "chowcert/errors.hpp"
#include "chowcert/monomial.hpp"
#include "oracles.hpp"

using namespace chowcert;

namespace {

Monomial mono(std::vector<long> exps) {
  std::vector<Int> v;
  v.reserve(exps.size());
  for (long e : exps)
    v.emplace_back(e);
  return Monomial(std::move(v));
}

MonomialMap steiner_map() {
  return MonomialMap(3, {mono({1, 0, 1}), mono({0, 1, 1}), mono({2, 0, 0}),
                         mono({1, 1, 0}), mono({0, 2, 0})});
}

MonomialMap line_map() {
  return MonomialMap(2, {mono({1, 0}), mono({0, 1})});
}

MonomialMap plane_map() {
  return MonomialMap(3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
}

WeightVector rw(std::vector<long> nums) {
  std::vector<Rat> w;
  for (long n : nums)
    w.emplace_back(n);
  return WeightVector(std::move(w));
}

} // namespace

TEST_CASE("monomial basics") {
  const Monomial a = mono({1, 0, 1});
  CHECK(a.total_degree() == 2);
  CHECK(a.divides(mono({2, 1, 1})));
  CHECK_FALSE(a.divides(mono({0, 3, 1})));
  CHECK((a * a) == mono({2, 0, 2}));
  CHECK((mono({2, 1, 1}) / a) == mono({1, 1, 0}));
  CHECK_THROWS_AS(Monomial({Int(-1)}), config_error);
}

TEST_CASE("map construction validates") {
  CHECK_THROWS_AS(MonomialMap(2, {mono({1, 0}), mono({1, 0})}), config_error);
  CHECK_THROWS_AS(MonomialMap(2, {mono({1, 0}), mono({2, 0})}), config_error);
  CHECK_THROWS_AS(MonomialMap(2, {mono({0, 0}), mono({0, 0})}), config_error);
  // a single generator is a zero-dimensional image
  CHECK(MonomialMap(2, {mono({1, 1})}).dimension() == 0);
}

TEST_CASE("weight vectors are non-increasing and non-negative") {
  CHECK_THROWS_AS(rw({0, 1}), config_error);
  CHECK_THROWS_AS(WeightVector({Rat(-1)}), config_error);
  const auto [sorted, order] = WeightVector::from_unsorted(
      {Rat(0), Rat(2), Rat(1)});
  CHECK(sorted.weights() == std::vector<Rat>{Rat(2), Rat(1), Rat(0)});
  CHECK(order == std::vector<std::size_t>{1, 2, 0});
  CHECK(rw({1, 1, 0}).average() == Rat(2, 3));
}

TEST_CASE("map dimensions") {
  CHECK(steiner_map().dimension() == 2);
  CHECK(line_map().dimension() == 1);
  CHECK(plane_map().dimension() == 2);
}

TEST_CASE("image basis of the Steiner map") {
  const MonomialMap map = steiner_map();
  const auto basis1 = image_basis(map, 1);
  CHECK(basis1.size() == 5);
  const std::set<Monomial> expected(map.generators().begin(),
                                    map.generators().end());
  CHECK(std::set<Monomial>(basis1.begin(), basis1.end()) == expected);

  const auto basis2 = image_basis(map, 2);
  CHECK(basis2.size() == 12);
  // oracle: all pairwise products, deduplicated
  CHECK(std::set<Monomial>(basis2.begin(), basis2.end()) ==
        oracle::image_basis(map.generators(), 2));
  // cross-check against (3m^2+5m+2)/2 at m = 2
  CHECK(hilbert_function(map, 2) == 12);
}

TEST_CASE("image basis of the line") {
  const auto basis = image_basis(line_map(), 3);
  CHECK(basis ==
        std::vector<Monomial>{mono({0, 3}), mono({1, 2}), mono({2, 1}),
                              mono({3, 0})});
}

TEST_CASE("minimal weights on the Steiner map") {
  const MonomialMap map = steiner_map();
  const WeightVector w = rw({1, 1, 0, 0, 0});
  CHECK(min_weight(map, w, mono({4, 0, 0}), 2) == 0);  // (x^2)^2
  CHECK(min_weight(map, w, mono({2, 0, 2}), 2) == 2);  // only (xz)^2
  CHECK(min_weight(map, w, mono({2, 1, 1}), 2) == 1);  // (xz)(xy) or (yz)(x^2)
  CHECK_THROWS_AS(min_weight(map, w, mono({1, 0, 0}), 2), not_in_image_error);

  // the memoized search agrees with plain exhaustive recursion everywhere
  std::vector<Rat> plain_weights(w.weights().begin(), w.weights().end());
  for (int m = 1; m <= 4; ++m)
    for (const Monomial& u : image_basis(map, m)) {
      const auto expected =
          oracle::min_weight(map.generators(), plain_weights, u, m);
      REQUIRE(expected.has_value());
      CHECK(min_weight(map, w, u, m) == *expected);
    }
}

TEST_CASE("weight sums") {
  const MonomialMap map = steiner_map();
  const WeightVector w = rw({1, 1, 0, 0, 0});
  CHECK(weight_sum(map, w, 1) == 2);
  CHECK(weight_sum(map, w, 2) == 10);

  // projective line with weights (1,0): unique factorizations of weight a
  const MonomialMap line = line_map();
  const WeightVector lw = rw({1, 0});
  for (int m = 1; m <= 6; ++m)
    CHECK(weight_sum(line, lw, m) == frac(Int(m * (m + 1)), 2));
}

TEST_CASE("hilbert functions") {
  CHECK(hilbert_function(steiner_map(), 1) == 5);
  CHECK(hilbert_function(steiner_map(), 2) == 12);
  for (int m = 1; m <= 5; ++m) {
    CHECK(hilbert_function(plane_map(), m) == Int((m + 1) * (m + 2) / 2));
    CHECK(hilbert_function(line_map(), m) == m + 1);
  }
}

TEST_CASE("basis size is bounded by the multiset count") {
  const MonomialMap map = steiner_map();
  for (int m = 1; m <= 5; ++m) {
    const Int bound = binomial(
        static_cast<unsigned long>(map.coordinate_index() + m),
        static_cast<unsigned long>(m));
    CHECK(hilbert_function(map, m) <= bound);
  }
  // identity embeddings achieve it
  for (int m = 1; m <= 5; ++m)
    CHECK(hilbert_function(plane_map(), m) ==
          binomial(static_cast<unsigned long>(2 + m), 2));
}

TEST_CASE("raising weights never lowers a minimal weight") {
  const MonomialMap map = steiner_map();
  const WeightVector low = rw({1, 1, 0, 0, 0});
  const WeightVector high = rw({2, 1, 1, 0, 0});
  for (int m = 1; m <= 3; ++m)
    for (const Monomial& u : image_basis(map, m))
      CHECK(min_weight(map, high, u, m) >= min_weight(map, low, u, m));
}

TEST_CASE("weight sums are linear under scaling") {
  const MonomialMap map = steiner_map();
  const WeightVector w = rw({2, 1, 1, 0, 0});
  for (int m = 1; m <= 3; ++m) {
    const Rat base = weight_sum(map, w, m);
    CHECK(weight_sum(map, w.scaled(Rat(3)), m) == 3 * base);
    CHECK(weight_sum(map, w.scaled(Rat(2, 7)), m) == Rat(2, 7) * base);
  }
}

TEST_CASE("graded pieces multiply into each other") {
  const MonomialMap map = steiner_map();
  const auto b1 = image_basis(map, 1);
  const auto b2 = image_basis(map, 2);
  const auto b3 = image_basis(map, 3);
  const std::set<Monomial> degree3(b3.begin(), b3.end());
  for (const Monomial& u : b1)
    for (const Monomial& v : b2)
      CHECK(degree3.count(u * v) == 1);
}

TEST_CASE("filtration accessors expose both threshold conventions") {
  const auto basis = graded_basis(steiner_map(), rw({1, 1, 0, 0, 0}), 1);
  CHECK(filtration_dim_below(basis, Rat(1)) == 3);
  CHECK(filtration_dim_at_most(basis, Rat(1)) == 5);
  CHECK(filtration_dim_below(basis, Rat(0)) == 0);
  CHECK(filtration_dim_at_most(basis, Rat(0)) == 3);
}

TEST_CASE("graded basis is identical for any thread count") {
  const MonomialMap map = steiner_map();
  const WeightVector w = rw({2, 1, 0, 0, 0});
  const auto serial = graded_basis(map, w, 3, 1);
  const auto parallel = graded_basis(map, w, 3, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].image == parallel[i].image);
    CHECK(serial[i].min_weight == parallel[i].min_weight);
  }
}

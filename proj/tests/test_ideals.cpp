#include <doctest.h>

#include "chowcert/errors.hpp"
#include "chowcert/ideals.hpp"
#include "oracles.hpp"

using namespace chowcert;

namespace {

Monomial mono(std::vector<long> exps) {
  std::vector<Int> v;
  for (long e : exps)
    v.emplace_back(e);
  return Monomial(std::move(v));
}

MonomialIdeal ideal2(std::vector<std::vector<long>> rows) {
  std::vector<Monomial> gens;
  for (auto& row : rows)
    gens.push_back(mono(row));
  return MonomialIdeal(2, std::move(gens));
}

MonomialIdeal max_ideal_power2(unsigned n) {
  return ideal2({{1, 0}, {0, 1}}).power(n);
}

IdealChain two_step_chain() {
  return IdealChain({max_ideal_power2(2), max_ideal_power2(1),
                     ideal2({{0, 0}})});
}

// test-side finite differences over an oracle-computed power table
Int oracle_multiplicity(int variables, const std::vector<Monomial>& gens,
                        int max_n) {
  std::vector<Int> cols;
  for (int n = 1; n <= max_n; ++n)
    cols.push_back(
        oracle::colength_direct(variables, oracle::power_generators(gens, n)));
  std::vector<Int> diffs = cols;
  for (int k = 0; k < variables; ++k)
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
  const std::size_t count = cols.size() - static_cast<std::size_t>(variables);
  REQUIRE(count >= 2);
  REQUIRE(diffs[count - 1] == diffs[count - 2]);
  return diffs[count - 1];
}

} // namespace

TEST_CASE("minimal generators") {
  const MonomialIdeal ideal = ideal2({{2, 0}, {3, 1}, {0, 3}, {2, 2}});
  CHECK(ideal.generators() ==
        std::vector<Monomial>{mono({2, 0}), mono({0, 3})});
  CHECK(ideal.contains(mono({5, 5})));
  CHECK_FALSE(ideal.contains(mono({1, 2})));
}

TEST_CASE("finite colength detection") {
  CHECK(ideal2({{1, 0}, {0, 1}}).has_finite_colength());
  CHECK_FALSE(ideal2({{1, 0}}).has_finite_colength());
  CHECK_FALSE(ideal2({{1, 1}, {2, 0}}).has_finite_colength());
  CHECK_THROWS_AS(colength(ideal2({{1, 1}})), infinite_colength_error);
}

TEST_CASE("colength examples") {
  CHECK(colength(ideal2({{1, 0}, {0, 1}})) == 1);
  CHECK(colength(ideal2({{2, 0}, {0, 3}})) == 6);
  CHECK(colength(max_ideal_power2(2)) == 3);
  CHECK(colength(ideal2({{0, 0}})) == 0);
}

TEST_CASE("power colengths agree between two independent counts") {
  const std::vector<MonomialIdeal> samples = {
      ideal2({{1, 0}, {0, 1}}), ideal2({{2, 0}, {0, 3}}),
      ideal2({{2, 0}, {1, 1}, {0, 2}}), ideal2({{3, 0}, {1, 1}, {0, 2}})};
  for (const MonomialIdeal& ideal : samples)
    for (unsigned n = 1; n <= 4; ++n) {
      const MonomialIdeal power = ideal.power(n);
      const Int direct =
          oracle::colength_direct(2, power.generators());
      const Int sieve =
          oracle::colength_inclusion_exclusion(2, power.generators());
      CHECK(direct == sieve);
      CHECK(colength(power) == direct);
    }
}

TEST_CASE("multiplicity of plane ideals") {
  CHECK(multiplicity(ideal2({{1, 0}, {0, 1}})) == 1);
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      CHECK(multiplicity(ideal2({{a, 0}, {0, b}})) == a * b);
  CHECK(multiplicity(max_ideal_power2(2)) == 4);
  // twice the area cut off by the staircase hull of (4,0), (1,1), (0,4)
  CHECK(multiplicity(ideal2({{4, 0}, {1, 1}, {0, 4}})) == 8);
  CHECK_THROWS_AS(multiplicity(ideal2({{0, 0}})), config_error);
}

TEST_CASE("multiplicity in three variables") {
  const MonomialIdeal maximal(
      3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  CHECK(multiplicity(maximal) == 1);
  CHECK(multiplicity(maximal.power(3)) == 27);
}

TEST_CASE("flat ratios") {
  CHECK(flat_ratio(ideal2({{1, 0}, {0, 1}})) == Rat(1, 2));
  CHECK(flat_ratio(ideal2({{2, 0}, {0, 3}})) == Rat(1, 2));
  CHECK(flat_ratio(max_ideal_power2(2)) == Rat(2, 3));
}

TEST_CASE("lech bound over all small plane ideals") {
  const auto ideals = enumerate_finite_colength_ideals(2, 3);
  CHECK(ideals.size() > 10);
  for (const MonomialIdeal& ideal : ideals) {
    const Rat ratio = flat_ratio(ideal);
    CHECK(ratio <= 1);
    CHECK(ratio > 0);
  }
}

TEST_CASE("flat multiplicity lower bound in a regular ring") {
  // the cube of the maximal ideal has ratio 9/12; nothing within degree
  // three beats it, and the regular ring keeps every ratio below one
  const Rat bound = flat_multiplicity_lower_bound(2, 3);
  CHECK(bound == Rat(3, 4));
}

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(IdealChain({max_ideal_power2(1), max_ideal_power2(2),
                              ideal2({{0, 0}})}),
                  config_error);
  CHECK_THROWS_AS(IdealChain({max_ideal_power2(2), max_ideal_power2(1)}),
                  config_error);
  CHECK(two_step_chain().proper_count() == 2);
}

TEST_CASE("rees colength") {
  CHECK(rees_colength(ReesIdeal(two_step_chain())) == 4);
  CHECK(rees_colength(ReesIdeal(IdealChain({ideal2({{0, 0}})}))) == 0);
  CHECK(rees_colength(ReesIdeal(IdealChain(
            {max_ideal_power2(1), ideal2({{0, 0}})}))) == 1);
}

TEST_CASE("rees colength equals the graded ideal colength") {
  for (const IdealChain& chain :
       {two_step_chain(),
        IdealChain({max_ideal_power2(1), ideal2({{0, 0}})}),
        IdealChain({ideal2({{2, 0}, {0, 3}}), max_ideal_power2(1),
                    ideal2({{0, 0}})})}) {
    const ReesIdeal rees(chain);
    CHECK(rees_colength(rees) == colength(rees.graded_ideal()));
  }
}

TEST_CASE("rees multiplicity of the maximal ideal chain") {
  const ReesIdeal rees(IdealChain({max_ideal_power2(1), ideal2({{0, 0}})}));
  // graded ideal is (x, y, t), the regular maximal ideal in three variables
  CHECK(rees_multiplicity(rees) == 1);
}

TEST_CASE("rees multiplicity matches the brute-force oracle") {
  const ReesIdeal rees(two_step_chain());
  CHECK(rees_colength(rees) == 4);
  const Int library_value = rees_multiplicity(rees);
  const Int oracle_value =
      oracle_multiplicity(3, rees.graded_ideal().generators(), 8);
  CHECK(library_value == oracle_value);
}

TEST_CASE("degenerate chains are rejected") {
  const IdealChain unit_only({ideal2({{0, 0}})});
  CHECK_THROWS_AS(rees_multiplicity(ReesIdeal(unit_only)), config_error);
}

TEST_CASE("rees excess") {
  const ReesIdeal simple(IdealChain({max_ideal_power2(1), ideal2({{0, 0}})}));
  CHECK(rees_excess(simple, 2) == Rat(-5, 6));

  const ReesIdeal rees(two_step_chain());
  const Rat ratio = frac(rees_multiplicity(rees), 6 * rees_colength(rees));
  CHECK(rees_excess(rees, 2) == ratio - 1);
}

TEST_CASE("induced weights") {
  const IdealChain chain = two_step_chain();
  const auto single = induced_weights(chain, {{0, 0}});
  CHECK(single.weights.weights() == std::vector<Rat>{Rat(0)});

  const auto deep = induced_weights(chain, {{0, 2}});
  CHECK(deep.weights.weights() == std::vector<Rat>{Rat(2)});

  // steiner-style flag: three elements already present, two entering later
  const auto steiner = induced_weights(
      chain, {{0, 1}, {1, 1}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(steiner.weights.weights() ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(steiner.order == std::vector<std::size_t>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(induced_weights(chain, {{0, 5}}), config_error);
  CHECK_THROWS_AS(induced_weights(chain, {{0, 0}, {0, 1}}), config_error);
}

TEST_CASE("rees colength equals the induced weight sum") {
  // basis of the quotient by the first member, filtered by the chain: the
  // classes of x and y enter at level one, the class of 1 at level two, so
  // the compatible weights are (2, 1, 1) and their sum is the graded
  // colength
  const IdealChain chain = two_step_chain();
  const auto induced = induced_weights(chain, {{0, 2}, {1, 1}, {2, 1}});
  CHECK(induced.weights.sum() == rees_colength(ReesIdeal(chain)));

  // and in general: each weight-j element contributes one standard monomial
  // to each of the first j graded pieces
  const IdealChain longer({ideal2({{2, 0}, {0, 3}}), max_ideal_power2(1),
                           ideal2({{0, 0}})});
  // col 6 member: classes 1, x, y, xy, y^2, xy^2; col 1 member: class 1;
  // weights: 1 enters at level 2, the other five at level 1
  const auto weights = induced_weights(
      longer, {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
  CHECK(weights.weights.sum() == rees_colength(ReesIdeal(longer)));
}

TEST_CASE("multiplicity is deterministic across thread counts") {
  const MonomialIdeal ideal = ideal2({{3, 0}, {1, 1}, {0, 2}});
  CHECK(multiplicity(ideal, 12, 1) == multiplicity(ideal, 12, 8));
}

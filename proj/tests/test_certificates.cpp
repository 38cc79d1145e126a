#include <doctest.h>

#include "chowcert/certificates.hpp"
#include "chowcert/errors.hpp"

using namespace chowcert;

namespace {

std::vector<Rat> rats(std::vector<Rat> v) { return v; }

MonomialIdeal ideal2(std::vector<std::vector<long>> rows) {
  std::vector<Monomial> gens;
  for (auto& row : rows) {
    std::vector<Int> exps;
    for (long e : row)
      exps.emplace_back(e);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(2, std::move(gens));
}

RuledSurfaceData steiner_surface() {
  return RuledSurfaceData(0, RuledClass{Rat(1), Rat(3, 2)},
                          RuledClass{Rat(1), Rat(-1, 2)});
}

} // namespace

TEST_CASE("core condition") {
  // steiner mean limit 4k/9 at one place: passes exactly when k/d > 9/4
  for (long k = 1; k <= 6; ++k)
    for (const Rat& d : rats({Rat(1), Rat(2), Rat(9, 4), Rat(5, 2)})) {
      const Certificate cert = certify_fw({frac(4 * Int(k), 9)}, {d});
      CHECK(cert.pass == (Rat(k) / d > Rat(9, 4)));
    }

  const Certificate two = certify_fw({Rat(3, 5), Rat(3, 5)}, {Rat(1), Rat(1)});
  CHECK(two.pass);
  CHECK(two.margin == Rat(1, 5));
  CHECK(two.warnings.empty());

  const Certificate zero = certify_fw({Rat(0), Rat(0)}, {Rat(1), Rat(2)});
  CHECK_FALSE(zero.pass);
  CHECK(zero.margin == -1);

  const Certificate big = certify_fw({Rat(3)}, {Rat(1)});
  CHECK(big.pass);
  CHECK_FALSE(big.warnings.empty());
}

TEST_CASE("local point condition") {
  const Certificate pass =
      certify_local_point(Int(3), 2, Int(3), {Rat(4)}, {Rat(1)});
  CHECK(pass.pass);
  CHECK(pass.lhs == 12);
  CHECK(pass.rhs == 9);

  const Certificate boundary =
      certify_local_point(Int(1), 2, Int(3), {Rat(9)}, {Rat(1)});
  CHECK_FALSE(boundary.pass);
  CHECK(boundary.margin == 0);

  const Certificate zero =
      certify_local_point(Int(2), 2, Int(3), {Rat(0)}, {Rat(1)});
  CHECK_FALSE(zero.pass);
  CHECK(zero.lhs == 0);
}

TEST_CASE("local chain condition, verbatim") {
  const Certificate single =
      certify_local_chain({{Rat(1), Rat(0)}}, {Rat(1)}, Rat(3), 2);
  CHECK(single.rhs == Rat(1, 2)); // deg / (dim+1)! with (dim+1)! = 6
  CHECK(single.pass);

  const Certificate zero =
      certify_local_chain({{Rat(0), Rat(0)}}, {Rat(1)}, Rat(3), 2);
  CHECK_FALSE(zero.pass);
}

TEST_CASE("local chain condition, normalized") {
  const IdealChain simple({ideal2({{1, 0}, {0, 1}}), ideal2({{0, 0}})});
  const Certificate cert =
      certify_local_chain_normalized({simple}, {Rat(1)}, Rat(3), 2);
  // graded multiplicity 1 over (dim+1) deg = 9
  CHECK(cert.lhs == Rat(1, 9));
  CHECK_FALSE(cert.pass);
  bool found_excess = false;
  for (const auto& [key, value] : cert.inputs)
    if (key == "excess") {
      CHECK(value == "-5/6");
      found_excess = true;
    }
  CHECK(found_excess);

  const IdealChain deeper({ideal2({{2, 0}, {1, 1}, {0, 2}}),
                           ideal2({{1, 0}, {0, 1}}), ideal2({{0, 0}})});
  const Certificate cert2 =
      certify_local_chain_normalized({deeper}, {Rat(1)}, Rat(3), 2);
  // graded ideal is the square of the maximal ideal in three variables:
  // multiplicity 8, colength 4
  CHECK(cert2.lhs == Rat(8, 9));
  for (const auto& [key, value] : cert2.inputs)
    if (key == "excess")
      CHECK(value == "-2/3");
}

TEST_CASE("steiner threshold") {
  const Certificate low = certify_steiner({Rat(1)}, {Rat(2)});
  CHECK_FALSE(low.pass);
  CHECK(low.margin == Rat(-7, 4));
  REQUIRE(low.schmidt_baseline.has_value());
  CHECK(*low.schmidt_baseline == Rat(5, 2));
  CHECK(low.rhs < *low.schmidt_baseline); // stronger than the ambient result

  CHECK(certify_steiner({Rat(7, 3)}, {Rat(1)}).pass);
  CHECK_FALSE(certify_steiner({Rat(9, 4)}, {Rat(1)}).pass);
}

TEST_CASE("ruled threshold") {
  // steiner data: contact 4, degree 3: passes exactly when sum 1/d > 9/4
  CHECK_FALSE(certify_ruled(steiner_surface(), {Rat(1)}).pass);
  CHECK(certify_ruled(steiner_surface(), {Rat(2, 5)}).pass);
  const Certificate boundary = certify_ruled(steiner_surface(), {Rat(4, 9)});
  CHECK_FALSE(boundary.pass);
  CHECK(boundary.margin == 0);

  const RuledSurfaceData wide =
      RuledSurfaceData::from_section_square(0, Rat(2), Rat(3), Rat(0));
  CHECK_FALSE(certify_ruled(wide, {Rat(1)}).pass); // 36 > 36 fails strictly
  CHECK(certify_ruled(wide, {Rat(9, 10)}).pass);   // 40 > 36

  const RuledSurfaceData degenerate(0, RuledClass{Rat(2), Rat(0)},
                                    RuledClass{Rat(1), Rat(0)});
  CHECK_FALSE(certify_ruled(degenerate, {Rat(1)}).pass);
  CHECK_FALSE(certify_ruled(steiner_surface(), {Rat(1)}).assumptions.empty());
}

TEST_CASE("general and ruled forms agree on the steiner surface") {
  for (long k = 1; k <= 6; k += 5)
    for (const Rat& d : rats({Rat(1), Rat(2), Rat(9, 4), Rat(7, 3), Rat(5, 2),
                              Rat(3)})) {
      const Certificate general = certify_fw({frac(4 * Int(k), 9)}, {d});
      const Certificate ruled = certify_ruled(steiner_surface(), {d / k});
      CHECK(general.pass == ruled.pass);
    }
}

TEST_CASE("bundle unstable thresholds") {
  const Certificate cert = certify_bundle_unstable(0, Rat(2), Rat(3), Rat(-1),
                                                   Rat(0), {Rat(1)});
  // first part margin 4, second 1/1 - 9/4 < 0
  CHECK_FALSE(cert.pass);
  CHECK(cert.rhs == Rat(9, 4));
  const Certificate pass = certify_bundle_unstable(0, Rat(2), Rat(3), Rat(-1),
                                                   Rat(0), {Rat(1, 3)});
  CHECK(pass.pass);

  CHECK_THROWS_AS(
      certify_bundle_unstable(0, Rat(2), Rat(3), Rat(0), Rat(0), {Rat(1)}),
      not_bundle_unstable_error);

  // genus one: threshold collapses to 3/a
  const Certificate torus = certify_bundle_unstable(1, Rat(4), Rat(5), Rat(-2),
                                                    Rat(0), {Rat(1)});
  CHECK(torus.rhs == Rat(3, 4));
}

TEST_CASE("bundle instability implies the ruled threshold") {
  // whenever both parts pass, the contact threshold passes with the same
  // scalings on the surface the parameters describe
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 4; ++b)
      for (long l = -3; l <= -1; ++l)
        for (int genus = 0; genus <= 2; ++genus)
          for (const Rat& d : rats({Rat(1), Rat(1, 2), Rat(1, 4), Rat(2)})) {
            if (b + genus - 1 <= 0)
              continue;
            const Rat deg_e(l); // deg L = 0
            Certificate bundle;
            try {
              bundle = certify_bundle_unstable(genus, Rat(a), Rat(b), deg_e,
                                               Rat(0), {d});
            } catch (const not_bundle_unstable_error&) {
              continue;
            }
            if (!bundle.pass)
              continue;
            const RuledSurfaceData data = RuledSurfaceData::from_section_square(
                genus, Rat(a), Rat(b), Rat(l));
            CHECK(certify_ruled(data, {d}).pass);
          }
}

TEST_CASE("blowup and cone certificates") {
  const BlowupData data(2, {Rat(1), Rat(0), Rat(-1)}, 2, 1);
  const Certificate cert = certify_blowup(data, {Rat(1)});
  CHECK(cert.lhs == 4);
  CHECK(cert.rhs == 9);
  CHECK_FALSE(cert.pass);

  const Certificate cone = certify_cone(ConeData(2, Rat(1), 3, 2, 1));
  CHECK_FALSE(cone.pass);
  CHECK(cone.margin == -8);

  const Certificate wide_cone = certify_cone(ConeData(2, Rat(1), 6, 0, 1));
  CHECK(wide_cone.pass); // 216 > 108
}

TEST_CASE("elliptic threshold") {
  const Certificate pass = certify_elliptic(Int(1), {Rat(8)});
  CHECK(pass.pass);
  CHECK(pass.margin == Rat(1, 200));

  const Certificate boundary = certify_elliptic(Int(1), {Rat(25, 3)});
  CHECK_FALSE(boundary.pass);
  CHECK(boundary.margin == 0);

  const Certificate boundary2 = certify_elliptic(Int(2), {Rat(50, 3)});
  CHECK_FALSE(boundary2.pass);
  CHECK(boundary2.margin == 0);

  REQUIRE(pass.schmidt_baseline.has_value());
  CHECK(*pass.schmidt_baseline == Rat(16, 133));
  // the threshold is stronger than the ambient requirement for every k
  for (long k = 1; k <= 50; ++k) {
    const Certificate cert = certify_elliptic(Int(k), {Rat(1)});
    REQUIRE(cert.schmidt_baseline.has_value());
    CHECK(cert.rhs < *cert.schmidt_baseline);
  }
}

TEST_CASE("schmidt baseline") {
  // steiner weights (k, k, 0, 0, 0) over four-space
  CHECK(schmidt_baseline({{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)}}, 4,
                         {Rat(1)}) == Rat(2, 5));
  CHECK(schmidt_baseline({{Rat(3), Rat(3), Rat(0), Rat(0), Rat(0)}}, 4,
                         {Rat(2)}) == Rat(3, 5));
  // equal weights collapse to r/d per place
  CHECK(schmidt_baseline({{Rat(5), Rat(5), Rat(5)}}, 2, {Rat(2)}) ==
        Rat(5, 2));
  // two places add
  CHECK(schmidt_baseline({{Rat(1), Rat(1)}, {Rat(2), Rat(0)}}, 1,
                         {Rat(1), Rat(1)}) == Rat(2));
}

TEST_CASE("verdicts are invariant under joint weight and scaling rescaling") {
  for (long c = 2; c <= 4; ++c) {
    const Rat factor(c);
    const Certificate base = certify_steiner({Rat(7, 3)}, {Rat(1)});
    const Certificate scaled =
        certify_steiner({Rat(7, 3) * factor}, {factor});
    CHECK(base.pass == scaled.pass);
    CHECK(base.margin == scaled.margin);

    const Certificate base_fw = certify_fw({Rat(5, 4)}, {Rat(1)});
    const Certificate fw_scaled = certify_fw({Rat(5, 4) * factor}, {factor});
    CHECK(base_fw.pass == fw_scaled.pass);

    const Certificate point =
        certify_local_point(Int(3), 2, Int(3), {Rat(4)}, {Rat(1)});
    const Certificate point_scaled = certify_local_point(
        Int(3), 2, Int(3), {Rat(4) * factor}, {factor});
    CHECK(point.pass == point_scaled.pass);
    CHECK(point.margin == point_scaled.margin);
  }
}

TEST_CASE("strictness at zero margin") {
  CHECK_FALSE(certify_fw({Rat(1)}, {Rat(1)}).pass);
  CHECK_FALSE(certify_steiner({Rat(9, 4)}, {Rat(1)}).pass);
  CHECK_FALSE(certify_local_point(Int(1), 2, Int(3), {Rat(9)}, {Rat(1)}).pass);
  CHECK_FALSE(certify_local_chain({{Rat(1, 2)}}, {Rat(1)}, Rat(3), 2).pass);
  CHECK_FALSE(certify_elliptic(Int(1), {Rat(25, 3)}).pass);
  CHECK_FALSE(certify_cone(ConeData(3, Rat(5), 4, 4, 2)).pass);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(certify_fw({Rat(1)}, {}), config_error);
  CHECK_THROWS_AS(certify_fw({Rat(1)}, {Rat(0)}), config_error);
  CHECK_THROWS_AS(certify_fw({Rat(1), Rat(1)}, {Rat(1)}), config_error);
  CHECK_THROWS_AS(certify_steiner({Rat(-1)}, {Rat(1)}), config_error);
  CHECK_THROWS_AS(certify_elliptic(Int(0), {Rat(1)}), config_error);
  CHECK_THROWS_AS(
      certify_bundle_unstable(0, Rat(1), Rat(1), Rat(-2), Rat(0), {Rat(1)}),
      config_error); // a(b+g-1) = 0
}

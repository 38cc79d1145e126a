#include "chowcert/surfaces.hpp"

#include "chowcert/errors.hpp"

namespace chowcert {

Rat intersect(const RuledClass& a, const RuledClass& b) {
  return a.g_coeff * b.f_coeff + a.f_coeff * b.g_coeff;
}

RuledSurfaceData::RuledSurfaceData(int genus, RuledClass polarization,
                                   RuledClass section)
    : genus_(genus), polarization_(polarization), section_(section) {
  if (genus_ < 0)
    throw config_error("genus must be non-negative");
  if (section_.g_coeff != 1)
    throw config_error("a section meets each fibre once");
  // a = 0 is allowed: the vanishing flag is then the single level j = 0
  if (polarization_.g_coeff < 0)
    throw config_error("polarization cannot be negative on fibres");
}

RuledSurfaceData RuledSurfaceData::from_section_square(int genus, const Rat& a,
                                                       const Rat& b,
                                                       const Rat& square) {
  return RuledSurfaceData(genus, RuledClass{a, b},
                          RuledClass{Rat(1), square / 2});
}

Rat RuledSurfaceData::section_square() const {
  return intersect(section_, section_);
}

RuledClass RuledSurfaceData::canonical_class() const {
  // the unique class with K.f = -2 and K.K = 8(1 - g)
  return RuledClass{Rat(-2), Rat(2 * genus_ - 2)};
}

Rat contact_ruled(const RuledSurfaceData& data) {
  const Rat& a = data.a();
  const Rat ds = intersect(data.polarization(), data.section());
  return 3 * a * a * ds - a * a * a * data.section_square();
}

Rat ruled_degree(const RuledClass& polarization) {
  return intersect(polarization, polarization);
}

FiltrationDimensions filtration_dimensions(const RuledSurfaceData& data) {
  const Rat& a = data.a();
  if (a.get_den() != 1)
    throw config_error("vanishing orders need an integral fibre coefficient");
  if (!a.get_num().fits_slong_p())
    throw config_error("fibre coefficient too large");
  const long top = a.get_num().get_si();
  const RuledClass k = data.canonical_class();
  FiltrationDimensions out;
  out.weight_total = 0;
  for (long j = 0; j <= top; ++j) {
    const RuledClass twisted{data.polarization().g_coeff - j,
                             data.polarization().f_coeff -
                                 Rat(j) * data.section().f_coeff};
    // chi(D') = (1 - g) + D'.(D' - K)/2
    const RuledClass shifted{twisted.g_coeff - k.g_coeff,
                             twisted.f_coeff - k.f_coeff};
    Rat chi = Rat(1 - data.genus()) + intersect(twisted, shifted) / 2;
    if (chi < 0)
      throw negative_dimension_error(
          "negative Euler characteristic at vanishing order " +
          std::to_string(j));
    if (j > 0)
      out.weight_total += chi;
    out.levels.push_back(FiltrationDimension{static_cast<int>(j), chi});
  }
  return out;
}

EllipticInvariants elliptic_invariants(const EllipticData& data) {
  if (data.k < 1)
    throw config_error("elliptic polarization index must be positive");
  const Int& k = data.k;
  const Int k2 = k * k;
  const Int k3 = k2 * k;
  EllipticInvariants out;
  out.degree = 27 * k2;
  out.h0 = (27 * k2 + 3 * k + 2) / 2;
  out.weight_sum = frac(225 * k3 + 23 * k, 2) + Rat(9 * k2);
  out.contact_lower_bound = 675 * k3;
  out.mean_weight_lower_bound = frac(25 * k, 3);
  return out;
}

} // namespace chowcert

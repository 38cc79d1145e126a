#ifndef CHOWCERT_SURFACES_HPP
#define CHOWCERT_SURFACES_HPP

#include <vector>

#include "chowcert/rational.hpp"

namespace chowcert {

/// A numerical divisor class g*G + f_coeff*f on a ruled surface, in the basis
/// with G*G = 0, f*f = 0, G*f = 1. Half-integer coefficients are allowed for
/// odd-parity surfaces.
struct RuledClass {
  Rat g_coeff;
  Rat f_coeff;
};

/// Intersection pairing of two classes.
Rat intersect(const RuledClass& a, const RuledClass& b);

/// A polarized ruled surface with a marked section: D = aG + bf very ample,
/// S a section (S meets each fibre once), and the bundle invariant equal to
/// the self-intersection of S.
class RuledSurfaceData {
public:
  RuledSurfaceData(int genus, RuledClass polarization, RuledClass section);
  static RuledSurfaceData from_section_square(int genus, const Rat& a,
                                              const Rat& b,
                                              const Rat& section_square);

  int genus() const { return genus_; }
  const RuledClass& polarization() const { return polarization_; }
  const RuledClass& section() const { return section_; }
  const Rat& a() const { return polarization_.g_coeff; }
  const Rat& b() const { return polarization_.f_coeff; }
  Rat section_square() const;
  RuledClass canonical_class() const;

private:
  int genus_;
  RuledClass polarization_;
  RuledClass section_;
};

/// Degree of contact of the order-of-vanishing flag along the section:
/// 3a^2 (D.S) - a^3 (S.S). Valid as the exact contact degree under the
/// vanishing hypothesis on the higher cohomology of D - jS.
Rat contact_ruled(const RuledSurfaceData& data);

/// Degree of the polarized surface, D.D.
Rat ruled_degree(const RuledClass& polarization);

struct FiltrationDimension {
  int level = 0; // order of vanishing along the section
  Rat chi;       // Euler characteristic of D - level*S
};

struct FiltrationDimensions {
  std::vector<FiltrationDimension> levels; // level = 0..a
  Rat weight_total;                        // sum of chi over levels 1..a
};

/// Euler characteristics chi(D - jS) for j = 0..a by surface Riemann-Roch;
/// these are the flag dimensions when the higher cohomology vanishes.
/// Throws negative_dimension_error when some chi is negative, which rules
/// that hypothesis out.
FiltrationDimensions filtration_dimensions(const RuledSurfaceData& data);

/// The rational elliptic surface with a IV* fibre, polarized by
/// D = 3k S + 6k f.
struct EllipticData {
  Int k;
};

struct EllipticInvariants {
  Int degree;              // 27 k^2
  Int h0;                  // (27 k^2 + 3k + 2) / 2
  Rat weight_sum;          // (225/2) k^3 + 9 k^2 + (23/2) k
  Int contact_lower_bound; // 675 k^3
  Rat mean_weight_lower_bound; // (25/3) k
};

/// Invariants of the IV* polarization; stored closed forms, checked for
/// internal consistency by the tests rather than recomputed from the fibre
/// lattice.
EllipticInvariants elliptic_invariants(const EllipticData& data);

} // namespace chowcert

#endif

#ifndef CHOWCERT_HEIGHTS_HPP
#define CHOWCERT_HEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chowcert/monomial.hpp"
#include "chowcert/rational.hpp"

namespace chowcert {

/// The real place or a finite place of the rationals.
class Place {
public:
  static Place real();
  static Place finite(Int prime);

  bool is_real() const { return !prime_.has_value(); }
  const Int& prime() const;
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.prime_ == b.prime_;
  }

private:
  Place() = default;
  std::optional<Int> prime_;
};

/// A point of projective space with integer coordinates, primitive and with
/// positive leading nonzero coordinate. Equality is exact vector equality.
class ProjectivePoint {
public:
  explicit ProjectivePoint(std::vector<Int> coords);

  const std::vector<Int>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ < b.coords_;
  }

private:
  std::vector<Int> coords_;
};

/// Height of a point, kept exactly: the finite places contribute nothing for
/// primitive coordinates, and the real place contributes half the log of the
/// coordinate norm square.
struct HeightRecord {
  Int norm_sq;
  bool is_zero() const { return norm_sq == 1; }
};

/// A linear form with rational coefficients in the coordinates of the target
/// projective space.
using LinearForm = std::vector<Rat>;

/// log(|l(x)|_v / |x|_v), stored exactly as half the log of a rational:
/// the value is (1/2) log(ratio_sq), or minus infinity when l(x) = 0.
struct Defect {
  bool minus_infinity = false;
  Rat ratio_sq;
};

/// Places, forms, weights and scalings of one simultaneous approximation
/// problem.
struct PlaceSystem {
  Place place;
  std::vector<LinearForm> forms; // N + 1 forms of N + 1 coefficients
  WeightVector weights;          // N + 1 weights, non-increasing
  Rat scaling;                   // positive
};

class ApproximationSystem {
public:
  explicit ApproximationSystem(std::vector<PlaceSystem> places);

  const std::vector<PlaceSystem>& places() const { return places_; }
  std::size_t coordinate_count() const; // N + 1

private:
  std::vector<PlaceSystem> places_;
};

/// |x|_v as an exact rational; |x| at the real place, p^{-ord_p(x)} at a
/// finite place.
Rat abs_value(const Rat& x, const Place& place);

/// Product of |x|_v over the real place and every prime dividing the
/// numerator or denominator; equals one for every nonzero rational.
Rat product_formula_check(const Rat& x);

HeightRecord height(const ProjectivePoint& point);

Rat evaluate_form(const LinearForm& form, const ProjectivePoint& point);

Defect approx_defect(const ProjectivePoint& point, const Place& place,
                     const LinearForm& form);

/// Whether every inequality of the system holds at the point:
/// defect(v, i) <= -(r_{v,i}/d_v) h(x), decided by exact cross-powered
/// rational comparison.
bool solves_system(const ProjectivePoint& point,
                   const ApproximationSystem& system);

struct SearchHit {
  std::vector<Int> parameter;
  ProjectivePoint image;
};

/// Enumerates primitive parameter tuples with coordinates in
/// [-height_bound, height_bound] in lexicographic order, maps them through
/// the monomial map, and keeps the images solving the system. Images are
/// deduplicated, first parameter wins.
std::vector<SearchHit> search_points(const MonomialMap& map,
                                     const ApproximationSystem& system,
                                     long height_bound, int jobs = 1);

} // namespace chowcert

#endif

#include "chowcert/heights.hpp"

#include <algorithm>
#include <set>

#include "chowcert/errors.hpp"
#include "chowcert/parallel.hpp"

namespace chowcert {

Place Place::real() { return Place(); }

Place Place::finite(Int prime) {
  if (!is_prime(prime))
    throw config_error("finite places are indexed by primes");
  Place place;
  place.prime_ = std::move(prime);
  return place;
}

const Int& Place::prime() const {
  if (!prime_)
    throw error("the real place has no prime");
  return *prime_;
}

std::string Place::to_string() const {
  return prime_ ? prime_->get_str() : std::string("real");
}

ProjectivePoint::ProjectivePoint(std::vector<Int> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty())
    throw config_error("projective point needs coordinates");
  Int g = 0;
  for (const Int& c : coords_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0)
    throw config_error("projective point cannot be the zero vector");
  int sign = 0;
  for (const Int& c : coords_)
    if (c != 0) {
      sign = sgn(c);
      break;
    }
  if (sign < 0)
    g = -g;
  if (g != 1)
    for (Int& c : coords_)
      c /= g;
}

ApproximationSystem::ApproximationSystem(std::vector<PlaceSystem> places)
    : places_(std::move(places)) {
  if (places_.empty())
    throw config_error("system needs at least one place");
  const std::size_t n = places_.front().forms.size();
  bool has_real = false;
  std::vector<Place> seen;
  for (const PlaceSystem& p : places_) {
    if (p.place.is_real())
      has_real = true;
    if (std::find(seen.begin(), seen.end(), p.place) != seen.end())
      throw config_error("duplicate place in system");
    seen.push_back(p.place);
    if (p.forms.size() != n || p.weights.size() != n)
      throw config_error("every place needs one form and weight per coordinate");
    if (n == 0)
      throw config_error("system needs at least one form");
    for (const LinearForm& form : p.forms)
      if (form.size() != n)
        throw config_error("forms must have one coefficient per coordinate");
    if (p.scaling <= 0)
      throw config_error("scalings must be positive");
  }
  if (!has_real)
    throw config_error("the set of places must contain the real place");
}

std::size_t ApproximationSystem::coordinate_count() const {
  return places_.front().forms.size();
}

Rat abs_value(const Rat& x, const Place& place) {
  if (x == 0)
    throw zero_input_error("absolute value of zero is excluded");
  if (place.is_real())
    return abs(x);
  const long order = ord_at(place.prime(), x.get_num()) -
                     ord_at(place.prime(), x.get_den());
  Rat value;
  if (order >= 0)
    value = Rat(1, ipow(place.prime(), static_cast<unsigned long>(order)));
  else
    value = Rat(ipow(place.prime(), static_cast<unsigned long>(-order)));
  value.canonicalize();
  return value;
}

Rat product_formula_check(const Rat& x) {
  if (x == 0)
    throw zero_input_error("product formula needs a nonzero input");
  Rat product = abs_value(x, Place::real());
  std::set<Int> primes;
  for (const Int& p : prime_factors(x.get_num()))
    primes.insert(p);
  for (const Int& p : prime_factors(x.get_den()))
    primes.insert(p);
  for (const Int& p : primes)
    product *= abs_value(x, Place::finite(p));
  return product;
}

HeightRecord height(const ProjectivePoint& point) {
  Int norm_sq = 0;
  for (const Int& c : point.coords())
    norm_sq += c * c;
  return HeightRecord{norm_sq};
}

Rat evaluate_form(const LinearForm& form, const ProjectivePoint& point) {
  if (form.size() != point.size())
    throw config_error("form and point sizes differ");
  Rat value = 0;
  for (std::size_t i = 0; i < form.size(); ++i)
    value += form[i] * Rat(point.coords()[i]);
  return value;
}

Defect approx_defect(const ProjectivePoint& point, const Place& place,
                     const LinearForm& form) {
  const Rat value = evaluate_form(form, point);
  if (value == 0)
    return Defect{true, Rat(0)};
  Defect defect;
  if (place.is_real()) {
    defect.ratio_sq = value * value / Rat(height(point).norm_sq);
  } else {
    // primitivity makes the projective norm at a finite place equal to one
    const Rat v = abs_value(value, place);
    defect.ratio_sq = v * v;
  }
  defect.ratio_sq.canonicalize();
  return defect;
}

namespace {

// defect <= -(weight/scaling) * h(x), all sides half-logs of rationals:
// equivalent to a^q * norm_sq^p <= b^q for weight/scaling = p/q and
// ratio_sq = a/b. Bit-length bounds decide all but near-boundary cases
// before any large power is formed.
bool defect_within(const Defect& defect, const Rat& weight_over_scaling,
                   const Int& norm_sq) {
  if (defect.minus_infinity)
    return true;
  if (weight_over_scaling == 0 || norm_sq == 1)
    return defect.ratio_sq <= 1;
  if (!weight_over_scaling.get_num().fits_ulong_p() ||
      !weight_over_scaling.get_den().fits_ulong_p())
    throw error("weight/scaling ratio too large to compare");
  const unsigned long p = weight_over_scaling.get_num().get_ui();
  const unsigned long q = weight_over_scaling.get_den().get_ui();
  const Int& a = defect.ratio_sq.get_num();
  const Int& b = defect.ratio_sq.get_den();
  const unsigned long size_a = mpz_sizeinbase(a.get_mpz_t(), 2);
  const unsigned long size_b = mpz_sizeinbase(b.get_mpz_t(), 2);
  const unsigned long size_n = mpz_sizeinbase(norm_sq.get_mpz_t(), 2);
  // 2^{size-1} <= x < 2^{size}
  const Int low = Int(q) * (size_a - 1) + Int(p) * (size_n - 1);
  const Int high = Int(q) * size_a + Int(p) * size_n;
  const Int rhs_low = Int(q) * (size_b - 1);
  const Int rhs_high = Int(q) * size_b;
  if (low >= rhs_high)
    return false;
  if (high <= rhs_low)
    return true;
  return ipow(a, q) * ipow(norm_sq, p) <= ipow(b, q);
}

} // namespace

bool solves_system(const ProjectivePoint& point,
                   const ApproximationSystem& system) {
  if (point.size() != system.coordinate_count())
    throw config_error("point does not live in the system's space");
  const Int norm_sq = height(point).norm_sq;
  for (const PlaceSystem& p : system.places()) {
    for (std::size_t i = 0; i < p.forms.size(); ++i) {
      const Rat ratio = p.weights[i] / p.scaling;
      if (!defect_within(approx_defect(point, p.place, p.forms[i]), ratio,
                         norm_sq))
        return false;
    }
  }
  return true;
}

namespace {

bool is_primitive_parameter(const std::vector<Int>& values) {
  Int g = 0;
  for (const Int& v : values)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1)
    return false;
  for (const Int& v : values)
    if (v != 0)
      return v > 0;
  return false;
}

Int evaluate_monomial(const Monomial& monomial, const std::vector<Int>& at) {
  Int value = 1;
  for (std::size_t i = 0; i < at.size(); ++i) {
    const Int& e = monomial.exponents()[i];
    if (e == 0)
      continue;
    Int factor;
    mpz_pow_ui(factor.get_mpz_t(), at[i].get_mpz_t(), e.get_ui());
    value *= factor;
  }
  return value;
}

} // namespace

std::vector<SearchHit> search_points(const MonomialMap& map,
                                     const ApproximationSystem& system,
                                     long height_bound, int jobs) {
  if (height_bound < 1)
    throw config_error("height bound must be positive");
  if (system.coordinate_count() != map.generator_count())
    throw config_error("system and map target different projective spaces");
  const std::size_t vars = static_cast<std::size_t>(map.ambient_vars());
  const unsigned long width = 2 * static_cast<unsigned long>(height_bound) + 1;
  double volume = 1;
  for (std::size_t i = 0; i < vars; ++i)
    volume *= static_cast<double>(width);
  if (volume > 2e8)
    throw error("parameter enumeration box too large");
  if (!map.common_degree().fits_ulong_p())
    throw error("generator degree too large for evaluation");
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < vars; ++i)
      t *= width;
    return t;
  }();

  // decode an enumeration index into a tuple, most significant digit first,
  // so ascending index is ascending lexicographic order
  auto decode = [&](std::size_t index) {
    std::vector<Int> parameter(vars);
    for (std::size_t i = vars; i-- > 0;) {
      parameter[i] = Int(static_cast<long>(index % width) - height_bound);
      index /= width;
    }
    return parameter;
  };

  auto probe = [&](std::size_t index) -> std::optional<SearchHit> {
    std::vector<Int> parameter = decode(index);
    if (!is_primitive_parameter(parameter))
      return std::nullopt;
    std::vector<Int> image;
    image.reserve(map.generator_count());
    bool all_zero = true;
    for (const Monomial& g : map.generators()) {
      image.push_back(evaluate_monomial(g, parameter));
      if (image.back() != 0)
        all_zero = false;
    }
    if (all_zero)
      return std::nullopt; // the map is undefined at this parameter
    ProjectivePoint point(std::move(image));
    if (!solves_system(point, system))
      return std::nullopt;
    return SearchHit{std::move(parameter), std::move(point)};
  };

  // fixed blocks, merged in index order: the output does not depend on the
  // thread count
  const std::size_t block = 4096;
  const std::size_t blocks = (total + block - 1) / block;
  std::vector<std::vector<SearchHit>> partial(blocks);
  parallel_for(blocks, jobs, [&](std::size_t bi) {
    const std::size_t begin = bi * block;
    const std::size_t end = std::min(total, begin + block);
    for (std::size_t index = begin; index < end; ++index)
      if (auto hit = probe(index))
        partial[bi].push_back(std::move(*hit));
  });

  std::vector<SearchHit> out;
  std::set<ProjectivePoint> seen_images;
  for (std::vector<SearchHit>& chunk : partial)
    for (SearchHit& hit : chunk) {
      if (!seen_images.insert(hit.image).second)
        continue;
      out.push_back(std::move(hit));
    }
  return out;
}

} // namespace chowcert

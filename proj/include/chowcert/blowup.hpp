#ifndef CHOWCERT_BLOWUP_HPP
#define CHOWCERT_BLOWUP_HPP

#include <vector>

#include "chowcert/rational.hpp"

namespace chowcert {

/// Intersection data of a blow-up: the mixed products nu[i] = H^{n-i}.(-E)^i
/// for i = 0..n, and the polarization rH - sE.
class BlowupData {
public:
  BlowupData(int n, std::vector<Rat> nu, long r, long s);

  int n() const { return n_; }
  const std::vector<Rat>& nu() const { return nu_; }
  long r() const { return r_; }
  long s() const { return s_; }

private:
  int n_;
  std::vector<Rat> nu_;
  long r_;
  long s_;
};

/// Cone over a polarized variety: all mixed products vanish except
/// H^n = h and (-E)^n = -h.
class ConeData {
public:
  ConeData(int n, Rat h, long r, long s, int sigma_count);

  int n() const { return n_; }
  const Rat& h() const { return h_; }
  long r() const { return r_; }
  long s() const { return s_; }
  int sigma_count() const { return sigma_count_; }

  BlowupData to_blowup_data() const;

private:
  int n_;
  Rat h_;
  long r_;
  long s_;
  int sigma_count_;
};

/// Lower bound for the degree of contact of the order-of-vanishing
/// filtration along the exceptional divisor:
/// sum_i nu_i C(n+1, i+1) ((i+1)(r-s) r^{n-i} s^i - r^{n+1} + r^{n-i} s^{i+1}).
Rat contact_lower_bound(const BlowupData& data);

/// Degree of the polarization, (rH - sE)^n = sum_i C(n,i) r^{n-i} s^i nu_i.
Rat polarization_degree(const BlowupData& data);

struct ConeVerdict {
  bool pass = false;
  Rat margin; // (n+1) s^n (s-r) + r^{n+1} - s^{n+1} - (n+1)(r^n - s^n)/#places
};

/// Threshold condition for the cone specialization.
ConeVerdict cone_condition(const ConeData& data);

} // namespace chowcert

#endif

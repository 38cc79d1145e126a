#include "chowcert/blowup.hpp"

#include "chowcert/errors.hpp"

namespace chowcert {

BlowupData::BlowupData(int n, std::vector<Rat> nu, long r, long s)
    : n_(n), nu_(std::move(nu)), r_(r), s_(s) {
  if (n_ < 2)
    throw config_error("blow-up dimension must be at least 2");
  if (nu_.size() != static_cast<std::size_t>(n_) + 1)
    throw config_error("need n + 1 mixed intersection numbers");
  if (r_ < 1)
    throw config_error("polarization parameter r must be positive");
  if (s_ < 0 || s_ > r_)
    throw config_error("need 0 <= s <= r");
}

ConeData::ConeData(int n, Rat h, long r, long s, int sigma_count)
    : n_(n), h_(std::move(h)), r_(r), s_(s), sigma_count_(sigma_count) {
  if (n_ < 2)
    throw config_error("cone dimension must be at least 2");
  if (h_ <= 0)
    throw config_error("cone degree must be positive");
  if (r_ < 1 || s_ < 0 || s_ > r_)
    throw config_error("need 0 <= s <= r with r positive");
  if (sigma_count_ < 1)
    throw config_error("need at least one place");
}

BlowupData ConeData::to_blowup_data() const {
  std::vector<Rat> nu(static_cast<std::size_t>(n_) + 1, Rat(0));
  nu.front() = h_;
  nu.back() = -h_;
  return BlowupData(n_, std::move(nu), r_, s_);
}

namespace {

Rat power_of(long base, unsigned long exp) { return Rat(ipow(Int(base), exp)); }

} // namespace

Rat contact_lower_bound(const BlowupData& data) {
  const int n = data.n();
  const long r = data.r(), s = data.s();
  Rat total = 0;
  for (int i = 0; i <= n; ++i) {
    const Rat bracket = Rat(i + 1) * Rat(r - s) *
                            power_of(r, static_cast<unsigned long>(n - i)) *
                            power_of(s, static_cast<unsigned long>(i)) -
                        power_of(r, static_cast<unsigned long>(n) + 1) +
                        power_of(r, static_cast<unsigned long>(n - i)) *
                            power_of(s, static_cast<unsigned long>(i) + 1);
    total += data.nu()[static_cast<std::size_t>(i)] *
             Rat(binomial(static_cast<unsigned long>(n) + 1,
                          static_cast<unsigned long>(i) + 1)) *
             bracket;
  }
  return total;
}

Rat polarization_degree(const BlowupData& data) {
  const int n = data.n();
  Rat total = 0;
  for (int i = 0; i <= n; ++i)
    total += Rat(binomial(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(i))) *
             power_of(data.r(), static_cast<unsigned long>(n - i)) *
             power_of(data.s(), static_cast<unsigned long>(i)) *
             data.nu()[static_cast<std::size_t>(i)];
  return total;
}

ConeVerdict cone_condition(const ConeData& data) {
  const int n = data.n();
  const long r = data.r(), s = data.s();
  const Rat lhs = Rat(n + 1) * power_of(s, static_cast<unsigned long>(n)) *
                      Rat(s - r) +
                  power_of(r, static_cast<unsigned long>(n) + 1) -
                  power_of(s, static_cast<unsigned long>(n) + 1);
  const Rat ambient = Rat(n + 1) *
                      (power_of(r, static_cast<unsigned long>(n)) -
                       power_of(s, static_cast<unsigned long>(n))) /
                      Rat(data.sigma_count());
  ConeVerdict verdict;
  verdict.margin = lhs - ambient;
  verdict.pass = verdict.margin > 0;
  return verdict;
}

} // namespace chowcert

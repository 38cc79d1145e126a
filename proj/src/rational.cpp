#include "chowcert/rational.hpp"

#include "chowcert/errors.hpp"

namespace chowcert {

Rat parse_rational(const std::string& text) {
  if (text.empty())
    throw config_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rat(Int(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      throw config_error("malformed rational literal: " + text);
    const Int denominator(den);
    if (denominator == 0)
      throw config_error("zero denominator in rational literal: " + text);
    Rat value(Int(num), denominator);
    value.canonicalize();
    return value;
  } catch (const std::invalid_argument&) {
    throw config_error("malformed rational literal: " + text);
  }
}

std::string rational_to_string(const Rat& value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int parse_integer(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw config_error("malformed integer literal: " + text);
  }
}

Rat frac(const Int& numerator, const Int& denominator) {
  if (denominator == 0)
    throw zero_input_error("fraction with zero denominator");
  Rat value(numerator, denominator);
  value.canonicalize();
  return value;
}

Int factorial(unsigned long n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int binomial(unsigned long n, unsigned long k) {
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Int ipow(const Int& base, unsigned long exp) {
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

Rat qpow(const Rat& base, unsigned long exp) {
  Rat result(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  result.canonicalize();
  return result;
}

long ord_at(const Int& prime, const Int& value) {
  if (value == 0)
    throw zero_input_error("ord is undefined at zero");
  Int remaining = abs(value);
  long order = 0;
  Int quotient, remainder;
  for (;;) {
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                remaining.get_mpz_t(), prime.get_mpz_t());
    if (remainder != 0)
      return order;
    remaining = quotient;
    ++order;
  }
}

std::vector<Int> prime_factors(const Int& value) {
  if (value == 0)
    throw zero_input_error("cannot factor zero");
  Int remaining = abs(value);
  std::vector<Int> factors;
  auto strip = [&](const Int& p) {
    if (remaining % p == 0) {
      factors.push_back(p);
      do {
        remaining /= p;
      } while (remaining % p == 0);
    }
  };
  strip(2);
  strip(3);
  // trial division over 6k +/- 1
  for (Int p = 5; p * p <= remaining; p += 4) {
    strip(p);
    p += 2;
    if (p * p > remaining)
      break;
    strip(p);
  }
  if (remaining > 1)
    factors.push_back(remaining);
  return factors;
}

bool is_prime(const Int& value) {
  if (value < 2)
    return false;
  return mpz_probab_prime_p(value.get_mpz_t(), 40) != 0;
}

} // namespace chowcert

#ifndef CHOWCERT_ERRORS_HPP
#define CHOWCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chowcert {

// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A monomial admits no factorization into the requested number of generators.
class not_in_image_error : public error {
public:
  using error::error;
};

// A filtration profile has no sample at the requested degree.
class missing_sample_error : public error {
public:
  using error::error;
};

// Too few consecutive samples to form the requested finite difference.
class insufficient_samples_error : public error {
public:
  using error::error;
};

// A monomial ideal misses a pure power of some variable.
class infinite_colength_error : public error {
public:
  using error::error;
};

// Finite differences did not settle within the allowed range.
class not_stabilized_error : public error {
public:
  using error::error;
};

// An Euler characteristic in a filtration came out negative.
class negative_dimension_error : public error {
public:
  using error::error;
};

// Bundle-unstable certificate requested for a bundle-semistable surface.
class not_bundle_unstable_error : public error {
public:
  using error::error;
};

// Zero passed where a nonzero value is required.
class zero_input_error : public error {
public:
  using error::error;
};

// Malformed configuration file or field.
class config_error : public error {
public:
  using error::error;
};

} // namespace chowcert

#endif

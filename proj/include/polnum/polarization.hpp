#pragma once

// Polarization types (d_1 | d_2 | ... | d_g), their Euler characteristic,
// the type of the dual polarization, and formal rational rescalings.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"

namespace polnum {

/// Which variety of the pair (A, dual of A) a quantity lives on, relative to
/// the polarization the computation started from.
enum class Side { primal, dual };

inline Side opposite(Side s) { return s == Side::primal ? Side::dual : Side::primal; }

inline const char *to_string(Side s) { return s == Side::primal ? "primal" : "dual"; }

/// The elementary divisors of a polarization. Construct through
/// validate_type() so the divisibility chain is always checked.
class PolarizationType {
public:
  const std::vector<Integer> &dims() const { return dims_; }
  unsigned g() const { return static_cast<unsigned>(dims_.size()); }
  const Integer &first() const { return dims_.front(); }
  const Integer &last() const { return dims_.back(); }
  const Integer &operator[](std::size_t i) const { return dims_[i]; }

  /// d_1 * d_g, the multiplier of the pullback of the dual polarization.
  Integer d1dg() const { return first() * last(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i)
        out += ',';
      out += dims_[i].str();
    }
    return out;
  }

  friend bool operator==(const PolarizationType &,
                         const PolarizationType &) = default;

  friend PolarizationType validate_type(std::vector<Integer> dims);

private:
  explicit PolarizationType(std::vector<Integer> dims)
      : dims_(std::move(dims)) {}
  std::vector<Integer> dims_;
};

/// Checks positivity and d_i | d_{i+1}. A chain violation names the 1-based
/// index i of the first d_i that does not divide its successor.
inline PolarizationType validate_type(std::vector<Integer> dims) {
  if (dims.empty())
    throw DomainError("polarization type must be nonempty");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] <= 0)
      throw DomainError("type entry at index " + std::to_string(i + 1) +
                        " is not positive");
  }
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    if (dims[i + 1] % dims[i] != 0)
      throw DomainError("divisibility chain violated at index " +
                        std::to_string(i + 1) + ": " + dims[i].str() +
                        " does not divide " + dims[i + 1].str());
  }
  return PolarizationType(std::move(dims));
}

template <std::integral T>
PolarizationType validate_type(std::initializer_list<T> dims) {
  std::vector<Integer> v;
  for (T d : dims)
    v.emplace_back(d);
  return validate_type(std::move(v));
}

/// Parses "1,2,4".
inline PolarizationType parse_type(std::string_view text) {
  std::vector<Integer> dims;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    dims.push_back(parse_integer(piece));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return validate_type(std::move(dims));
}

inline Integer chi(const PolarizationType &t) {
  Integer p = 1;
  for (const auto &d : t.dims())
    p *= d;
  return p;
}

/// (d_1, d_1 d_g / d_{g-1}, ..., d_1 d_g / d_2, d_g).
inline PolarizationType dual_type(const PolarizationType &t) {
  const Integer m = t.d1dg();
  const std::size_t g = t.g();
  std::vector<Integer> out(g);
  for (std::size_t i = 0; i < g; ++i)
    out[i] = m / t[g - 1 - i];
  return validate_type(std::move(out));
}

/// A polarization formally rescaled by a positive rational. The formal type
/// is (scale * d_1, ..., scale * d_g).
class FractionalPolarization {
public:
  FractionalPolarization(PolarizationType base, ExactRational scale)
      : base_(std::move(base)), scale_(std::move(scale)) {
    if (scale_.sign() <= 0)
      throw DomainError("polarization scale must be positive");
  }

  const PolarizationType &base() const { return base_; }
  const ExactRational &scale() const { return scale_; }
  unsigned g() const { return base_.g(); }

  std::vector<ExactRational> formal_dims() const {
    std::vector<ExactRational> out;
    for (const auto &d : base_.dims())
      out.push_back(scale_ * ExactRational(d));
    return out;
  }
  ExactRational formal_first() const { return scale_ * ExactRational(base_.first()); }
  ExactRational formal_last() const { return scale_ * ExactRational(base_.last()); }
  ExactRational formal_chi() const {
    return scale_.pow(g()) * ExactRational(chi(base_));
  }
  /// (scale d_1)(scale d_g)
  ExactRational formal_d1dg() const { return formal_first() * formal_last(); }

  /// The dual of scale * l is scale * (dual of l).
  FractionalPolarization dual() const {
    return FractionalPolarization(dual_type(base_), scale_);
  }

  friend bool operator==(const FractionalPolarization &,
                         const FractionalPolarization &) = default;

private:
  PolarizationType base_;
  ExactRational scale_;
};

inline FractionalPolarization scale(const PolarizationType &t,
                                    const ExactRational &nu) {
  return FractionalPolarization(t, nu);
}

} // namespace polnum

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdp/error.hpp"

namespace vdp {

bool is_prime(std::uint64_t n);

/// p-adic absolute value of a number known to K digits: either a finite
/// exponent v (|x|_p = p^-v, with digit v the first nonzero one) or
/// "at least K" when every stored digit is zero, which is indistinguishable
/// from 0 at this precision. The at-least-K marker compares greater than
/// every finite exponent.
class Valuation {
 public:
  static Valuation finite(std::uint32_t exponent) { return Valuation(exponent); }
  static Valuation at_least_precision() { return Valuation(std::nullopt); }

  bool is_at_least_precision() const { return !exponent_.has_value(); }
  /// Finite exponent; only valid when !is_at_least_precision().
  std::uint32_t exponent() const { return *exponent_; }

  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& other) const {
    return rank() <=> other.rank();
  }

 private:
  explicit Valuation(std::optional<std::uint32_t> e) : exponent_(e) {}
  std::uint64_t rank() const {
    return exponent_ ? std::uint64_t{*exponent_} : ~std::uint64_t{0};
  }
  std::optional<std::uint32_t> exponent_;
};

/// A p-adic integer truncated to K base-p digits d_0..d_{K-1}, standing for
/// sum d_k p^k. Values are immutable; arithmetic is exact in Z/p^K Z and
/// requires both operands to share p and K. p must be prime and p^K must fit
/// in 62 bits so every value converts exactly to a machine integer.
class PadicInt {
 public:
  PadicInt(std::uint32_t p, std::vector<std::uint32_t> digits);

  static PadicInt from_integer(std::uint64_t n, std::uint32_t p, std::uint32_t precision);
  static PadicInt zero(std::uint32_t p, std::uint32_t precision) {
    return from_integer(0, p, precision);
  }

  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return static_cast<std::uint32_t>(digits_.size()); }
  const std::vector<std::uint32_t>& digits() const { return digits_; }

  /// k-th base-p digit (the digit map delta_k); k must be < precision.
  std::uint32_t digit(std::uint32_t k) const;

  /// Index of the first nonzero digit, or the at-least-K marker for 0.
  Valuation valuation() const;

  std::uint64_t to_uint64() const;
  bool is_zero() const;
  bool is_unit() const { return digits_[0] != 0; }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

  bool operator==(const PadicInt&) const = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  PadicInt(Unchecked, std::uint32_t p, std::vector<std::uint32_t> digits)
      : p_(p), digits_(std::move(digits)) {}

  std::uint32_t p_;
  std::vector<std::uint32_t> digits_;  // little-endian, each < p_
};

PadicInt add(const PadicInt& a, const PadicInt& b);
PadicInt sub(const PadicInt& a, const PadicInt& b);
PadicInt mul(const PadicInt& a, const PadicInt& b);

}  // namespace vdp

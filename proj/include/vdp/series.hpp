#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vdp/function_table.hpp"
#include "vdp/padic.hpp"

namespace vdp {

/// floor(log_p m) for m >= 1, and 0 for m = 0. This is the power of p that
/// divides the m-th coefficient of every 1-Lipschitz function.
std::uint32_t coeff_scale(std::uint64_t m, std::uint32_t p);

/// The ball level n of index m: n = 1 for m = 0, otherwise the unique n with
/// p^(n-1) <= m <= p^n - 1. chi(m, .) is the indicator of the ball of radius
/// p^-n around m.
std::uint32_t ball_level(std::uint64_t m, std::uint32_t p);

/// chi(m, x) = 1 iff x = m (mod p^n) with n = ball_level(m).
/// m must be < p^K of x.
int chi(std::uint64_t m, const PadicInt& x);
int chi(std::uint64_t m, std::uint64_t x, std::uint32_t p, std::uint32_t precision);

/// A truncated coefficient table {B_m : 0 <= m < p^K} for the expansion
/// f(x) = sum B_m chi(m, x). Coefficients are residues mod p^K; only the
/// top K - coeff_scale(m) digits of entry m carry information about f.
class VdpSeries {
 public:
  VdpSeries(std::uint32_t p, std::uint32_t precision, std::vector<std::uint64_t> coeffs,
            std::uint64_t max_size = kDefaultTableLimit);

  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return precision_; }
  std::uint64_t size() const { return coeffs_.size(); }
  std::uint64_t modulus() const { return pow_.back(); }
  std::uint64_t pow(std::uint32_t k) const { return pow_[k]; }

  std::uint64_t coeff(std::uint64_t m) const;
  PadicInt coeff_padic(std::uint64_t m) const;
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  bool operator==(const VdpSeries&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t precision_;
  std::vector<std::uint64_t> coeffs_;
  std::vector<std::uint64_t> pow_;
};

/// Coefficient extraction: B_m = f(m) for m < p and
/// B_m = f(m) - f(m - m_{n-1} p^{n-1}) for m >= p, where m_{n-1} is the
/// leading base-p digit of m (so the subtracted point is m mod p^{n-1}).
VdpSeries coefficients(const FunctionTable& f);

/// Series evaluation at x. Of the full sum over m, only the prefixes of x
/// contribute, so this walks the chain x mod p, x mod p^2, ..., adding each
/// distinct coefficient once.
PadicInt evaluate(const VdpSeries& s, const PadicInt& x);
std::uint64_t evaluate(const VdpSeries& s, std::uint64_t x);

/// Tabulates the series at every representative x < p^K.
FunctionTable to_table(const VdpSeries& s);

/// Normalized coefficients b_m = B_m / p^coeff_scale(m). Entry m is stored
/// zero-extended; only K - coeff_scale(m) digits are meaningful.
struct NormalizedCoeffs {
  std::uint32_t p = 0;
  std::uint32_t precision = 0;
  std::vector<std::uint64_t> b;

  std::uint32_t residue(std::uint64_t m) const { return static_cast<std::uint32_t>(b[m] % p); }
  std::uint32_t meaningful_digits(std::uint64_t m) const {
    return precision - coeff_scale(m, p);
  }
  PadicInt coeff_padic(std::uint64_t m) const;
};

/// Outcome of dividing every B_m by its p^scale. Failure is a value, not an
/// error: the least index whose coefficient is not divisible enough, which is
/// exactly a witness that the function is not 1-Lipschitz.
struct NormalizeResult {
  std::optional<NormalizedCoeffs> coeffs;
  std::optional<std::uint64_t> witness_m;

  bool ok() const { return coeffs.has_value(); }
};

NormalizeResult normalize(const VdpSeries& s);

}  // namespace vdp

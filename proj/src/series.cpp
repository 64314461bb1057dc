#include "vdp/series.hpp"

#include <string>

namespace vdp {

std::uint32_t coeff_scale(std::uint64_t m, std::uint32_t p) {
  std::uint32_t s = 0;
  while (m >= p) {
    m /= p;
    ++s;
  }
  return s;
}

std::uint32_t ball_level(std::uint64_t m, std::uint32_t p) {
  return m == 0 ? 1 : coeff_scale(m, p) + 1;
}

int chi(std::uint64_t m, std::uint64_t x, std::uint32_t p, std::uint32_t precision) {
  std::uint64_t size = 1;
  for (std::uint32_t k = 0; k < precision; ++k) size *= p;
  if (m >= size) {
    throw Error(Errc::PrecisionExceeded,
                "ball index " + std::to_string(m) + " is not below p^K");
  }
  const std::uint32_t n = ball_level(m, p);
  std::uint64_t pn = 1;
  for (std::uint32_t k = 0; k < n; ++k) pn *= p;
  return (x % pn) == m ? 1 : 0;  // m < p^n, so congruence mod p^n means equality
}

int chi(std::uint64_t m, const PadicInt& x) {
  return chi(m, x.to_uint64(), x.prime(), x.precision());
}

VdpSeries::VdpSeries(std::uint32_t p, std::uint32_t precision, std::vector<std::uint64_t> coeffs,
                     std::uint64_t max_size)
    : p_(p), precision_(precision) {
  const std::uint64_t size = checked_table_size(p, precision, max_size);
  if (coeffs.size() != size) {
    throw Error(Errc::InvalidArgument, "series needs exactly p^K = " + std::to_string(size) +
                                           " coefficients, got " + std::to_string(coeffs.size()));
  }
  pow_.resize(precision + 1);
  pow_[0] = 1;
  for (std::uint32_t k = 0; k < precision; ++k) pow_[k + 1] = pow_[k] * p;
  for (std::uint64_t m = 0; m < size; ++m) {
    if (coeffs[m] >= size) {
      throw Error(Errc::InvalidArgument, "coefficient " + std::to_string(coeffs[m]) + " at m=" +
                                             std::to_string(m) + " is not below p^K");
    }
  }
  coeffs_ = std::move(coeffs);
}

std::uint64_t VdpSeries::coeff(std::uint64_t m) const {
  if (m >= size()) {
    throw Error(Errc::PrecisionExceeded,
                "coefficient index " + std::to_string(m) + " is not below p^K");
  }
  return coeffs_[m];
}

PadicInt VdpSeries::coeff_padic(std::uint64_t m) const {
  return PadicInt::from_integer(coeff(m), p_, precision_);
}

VdpSeries coefficients(const FunctionTable& f) {
  const std::uint64_t size = f.size();
  const std::uint64_t mod = f.modulus();
  const std::uint32_t p = f.prime();
  std::vector<std::uint64_t> B(size);
  for (std::uint64_t m = 0; m < size && m < p; ++m) B[m] = f.value(m);
  std::uint32_t s = 1;
  for (std::uint64_t m = p; m < size; ++m) {
    if (m == f.pow(s + 1)) ++s;
    // Dropping the leading digit of m is reduction mod p^s.
    B[m] = (f.value(m) + mod - f.value(m % f.pow(s))) % mod;
  }
  return VdpSeries(f.prime(), f.precision(), std::move(B), size);
}

std::uint64_t evaluate(const VdpSeries& s, std::uint64_t x) {
  if (x >= s.size()) {
    throw Error(Errc::PrecisionExceeded,
                "argument " + std::to_string(x) + " is not below p^K");
  }
  std::uint64_t acc = 0;
  std::uint64_t last = ~std::uint64_t{0};
  for (std::uint32_t j = 1; j <= s.precision(); ++j) {
    const std::uint64_t m = x % s.pow(j);
    if (m != last) {
      acc += s.coeffs()[m];
      last = m;
    }
  }
  return acc % s.modulus();
}

PadicInt evaluate(const VdpSeries& s, const PadicInt& x) {
  if (x.prime() != s.prime() || x.precision() != s.precision()) {
    throw Error(Errc::DomainMismatch, "argument domain differs from series domain");
  }
  return PadicInt::from_integer(evaluate(s, x.to_uint64()), s.prime(), s.precision());
}

FunctionTable to_table(const VdpSeries& s) {
  std::vector<std::uint64_t> values(s.size());
  for (std::uint64_t x = 0; x < s.size(); ++x) values[x] = evaluate(s, x);
  return FunctionTable(s.prime(), s.precision(), std::move(values), s.size());
}

PadicInt NormalizedCoeffs::coeff_padic(std::uint64_t m) const {
  return PadicInt::from_integer(b[m], p, precision);
}

NormalizeResult normalize(const VdpSeries& s) {
  const std::uint32_t p = s.prime();
  NormalizedCoeffs out;
  out.p = p;
  out.precision = s.precision();
  out.b.resize(s.size());
  for (std::uint64_t m = 0; m < s.size() && m < p; ++m) out.b[m] = s.coeffs()[m];
  std::uint32_t scale = 1;
  for (std::uint64_t m = p; m < s.size(); ++m) {
    if (m == s.pow(scale + 1)) ++scale;
    const std::uint64_t ps = s.pow(scale);
    const std::uint64_t B = s.coeffs()[m];
    if (B % ps != 0) {
      return NormalizeResult{std::nullopt, m};
    }
    out.b[m] = B / ps;
  }
  return NormalizeResult{std::move(out), std::nullopt};
}

}  // namespace vdp

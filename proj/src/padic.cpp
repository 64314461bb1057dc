#include "vdp/padic.hpp"

#include <sstream>

namespace vdp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

// Largest K with p^K representable in 62 bits, so values always fit uint64.
void check_domain(std::uint32_t p, std::size_t precision) {
  if (!is_prime(p)) {
    throw Error(Errc::InvalidPrime, "p must be prime, got " + std::to_string(p));
  }
  if (precision == 0) {
    throw Error(Errc::InvalidPrecision, "precision K must be at least 1");
  }
  const std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t pw = 1;
  for (std::size_t k = 0; k < precision; ++k) {
    if (pw > cap / p) {
      throw Error(Errc::InvalidPrecision,
                  "p^K exceeds the representable range (p=" + std::to_string(p) +
                      ", K=" + std::to_string(precision) + ")");
    }
    pw *= p;
  }
}

void check_same_domain(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision()) {
    throw Error(Errc::DomainMismatch,
                "operands must share p and K: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

PadicInt::PadicInt(std::uint32_t p, std::vector<std::uint32_t> digits) : p_(p) {
  check_domain(p, digits.size());
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] >= p) {
      throw Error(Errc::InvalidArgument, "digit " + std::to_string(digits[k]) + " at position " +
                                             std::to_string(k) + " is not below p");
    }
  }
  digits_ = std::move(digits);
}

PadicInt PadicInt::from_integer(std::uint64_t n, std::uint32_t p, std::uint32_t precision) {
  check_domain(p, precision);
  std::vector<std::uint32_t> digits(precision);
  for (std::uint32_t k = 0; k < precision; ++k) {
    digits[k] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
  return PadicInt(Unchecked{}, p, std::move(digits));
}

std::uint32_t PadicInt::digit(std::uint32_t k) const {
  if (k >= precision()) {
    throw Error(Errc::PrecisionExceeded, "digit index " + std::to_string(k) +
                                             " out of range for K=" + std::to_string(precision()));
  }
  return digits_[k];
}

Valuation PadicInt::valuation() const {
  for (std::uint32_t k = 0; k < precision(); ++k) {
    if (digits_[k] != 0) return Valuation::finite(k);
  }
  return Valuation::at_least_precision();
}

std::uint64_t PadicInt::to_uint64() const {
  std::uint64_t v = 0;
  for (std::size_t k = digits_.size(); k-- > 0;) {
    v = v * p_ + digits_[k];
  }
  return v;
}

bool PadicInt::is_zero() const {
  for (auto d : digits_) {
    if (d != 0) return false;
  }
  return true;
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  check_same_domain(a, b);
  std::vector<std::uint32_t> out(a.precision());
  std::uint64_t carry = 0;
  for (std::uint32_t k = 0; k < a.precision(); ++k) {
    const std::uint64_t cur = std::uint64_t{a.digits_[k]} + b.digits_[k] + carry;
    carry = cur >= a.p_ ? 1 : 0;
    out[k] = static_cast<std::uint32_t>(carry ? cur - a.p_ : cur);
  }
  return PadicInt(PadicInt::Unchecked{}, a.p_, std::move(out));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  check_same_domain(a, b);
  std::vector<std::uint32_t> out(a.precision());
  std::uint32_t borrow = 0;
  for (std::uint32_t k = 0; k < a.precision(); ++k) {
    std::int64_t cur = std::int64_t{a.digits_[k]} - b.digits_[k] - borrow;
    borrow = cur < 0 ? 1 : 0;
    out[k] = static_cast<std::uint32_t>(borrow ? cur + a.p_ : cur);
  }
  return PadicInt(PadicInt::Unchecked{}, a.p_, std::move(out));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  check_same_domain(a, b);
  const std::uint64_t p = a.p_;
  const std::uint32_t K = a.precision();
  std::vector<std::uint64_t> acc(K, 0);
  for (std::uint32_t i = 0; i < K; ++i) {
    if (a.digits_[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::uint32_t j = 0; j + i < K; ++j) {
      // acc < p, product < p^2, carry < p: fits uint64 for p < 2^31.
      std::uint64_t cur = acc[i + j] + std::uint64_t{a.digits_[i]} * b.digits_[j] + carry;
      acc[i + j] = cur % p;
      carry = cur / p;
    }
  }
  std::vector<std::uint32_t> out(K);
  for (std::uint32_t k = 0; k < K; ++k) out[k] = static_cast<std::uint32_t>(acc[k]);
  return PadicInt(PadicInt::Unchecked{}, a.p_, std::move(out));
}

PadicInt add(const PadicInt& a, const PadicInt& b) { return a + b; }
PadicInt sub(const PadicInt& a, const PadicInt& b) { return a - b; }
PadicInt mul(const PadicInt& a, const PadicInt& b) { return a * b; }

std::string PadicInt::to_string() const {
  std::ostringstream os;
  os << "PadicInt(p=" << p_ << ", K=" << precision() << ", digits=[";
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (k) os << ",";
    os << digits_[k];
  }
  os << "])";
  return os.str();
}

}  // namespace vdp

#include "vdp/function_table.hpp"

#include <string>

namespace vdp {

std::uint64_t checked_table_size(std::uint32_t p, std::uint32_t precision,
                                 std::uint64_t max_size) {
  if (!is_prime(p)) {
    throw Error(Errc::InvalidPrime, "p must be prime, got " + std::to_string(p));
  }
  if (precision == 0) {
    throw Error(Errc::InvalidPrecision, "precision K must be at least 1");
  }
  std::uint64_t size = 1;
  for (std::uint32_t k = 0; k < precision; ++k) {
    if (size > max_size / p) {
      throw Error(Errc::TableLimitExceeded,
                  "p^K exceeds the table limit " + std::to_string(max_size) +
                      " (p=" + std::to_string(p) + ", K=" + std::to_string(precision) + ")");
    }
    size *= p;
  }
  return size;
}

FunctionTable::FunctionTable(std::uint32_t p, std::uint32_t precision,
                             std::vector<std::uint64_t> values, std::uint64_t max_size)
    : p_(p), precision_(precision) {
  const std::uint64_t size = checked_table_size(p, precision, max_size);
  if (values.size() != size) {
    throw Error(Errc::InvalidArgument, "table needs exactly p^K = " + std::to_string(size) +
                                           " entries, got " + std::to_string(values.size()));
  }
  pow_.resize(precision + 1);
  pow_[0] = 1;
  for (std::uint32_t k = 0; k < precision; ++k) pow_[k + 1] = pow_[k] * p;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (values[x] >= size) {
      throw Error(Errc::InvalidArgument, "entry " + std::to_string(values[x]) + " at x=" +
                                             std::to_string(x) + " is not below p^K");
    }
  }
  values_ = std::move(values);
}

FunctionTable FunctionTable::from_function(std::uint32_t p, std::uint32_t precision,
                                           const std::function<std::uint64_t(std::uint64_t)>& fn,
                                           std::uint64_t max_size) {
  const std::uint64_t size = checked_table_size(p, precision, max_size);
  std::vector<std::uint64_t> values(size);
  for (std::uint64_t x = 0; x < size; ++x) values[x] = fn(x) % size;
  return FunctionTable(p, precision, std::move(values), max_size);
}

std::uint64_t FunctionTable::value(std::uint64_t x) const {
  if (x >= size()) {
    throw Error(Errc::PrecisionExceeded,
                "argument " + std::to_string(x) + " is not below p^K = " + std::to_string(size()));
  }
  return values_[x];
}

PadicInt FunctionTable::at(std::uint64_t x) const {
  return PadicInt::from_integer(value(x), p_, precision_);
}

PadicInt FunctionTable::at(const PadicInt& x) const {
  if (x.prime() != p_ || x.precision() != precision_) {
    throw Error(Errc::DomainMismatch, "argument domain differs from table domain");
  }
  return at(x.to_uint64());
}

}  // namespace vdp

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vdp/padic.hpp"

namespace vdp {

/// Default cap on p^K for anything that materializes a full value table.
inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 20;

/// The restriction of a function Z_p -> Z_p to precision K: exactly p^K
/// entries, entry x holding f(x) mod p^K for the representative
/// x in {0, ..., p^K-1}. Entries are stored packed as residues; `at`
/// rebuilds the digit form on demand.
class FunctionTable {
 public:
  FunctionTable(std::uint32_t p, std::uint32_t precision, std::vector<std::uint64_t> values,
                std::uint64_t max_size = kDefaultTableLimit);

  static FunctionTable from_function(std::uint32_t p, std::uint32_t precision,
                                     const std::function<std::uint64_t(std::uint64_t)>& fn,
                                     std::uint64_t max_size = kDefaultTableLimit);

  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return precision_; }
  std::uint64_t size() const { return values_.size(); }

  /// p^K, the modulus every entry is reduced by.
  std::uint64_t modulus() const { return pow_.back(); }
  /// p^k for 0 <= k <= K.
  std::uint64_t pow(std::uint32_t k) const { return pow_[k]; }

  std::uint64_t value(std::uint64_t x) const;
  PadicInt at(std::uint64_t x) const;
  PadicInt at(const PadicInt& x) const;

  const std::vector<std::uint64_t>& values() const { return values_; }

  bool operator==(const FunctionTable&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t precision_;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> pow_;  // pow_[k] = p^k, k = 0..K
};

/// Validates (p, K) against `max_size` and returns p^K.
/// Throws InvalidPrime / InvalidPrecision / TableLimitExceeded.
std::uint64_t checked_table_size(std::uint32_t p, std::uint32_t precision,
                                 std::uint64_t max_size = kDefaultTableLimit);

}  // namespace vdp

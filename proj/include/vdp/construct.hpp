#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "vdp/function_table.hpp"
#include "vdp/padic.hpp"
#include "vdp/rng.hpp"
#include "vdp/series.hpp"
#include "vdp/verdict.hpp"

namespace vdp {

/// Substitution data for the additive construction: one permutation G of
/// {0..p-1} fixing the behaviour mod p, and for every level 1 <= k < K and
/// base point m < p^k a permutation g_m of the nonzero residues {1..p-1}.
/// Level k is stored flat: entry [m * (p-1) + (i-1)] holds g_m(i).
class SubstitutionFamily {
 public:
  SubstitutionFamily(std::uint32_t p, std::uint32_t precision, std::vector<std::uint32_t> G,
                     std::vector<std::vector<std::uint32_t>> levels,
                     std::uint64_t max_size = kDefaultTableLimit);

  /// One permutation h_k shared by every base point of level k, the compact
  /// form used by the worked power-substitution family.
  static SubstitutionFamily uniform_per_level(std::uint32_t p, std::uint32_t precision,
                                              std::vector<std::uint32_t> G,
                                              std::vector<std::vector<std::uint32_t>> h_per_level,
                                              std::uint64_t max_size = kDefaultTableLimit);

  static SubstitutionFamily identity(std::uint32_t p, std::uint32_t precision);

  std::uint32_t prime() const { return p_; }
  std::uint32_t precision() const { return precision_; }

  std::uint32_t G(std::uint32_t i) const { return G_[i]; }
  const std::vector<std::uint32_t>& G() const { return G_; }

  /// g_m(i) at level k, for 1 <= k < K, m < p^k, 1 <= i <= p-1.
  std::uint32_t g(std::uint32_t k, std::uint64_t m, std::uint32_t i) const;

  bool operator==(const SubstitutionFamily&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t precision_;
  std::vector<std::uint32_t> G_;
  std::vector<std::vector<std::uint32_t>> levels_;  // levels_[k-1], flat per base point
};

/// The structured summand of the additive form: the series with
///   B_i = G(i)                 for i < p,
///   B_{m+i p^k} = g_m(i) p^k   for 1 <= k < K, m < p^k, 1 <= i <= p-1.
/// Its table is measure-preserving for every choice of substitution data.
VdpSeries build_xi(const SubstitutionFamily& s);

/// f(x) = xi(x) + p h(x) mod p^K for a 1-Lipschitz h. Every function built
/// this way preserves measure at precision K, and every measure-preserving
/// 1-Lipschitz function arises this way.
FunctionTable build_additive_mp(const SubstitutionFamily& s, const FunctionTable& free_part);

struct AdditiveParts {
  SubstitutionFamily family;
  FunctionTable free_part;
};

/// Reverse direction: splits a measure-preserving f into substitution data
/// and the 1-Lipschitz remainder, lifting each residue b_m mod p to its
/// representative in {0..p-1}. Under that canonical lift the pair is unique
/// and build_additive_mp reproduces f exactly. A function that is not
/// measure-preserving yields the failing Verdict instead.
std::variant<AdditiveParts, Verdict> decompose_additive(const FunctionTable& f);

/// h(x) = sum over 2k < K of x_k p^{2k}: a 1-Lipschitz "pseudo-constant"
/// whose value copies the low digits of x into even positions.
FunctionTable pseudo_constant_table(std::uint32_t p, std::uint32_t precision,
                                    std::uint64_t max_size = kDefaultTableLimit);

/// Worked instance of the additive form: G(x_0) = p-1-x_0, every level map
/// h_k(i) = i^s mod p, free part the pseudo-constant table. Requires
/// gcd(s, p-1) = 1, otherwise i -> i^s is not a permutation of {1..p-1}
/// (throws InvalidExponent).
FunctionTable build_power_substitution_mp(std::uint32_t p, std::uint64_t exponent,
                                          std::uint32_t precision,
                                          std::uint64_t max_size = kDefaultTableLimit);

/// f(x) = offset + slope * x + p * perturbation(x) mod p^K. Requires slope
/// to be a unit (NotAUnit) and perturbation 1-Lipschitz (NotCompatible);
/// the result always preserves measure at precision K.
FunctionTable build_affine_mp(const PadicInt& offset, const PadicInt& slope,
                              const FunctionTable& perturbation);

/// Uniformly random 1-Lipschitz table: each normalized coefficient b_m is
/// drawn from {0..p^{K-scale(m)}-1} and the series is tabulated.
FunctionTable random_compatible(std::uint32_t p, std::uint32_t precision, std::uint64_t seed,
                                std::uint64_t max_size = kDefaultTableLimit);
FunctionTable random_compatible(std::uint32_t p, std::uint32_t precision, SeededRng& rng,
                                std::uint64_t max_size = kDefaultTableLimit);

/// Uniformly random substitution data via seeded shuffles.
SubstitutionFamily random_substitution_family(std::uint32_t p, std::uint32_t precision,
                                              std::uint64_t seed,
                                              std::uint64_t max_size = kDefaultTableLimit);
SubstitutionFamily random_substitution_family(std::uint32_t p, std::uint32_t precision,
                                              SeededRng& rng,
                                              std::uint64_t max_size = kDefaultTableLimit);

}  // namespace vdp

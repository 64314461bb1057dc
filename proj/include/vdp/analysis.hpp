#pragma once

#include <cstdint>
#include <vector>

#include "vdp/function_table.hpp"
#include "vdp/series.hpp"
#include "vdp/verdict.hpp"

namespace vdp {

/// The level-k fiber map attached to a base point: h -> b_{base + h p^k} mod p
/// for h = 1..p-1, and 0 at h = 0. A 1-Lipschitz function permutes the
/// residues mod p^{k+1} above a fixed residue mod p^k exactly when this map
/// is a permutation of {0..p-1}, i.e. when its nonzero part hits every
/// nonzero residue.
struct BranchMap {
  std::uint64_t base = 0;
  std::uint32_t level = 0;
  std::vector<std::uint32_t> image;  // image[h], h = 0..p-1; image[0] == 0

  std::uint32_t operator()(std::uint32_t h) const { return image[h]; }
  bool is_permutation() const;
};

BranchMap branch_digit_map(const NormalizedCoeffs& b, std::uint64_t base, std::uint32_t level);

/// True iff f is 1-Lipschitz, i.e. every B_m is divisible by p^scale(m).
/// On failure the witness is the least offending coefficient index.
Verdict check_compatible(const FunctionTable& f);

/// Coefficient criterion for preservation of the Haar measure, checked at
/// precision K. Requires, in order:
///   COMPAT:   f is 1-Lipschitz;
///   MP_COND1: b_0..b_{p-1} form a complete residue system mod p;
///   MP_COND2: for every level 1 <= k <= K-1 and base m < p^k, the residues
///             b_{m+p^k}, ..., b_{m+(p-1)p^k} mod p are exactly {1..p-1}.
/// A passing verdict certifies bijectivity mod p^k for every k <= K.
Verdict check_measure_preserving(const FunctionTable& f);

/// Variant for functions that are only 1-Lipschitz at radius p^-threshold and
/// below. Checks that the representatives 0..p^threshold-1 map bijectively
/// mod p^threshold, then the COMPAT and MP_COND2 conditions on levels
/// threshold..K-1. A passing verdict certifies bijectivity mod p^k for
/// threshold <= k <= K. Requires 1 <= threshold < K.
Verdict check_measure_preserving_local(const FunctionTable& f, std::uint32_t threshold);

/// p = 2 specialization: measure-preserving iff b_0 + b_1 is odd and b_m is
/// odd for every m >= 2. Separate code path from check_measure_preserving;
/// the two must agree on every input. Throws WrongPrime unless p = 2.
Verdict check_mp_p2(const FunctionTable& f);

/// Brute-force ground truth: enumerates x = 0..p^k-1 and checks that
/// x -> f(x) mod p^k hits every residue exactly once. For non-1-Lipschitz f
/// the verdict is flagged representative_only. Requires 1 <= k <= K.
Verdict oracle_bijective_mod(const FunctionTable& f, std::uint32_t level);

/// Brute-force ground truth for measure preservation at precision K:
/// oracle_bijective_mod must pass for every k = 1..K. Requires a 1-Lipschitz
/// input (throws NotCompatible otherwise).
Verdict oracle_measure_preserving(const FunctionTable& f);

}  // namespace vdp

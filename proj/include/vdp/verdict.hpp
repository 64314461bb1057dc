#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace vdp {

/// Identifier of the first violated condition of a check.
enum class Cond {
  None,      // nothing violated (passing verdict)
  Compat,    // some B_m not divisible by p^scale(m): not 1-Lipschitz
  MpCond1,   // b_0..b_{p-1} not a complete residue system mod p
  MpCond2,   // some branch b_{m+p^k}..b_{m+(p-1)p^k} not all nonzero residues
  BijModPk,  // induced map mod p^k is not a permutation
};

const char* cond_name(Cond c);

/// COMPAT: coefficient index m with |B_m|_p > p^-scale(m).
struct CoeffWitness {
  std::uint64_t m;
  bool operator==(const CoeffWitness&) const = default;
};

/// MP_COND1: indices i < j < p with b_i = b_j (mod p).
struct PairWitness {
  std::uint32_t i;
  std::uint32_t j;
  bool operator==(const PairWitness&) const = default;
};

/// MP_COND2: level k and base m whose branch residues repeat or hit zero.
struct LevelWitness {
  std::uint32_t k;
  std::uint64_t m;
  bool operator==(const LevelWitness&) const = default;
};

/// BIJ_MOD_PK: x < y with f(x) = f(y) (mod p^k).
struct CollisionWitness {
  std::uint32_t k;
  std::uint64_t x;
  std::uint64_t y;
  bool operator==(const CollisionWitness&) const = default;
};

using Witness =
    std::variant<std::monostate, CoeffWitness, PairWitness, LevelWitness, CollisionWitness>;

/// Structured check result. A false outcome always carries a witness that
/// re-checks against the violated condition. Checks scan coefficients in
/// index order and levels lexicographically, so the witness is the first
/// violation and deterministic.
struct Verdict {
  bool ok = false;
  Cond cond = Cond::None;
  Witness witness{};
  /// Set when the input was not 1-Lipschitz and the check ran on the
  /// representatives 0..p^k-1 anyway (the induced map on residues is not
  /// well defined then).
  bool representative_only = false;

  static Verdict pass() { return Verdict{true, Cond::None, std::monostate{}, false}; }
  static Verdict fail(Cond c, Witness w) { return Verdict{false, c, w, false}; }

  bool operator==(const Verdict&) const = default;
};

}  // namespace vdp

#include "vdp/analysis.hpp"

#include <optional>
#include <string>

namespace vdp {

namespace {

// First pair of representatives x < y < p^k with equal image mod p^k, if any.
std::optional<CollisionWitness> representative_collision(const FunctionTable& f,
                                                         std::uint32_t k) {
  const std::uint64_t pk = f.pow(k);
  std::vector<std::uint64_t> first_preimage(pk, ~std::uint64_t{0});
  for (std::uint64_t x = 0; x < pk; ++x) {
    const std::uint64_t y = f.value(x) % pk;
    if (first_preimage[y] != ~std::uint64_t{0}) {
      return CollisionWitness{k, first_preimage[y], x};
    }
    first_preimage[y] = x;
  }
  return std::nullopt;
}

// Least (i, j) with b_i = b_j mod p among the first p coefficients, if the
// residues are not a complete system.
std::optional<PairWitness> residue_system_collision(const NormalizedCoeffs& b) {
  const std::uint32_t p = b.p;
  std::vector<std::uint32_t> seen_at(p, p);
  for (std::uint32_t j = 0; j < p; ++j) {
    const std::uint32_t r = b.residue(j);
    if (seen_at[r] != p) return PairWitness{seen_at[r], j};
    seen_at[r] = j;
  }
  return std::nullopt;
}

// Tracks which residues appeared in the current branch without reallocating:
// a slot counts as seen when it carries the current stamp.
class ResidueSet {
 public:
  explicit ResidueSet(std::uint32_t p) : stamp_at_(p, 0) {}
  void clear() { ++stamp_; }
  bool insert(std::uint32_t r) {
    if (stamp_at_[r] == stamp_) return false;
    stamp_at_[r] = stamp_;
    return true;
  }

 private:
  std::vector<std::uint64_t> stamp_at_;
  std::uint64_t stamp_ = 1;
};

// Whether the residues b_{m+p^k}, ..., b_{m+(p-1)p^k} are exactly {1..p-1}.
bool branch_residues_ok(const NormalizedCoeffs& b, std::uint64_t pk, std::uint64_t m,
                        ResidueSet& seen) {
  seen.clear();
  for (std::uint32_t i = 1; i < b.p; ++i) {
    const std::uint32_t r = b.residue(m + i * pk);
    if (r == 0 || !seen.insert(r)) return false;
  }
  return true;
}

std::uint32_t require_same_level(const FunctionTable& f, std::uint32_t level) {
  if (level < 1 || level > f.precision()) {
    throw Error(Errc::PrecisionExceeded,
                "level " + std::to_string(level) + " outside 1..K=" +
                    std::to_string(f.precision()));
  }
  return level;
}

}  // namespace

bool BranchMap::is_permutation() const {
  const std::size_t p = image.size();
  std::vector<bool> seen(p, false);
  for (std::size_t h = 1; h < p; ++h) {
    const std::uint32_t r = image[h];
    if (r == 0 || r >= p || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

BranchMap branch_digit_map(const NormalizedCoeffs& b, std::uint64_t base, std::uint32_t level) {
  if (level < 1 || level >= b.precision) {
    throw Error(Errc::PrecisionExceeded, "branch level " + std::to_string(level) +
                                             " outside 1..K-1");
  }
  std::uint64_t pk = 1;
  for (std::uint32_t k = 0; k < level; ++k) pk *= b.p;
  if (base >= pk) {
    throw Error(Errc::PrecisionExceeded,
                "base point " + std::to_string(base) + " is not below p^k");
  }
  BranchMap out;
  out.base = base;
  out.level = level;
  out.image.resize(b.p, 0);
  for (std::uint32_t h = 1; h < b.p; ++h) out.image[h] = b.residue(base + h * pk);
  return out;
}

Verdict check_compatible(const FunctionTable& f) {
  const NormalizeResult n = normalize(coefficients(f));
  if (!n.ok()) return Verdict::fail(Cond::Compat, CoeffWitness{*n.witness_m});
  return Verdict::pass();
}

Verdict check_measure_preserving(const FunctionTable& f) {
  const NormalizeResult n = normalize(coefficients(f));
  if (!n.ok()) return Verdict::fail(Cond::Compat, CoeffWitness{*n.witness_m});
  const NormalizedCoeffs& b = *n.coeffs;

  if (auto w = residue_system_collision(b)) return Verdict::fail(Cond::MpCond1, *w);

  ResidueSet seen(f.prime());
  for (std::uint32_t k = 1; k < f.precision(); ++k) {
    const std::uint64_t pk = f.pow(k);
    for (std::uint64_t m = 0; m < pk; ++m) {
      if (!branch_residues_ok(b, pk, m, seen)) {
        return Verdict::fail(Cond::MpCond2, LevelWitness{k, m});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_measure_preserving_local(const FunctionTable& f, std::uint32_t threshold) {
  if (threshold < 1 || threshold >= f.precision()) {
    throw Error(Errc::InvalidThreshold, "threshold N must satisfy 1 <= N < K, got " +
                                            std::to_string(threshold));
  }
  if (auto w = representative_collision(f, threshold)) {
    return Verdict::fail(Cond::BijModPk, *w);
  }

  // Above the threshold the coefficient conditions take over, including the
  // divisibility that makes the level-k residues meaningful at all.
  const VdpSeries s = coefficients(f);
  ResidueSet seen(f.prime());
  for (std::uint32_t k = threshold; k < f.precision(); ++k) {
    const std::uint64_t pk = f.pow(k);
    for (std::uint64_t m = 0; m < pk; ++m) {
      seen.clear();
      for (std::uint32_t i = 1; i < f.prime(); ++i) {
        const std::uint64_t B = s.coeff(m + i * pk);
        if (B % pk != 0) {
          return Verdict::fail(Cond::Compat, CoeffWitness{m + i * pk});
        }
        const std::uint32_t r = static_cast<std::uint32_t>((B / pk) % f.prime());
        if (r == 0 || !seen.insert(r)) {
          return Verdict::fail(Cond::MpCond2, LevelWitness{k, m});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_mp_p2(const FunctionTable& f) {
  if (f.prime() != 2) {
    throw Error(Errc::WrongPrime, "this check applies to p=2 only, got p=" +
                                      std::to_string(f.prime()));
  }
  const NormalizeResult n = normalize(coefficients(f));
  if (!n.ok()) return Verdict::fail(Cond::Compat, CoeffWitness{*n.witness_m});
  const NormalizedCoeffs& b = *n.coeffs;

  if ((b.b[0] + b.b[1]) % 2 == 0) return Verdict::fail(Cond::MpCond1, PairWitness{0, 1});
  for (std::uint64_t m = 2; m < f.size(); ++m) {
    if (b.b[m] % 2 == 0) {
      const std::uint32_t k = coeff_scale(m, 2);
      return Verdict::fail(Cond::MpCond2, LevelWitness{k, m - f.pow(k)});
    }
  }
  return Verdict::pass();
}

Verdict oracle_bijective_mod(const FunctionTable& f, std::uint32_t level) {
  require_same_level(f, level);
  Verdict v;
  if (auto w = representative_collision(f, level)) {
    v = Verdict::fail(Cond::BijModPk, *w);
  } else {
    v = Verdict::pass();
  }
  v.representative_only = !check_compatible(f).ok;
  return v;
}

Verdict oracle_measure_preserving(const FunctionTable& f) {
  if (!check_compatible(f).ok) {
    throw Error(Errc::NotCompatible, "oracle requires a 1-Lipschitz input");
  }
  for (std::uint32_t k = 1; k <= f.precision(); ++k) {
    if (auto w = representative_collision(f, k)) {
      return Verdict::fail(Cond::BijModPk, *w);
    }
  }
  return Verdict::pass();
}

}  // namespace vdp

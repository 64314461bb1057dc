#include "vdp/construct.hpp"

#include <numeric>
#include <string>

#include "vdp/analysis.hpp"

namespace vdp {

namespace {

void check_permutation_of_range(const std::vector<std::uint32_t>& perm, std::uint32_t lo,
                                std::uint32_t hi, const char* what) {
  // perm[idx] is the image of lo+idx; must be a bijection of {lo..hi}.
  if (perm.size() != hi - lo + 1) {
    throw Error(Errc::InvalidSubstitution, std::string(what) + " has wrong size");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t v : perm) {
    if (v < lo || v > hi || seen[v - lo]) {
      throw Error(Errc::InvalidSubstitution, std::string(what) + " is not a permutation");
    }
    seen[v - lo] = true;
  }
}

std::uint64_t pow_u64(std::uint32_t p, std::uint32_t k) {
  std::uint64_t r = 1;
  while (k--) r *= p;
  return r;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

SubstitutionFamily::SubstitutionFamily(std::uint32_t p, std::uint32_t precision,
                                       std::vector<std::uint32_t> G,
                                       std::vector<std::vector<std::uint32_t>> levels,
                                       std::uint64_t max_size)
    : p_(p), precision_(precision) {
  checked_table_size(p, precision, max_size);
  check_permutation_of_range(G, 0, p - 1, "G");
  if (levels.size() != precision - 1u) {
    throw Error(Errc::InvalidSubstitution,
                "need per-level maps for levels 1..K-1, got " + std::to_string(levels.size()));
  }
  for (std::uint32_t k = 1; k < precision; ++k) {
    const std::uint64_t bases = pow_u64(p, k);
    const auto& level = levels[k - 1];
    if (level.size() != bases * (p - 1)) {
      throw Error(Errc::InvalidSubstitution, "level " + std::to_string(k) +
                                                 " needs p^k * (p-1) entries");
    }
    for (std::uint64_t m = 0; m < bases; ++m) {
      const std::vector<std::uint32_t> g(level.begin() + m * (p - 1),
                                         level.begin() + (m + 1) * (p - 1));
      check_permutation_of_range(g, 1, p - 1, "g_m");
    }
  }
  G_ = std::move(G);
  levels_ = std::move(levels);
}

SubstitutionFamily SubstitutionFamily::uniform_per_level(
    std::uint32_t p, std::uint32_t precision, std::vector<std::uint32_t> G,
    std::vector<std::vector<std::uint32_t>> h_per_level, std::uint64_t max_size) {
  checked_table_size(p, precision, max_size);
  if (h_per_level.size() != precision - 1u) {
    throw Error(Errc::InvalidSubstitution, "need one shared map per level 1..K-1");
  }
  std::vector<std::vector<std::uint32_t>> levels(precision - 1u);
  for (std::uint32_t k = 1; k < precision; ++k) {
    const auto& h = h_per_level[k - 1];
    check_permutation_of_range(h, 1, p - 1, "h_k");
    const std::uint64_t bases = pow_u64(p, k);
    levels[k - 1].reserve(bases * (p - 1));
    for (std::uint64_t m = 0; m < bases; ++m) {
      levels[k - 1].insert(levels[k - 1].end(), h.begin(), h.end());
    }
  }
  return SubstitutionFamily(p, precision, std::move(G), std::move(levels), max_size);
}

SubstitutionFamily SubstitutionFamily::identity(std::uint32_t p, std::uint32_t precision) {
  std::vector<std::uint32_t> G(p);
  std::iota(G.begin(), G.end(), 0);
  std::vector<std::uint32_t> h(p - 1);
  std::iota(h.begin(), h.end(), 1);
  return uniform_per_level(p, precision, std::move(G),
                           std::vector<std::vector<std::uint32_t>>(precision - 1u, h));
}

std::uint32_t SubstitutionFamily::g(std::uint32_t k, std::uint64_t m, std::uint32_t i) const {
  return levels_[k - 1][m * (p_ - 1) + (i - 1)];
}

VdpSeries build_xi(const SubstitutionFamily& s) {
  const std::uint32_t p = s.prime();
  const std::uint32_t K = s.precision();
  const std::uint64_t size = pow_u64(p, K);
  std::vector<std::uint64_t> B(size);
  for (std::uint32_t i = 0; i < p; ++i) B[i] = s.G(i);
  // Indices in [p^k, p^{k+1}) split uniquely as m + i p^k with m < p^k,
  // 1 <= i <= p-1.
  std::uint64_t pk = p;
  for (std::uint32_t k = 1; k < K; ++k) {
    for (std::uint64_t m = 0; m < pk; ++m) {
      for (std::uint32_t i = 1; i < p; ++i) {
        B[m + i * pk] = std::uint64_t{s.g(k, m, i)} * pk;
      }
    }
    pk *= p;
  }
  return VdpSeries(p, K, std::move(B), size);
}

FunctionTable build_additive_mp(const SubstitutionFamily& s, const FunctionTable& free_part) {
  if (s.prime() != free_part.prime() || s.precision() != free_part.precision()) {
    throw Error(Errc::DomainMismatch, "substitution family and free part must share p and K");
  }
  if (!check_compatible(free_part).ok) {
    throw Error(Errc::NotCompatible, "free part must be 1-Lipschitz");
  }
  const VdpSeries xi = build_xi(s);
  const std::uint64_t mod = free_part.modulus();
  std::vector<std::uint64_t> values(free_part.size());
  for (std::uint64_t x = 0; x < free_part.size(); ++x) {
    values[x] = (evaluate(xi, x) + free_part.prime() * free_part.value(x)) % mod;
  }
  return FunctionTable(free_part.prime(), free_part.precision(), std::move(values),
                       free_part.size());
}

std::variant<AdditiveParts, Verdict> decompose_additive(const FunctionTable& f) {
  Verdict mp = check_measure_preserving(f);
  if (!mp.ok) return mp;

  const std::uint32_t p = f.prime();
  const std::uint32_t K = f.precision();
  const NormalizedCoeffs b = *normalize(coefficients(f)).coeffs;

  std::vector<std::uint32_t> G(p);
  for (std::uint32_t i = 0; i < p; ++i) G[i] = b.residue(i);

  std::vector<std::vector<std::uint32_t>> levels(K - 1u);
  std::uint64_t pk = p;
  for (std::uint32_t k = 1; k < K; ++k) {
    levels[k - 1].resize(pk * (p - 1));
    for (std::uint64_t m = 0; m < pk; ++m) {
      for (std::uint32_t i = 1; i < p; ++i) {
        levels[k - 1][m * (p - 1) + (i - 1)] = b.residue(m + i * pk);
      }
    }
    pk *= p;
  }
  SubstitutionFamily family(p, K, std::move(G), std::move(levels), f.size());

  // Remainder: b_m = (b_m mod p) + p * h_b_m with the residue lifted to
  // {0..p-1}; the remainder series keeps the p^scale(m) prefactor.
  std::vector<std::uint64_t> hB(f.size());
  std::uint32_t scale = 0;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    if (m == f.pow(scale + 1)) ++scale;
    hB[m] = (b.b[m] - b.residue(m)) / p * f.pow(scale);
  }
  const FunctionTable h = to_table(VdpSeries(p, K, std::move(hB), f.size()));
  return AdditiveParts{std::move(family), h};
}

FunctionTable pseudo_constant_table(std::uint32_t p, std::uint32_t precision,
                                    std::uint64_t max_size) {
  const std::uint64_t size = checked_table_size(p, precision, max_size);
  std::vector<std::uint64_t> values(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t v = 0;
    std::uint64_t rest = x;
    for (std::uint32_t k = 0; 2 * k < precision && rest != 0; ++k) {
      v += (rest % p) * pow_u64(p, 2 * k);
      rest /= p;
    }
    values[x] = v % size;
  }
  return FunctionTable(p, precision, std::move(values), size);
}

FunctionTable build_power_substitution_mp(std::uint32_t p, std::uint64_t exponent,
                                          std::uint32_t precision, std::uint64_t max_size) {
  checked_table_size(p, precision, max_size);
  if (std::gcd(exponent, std::uint64_t{p} - 1) != 1) {
    throw Error(Errc::InvalidExponent,
                "gcd(s, p-1) must be 1 for i -> i^s to permute the nonzero residues (s=" +
                    std::to_string(exponent) + ", p=" + std::to_string(p) + ")");
  }
  std::vector<std::uint32_t> G(p);
  for (std::uint32_t i = 0; i < p; ++i) G[i] = p - 1 - i;
  std::vector<std::uint32_t> h(p - 1);
  for (std::uint32_t i = 1; i < p; ++i) h[i - 1] = pow_mod(i, exponent, p);
  const SubstitutionFamily family = SubstitutionFamily::uniform_per_level(
      p, precision, std::move(G),
      std::vector<std::vector<std::uint32_t>>(precision - 1u, h), max_size);
  return build_additive_mp(family, pseudo_constant_table(p, precision, max_size));
}

FunctionTable build_affine_mp(const PadicInt& offset, const PadicInt& slope,
                              const FunctionTable& perturbation) {
  const std::uint32_t p = perturbation.prime();
  if (offset.prime() != p || offset.precision() != perturbation.precision() ||
      slope.prime() != p || slope.precision() != perturbation.precision()) {
    throw Error(Errc::DomainMismatch, "offset, slope and perturbation must share p and K");
  }
  if (!slope.is_unit()) {
    throw Error(Errc::NotAUnit, "slope must be nonzero mod p");
  }
  if (!check_compatible(perturbation).ok) {
    throw Error(Errc::NotCompatible, "perturbation must be 1-Lipschitz");
  }
  const std::uint64_t mod = perturbation.modulus();
  const std::uint64_t d = offset.to_uint64();
  const std::uint64_t c = slope.to_uint64();
  std::vector<std::uint64_t> values(perturbation.size());
  for (std::uint64_t x = 0; x < perturbation.size(); ++x) {
    // c*x can reach p^2K <= 2^40 at the default table limit; stay in range
    // by reducing x's factor first.
    values[x] = (d + (c % mod) * (x % mod) % mod + p * perturbation.value(x)) % mod;
  }
  return FunctionTable(p, perturbation.precision(), std::move(values), perturbation.size());
}

FunctionTable random_compatible(std::uint32_t p, std::uint32_t precision, SeededRng& rng,
                                std::uint64_t max_size) {
  const std::uint64_t size = checked_table_size(p, precision, max_size);
  std::vector<std::uint64_t> B(size);
  std::uint32_t scale = 0;
  std::uint64_t pow_scale = 1;
  for (std::uint64_t m = 0; m < size; ++m) {
    if (pow_scale * p <= m) {
      ++scale;
      pow_scale *= p;
    }
    // b_m uniform below p^{K-scale}, B_m = b_m * p^scale.
    B[m] = rng.below(size / pow_scale) * pow_scale;
  }
  return to_table(VdpSeries(p, precision, std::move(B), size));
}

FunctionTable random_compatible(std::uint32_t p, std::uint32_t precision, std::uint64_t seed,
                                std::uint64_t max_size) {
  SeededRng rng(seed);
  return random_compatible(p, precision, rng, max_size);
}

SubstitutionFamily random_substitution_family(std::uint32_t p, std::uint32_t precision,
                                              SeededRng& rng, std::uint64_t max_size) {
  checked_table_size(p, precision, max_size);
  std::vector<std::uint32_t> G(p);
  std::iota(G.begin(), G.end(), 0);
  rng.shuffle(G);
  std::vector<std::vector<std::uint32_t>> levels(precision - 1u);
  std::vector<std::uint32_t> g(p - 1);
  std::uint64_t pk = p;
  for (std::uint32_t k = 1; k < precision; ++k) {
    levels[k - 1].reserve(pk * (p - 1));
    for (std::uint64_t m = 0; m < pk; ++m) {
      std::iota(g.begin(), g.end(), 1);
      rng.shuffle(g);
      levels[k - 1].insert(levels[k - 1].end(), g.begin(), g.end());
    }
    pk *= p;
  }
  return SubstitutionFamily(p, precision, std::move(G), std::move(levels), max_size);
}

SubstitutionFamily random_substitution_family(std::uint32_t p, std::uint32_t precision,
                                              std::uint64_t seed, std::uint64_t max_size) {
  SeededRng rng(seed);
  return random_substitution_family(p, precision, rng, max_size);
}

}  // namespace vdp

#include "vdp/io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

namespace vdp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

std::uint64_t parse_u64(std::string_view token, std::uint64_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(Errc::FormatError,
                "line " + std::to_string(line_no) + ": expected a decimal integer, got '" +
                    std::string(token) + "'",
                line_no);
  }
  return value;
}

// Splits "key value" on whitespace; both parts nonempty.
std::pair<std::string_view, std::string_view> split_kv(std::string_view line,
                                                       std::uint64_t line_no) {
  const std::string_view t = trim(line);
  const std::size_t sp = t.find_first_of(" \t");
  if (sp == std::string_view::npos) {
    throw Error(Errc::FormatError,
                "line " + std::to_string(line_no) + ": expected 'key value'", line_no);
  }
  return {trim(t.substr(0, sp)), trim(t.substr(sp + 1))};
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : text_(text) {}

  // Next non-comment, non-blank line; nullopt at end of input.
  std::optional<std::string_view> next() {
    while (pos_ < text_.size()) {
      const std::size_t eol = text_.find('\n', pos_);
      const std::size_t end = eol == std::string::npos ? text_.size() : eol;
      const std::string_view line(text_.data() + pos_, end - pos_);
      pos_ = eol == std::string::npos ? text_.size() : eol + 1;
      ++line_no_;
      if (!skippable(line)) return line;
    }
    return std::nullopt;
  }

  std::uint64_t line_no() const { return line_no_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::uint64_t line_no_ = 0;
};

}  // namespace

ParsedFile parse_function_file(const std::string& text, std::uint64_t max_size) {
  LineReader reader(text);

  auto expect_header = [&](std::string_view key) -> std::string_view {
    const auto line = reader.next();
    if (!line) {
      throw Error(Errc::FormatError,
                  "line " + std::to_string(reader.line_no() + 1) + ": missing '" +
                      std::string(key) + "' header line",
                  reader.line_no() + 1);
    }
    const auto [k, v] = split_kv(*line, reader.line_no());
    if (k != key) {
      throw Error(Errc::FormatError,
                  "line " + std::to_string(reader.line_no()) + ": expected '" + std::string(key) +
                      " <value>', got '" + std::string(trim(*line)) + "'",
                  reader.line_no());
    }
    return v;
  };

  const std::string_view p_tok = expect_header("p");
  const std::uint64_t p_raw = parse_u64(p_tok, reader.line_no());
  if (!is_prime(p_raw)) {
    throw Error(Errc::InvalidPrime, "line " + std::to_string(reader.line_no()) +
                                        ": p must be prime, got " + std::to_string(p_raw),
                reader.line_no());
  }
  const std::string_view K_tok = expect_header("K");
  const std::uint64_t K_raw = parse_u64(K_tok, reader.line_no());
  if (K_raw == 0 || K_raw > 64) {
    throw Error(Errc::InvalidPrecision, "line " + std::to_string(reader.line_no()) +
                                            ": K must be in 1..64, got " + std::to_string(K_raw),
                reader.line_no());
  }
  const std::string_view repr = expect_header("repr");
  if (repr != "values" && repr != "coeffs") {
    throw Error(Errc::FormatError,
                "line " + std::to_string(reader.line_no()) +
                    ": repr must be 'values' or 'coeffs', got '" + std::string(repr) + "'",
                reader.line_no());
  }

  const std::uint32_t p = static_cast<std::uint32_t>(p_raw);
  const std::uint32_t K = static_cast<std::uint32_t>(K_raw);
  const std::uint64_t size = checked_table_size(p, K, max_size);

  std::vector<std::uint64_t> body;
  body.reserve(size);
  for (;;) {
    const auto line = reader.next();
    if (!line) break;
    if (body.size() == size) {
      throw Error(Errc::FormatError,
                  "line " + std::to_string(reader.line_no()) + ": more than p^K = " +
                      std::to_string(size) + " entries",
                  reader.line_no());
    }
    const std::uint64_t v = parse_u64(trim(*line), reader.line_no());
    if (v >= size) {
      throw Error(Errc::FormatError,
                  "line " + std::to_string(reader.line_no()) + ": entry " + std::to_string(v) +
                      " is not below p^K = " + std::to_string(size),
                  reader.line_no());
    }
    body.push_back(v);
  }
  if (body.size() != size) {
    throw Error(Errc::FormatError,
                "line " + std::to_string(reader.line_no() + 1) + ": expected p^K = " +
                    std::to_string(size) + " entries, got " + std::to_string(body.size()),
                reader.line_no() + 1);
  }

  if (repr == "values") {
    return ParsedFile{FunctionTable(p, K, std::move(body), max_size)};
  }
  return ParsedFile{VdpSeries(p, K, std::move(body), max_size)};
}

namespace {

std::string serialize_body(std::uint32_t p, std::uint32_t K, const char* repr,
                           const std::vector<std::uint64_t>& body) {
  std::ostringstream os;
  os << "p " << p << "\n" << "K " << K << "\n" << "repr " << repr << "\n";
  for (const std::uint64_t v : body) os << v << "\n";
  return os.str();
}

}  // namespace

std::string serialize_values(const FunctionTable& f) {
  return serialize_body(f.prime(), f.precision(), "values", f.values());
}

std::string serialize_coeffs(const VdpSeries& s) {
  return serialize_body(s.prime(), s.precision(), "coeffs", s.coeffs());
}

std::string serialize_coeffs_annotated(const VdpSeries& s, const NormalizeResult& n) {
  std::string out = serialize_coeffs(s);
  std::ostringstream os;
  if (n.ok()) {
    os << "# compatible: yes\n";
    os << "# normalized b_m = B_m / p^floor(log_p m), one per line:\n";
    for (std::uint64_t m = 0; m < s.size(); ++m) {
      os << "# b[" << m << "] = " << n.coeffs->b[m] << "\n";
    }
  } else {
    os << "# compatible: no\n";
    os << "# witness: m=" << *n.witness_m << " (B_m is not divisible by p^floor(log_p m))\n";
  }
  return out + os.str();
}

namespace {

struct WitnessText {
  std::string human;
  std::string machine;
};

WitnessText describe(const Witness& w) {
  WitnessText out;
  if (const auto* cw = std::get_if<CoeffWitness>(&w)) {
    out.human = "coefficient index m=" + std::to_string(cw->m);
    out.machine = " witness_m=" + std::to_string(cw->m);
  } else if (const auto* pw = std::get_if<PairWitness>(&w)) {
    out.human = "indices i=" + std::to_string(pw->i) + ", j=" + std::to_string(pw->j) +
                " with b_i = b_j (mod p)";
    out.machine = " witness_i=" + std::to_string(pw->i) + " witness_j=" + std::to_string(pw->j);
  } else if (const auto* lw = std::get_if<LevelWitness>(&w)) {
    out.human = "level k=" + std::to_string(lw->k) + ", base m=" + std::to_string(lw->m) +
                ": residues b_{m+i*p^k} mod p repeat or hit 0";
    out.machine = " witness_k=" + std::to_string(lw->k) + " witness_m=" + std::to_string(lw->m);
  } else if (const auto* xw = std::get_if<CollisionWitness>(&w)) {
    out.human = "f(" + std::to_string(xw->x) + ") = f(" + std::to_string(xw->y) + ") mod p^" +
                std::to_string(xw->k);
    out.machine = " witness_k=" + std::to_string(xw->k) + " witness_x=" + std::to_string(xw->x) +
                  " witness_y=" + std::to_string(xw->y);
  }
  return out;
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream os;
  os << "check: " << r.check << "\n";
  os << "p: " << r.p << "\n";
  os << "K: " << r.K << "\n";
  if (r.threshold) os << "threshold: " << *r.threshold << "\n";
  if (r.verdict.ok) {
    os << "verdict: PASS\n";
    if (r.check == "compat") {
      os << "note: 1-Lipschitz at precision K (all B_m divisible by p^floor(log_p m))\n";
    } else if (r.check == "mp-local") {
      os << "note: certified bijective mod p^k for " << *r.threshold << " <= k <= " << r.K
         << " (precision K=" << r.K << ")\n";
    } else {
      os << "note: certified bijective mod p^k for all k <= " << r.K << " (precision K=" << r.K
         << ")\n";
    }
  } else {
    os << "verdict: FAIL\n";
    os << "condition: " << cond_name(r.verdict.cond) << "\n";
    os << "witness: " << describe(r.verdict.witness).human << "\n";
  }
  if (r.verdict.representative_only) {
    os << "note: input not 1-Lipschitz; result covers representatives 0..p^k-1 only\n";
  }
  return os.str();
}

std::string render_machine(const Report& r) {
  std::ostringstream os;
  os << "check=" << r.check << " outcome=" << (r.verdict.ok ? "true" : "false")
     << " condition=" << cond_name(r.verdict.cond);
  os << describe(r.verdict.witness).machine;
  if (r.verdict.representative_only) os << " representative_only=true";
  if (r.threshold) os << " threshold=" << *r.threshold;
  os << " p=" << r.p << " K=" << r.K;
  return os.str();
}

Report parse_machine_line(const std::string& line) {
  std::istringstream is(line);
  std::string token;
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  while (is >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::FormatError, "machine report token '" + token + "' is not key=value");
    }
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto need = [&](const std::string& key) -> std::string {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw Error(Errc::FormatError, "machine report is missing '" + key + "'");
    }
    return it->second;
  };
  auto get_u64 = [&](const std::string& key) { return parse_u64(need(key), 0); };

  Report r;
  r.check = need("check");
  r.verdict.ok = need("outcome") == "true";
  const std::string cond = need("condition");
  if (cond == "NONE") {
    r.verdict.cond = Cond::None;
  } else if (cond == "COMPAT") {
    r.verdict.cond = Cond::Compat;
    r.verdict.witness = CoeffWitness{get_u64("witness_m")};
  } else if (cond == "MP_COND1") {
    r.verdict.cond = Cond::MpCond1;
    r.verdict.witness = PairWitness{static_cast<std::uint32_t>(get_u64("witness_i")),
                                    static_cast<std::uint32_t>(get_u64("witness_j"))};
  } else if (cond == "MP_COND2") {
    r.verdict.cond = Cond::MpCond2;
    r.verdict.witness = LevelWitness{static_cast<std::uint32_t>(get_u64("witness_k")),
                                     get_u64("witness_m")};
  } else if (cond == "BIJ_MOD_PK") {
    r.verdict.cond = Cond::BijModPk;
    r.verdict.witness = CollisionWitness{static_cast<std::uint32_t>(get_u64("witness_k")),
                                         get_u64("witness_x"), get_u64("witness_y")};
  } else {
    throw Error(Errc::FormatError, "unknown condition '" + cond + "'");
  }
  if (auto it = kv.find("representative_only"); it != kv.end()) {
    r.verdict.representative_only = it->second == "true";
  }
  if (auto it = kv.find("threshold"); it != kv.end()) {
    r.threshold = static_cast<std::uint32_t>(parse_u64(it->second, 0));
  }
  if (auto it = kv.find("p"); it != kv.end()) {
    r.p = static_cast<std::uint32_t>(parse_u64(it->second, 0));
  }
  if (auto it = kv.find("K"); it != kv.end()) {
    r.K = static_cast<std::uint32_t>(parse_u64(it->second, 0));
  }
  return r;
}

}  // namespace vdp

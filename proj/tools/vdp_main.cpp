// vdp: van der Put analysis of functions on p-adic integers at finite
// precision. Subcommands: check, generate, coeffs, eval.
//
// Exit codes: 0 check passed / output written, 1 check failed (witness in
// report), 2 input or parameter error, 3 internal inconsistency (criterion
// and oracle, or the p=2 path, disagree -- must never happen).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vdp/analysis.hpp"
#include "vdp/construct.hpp"
#include "vdp/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vdp::Error(vdp::Errc::FormatError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw vdp::Error(vdp::Errc::FormatError, "cannot write '" + out_path + "'");
  out << data;
}

struct CheckOptions {
  std::string file;
  std::string out;
  bool mp = false;
  bool compat = false;
  bool p2 = false;
  bool oracle = false;
  std::optional<std::uint32_t> local;
  std::uint64_t max_table = vdp::kDefaultTableLimit;
};

int run_check(const CheckOptions& opt) {
  const vdp::ParsedFile parsed = vdp::parse_function_file(read_file(opt.file), opt.max_table);
  const vdp::FunctionTable table =
      parsed.is_values() ? parsed.table() : vdp::to_table(parsed.series());

  CheckOptions flags = opt;
  if (!flags.mp && !flags.compat && !flags.p2 && !flags.oracle && !flags.local) {
    flags.mp = true;  // default check
  }

  std::ostringstream os;
  bool any_fail = false;
  bool inconsistent = false;
  bool input_error = false;

  auto emit = [&](const std::string& name, const vdp::Verdict& v,
                  std::optional<std::uint32_t> threshold = std::nullopt) {
    vdp::Report r;
    r.check = name;
    r.verdict = v;
    r.p = table.prime();
    r.K = table.precision();
    r.threshold = threshold;
    os << vdp::render_human(r) << vdp::render_machine(r) << "\n";
    if (!v.ok) any_fail = true;
  };

  std::optional<vdp::Verdict> mp_verdict;
  if (flags.mp || flags.p2 || flags.oracle) {
    mp_verdict = vdp::check_measure_preserving(table);
  }

  if (flags.compat) emit("compat", vdp::check_compatible(table));
  if (flags.mp) emit("mp", *mp_verdict);

  if (flags.p2) {
    const vdp::Verdict p2_verdict = vdp::check_mp_p2(table);  // throws unless p = 2
    emit("mp-p2", p2_verdict);
    if (!(p2_verdict == *mp_verdict)) {
      os << "internal-error: p=2 path disagrees with the general criterion\n";
      if (!flags.mp) emit("mp", *mp_verdict);
      inconsistent = true;
    }
  }

  if (flags.local) {
    emit("mp-local", vdp::check_measure_preserving_local(table, *flags.local), flags.local);
  }

  if (flags.oracle) {
    if (vdp::check_compatible(table).ok) {
      const vdp::Verdict oracle_verdict = vdp::oracle_measure_preserving(table);
      emit("oracle-mp", oracle_verdict);
      if (oracle_verdict.ok != mp_verdict->ok) {
        os << "internal-error: coefficient criterion disagrees with the brute-force oracle\n";
        if (!flags.mp) emit("mp", *mp_verdict);
        inconsistent = true;
      }
    } else {
      os << "error: oracle requires a 1-Lipschitz input [NotCompatible]\n";
      input_error = true;
    }
  }

  write_output(flags.out, os.str());
  if (inconsistent) return kExitInternal;
  if (input_error) return kExitInputError;
  return any_fail ? kExitFail : kExitPass;
}

struct GenerateOptions {
  std::uint32_t p = 0;
  std::uint32_t K = 0;
  std::uint64_t seed = 0;
  std::string family = "additive";
  std::uint64_t s = 1;
  std::string out;
  std::uint64_t max_table = vdp::kDefaultTableLimit;
};

int run_generate(const GenerateOptions& opt) {
  vdp::SeededRng rng(opt.seed);
  std::optional<vdp::FunctionTable> f;
  if (opt.family == "additive") {
    const auto family = vdp::random_substitution_family(opt.p, opt.K, rng, opt.max_table);
    const auto h = vdp::random_compatible(opt.p, opt.K, rng, opt.max_table);
    f = vdp::build_additive_mp(family, h);
  } else if (opt.family == "affine") {
    const std::uint64_t mod = vdp::checked_table_size(opt.p, opt.K, opt.max_table);
    const auto d = vdp::PadicInt::from_integer(rng.below(mod), opt.p, opt.K);
    // A unit slope: nonzero low digit, arbitrary higher digits.
    const std::uint64_t c = 1 + rng.below(opt.p - 1) + opt.p * rng.below(mod / opt.p);
    const auto slope = vdp::PadicInt::from_integer(c, opt.p, opt.K);
    f = vdp::build_affine_mp(d, slope, vdp::random_compatible(opt.p, opt.K, rng, opt.max_table));
  } else {
    f = vdp::build_power_substitution_mp(opt.p, opt.s, opt.K, opt.max_table);
  }
  write_output(opt.out, vdp::serialize_values(*f));
  return kExitPass;
}

struct ConvertOptions {
  std::string file;
  std::string out;
  std::uint64_t max_table = vdp::kDefaultTableLimit;
};

int run_coeffs(const ConvertOptions& opt) {
  const vdp::ParsedFile parsed = vdp::parse_function_file(read_file(opt.file), opt.max_table);
  if (!parsed.is_values()) {
    throw vdp::Error(vdp::Errc::FormatError, "coeffs expects a 'repr values' file");
  }
  const vdp::VdpSeries s = vdp::coefficients(parsed.table());
  write_output(opt.out, vdp::serialize_coeffs_annotated(s, vdp::normalize(s)));
  return kExitPass;
}

int run_eval(const ConvertOptions& opt) {
  const vdp::ParsedFile parsed = vdp::parse_function_file(read_file(opt.file), opt.max_table);
  if (parsed.is_values()) {
    throw vdp::Error(vdp::Errc::FormatError, "eval expects a 'repr coeffs' file");
  }
  write_output(opt.out, vdp::serialize_values(vdp::to_table(parsed.series())));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"van der Put series toolkit for functions on p-adic integers"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand(
      "check", "Run compatibility / measure-preservation checks on a function file");
  check->add_option("file", check_opt.file, "input function file")->required();
  check->add_flag("--mp", check_opt.mp, "coefficient criterion for measure preservation (default)");
  check->add_flag("--compat", check_opt.compat, "1-Lipschitz check");
  check->add_flag("--p2", check_opt.p2, "p=2 parity criterion, cross-checked against --mp");
  check->add_flag("--oracle", check_opt.oracle, "brute-force permutation oracle over all levels");
  check->add_option("--local", check_opt.local,
                    "locally 1-Lipschitz variant: bijectivity mod p^N plus branch "
                    "conditions from level N up");
  check->add_option("--out", check_opt.out, "write reports here instead of stdout");
  check->add_option("--max-table", check_opt.max_table, "table size guard (default 2^20)");

  GenerateOptions gen_opt;
  auto* gen = app.add_subcommand("generate", "Emit a measure-preserving function file");
  gen->add_option("--p", gen_opt.p, "prime base")->required();
  gen->add_option("--K", gen_opt.K, "precision (digits)")->required();
  gen->add_option("--seed", gen_opt.seed, "seed for the random families (default 0)");
  gen->add_option("--family", gen_opt.family, "additive | affine | example41")
      ->check(CLI::IsMember({"additive", "affine", "example41"}));
  gen->add_option("--s", gen_opt.s, "power-map exponent for --family example41 (default 1)");
  gen->add_option("--out", gen_opt.out, "write the function file here instead of stdout");
  gen->add_option("--max-table", gen_opt.max_table, "table size guard (default 2^20)");

  ConvertOptions coeffs_opt;
  auto* coeffs = app.add_subcommand("coeffs", "Convert a values file to its coefficient file");
  coeffs->add_option("file", coeffs_opt.file, "input values file")->required();
  coeffs->add_option("--out", coeffs_opt.out, "output path (default stdout)");
  coeffs->add_option("--max-table", coeffs_opt.max_table, "table size guard (default 2^20)");

  ConvertOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Convert a coefficient file to its values file");
  eval->add_option("file", eval_opt.file, "input coeffs file")->required();
  eval->add_option("--out", eval_opt.out, "output path (default stdout)");
  eval->add_option("--max-table", eval_opt.max_table, "table size guard (default 2^20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(check_opt);
    if (gen->parsed()) return run_generate(gen_opt);
    if (coeffs->parsed()) return run_coeffs(coeffs_opt);
    return run_eval(eval_opt);
  } catch (const vdp::Error& e) {
    std::cerr << "error: " << e.what() << " [" << vdp::errc_name(e.code()) << "]\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "vdp/function_table.hpp"
#include "vdp/series.hpp"
#include "vdp/verdict.hpp"

namespace vdp {

/// Function file format (text, diff-able, language-neutral):
///
///   p 3
///   K 2
///   repr values        <- or "repr coeffs"
///   1
///   4
///   ...                <- exactly p^K decimal integers in [0, p^K), one per line
///
/// Lines starting with '#' are comments and are ignored everywhere; blank
/// lines are ignored too. Header lines are whitespace-tolerant "key value"
/// pairs and must appear in the order p, K, repr. A "values" body is a
/// function table; a "coeffs" body stores the raw coefficients B_m (not the
/// normalized b_m), so non-1-Lipschitz functions are representable.
struct ParsedFile {
  std::variant<FunctionTable, VdpSeries> payload;

  bool is_values() const { return std::holds_alternative<FunctionTable>(payload); }
  const FunctionTable& table() const { return std::get<FunctionTable>(payload); }
  const VdpSeries& series() const { return std::get<VdpSeries>(payload); }
};

ParsedFile parse_function_file(const std::string& text,
                               std::uint64_t max_size = kDefaultTableLimit);

/// Canonical writers: header exactly as above, one decimal per line, newline
/// after the last. Byte-identical output for equal inputs.
std::string serialize_values(const FunctionTable& f);
std::string serialize_coeffs(const VdpSeries& s);

/// Same as serialize_coeffs, plus trailing comment lines carrying the
/// normalized b_m when the function is 1-Lipschitz, or the failing
/// coefficient index otherwise. The comments do not affect parsing.
std::string serialize_coeffs_annotated(const VdpSeries& s, const NormalizeResult& n);

/// One check result prepared for rendering. `render_machine` emits a single
/// flat key=value line; `parse_machine_line` inverts it exactly on
/// (check, outcome, condition, witness, representative_only, threshold).
struct Report {
  std::string check;  // "compat" | "mp" | "mp-p2" | "mp-local" | "oracle-mp"
  Verdict verdict;
  std::uint32_t p = 0;
  std::uint32_t K = 0;
  std::optional<std::uint32_t> threshold;  // mp-local only
};

std::string render_human(const Report& r);
std::string render_machine(const Report& r);
Report parse_machine_line(const std::string& line);

}  // namespace vdp

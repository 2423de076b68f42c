#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prisms/lhv.hpp"
#include "prisms/montecarlo.hpp"
#include "prisms/sweep.hpp"

namespace prisms {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat : std::uint8_t { Csv, Json };

// Bookkeeping attached to every JSON document.
struct EmitMeta {
  std::string mode;  // "exact", "montecarlo", or "lhv"
  std::uint64_t seed = 0;
  std::string version = kVersion;
};

// Shortest of up-to-12 significant digits, plain decimal or exponent form
// ("%.12g"). Reparsing an emitted value and emitting it again reproduces
// the same text.
std::string format_real(double value);

// CSV: header `regime,n,epsilon,rho,i_value,i_stderr`, one row per line,
// '\n' newlines, no trailing blank line beyond the final newline.
// Every emitter returns the number of bytes written.
std::size_t emit_rows_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::size_t emit_rows_json(const std::vector<SweepRow>& rows, const EmitMeta& meta,
                           std::ostream& out);

// Reads rows back from the CSV schema above. Throws std::runtime_error on a
// malformed header or row.
std::vector<SweepRow> parse_rows_csv(std::istream& in);

std::size_t emit_report_csv(const EstimateReport& report, std::ostream& out);
std::size_t emit_report_json(const EstimateReport& report, const EmitMeta& meta,
                             std::ostream& out);

// CSV: header `roll_left,look_left,roll_right,look_right,i_value`, one row
// per deterministic strategy. JSON carries max_i plus the full evaluation
// and maximizer lists.
std::size_t emit_certificate_csv(const LhvCertificate& cert, std::ostream& out);
std::size_t emit_certificate_json(const LhvCertificate& cert, const EmitMeta& meta,
                                  std::ostream& out);

}  // namespace prisms

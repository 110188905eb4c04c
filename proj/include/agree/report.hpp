#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agree/diagnostics.hpp"
#include "agree/measures.hpp"

namespace agree {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Unit-profile rows packaged for reporting.
struct UnitProfile {
  std::vector<UnitProfileEntry> rows;
};

using DiagnosticSection = std::variant<DiagnosticReport, UnitProfile>;

/// Everything one CLI invocation reports. Serialization has a fixed key
/// order and renders reals with 12 significant digits, so identical inputs
/// produce byte-identical documents.
struct ReportDocument {
  std::string tool_version{kToolVersion};
  std::string input_digest;
  std::vector<MeasureResult> results;
  std::vector<DiagnosticSection> diagnostics;
  std::vector<std::string> warnings;
};

/// FNV-1a 64-bit hash of the raw input bytes, as 16 hex digits.
std::string content_digest(std::string_view bytes);

/// Shortest decimal form with at most 12 significant digits (printf %.12g).
std::string format_real(double value);

std::string render_json(const ReportDocument& document);
std::string render_text(const ReportDocument& document);

}  // namespace agree

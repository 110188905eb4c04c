#include "agree/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <utility>

namespace agree {

std::string content_digest(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

namespace {

// Minimal ordered JSON tree; members keep insertion order so documents
// serialize byte-identically for identical inputs.
struct Json {
  enum class Kind { object, array, string, number, boolean, null };

  Kind kind = Kind::null;
  std::vector<std::pair<std::string, Json>> members;
  std::vector<Json> elements;
  std::string text;  // string payload, or a preformatted number
  bool flag = false;

  static Json object() { return Json{Kind::object, {}, {}, {}, false}; }
  static Json array() { return Json{Kind::array, {}, {}, {}, false}; }
  static Json str(std::string_view s) { return Json{Kind::string, {}, {}, std::string(s), false}; }
  static Json real(double v) { return Json{Kind::number, {}, {}, format_real(v), false}; }
  static Json integer(std::uint64_t v) { return Json{Kind::number, {}, {}, std::to_string(v), false}; }
  static Json boolean(bool v) { return Json{Kind::boolean, {}, {}, {}, v}; }

  Json& add(std::string_view key, Json value) {
    members.emplace_back(std::string(key), std::move(value));
    return members.back().second;
  }
};

std::string json_escape(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

void print(const Json& value, std::string& out, int depth) {
  const auto indent = [&](int levels) { out.append(static_cast<std::size_t>(levels) * 2, ' '); };
  switch (value.kind) {
    case Json::Kind::object: {
      if (value.members.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t i = 0; i < value.members.size(); ++i) {
        indent(depth + 1);
        out += json_escape(value.members[i].first);
        out += ": ";
        print(value.members[i].second, out, depth + 1);
        if (i + 1 < value.members.size()) out += ',';
        out += '\n';
      }
      indent(depth);
      out += '}';
      return;
    }
    case Json::Kind::array: {
      if (value.elements.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.elements.size(); ++i) {
        indent(depth + 1);
        print(value.elements[i], out, depth + 1);
        if (i + 1 < value.elements.size()) out += ',';
        out += '\n';
      }
      indent(depth);
      out += ']';
      return;
    }
    case Json::Kind::string: out += json_escape(value.text); return;
    case Json::Kind::number: out += value.text; return;
    case Json::Kind::boolean: out += value.flag ? "true" : "false"; return;
    case Json::Kind::null: out += "null"; return;
  }
}

Json result_json(const MeasureResult& result) {
  Json node = Json::object();
  node.add("measure", Json::str(to_string(result.measure)));
  node.add("value", Json::real(result.value));
  if (result.observed_agreement) {
    node.add("observed_agreement", Json::real(*result.observed_agreement));
  }
  if (result.expected_agreement) {
    node.add("expected_agreement", Json::real(*result.expected_agreement));
  }
  if (result.observed_disagreement) {
    node.add("observed_disagreement", Json::real(*result.observed_disagreement));
  }
  if (result.expected_disagreement) {
    node.add("expected_disagreement", Json::real(*result.expected_disagreement));
  }
  node.add("n_items", Json::integer(result.n_items));
  node.add("n_coders", Json::integer(result.n_coders));
  node.add("n_categories", Json::integer(result.n_categories));
  if (result.band) node.add("band", Json::str(to_string(result.band->band)));
  if (result.significance) {
    Json sig = Json::object();
    sig.add("seed", Json::integer(result.significance->seed));
    sig.add("iterations", Json::integer(result.significance->iterations));
    sig.add("observed", Json::real(result.significance->observed));
    sig.add("p_value", Json::real(result.significance->p_value));
    node.add("significance", std::move(sig));
  }
  return node;
}

Json diagnostic_json(const DiagnosticSection& section) {
  Json node = Json::object();
  if (const auto* report = std::get_if<DiagnosticReport>(&section)) {
    node.add("kind", Json::str(to_string(report->kind)));
    node.add("baseline", Json::real(report->baseline));
    Json rows = Json::array();
    for (const DiagnosticRow& row : report->rows) {
      Json entry = Json::object();
      entry.add("subject", Json::str(row.subject));
      entry.add("value", row.value ? Json::real(*row.value) : Json{});
      entry.add("delta", row.delta ? Json::real(*row.delta) : Json{});
      rows.elements.push_back(std::move(entry));
    }
    node.add("rows", std::move(rows));
  } else {
    const auto& profile = std::get<UnitProfile>(section);
    node.add("kind", Json::str("unit_profile"));
    Json rows = Json::array();
    for (const UnitProfileEntry& entry : profile.rows) {
      Json row = Json::object();
      row.add("item", Json::str(entry.item));
      row.add("modal_label", Json::str(entry.modal_label));
      row.add("modal_count", Json::integer(entry.modal_count));
      row.add("tie", Json::boolean(entry.tie));
      if (entry.yes_count) row.add("yes_count", Json::integer(*entry.yes_count));
      rows.elements.push_back(std::move(row));
    }
    node.add("rows", std::move(rows));
  }
  return node;
}

}  // namespace

std::string render_json(const ReportDocument& document) {
  Json root = Json::object();
  root.add("tool_version", Json::str(document.tool_version));
  root.add("input_digest", Json::str(document.input_digest));
  Json results = Json::array();
  for (const MeasureResult& result : document.results) {
    results.elements.push_back(result_json(result));
  }
  root.add("results", std::move(results));
  Json diagnostics = Json::array();
  for (const DiagnosticSection& section : document.diagnostics) {
    diagnostics.elements.push_back(diagnostic_json(section));
  }
  root.add("diagnostics", std::move(diagnostics));
  Json warnings = Json::array();
  for (const std::string& warning : document.warnings) {
    warnings.elements.push_back(Json::str(warning));
  }
  root.add("warnings", std::move(warnings));

  std::string out;
  print(root, out, 0);
  out += '\n';
  return out;
}

std::string render_text(const ReportDocument& document) {
  std::ostringstream out;
  out << "tool_version: " << document.tool_version << "\n";
  out << "input_digest: " << document.input_digest << "\n";
  for (const MeasureResult& result : document.results) {
    out << "measure: " << to_string(result.measure) << "\n";
    out << "  value: " << format_real(result.value) << "\n";
    if (result.observed_agreement) {
      out << "  observed_agreement: " << format_real(*result.observed_agreement) << "\n";
    }
    if (result.expected_agreement) {
      out << "  expected_agreement: " << format_real(*result.expected_agreement) << "\n";
    }
    if (result.observed_disagreement) {
      out << "  observed_disagreement: " << format_real(*result.observed_disagreement) << "\n";
    }
    if (result.expected_disagreement) {
      out << "  expected_disagreement: " << format_real(*result.expected_disagreement) << "\n";
    }
    out << "  n_items: " << result.n_items << "\n";
    out << "  n_coders: " << result.n_coders << "\n";
    out << "  n_categories: " << result.n_categories << "\n";
    if (result.band) out << "  band: " << to_string(result.band->band) << "\n";
    if (result.significance) {
      out << "  significance: p_value " << format_real(result.significance->p_value) << " ("
          << result.significance->iterations << " iterations, seed "
          << result.significance->seed << ")\n";
    }
  }
  for (const DiagnosticSection& section : document.diagnostics) {
    if (const auto* report = std::get_if<DiagnosticReport>(&section)) {
      out << "diagnostic: " << to_string(report->kind) << "\n";
      out << "  baseline: " << format_real(report->baseline) << "\n";
      for (const DiagnosticRow& row : report->rows) {
        out << "  " << row.subject << ": ";
        if (row.value) {
          out << format_real(*row.value) << " (delta " << format_real(*row.delta) << ")";
        } else {
          out << "undefined";
        }
        out << "\n";
      }
    } else {
      const auto& profile = std::get<UnitProfile>(section);
      out << "diagnostic: unit_profile\n";
      for (const UnitProfileEntry& entry : profile.rows) {
        out << "  " << entry.item << ": " << entry.modal_label << " x" << entry.modal_count;
        if (entry.tie) out << " (tie)";
        if (entry.yes_count) out << ", yes " << *entry.yes_count;
        out << "\n";
      }
    }
  }
  for (const std::string& warning : document.warnings) {
    out << "warning: " << warning << "\n";
  }
  return out.str();
}

}  // namespace agree

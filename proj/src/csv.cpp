#include "agree/csv.hpp"

#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "agree/error.hpp"

namespace agree {

namespace {

// Physical lines, CRLF-tolerant; 1-based numbering matches the source file.
std::vector<std::string_view> split_lines(std::string_view bytes) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < bytes.size()) lines.push_back(bytes.substr(start));
      break;
    }
    std::string_view line = bytes.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line_number, const std::string& message) {
  throw Error("line " + std::to_string(line_number) + ": " + message);
}

// One CSV record: commas split fields; a field may be double-quoted, in
// which case embedded commas are literal and "" stands for one quote.
std::vector<std::string> split_fields(std::string_view line, std::size_t line_number) {
  std::vector<std::string> fields;
  std::string current;
  std::size_t i = 0;
  while (true) {
    current.clear();
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            current += '"';
            i += 2;
          } else {
            ++i;
            closed = true;
            break;
          }
        } else {
          current += line[i++];
        }
      }
      if (!closed) fail(line_number, "unterminated quoted field");
      if (i < line.size() && line[i] != ',') {
        fail(line_number, "unexpected character after closing quote");
      }
    } else {
      while (i < line.size() && line[i] != ',') current += line[i++];
    }
    fields.push_back(current);
    if (i >= line.size()) break;
    ++i;  // the comma
  }
  return fields;
}

std::size_t parse_index(std::string_view token, std::size_t line_number) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line_number, "invalid site index '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

AnnotationMatrix parse_long_csv(std::string_view bytes) {
  const auto lines = split_lines(bytes);
  if (lines.empty() || lines[0] != "item,coder,label") {
    fail(1, "expected header item,coder,label");
  }

  std::vector<Record> records;
  // (item, coder) -> label first seen, for conflict reporting at the line
  std::map<std::pair<std::string, std::string>, std::string> seen;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t line_number = n + 1;
    const auto fields = split_fields(lines[n], line_number);
    if (fields.size() != 3) {
      fail(line_number, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) fail(line_number, "empty item id");
    if (fields[1].empty()) fail(line_number, "empty coder id");
    if (fields[2].empty()) fail(line_number, "empty label");
    const auto [it, inserted] = seen.emplace(std::make_pair(fields[0], fields[1]), fields[2]);
    if (!inserted) {
      if (it->second != fields[2]) {
        fail(line_number, "conflicting labels for (" + fields[0] + "," + fields[1] + ")");
      }
      continue;  // exact duplicate row
    }
    records.push_back({fields[0], fields[1], fields[2]});
  }
  return build_matrix(records);
}

AnnotationMatrix parse_wide_csv(std::string_view bytes) {
  const auto lines = split_lines(bytes);
  if (lines.empty()) fail(1, "expected header item,<coder>,...");
  const auto header = split_fields(lines[0], 1);
  if (header.size() < 2 || header[0] != "item") fail(1, "expected header item,<coder>,...");
  std::vector<std::string> coders(header.begin() + 1, header.end());
  {
    std::set<std::string_view> unique;
    for (const auto& coder : coders) {
      if (coder.empty()) fail(1, "empty coder name in header");
      if (!unique.insert(coder).second) fail(1, "duplicate coder '" + coder + "' in header");
    }
  }

  std::vector<std::string> items;
  std::set<std::string> item_ids;
  std::vector<std::vector<std::string>> rows;
  std::set<std::string> observed;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t line_number = n + 1;
    auto fields = split_fields(lines[n], line_number);
    if (fields.size() != header.size()) {
      fail(line_number, "expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    }
    if (fields[0].empty()) fail(line_number, "empty item id");
    if (!item_ids.insert(fields[0]).second) {
      fail(line_number, "duplicate item '" + fields[0] + "'");
    }
    bool any_present = false;
    for (std::size_t j = 1; j < fields.size(); ++j) {
      if (!fields[j].empty()) {
        observed.insert(fields[j]);
        any_present = true;
      }
    }
    if (!any_present) fail(line_number, "item '" + fields[0] + "' has no labels");
    items.push_back(fields[0]);
    rows.push_back(std::vector<std::string>(fields.begin() + 1, fields.end()));
  }
  if (items.empty()) throw Error("no records");

  CategorySet categories{std::vector<std::string>(observed.begin(), observed.end())};
  Eigen::MatrixXi codes = Eigen::MatrixXi::Constant(static_cast<Eigen::Index>(items.size()),
                                                    static_cast<Eigen::Index>(coders.size()),
                                                    AnnotationMatrix::kMissing);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < coders.size(); ++j) {
      if (!rows[i][j].empty()) {
        codes(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            categories.index_of(rows[i][j]);
      }
    }
  }
  return AnnotationMatrix(std::move(items), std::move(coders), std::move(codes),
                          std::move(categories));
}

BoundaryTrack parse_boundary_file(std::string_view bytes) {
  const auto lines = split_lines(bytes);
  if (lines.empty() || lines[0].substr(0, 6) != "sites=") {
    fail(1, "expected sites=<count> or sites=?");
  }

  BoundaryTrack track;
  const std::string_view sites_value = lines[0].substr(6);
  if (sites_value != "?") {
    if (sites_value.empty()) fail(1, "expected sites=<count> or sites=?");
    track.site_count = parse_index(sites_value, 1);
  }

  std::set<std::string> coder_names;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t line_number = n + 1;
    const std::string_view line = lines[n];
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) {
      fail(line_number, "expected <coder>:<space-separated site indices>");
    }
    std::string coder(line.substr(0, colon));
    if (!coder_names.insert(coder).second) {
      fail(line_number, "duplicate coder '" + coder + "'");
    }
    track.marks.emplace_back(std::move(coder), std::vector<std::size_t>{});
    std::set<std::size_t> sites;
    std::string_view rest = line.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      while (pos < rest.size() && rest[pos] == ' ') ++pos;
      if (pos >= rest.size()) break;
      std::size_t end = rest.find(' ', pos);
      if (end == std::string_view::npos) end = rest.size();
      const std::size_t index = parse_index(rest.substr(pos, end - pos), line_number);
      if (track.site_count && index >= *track.site_count) {
        fail(line_number, "index " + std::to_string(index) + " >= sites " +
                              std::to_string(*track.site_count));
      }
      sites.insert(index);
      pos = end;
    }
    track.marks.back().second.assign(sites.begin(), sites.end());
  }
  return track;
}

std::string to_long_csv(const AnnotationMatrix& matrix) {
  const auto quote = [](const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };

  std::string out = "item,coder,label\n";
  for (const Record& record : to_records(matrix)) {
    out += quote(record.item);
    out += ',';
    out += quote(record.coder);
    out += ',';
    out += quote(record.label);
    out += '\n';
  }
  return out;
}

}  // namespace agree

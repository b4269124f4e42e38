#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "optsel/util.hpp"

namespace optsel {

// Delimiter-separated text with a mandatory header row. Column names are the
// contract; column order is not. Lines starting with '#' are comments and may
// carry `key=value` metadata (config hash, seed). Fields containing the
// delimiter, quotes, or a leading '#' are double-quoted with "" escapes.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> row_lines;  // 1-based source line per row, for error messages
  std::vector<std::pair<std::string, std::string>> comments;

  int column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
  }

  int require_column(std::string_view name, const std::string& source) const {
    int idx = column_index(name);
    if (idx < 0) throw DataError(source + ": missing required column '" + std::string(name) + "'");
    return idx;
  }

  std::string comment(std::string_view key) const {
    for (const auto& [k, v] : comments) {
      if (k == key) return v;
    }
    return {};
  }
};

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line, char delim, const std::string& where) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  while (true) {
    field.clear();
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            ++i;
            closed = true;
            break;
          }
        } else {
          field += line[i++];
        }
      }
      if (!closed) throw DataError(where + ": unterminated quoted field");
    } else {
      while (i < line.size() && line[i] != delim) field += line[i++];
      field = std::string(trim(field));
    }
    fields.push_back(field);
    if (i >= line.size()) break;
    if (line[i] != delim) throw DataError(where + ": malformed quoting");
    ++i;
  }
  return fields;
}

inline bool needs_quoting(std::string_view f, char delim) {
  if (!f.empty() && f.front() == '#') return true;
  for (char c : f) {
    if (c == delim || c == '"' || c == '\n' || c == '\r') return true;
  }
  return false;
}

inline std::string escape_field(const std::string& f, char delim) {
  if (!needs_quoting(f, delim)) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline Table parse_delimited(std::string_view text, const std::string& source, char delim = ',') {
  Table table;
  std::size_t pos = 0;
  int line_no = 0;
  bool have_header = false;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos) ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      std::size_t eq = body.find('=');
      if (eq != std::string_view::npos) {
        table.comments.emplace_back(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
      }
      continue;
    }
    std::string where = source + ":" + std::to_string(line_no);
    auto fields = detail::split_fields(line, delim, where);
    if (!have_header) {
      table.columns = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw DataError(where + ": expected " + std::to_string(table.columns.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.row_lines.push_back(line_no);
  }
  if (!have_header) throw DataError(source + ": empty file (no header row)");
  return table;
}

inline Table read_delimited(const std::filesystem::path& path, char delim = ',') {
  return parse_delimited(read_text_file(path), path.filename().string(), delim);
}

inline std::string render_delimited(const Table& table, char delim = ',') {
  std::string out;
  for (const auto& [k, v] : table.comments) {
    out += "# ";
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += delim;
    out += detail::escape_field(table.columns[i], delim);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += delim;
      out += detail::escape_field(row[i], delim);
    }
    out += '\n';
  }
  return out;
}

inline void write_delimited(const std::filesystem::path& path, const Table& table, char delim = ',') {
  write_text_file(path, render_delimited(table, delim));
}

}  // namespace optsel

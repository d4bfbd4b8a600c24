#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdd/design.hpp"
#include "gdd/verify.hpp"

namespace gdd {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& message);

  int line_ = 0;
  int column_ = 0;
};

/// Parses the canonical .gdd text format. The result passes validate_spec.
/// Throws ParseError with line/column on syntax or semantic errors.
DesignSpec parse_design(std::string_view text);

/// Canonical text form: bit-identical for equal specs. Sorted block points,
/// fixed field order, LF line endings, leading `# <name>` comment.
std::string serialize_design(const DesignSpec& spec);

struct CatalogEntry {
  DesignSpec spec;
  std::string source;  // file path the entry was read from
};

/// Parses every .gdd file in a directory; entries sorted by design name.
/// Throws std::runtime_error (with the file path) on unreadable files,
/// parse errors, or duplicate design names.
std::vector<CatalogEntry> load_designs(const std::filesystem::path& dir);

/// load_designs plus completeness: the name multiset must equal the shipped
/// 233-type list; missing or unexpected types are named in the error.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// The 233 type names of the shipped catalog, sorted.
std::span<const std::string_view> catalog_type_names();

/// JSON document {name, v, type, groups, blocks, verification} for a
/// consistent (spec, expansion, report) triple. UTF-8, stable key order,
/// trailing newline.
std::string export_json(const DesignSpec& spec, std::span<const Block> blocks,
                        const Report& report);

}  // namespace gdd

#include "gdd/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gdd/orbit.hpp"
#include "gdd/search.hpp"

namespace gdd {

std::string ParseError::format(int line, int column, const std::string& message) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

// Whitespace-separated tokens of one line, comments stripped.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    if (line[i] == '"') {  // quoted string, single token
      ++i;
      while (i < line.size() && line[i] != '"') ++i;
      if (i < line.size()) ++i;
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

std::int64_t parse_int(const Token& tok, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line, tok.column, "expected an integer, got \"" + std::string(tok.text) + "\"");
  return value;
}

// Line numbers of the constructs a defect can point at.
struct SourceMap {
  int design_line = 1;
  std::vector<int> gseg_lines;
  std::vector<int> orbit_lines;
  std::vector<std::vector<int>> block_lines;  // per orbit
};

int defect_line(const Defect& defect, const SourceMap& map) {
  if (defect.orbit >= 0 && defect.block >= 0 &&
      defect.block < static_cast<int>(map.block_lines[defect.orbit].size()))
    return map.block_lines[defect.orbit][defect.block];
  if (defect.orbit >= 0 && defect.orbit < static_cast<int>(map.orbit_lines.size()))
    return map.orbit_lines[defect.orbit];
  if (defect.segment >= 0 && defect.segment < static_cast<int>(map.gseg_lines.size()))
    return map.gseg_lines[defect.segment];
  if (!map.gseg_lines.empty()) return map.gseg_lines.back();
  return map.design_line;
}

struct ParsedFile {
  DesignSpec spec;                        // base_blocks filled unless skeleton
  std::vector<std::int32_t> block_counts; // per orbit, skeletons only
  SourceMap map;
};

// Shared reader for designs and skeletons. Statement order is fixed:
// design, points, gseg+, then per orbit the act/fix lines followed by its
// block lines.
ParsedFile read_gdd(std::string_view text, bool skeleton) {
  ParsedFile file;
  DesignSpec& spec = file.spec;

  enum class Section { start, header, grouping, orbit };
  Section section = Section::start;
  bool have_points = false;
  bool in_blocks = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const auto& kw = tokens[0];

    auto want_args = [&](std::size_t n, const char* usage) {
      if (tokens.size() != n + 1)
        throw ParseError(line_no, kw.column, std::string("expected \"") + usage + "\"");
    };

    if (kw.text == "design") {
      if (section != Section::start)
        throw ParseError(line_no, kw.column, "duplicate design statement");
      want_args(1, "design \"<name>\"");
      const auto& name = tokens[1];
      if (name.text.size() < 2 || name.text.front() != '"' || name.text.back() != '"')
        throw ParseError(line_no, name.column, "design name must be quoted");
      spec.name = std::string(name.text.substr(1, name.text.size() - 2));
      file.map.design_line = line_no;
      section = Section::header;
    } else if (kw.text == "points") {
      if (section != Section::header || have_points)
        throw ParseError(line_no, kw.column, "points must follow the design statement");
      want_args(1, "points <count>");
      std::int64_t v = parse_int(tokens[1], line_no);
      if (v < 1 || v > 1'000'000)
        throw ParseError(line_no, tokens[1].column, "point count out of range");
      spec.v = static_cast<Point>(v);
      have_points = true;
    } else if (kw.text == "gseg") {
      if (!have_points || section == Section::orbit)
        throw ParseError(line_no, kw.column, "gseg must come after points and before orbits");
      section = Section::grouping;
      if (tokens.size() != 4 && tokens.size() != 5)
        throw ParseError(line_no, kw.column, "expected \"gseg <lo> <len> mod <m>\" or \"gseg <lo> <len> whole\"");
      GroupingSegment seg;
      seg.lo = static_cast<Point>(parse_int(tokens[1], line_no));
      seg.len = static_cast<std::int32_t>(parse_int(tokens[2], line_no));
      if (tokens[3].text == "whole") {
        if (tokens.size() != 4)
          throw ParseError(line_no, tokens[3].column, "unexpected token after \"whole\"");
        seg.scheme = Scheme::whole;
      } else if (tokens[3].text == "mod") {
        if (tokens.size() != 5)
          throw ParseError(line_no, tokens[3].column, "expected \"mod <m>\"");
        seg.scheme = Scheme::residues;
        seg.modulus = static_cast<std::int32_t>(parse_int(tokens[4], line_no));
        if (seg.modulus < 1)
          throw ParseError(line_no, tokens[4].column, "modulus must be positive");
        if (seg.len % seg.modulus != 0)
          throw ParseError(line_no, tokens[4].column,
                           std::to_string(seg.modulus) + " does not divide " + std::to_string(seg.len));
      } else {
        throw ParseError(line_no, tokens[3].column, "expected \"mod\" or \"whole\"");
      }
      spec.grouping.push_back(seg);
      file.map.gseg_lines.push_back(line_no);
    } else if (kw.text == "orbit") {
      if (section != Section::grouping && section != Section::orbit)
        throw ParseError(line_no, kw.column, "orbit must come after the grouping segments");
      if (section == Section::orbit && spec.orbits.back().base_blocks.empty() &&
          file.block_counts.back() == 0)
        throw ParseError(line_no, kw.column, "previous orbit has no blocks");
      want_args(1, "orbit <j_max>");
      OrbitSpec orbit;
      orbit.j_max = static_cast<std::int32_t>(parse_int(tokens[1], line_no));
      if (orbit.j_max < 1)
        throw ParseError(line_no, tokens[1].column, "orbit j_max must be positive");
      spec.orbits.push_back(std::move(orbit));
      file.block_counts.push_back(0);
      file.map.orbit_lines.push_back(line_no);
      file.map.block_lines.emplace_back();
      section = Section::orbit;
      in_blocks = false;
    } else if (kw.text == "act" || kw.text == "fix") {
      if (section != Section::orbit)
        throw ParseError(line_no, kw.column, std::string(kw.text) + " outside an orbit");
      if (in_blocks)
        throw ParseError(line_no, kw.column, "action segments must precede the orbit's blocks");
      ActionSegment act;
      if (kw.text == "fix") {
        want_args(1, "fix <point>");
        act.lo = static_cast<Point>(parse_int(tokens[1], line_no));
        act.len = 1;
        act.step = 0;
      } else {
        if (tokens.size() != 5 || tokens[3].text != "step")
          throw ParseError(line_no, kw.column, "expected \"act <lo> <len> step <c>\"");
        act.lo = static_cast<Point>(parse_int(tokens[1], line_no));
        act.len = static_cast<std::int32_t>(parse_int(tokens[2], line_no));
        act.step = static_cast<std::int32_t>(parse_int(tokens[4], line_no));
        if (act.len < 1) throw ParseError(line_no, tokens[2].column, "segment length must be positive");
      }
      spec.orbits.back().actions.push_back(act);
    } else if (kw.text == "block") {
      if (section != Section::orbit)
        throw ParseError(line_no, kw.column, "block outside an orbit");
      in_blocks = true;
      if (skeleton) {
        want_args(1, "block ?");
        if (tokens[1].text != "?")
          throw ParseError(line_no, tokens[1].column, "skeleton blocks must be \"block ?\"");
        ++file.block_counts.back();
      } else {
        if (tokens.size() != 6)
          throw ParseError(line_no, kw.column, "block requires 5 points");
        std::array<Point, 5> pts{};
        for (int i = 0; i < 5; ++i) pts[i] = static_cast<Point>(parse_int(tokens[i + 1], line_no));
        spec.orbits.back().base_blocks.push_back(Block::of(pts));
        file.map.block_lines.back().push_back(line_no);
      }
    } else {
      throw ParseError(line_no, kw.column, "unknown statement \"" + std::string(kw.text) + "\"");
    }
    if (pos > text.size()) break;
  }

  if (section == Section::start) throw ParseError(1, 1, "missing design statement");
  if (!have_points) throw ParseError(file.map.design_line, 1, "missing points statement");
  if (spec.grouping.empty()) throw ParseError(file.map.design_line, 1, "missing grouping segments");
  if (spec.orbits.empty()) throw ParseError(file.map.design_line, 1, "missing orbits");
  if (skeleton) {
    for (std::size_t i = 0; i < file.block_counts.size(); ++i)
      if (file.block_counts[i] == 0)
        throw ParseError(file.map.orbit_lines[i], 1, "orbit has no blocks");
  } else if (spec.orbits.back().base_blocks.empty()) {
    throw ParseError(file.map.orbit_lines.back(), 1, "orbit has no blocks");
  }
  return file;
}

void throw_first_defect(const ParsedFile& file, const std::vector<Defect>& defects) {
  if (defects.empty()) return;
  const Defect& d = defects.front();
  throw ParseError(defect_line(d, file.map), 1, d.message);
}

}  // namespace

DesignSpec parse_design(std::string_view text) {
  ParsedFile file = read_gdd(text, /*skeleton=*/false);
  throw_first_defect(file, validate_spec(file.spec));
  return std::move(file.spec);
}

Skeleton parse_skeleton(std::string_view text) {
  ParsedFile file = read_gdd(text, /*skeleton=*/true);
  // validate the shape: grouping, actions and name checks all apply to a
  // spec with no base blocks
  throw_first_defect(file, validate_spec(file.spec));
  Skeleton sk;
  sk.name = std::move(file.spec.name);
  sk.v = file.spec.v;
  sk.grouping = std::move(file.spec.grouping);
  for (std::size_t i = 0; i < file.spec.orbits.size(); ++i) {
    OrbitShape shape;
    shape.block_count = file.block_counts[i];
    shape.actions = std::move(file.spec.orbits[i].actions);
    shape.j_max = file.spec.orbits[i].j_max;
    sk.orbits.push_back(std::move(shape));
  }
  return sk;
}

std::string serialize_design(const DesignSpec& spec) {
  std::string out;
  out += "# " + spec.name + "\n";
  out += "design \"" + spec.name + "\"\n";
  out += "points " + std::to_string(spec.v) + "\n";
  for (const auto& seg : spec.grouping) {
    out += "gseg " + std::to_string(seg.lo) + " " + std::to_string(seg.len);
    if (seg.scheme == Scheme::residues)
      out += " mod " + std::to_string(seg.modulus);
    else
      out += " whole";
    out += "\n";
  }
  for (const auto& orbit : spec.orbits) {
    out += "orbit " + std::to_string(orbit.j_max) + "\n";
    for (const auto& act : orbit.actions) {
      if (act.len == 1 && act.step == 0)
        out += "  fix " + std::to_string(act.lo) + "\n";
      else
        out += "  act " + std::to_string(act.lo) + " " + std::to_string(act.len) + " step " +
               std::to_string(act.step) + "\n";
    }
    for (const auto& blk : orbit.base_blocks) {
      out += "  block";
      for (Point p : blk.points) out += " " + std::to_string(p);
      out += "\n";
    }
  }
  return out;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error(path.string() + ": read failed");
  return std::move(buf).str();
}

}  // namespace

std::vector<CatalogEntry> load_designs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error(dir.string() + ": not a directory");

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".gdd")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> entries;
  std::map<std::string, std::string> seen;  // name -> path
  for (const auto& path : files) {
    DesignSpec spec;
    try {
      spec = parse_design(read_file(path));
    } catch (const ParseError& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
    auto [it, inserted] = seen.emplace(spec.name, path.string());
    if (!inserted)
      throw std::runtime_error(path.string() + ": duplicate design name \"" + spec.name +
                               "\" (also in " + it->second + ")");
    entries.push_back({std::move(spec), path.string()});
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.spec.name < b.spec.name; });
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  auto entries = load_designs(dir);
  auto expected = catalog_type_names();

  std::vector<std::string_view> have;
  have.reserve(entries.size());
  for (const auto& e : entries) have.push_back(e.spec.name);

  std::vector<std::string_view> missing, unexpected;
  std::set_difference(expected.begin(), expected.end(), have.begin(), have.end(),
                      std::back_inserter(missing));
  std::set_difference(have.begin(), have.end(), expected.begin(), expected.end(),
                      std::back_inserter(unexpected));
  if (!missing.empty() || !unexpected.empty()) {
    std::string msg = dir.string() + ": catalog incomplete;";
    for (const auto& name : missing) msg += " missing \"" + std::string(name) + "\"";
    for (const auto& name : unexpected) msg += " unexpected \"" + std::string(name) + "\"";
    throw std::runtime_error(msg);
  }
  return entries;
}

std::string export_json(const DesignSpec& spec, std::span<const Block> blocks,
                        const Report& report) {
  nlohmann::ordered_json doc;
  doc["name"] = spec.name;
  doc["v"] = spec.v;

  auto type = nlohmann::ordered_json::array();
  for (const auto& [size, count] : gdd_type_of(spec).parts)
    type.push_back({size, count});
  doc["type"] = std::move(type);

  auto groups = nlohmann::ordered_json::array();
  for (const auto& members : group_members(spec)) groups.push_back(members);
  doc["groups"] = std::move(groups);

  auto blocks_json = nlohmann::ordered_json::array();
  for (const auto& blk : blocks) blocks_json.push_back(blk.points);
  doc["blocks"] = std::move(blocks_json);

  auto violations = nlohmann::ordered_json::array();
  for (const auto& viol : report.violations) {
    nlohmann::ordered_json item;
    item["kind"] = to_string(viol.kind);
    switch (viol.kind) {
      case ViolationKind::repeated_point:
        item["block"] = viol.block;
        item["point"] = viol.a;
        break;
      case ViolationKind::same_group_pair:
      case ViolationKind::pair_duplicated:
        item["a"] = viol.a;
        item["b"] = viol.b;
        item["count"] = viol.count;
        break;
      case ViolationKind::pair_uncovered:
        item["a"] = viol.a;
        item["b"] = viol.b;
        break;
      case ViolationKind::block_count_mismatch:
        item["actual"] = viol.count;
        item["expected"] = viol.expected;
        break;
    }
    violations.push_back(std::move(item));
  }
  doc["verification"] = {{"valid", report.valid},
                         {"block_count", report.block_count},
                         {"violations", std::move(violations)}};
  return doc.dump() + "\n";
}

}  // namespace gdd

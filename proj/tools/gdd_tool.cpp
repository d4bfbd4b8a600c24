// Command-line front end: verify, expand, inspect and search .gdd designs.
//
// Exit codes: 0 success/valid, 1 invalid design, 2 usage or parse error,
// 3 search budget exhausted, 4 infeasible parameters.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdd/catalog.hpp"
#include "gdd/design.hpp"
#include "gdd/orbit.hpp"
#include "gdd/search.hpp"
#include "gdd/verify.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInfeasible = 4;

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("GDD_CATALOG")) return env;
#ifdef GDD_BUNDLED_CATALOG
  return GDD_BUNDLED_CATALOG;
#else
  return "data";
#endif
}

std::string read_file_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// A target names either a .gdd file or a design in the catalog directory.
gdd::DesignSpec resolve_target(const std::string& target, const std::filesystem::path& catalog) {
  if (target.ends_with(".gdd") || target.find('/') != std::string::npos ||
      std::filesystem::exists(target))
    return gdd::parse_design(read_file_or_throw(target));

  auto wanted = gdd::GddType::parse(target);
  for (auto& entry : gdd::load_designs(catalog)) {
    if (entry.spec.name == target) return std::move(entry.spec);
    if (wanted && gdd::GddType::parse(entry.spec.name) == wanted) return std::move(entry.spec);
  }
  throw std::runtime_error("no design named \"" + target + "\" in " + catalog.string());
}

void print_report_text(std::ostream& os, const std::string& name, const gdd::Report& report) {
  if (report.valid) {
    os << name << ": valid (" << report.block_count << " blocks)\n";
    return;
  }
  os << name << ": INVALID (" << report.violations.size() << " violations, "
     << report.block_count << " blocks)\n";
  for (const auto& violation : report.violations) os << "  " << to_string(violation) << "\n";
}

nlohmann::ordered_json verification_json(const std::string& name, const gdd::Report& report) {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["valid"] = report.valid;
  doc["block_count"] = report.block_count;
  doc["violations"] = report.violations.size();
  return doc;
}

int cmd_verify(const std::string& target, bool all, const std::filesystem::path& catalog,
               const std::string& format, unsigned jobs) {
  if (!all) {
    gdd::DesignSpec spec = resolve_target(target, catalog);
    gdd::Report report = gdd::verify(spec);
    if (format == "json")
      std::cout << gdd::export_json(spec, gdd::expand_design(spec), report);
    else
      print_report_text(std::cout, spec.name, report);
    return report.valid ? kExitValid : kExitInvalid;
  }

  auto entries = gdd::load_designs(catalog);
  std::vector<gdd::Report> reports(entries.size());

  // fan out to a small worker pool; results are emitted in name order
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      reports[i] = gdd::verify(entries[i].spec);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t valid = 0;
  nlohmann::ordered_json all_json = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (reports[i].valid) ++valid;
    if (format == "json")
      all_json.push_back(verification_json(entries[i].spec.name, reports[i]));
    else
      print_report_text(std::cout, entries[i].spec.name, reports[i]);
  }
  if (format == "json")
    std::cout << all_json.dump() << "\n";
  else
    std::cout << valid << "/" << entries.size() << " valid\n";
  return valid == entries.size() ? kExitValid : kExitInvalid;
}

int cmd_expand(const std::string& target, const std::filesystem::path& catalog,
               const std::string& format) {
  gdd::DesignSpec spec = resolve_target(target, catalog);
  auto blocks = gdd::expand_design(spec);
  if (format == "json") {
    std::cout << gdd::export_json(spec, blocks, gdd::verify(spec));
  } else {
    for (const auto& blk : blocks) {
      for (int i = 0; i < 5; ++i) std::cout << (i ? " " : "") << blk.points[i];
      std::cout << "\n";
    }
  }
  return kExitValid;
}

int cmd_info(const std::string& target, const std::filesystem::path& catalog,
             const std::string& format) {
  gdd::DesignSpec spec = resolve_target(target, catalog);
  auto type = gdd::gdd_type_of(spec);
  auto expected = gdd::expected_block_count(spec);
  auto blocks = gdd::expand_design(spec);

  // one representative point per group size
  std::vector<std::pair<std::int32_t, std::int64_t>> replication;
  for (const auto& [size, count] : type.parts) {
    for (const auto& seg : spec.grouping)
      if (seg.group_size() == size) {
        replication.emplace_back(size, gdd::replication_number(spec, seg.lo).value_or(-1));
        break;
      }
  }

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["name"] = spec.name;
    doc["v"] = spec.v;
    doc["type"] = nlohmann::ordered_json::array();
    for (const auto& [size, count] : type.parts) doc["type"].push_back({size, count});
    doc["groups"] = gdd::group_count(spec);
    doc["expected_blocks"] = expected ? nlohmann::ordered_json(*expected) : nullptr;
    doc["blocks"] = blocks.size();
    doc["replication"] = nlohmann::ordered_json::array();
    for (auto [size, r] : replication) doc["replication"].push_back({size, r});
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "design " << spec.name << "\n";
    std::cout << "v " << spec.v << "\n";
    std::cout << "type " << type.to_string() << "\n";
    std::cout << "groups " << gdd::group_count(spec) << "\n";
    if (expected)
      std::cout << "blocks expected " << *expected << "\n";
    else
      std::cout << "blocks expected infeasible\n";
    std::cout << "blocks actual " << blocks.size() << "\n";
    for (auto [size, r] : replication)
      std::cout << "replication size " << size << ": " << r << "\n";
  }
  return kExitValid;
}

int cmd_search(const std::string& skeleton_path, const gdd::SearchBudget& budget,
               const std::string& out_path) {
  gdd::Skeleton skeleton = gdd::parse_skeleton(read_file_or_throw(skeleton_path));
  gdd::SearchResult result = gdd::search_base_blocks(skeleton, budget);
  std::cerr << "search explored " << result.nodes << " nodes\n";
  switch (result.status) {
    case gdd::SearchStatus::infeasible:
      std::cerr << "infeasible: counting conditions rule this skeleton out\n";
      return kExitInfeasible;
    case gdd::SearchStatus::budget_exhausted:
      std::cerr << "budget exhausted without a witness (not a nonexistence proof)\n";
      return kExitBudget;
    case gdd::SearchStatus::found:
      break;
  }
  std::string text = gdd::serialize_design(*result.spec);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error(out_path + ": write failed");
    std::cerr << "wrote " << out_path << "\n";
  }
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group divisible design construction, verification and search"};
  app.require_subcommand(1);

  std::filesystem::path catalog = default_catalog_dir();
  std::string format = "text";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--catalog", catalog, "catalog directory of .gdd files");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "worker count for --all")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check designs for the exact-coverage rules");
  std::string verify_target;
  bool verify_all = false;
  verify_cmd->add_option("target", verify_target, "design name or .gdd file");
  verify_cmd->add_flag("--all", verify_all, "verify every design in the catalog");

  auto* expand_cmd = app.add_subcommand("expand", "print all blocks of a design");
  std::string expand_target;
  expand_cmd->add_option("target", expand_target, "design name or .gdd file")->required();

  auto* info_cmd = app.add_subcommand("info", "print structural quantities of a design");
  std::string info_target;
  info_cmd->add_option("target", info_target, "design name or .gdd file")->required();

  auto* search_cmd = app.add_subcommand("search", "find base blocks for an orbit skeleton");
  std::string skeleton_path, out_path;
  gdd::SearchBudget budget;
  double time_limit_s = budget.time_limit.count();
  search_cmd->add_option("skeleton", skeleton_path, "skeleton .gdd file (block ? lines)")
      ->required();
  search_cmd->add_option("--max-nodes", budget.max_nodes, "node budget");
  search_cmd->add_option("--time-limit", time_limit_s, "time budget in seconds");
  search_cmd->add_option("--seed", budget.seed, "candidate-order seed (0 = lexicographic)");
  search_cmd->add_option("-o,--output", out_path, "write the found design here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      if (verify_all == !verify_target.empty())  // exactly one of target / --all
        throw std::runtime_error("verify needs a target or --all");
      return cmd_verify(verify_target, verify_all, catalog, format, jobs);
    }
    if (expand_cmd->parsed()) return cmd_expand(expand_target, catalog, format);
    if (info_cmd->parsed()) return cmd_info(info_target, catalog, format);
    if (search_cmd->parsed()) {
      budget.time_limit = std::chrono::duration<double>(time_limit_s);
      return cmd_search(skeleton_path, budget, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

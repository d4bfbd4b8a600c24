#include "gdd/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gdd/orbit.hpp"
#include "gdd/verify.hpp"

namespace gdd {

namespace {

using Clock = std::chrono::steady_clock;

// Everything precomputed about one orbit shape: point images for every
// shift, whether the mapping has period dividing j_max (a "full" orbit,
// where any translate of a base block generates the same orbit), and the
// translate-class minima used for canonicalization.
struct ShapeInfo {
  const OrbitShape* shape = nullptr;
  std::vector<std::vector<Point>> image;  // image[x][s], s in [0, j_max)
  std::vector<Point> class_min;           // min over s of image[x][s]
  bool full_period = false;
};

ShapeInfo make_shape_info(const Skeleton& sk, const OrbitShape& shape) {
  ShapeInfo info;
  info.shape = &shape;
  info.full_period = true;
  for (const auto& act : shape.actions)
    if (static_cast<std::int64_t>(act.step) * shape.j_max % act.len != 0)
      info.full_period = false;

  info.image.assign(sk.v, {});
  info.class_min.assign(sk.v, 0);
  for (Point x = 0; x < sk.v; ++x) {
    auto& row = info.image[x];
    row.resize(shape.j_max);
    Point lo = x;
    for (std::int32_t s = 0; s < shape.j_max; ++s) {
      row[s] = apply_action(shape.actions, s, x);
      lo = std::min(lo, row[s]);
    }
    info.class_min[x] = lo;
  }
  return info;
}

class Searcher {
 public:
  Searcher(const Skeleton& sk, const SearchBudget& budget)
      : sk_(sk), budget_(budget), ledger_(sk.v) {
    DesignSpec shell{sk.name, sk.v, sk.grouping, {}};
    gid_ = group_id_table(shell);

    for (const auto& shape : sk_.orbits) infos_.push_back(make_shape_info(sk_, shape));

    // short orbits (period does not divide j_max) are searched last
    std::vector<std::size_t> shape_order;
    for (std::size_t i = 0; i < infos_.size(); ++i)
      if (infos_[i].full_period) shape_order.push_back(i);
    for (std::size_t i = 0; i < infos_.size(); ++i)
      if (!infos_[i].full_period) shape_order.push_back(i);
    for (std::size_t si : shape_order)
      for (std::int32_t b = 0; b < sk_.orbits[si].block_count; ++b)
        slot_shape_.push_back(si);

    // candidate visiting order: ascending point value, or a seeded
    // permutation of it; blocks themselves stay sorted ascending
    candidates_.resize(sk_.v);
    std::iota(candidates_.begin(), candidates_.end(), 0);
    if (budget_.seed != 0) {
      std::mt19937_64 gen(budget_.seed);
      for (std::size_t i = candidates_.size() - 1; i > 0; --i)
        std::swap(candidates_[i], candidates_[gen() % (i + 1)]);
    }

    found_.resize(infos_.size());
    trail_.reserve(5 * 400);
  }

  SearchResult run() {
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget_.time_limit);

    SearchResult result;
    bool ok = fill_slot(0);
    result.nodes = nodes_;
    if (!ok) {
      result.status = SearchStatus::budget_exhausted;
      return result;
    }

    DesignSpec spec{sk_.name, sk_.v, sk_.grouping, {}};
    for (std::size_t i = 0; i < sk_.orbits.size(); ++i)
      spec.orbits.push_back({found_[i], sk_.orbits[i].actions, sk_.orbits[i].j_max});
    // never trust search state: the verifier has the final word
    if (!verify(spec).valid)
      throw std::logic_error("search produced a spec that fails verification");
    result.status = SearchStatus::found;
    result.spec = std::move(spec);
    return result;
  }

 private:
  bool out_of_budget() {
    if (stopped_) return true;
    if (nodes_ >= budget_.max_nodes) stopped_ = true;
    if ((nodes_ & 0xfff) == 0 && Clock::now() >= deadline_) stopped_ = true;
    return stopped_;
  }

  // Tentatively covers the pair orbits of (p, q); true if every covered
  // pair is cross-group and previously uncovered. Increments stay on the
  // trail even on failure; the caller rolls back to its mark.
  bool add_point_pairs(const ShapeInfo& info, Point p, Point q) {
    const auto& prow = info.image[p];
    const auto& qrow = info.image[q];
    for (std::size_t s = 0; s < prow.size(); ++s) {
      Point a = prow[s];
      Point b = qrow[s];
      if (gid_[a] == gid_[b]) return false;
      if (ledger_.add(a, b) > 1) {
        trail_.emplace_back(a, b);
        return false;
      }
      trail_.emplace_back(a, b);
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [a, b] = trail_.back();
      trail_.pop_back();
      ledger_.remove(a, b);
    }
  }

  // True iff the completed block is the lexicographically least member of
  // its translate class (full-period orbits only).
  bool canonical_block(const ShapeInfo& info, const std::array<Point, 5>& pts) {
    std::array<Point, 5> translate;
    for (std::int32_t s = 1; s < info.shape->j_max; ++s) {
      for (int i = 0; i < 5; ++i) translate[i] = info.image[pts[i]][s];
      std::sort(translate.begin(), translate.end());
      if (translate < pts) return false;
    }
    return true;
  }

  bool fill_slot(std::size_t slot) {
    if (slot == slot_shape_.size()) return true;
    std::array<Point, 5> pts{};
    return extend(slot, infos_[slot_shape_[slot]], pts, 0);
  }

  bool extend(std::size_t slot, const ShapeInfo& info, std::array<Point, 5>& pts, int depth) {
    for (Point candidate : candidates_) {
      if (depth > 0 && candidate <= pts[depth - 1]) continue;
      ++nodes_;
      if (out_of_budget()) return false;

      if (info.full_period) {
        if (depth == 0) {
          if (info.class_min[candidate] != candidate) continue;
        } else if (info.class_min[candidate] < pts[0]) {
          continue;
        }
      }

      std::size_t mark = trail_.size();
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = add_point_pairs(info, pts[i], candidate);
      if (ok) {
        pts[depth] = candidate;
        if (depth == 4) {
          if (!info.full_period || canonical_block(info, pts)) {
            found_[slot_shape_[slot]].push_back(Block{pts});
            if (fill_slot(slot + 1)) return true;
            found_[slot_shape_[slot]].pop_back();
          }
        } else {
          if (extend(slot, info, pts, depth + 1)) return true;
        }
      }
      rollback(mark);
      if (stopped_) return false;
    }
    return false;
  }

  const Skeleton& sk_;
  SearchBudget budget_;
  Clock::time_point deadline_;
  PairLedger ledger_;
  std::vector<std::int32_t> gid_;
  std::vector<ShapeInfo> infos_;
  std::vector<std::size_t> slot_shape_;
  std::vector<std::vector<Block>> found_;
  std::vector<Point> candidates_;
  std::vector<std::pair<Point, Point>> trail_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

SearchResult search_base_blocks(const Skeleton& skeleton, const SearchBudget& budget) {
  if (budget.max_nodes == 0 || budget.time_limit <= std::chrono::seconds(0))
    throw std::invalid_argument("search budget limits must be positive");

  DesignSpec shell{skeleton.name, skeleton.v, skeleton.grouping, {}};
  for (const auto& shape : skeleton.orbits)
    shell.orbits.push_back({{}, shape.actions, shape.j_max});
  if (!validate_spec(shell).empty())
    throw std::invalid_argument("skeleton fails structural validation");

  // counting feasibility comes before any search
  auto expected = expected_block_count(skeleton.v, skeleton.grouping);
  std::int64_t produced = 0;
  for (const auto& shape : skeleton.orbits)
    produced += static_cast<std::int64_t>(shape.block_count) * shape.j_max;
  if (!expected || *expected != produced) {
    SearchResult result;
    result.status = SearchStatus::infeasible;
    return result;
  }

  return Searcher(skeleton, budget).run();
}

}  // namespace gdd

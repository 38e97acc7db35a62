#include "chainsemi/transversals.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace chainsemi {

point_type Transversal::representative(std::size_t block_index) const {
  for (point_type p : kernel.blocks.at(block_index)) {
    if (std::find(points.begin(), points.end(), p) != points.end()) return p;
  }
  throw Error(errc::out_of_range, "transversal misses a block");
}

std::vector<Transversal> all_transversals(const KernelPartition& k) {
  std::vector<Transversal> out;
  const std::size_t p = k.blocks.size();
  std::vector<std::size_t> pick(p, 0);
  while (true) {
    Transversal t{k, {}};
    for (std::size_t i = 0; i < p; ++i) t.points.push_back(k.blocks[i][pick[i]]);
    std::sort(t.points.begin(), t.points.end());
    out.push_back(std::move(t));
    // odometer over block choices
    std::size_t i = 0;
    for (; i < p; ++i) {
      if (++pick[i] < k.blocks[i].size()) break;
      pick[i] = 0;
    }
    if (i == p) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Transversal& a, const Transversal& b) { return a.points < b.points; });
  return out;
}

bool is_convex(const Transversal& t) {
  if (t.points.empty()) return true;
  return t.points.back() - t.points.front() + 1 == static_cast<int>(t.points.size());
}

bool is_relatively_convex(const Transversal& t) {
  if (t.points.empty()) return true;
  const point_type lo = t.points.front();
  const point_type hi = t.points.back();
  for (point_type z : t.kernel.domain()) {
    if (lo <= z && z <= hi &&
        !std::binary_search(t.points.begin(), t.points.end(), z)) {
      return false;
    }
  }
  return true;
}

namespace {

int min_cross_distance(const std::vector<point_type>& a, const std::vector<point_type>& b) {
  int best = INT32_MAX;
  for (point_type u : a) {
    for (point_type v : b) best = std::min(best, std::abs(u - v));
  }
  return best;
}

std::string points_to_string(const std::vector<point_type>& pts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i];
  os << "}";
  return os.str();
}

}  // namespace

bool is_admissible(const Transversal& t) {
  const std::size_t p = t.kernel.blocks.size();
  std::vector<point_type> rep(p);
  for (std::size_t i = 0; i < p; ++i) rep[i] = t.representative(i);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (std::abs(rep[i] - rep[j]) >
          min_cross_distance(t.kernel.blocks[i], t.kernel.blocks[j])) {
        return false;
      }
    }
  }
  return true;
}

LemmaReport lemma_witness(const KernelPartition& k, LemmaCheck which) {
  const std::size_t p = k.blocks.size();
  if (p < 3) {
    throw Error(errc::hypothesis_not_met, "needs at least three kernel blocks");
  }
  if (!k.blocks_elementwise_ordered()) {
    throw Error(errc::hypothesis_not_met, "kernel blocks are not elementwise ordered");
  }
  bool big_interior = false;
  bool all_interior_singleton = true;
  for (std::size_t i = 1; i + 1 < p; ++i) {
    if (k.blocks[i].size() >= 2) big_interior = true;
    if (k.blocks[i].size() != 1) all_interior_singleton = false;
  }

  LemmaReport report;
  const auto transversals = all_transversals(k);
  report.transversals_checked = transversals.size();

  if (which == LemmaCheck::relatively_convex_nonexistence) {
    if (!big_interior) {
      throw Error(errc::hypothesis_not_met, "no interior block of size >= 2");
    }
    for (const auto& t : transversals) {
      if (is_relatively_convex(t)) {
        report.confirmed = false;
        report.witness = t;
        report.detail = "relatively convex transversal " + points_to_string(t.points);
        return report;
      }
    }
    report.confirmed = true;
    report.detail = "no relatively convex transversal among " +
                    std::to_string(transversals.size());
    return report;
  }

  // admissible_existence
  if (!all_interior_singleton) {
    throw Error(errc::hypothesis_not_met, "an interior block has size >= 2");
  }
  for (const auto& t : transversals) {
    if (is_admissible(t)) {
      report.confirmed = true;
      report.witness = t;
      report.detail = "admissible transversal " + points_to_string(t.points);
      return report;
    }
  }
  report.confirmed = false;
  report.detail = "no admissible transversal among " + std::to_string(transversals.size());
  return report;
}

LemmaReport convex_image_report(const PartialMap& m, point_type lo, point_type hi) {
  if (lo > hi) throw Error(errc::hypothesis_not_met, "empty interval");
  std::set<point_type> image;
  for (point_type x = lo; x <= hi; ++x) {
    if (!m.defined(x)) {
      throw Error(errc::hypothesis_not_met,
                  "point " + std::to_string(x) + " of the interval is outside the domain");
    }
    image.insert(m.value(x));
  }
  LemmaReport report;
  std::vector<point_type> img(image.begin(), image.end());
  report.confirmed = img.back() - img.front() + 1 == static_cast<int>(img.size());
  report.detail = "image of {" + std::to_string(lo) + ".." + std::to_string(hi) +
                  "} is " + points_to_string(img);
  return report;
}

}  // namespace chainsemi

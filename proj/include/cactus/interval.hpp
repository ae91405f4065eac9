#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/problem.hpp"

namespace cactus {

struct Interval {
  Weight lo = 0;
  Weight hi = 0;

  bool intersects(Weight a, Weight b) const { return lo <= b && hi >= a; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Intervals [min, max] of the maximal subsets of `values` whose consecutive
/// elements differ by at most `slack`, in ascending order.
inline std::vector<Interval> intervals_of(std::span<const Weight> values, Weight slack) {
  std::vector<Weight> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Interval> out;
  for (Weight x : sorted) {
    if (!out.empty() && x - out.back().hi <= slack) {
      out.back().hi = x;
    } else {
      out.push_back({x, x});
    }
  }
  return out;
}

/// Repeatedly unites intervals [a, a'] and [b, b'] (a <= b) with b - a' <= slack
/// until no such pair is left. The fixpoint does not depend on input order.
inline std::vector<Interval> merge_intervals(std::vector<Interval> in, Weight slack) {
  std::sort(in.begin(), in.end());
  std::vector<Interval> out;
  for (const auto& iv : in) {
    if (!out.empty() && iv.lo - out.back().hi <= slack) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

/// Compressed DP state: for each cluster count k, sorted weight intervals.
struct IntervalSet {
  std::map<std::int32_t, std::vector<Interval>> by_count;

  void insert(std::int32_t k, Interval iv) {
    auto& list = by_count[k];
    auto it = std::lower_bound(list.begin(), list.end(), iv);
    if (it == list.end() || *it != iv) list.insert(it, iv);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [k, list] : by_count) n += list.size();
    return n;
  }

  bool empty() const { return size() == 0; }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    auto strip = [](const IntervalSet& s) {
      std::map<std::int32_t, std::vector<Interval>> m;
      for (const auto& [k, list] : s.by_count) {
        if (!list.empty()) m.emplace(k, list);
      }
      return m;
    };
    return strip(a) == strip(b);
  }
};

/// Interval form of the set combination over one edge, before merging:
/// the child's cluster can be closed when its interval meets [l, u]; the two
/// root clusters can be merged when their lightest combination fits under u.
inline IntervalSet interval_oplus(const IntervalSet& lhs, const IntervalSet& rhs, const ProblemParams& params) {
  IntervalSet out;
  for (const auto& [k1, as] : lhs.by_count) {
    for (const auto& [k2, bs] : rhs.by_count) {
      for (const auto& a : as) {
        for (const auto& b : bs) {
          if (b.intersects(params.lower, params.upper) && k1 + k2 <= params.clusters) out.insert(k1 + k2, a);
          if (a.lo + b.lo <= params.upper && k1 + k2 - 1 <= params.clusters) {
            out.insert(k1 + k2 - 1, {a.lo + b.lo, a.hi + b.hi});
          }
        }
      }
    }
  }
  return out;
}

inline IntervalSet merge_set(const IntervalSet& in, Weight slack) {
  IntervalSet out;
  for (const auto& [k, list] : in.by_count) out.by_count[k] = merge_intervals(list, slack);
  return out;
}

}  // namespace cactus

#include "lukas/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "lukas/error.hpp"

namespace lukas {
namespace {

// Walks every step sequence of length n in the orientation's step set that
// stays at height >= 0. Up steps (left to right) are limited to sizes after
// which the path can still come back down to end_limit, and to bound_limit.
class Enumerator {
 public:
  using Visit = std::function<void(const Path&)>;

  Enumerator(int n, Orientation o, std::optional<int> end_limit, std::optional<int> bound_limit, Visit visit)
      : n_(n), end_limit_(end_limit), bound_limit_(bound_limit), visit_(std::move(visit)) {
    path_.orientation = o;
    path_.steps.reserve(static_cast<std::size_t>(n));
  }

  void run() { recurse(0, 0); }

 private:
  void recurse(int i, int h) {
    if (i == n_) {
      visit_(path_);
      return;
    }
    if (path_.orientation == Orientation::left_to_right) {
      int jmax = std::numeric_limits<int>::max();
      if (end_limit_) jmax = std::min(jmax, *end_limit_ + (n_ - i - 1) - h);
      if (bound_limit_) jmax = std::min(jmax, *bound_limit_ - h);
      for (int j = 1; j <= jmax; ++j) push(Step::up(j), i, h);
      push(Step::flat(), i, h);
      push(Step::down(), i, h);
    } else {
      push(Step::up(1), i, h);
      push(Step::flat(), i, h);
      for (int j = 1; j <= h; ++j) push(Step::down(j), i, h);
    }
  }

  void push(Step s, int i, int h) {
    const int next = h + s.rise();
    if (next < 0) return;
    path_.steps.push_back(s);
    recurse(i + 1, next);
    path_.steps.pop_back();
  }

  int n_;
  std::optional<int> end_limit_;
  std::optional<int> bound_limit_;
  Visit visit_;
  Path path_;
};

void check_cap(int n, int cap) {
  if (n > cap) {
    throw Error(Errc::oracle_cap_exceeded, "oracle cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap));
  }
}

}  // namespace

Count enumerate_count(const PathQuery& q, int cap) {
  check_query(q);
  check_cap(q.n, cap);
  if (q.orientation == Orientation::left_to_right && !q.k && !q.bound) {
    throw Error(Errc::infinite_family, "infinite family: left-to-right paths need an end height or a bound");
  }
  std::uint64_t found = 0;
  Enumerator(q.n, q.orientation, q.k, q.bound, [&](const Path& p) {
    if (!validate(p)) return;
    if (q.k && end_height(p) != *q.k) return;
    if (!ends_with(p, q.kind)) return;
    if (q.alternate && !is_alternate(p)) return;
    if (q.bound && max_height(p) > *q.bound) return;
    ++found;
  }).run();
  return Count(static_cast<unsigned long>(found));
}

OracleTally::OracleTally(int n, Orientation o, int max_end, int cap)
    : n_(n), orientation_(o), max_end_(max_end), max_height_(n + max_end) {
  if (n < 0 || max_end < 0) throw Error(Errc::invalid_argument, "length and end height must be nonnegative");
  check_cap(n, cap);
  cells_.assign(static_cast<std::size_t>(max_end_ + 1) * 4 * static_cast<std::size_t>(max_height_ + 1) * 2, 0);
  Enumerator(n, o, max_end, std::nullopt, [&](const Path& p) {
    if (!validate(p)) return;
    const int end = end_height(p);
    if (end > max_end_) return;
    const int last = p.steps.empty() ? 3 : static_cast<int>(p.steps.back().dir);
    ++cells_[slot(end, last, max_height(p), is_alternate(p))];
  }).run();
}

std::size_t OracleTally::slot(int end, int last, int height, bool alt) const {
  return ((static_cast<std::size_t>(end) * 4 + static_cast<std::size_t>(last)) *
              static_cast<std::size_t>(max_height_ + 1) +
          static_cast<std::size_t>(height)) *
             2 +
         (alt ? 1 : 0);
}

Count OracleTally::count(const PathQuery& q) const {
  check_query(q);
  if (q.n != n_ || q.orientation != orientation_) throw Error(Errc::invalid_argument, "query outside tally");
  if (q.orientation == Orientation::left_to_right && !q.k && !q.bound) {
    throw Error(Errc::infinite_family, "infinite family: left-to-right paths need an end height or a bound");
  }
  // End height never exceeds max height, so a bound also limits the ends.
  const bool all_ends = orientation_ == Orientation::right_to_left && max_end_ >= n_;
  if (q.k && *q.k > max_end_) throw Error(Errc::invalid_argument, "query outside tally");
  if (!q.k && !all_ends && (!q.bound || *q.bound > max_end_)) {
    throw Error(Errc::invalid_argument, "query outside tally");
  }
  const int end_hi = q.k ? *q.k : (q.bound ? std::min(*q.bound, max_end_) : max_end_);
  const int end_lo = q.k ? *q.k : 0;
  const int height_hi = q.bound ? std::min(*q.bound, max_height_) : max_height_;
  std::uint64_t total = 0;
  for (int end = end_lo; end <= end_hi; ++end) {
    for (int last = 0; last < 4; ++last) {
      if (q.kind != EndKind::any && last != static_cast<int>(q.kind)) continue;
      for (int h = 0; h <= height_hi; ++h) {
        total += cells_[slot(end, last, h, true)];
        if (!q.alternate) total += cells_[slot(end, last, h, false)];
      }
    }
  }
  return Count(static_cast<unsigned long>(total));
}

}  // namespace lukas

#include "lukas/dp.hpp"

#include <algorithm>
#include <limits>

#include "lukas/error.hpp"

namespace lukas {
namespace {

struct Layer {
  std::vector<Count> up, flat, down;

  explicit Layer(int max_height)
      : up(static_cast<std::size_t>(max_height) + 1),
        flat(static_cast<std::size_t>(max_height) + 1),
        down(static_cast<std::size_t>(max_height) + 1) {}

  int max_height() const { return static_cast<int>(up.size()) - 1; }
};

// Highest height a path may occupy after i steps and still satisfy q.
int height_cap(const PathQuery& q, int i) {
  int cap = std::numeric_limits<int>::max();
  if (q.orientation == Orientation::left_to_right) {
    if (q.k) cap = *q.k + (q.n - i);
  } else {
    cap = i;
  }
  if (q.bound) cap = std::min(cap, *q.bound);
  return cap;
}

}  // namespace

Count dp_count(const PathQuery& q) {
  check_query(q);
  if (q.orientation == Orientation::left_to_right && !q.k && !q.bound) {
    throw Error(Errc::infinite_family, "infinite family: left-to-right paths need an end height or a bound");
  }
  const bool l2r = q.orientation == Orientation::left_to_right;

  Layer cur(0);
  std::vector<Count> avail_up, avail_flat, avail_down;
  for (int i = 0; i < q.n; ++i) {
    const int hc = cur.max_height();
    const int hn = height_cap(q, i + 1);
    const auto width = static_cast<std::size_t>(hc) + 1;

    // Paths at each height that may be extended by a step of each class.
    avail_up.assign(width, 0);
    avail_flat.assign(width, 0);
    avail_down.assign(width, 0);
    for (std::size_t h = 0; h < width; ++h) {
      const Count total = cur.up[h] + cur.flat[h] + cur.down[h];
      if (q.alternate) {
        avail_up[h] = total - cur.up[h];
        avail_flat[h] = total - cur.flat[h];
        avail_down[h] = total - cur.down[h];
      } else {
        avail_up[h] = avail_flat[h] = avail_down[h] = total;
      }
    }
    if (i == 0) {
      // the empty path, which has no last step
      avail_up[0] += 1;
      avail_flat[0] += 1;
      avail_down[0] += 1;
    }

    Layer next(hn);
    for (int h = 0; h <= hn && h <= hc; ++h) next.flat[h] = avail_flat[h];
    if (l2r) {
      Count running = 0;
      for (int h = 1; h <= hn; ++h) {
        if (h - 1 <= hc) running += avail_up[h - 1];
        next.up[h] = running;
      }
      for (int h = 0; h <= hn && h + 1 <= hc; ++h) next.down[h] = avail_down[h + 1];
    } else {
      for (int h = 1; h <= hn && h - 1 <= hc; ++h) next.up[h] = avail_up[h - 1];
      Count running = 0;
      for (int h = hc; h >= 1; --h) {
        running += avail_down[h];
        if (h - 1 <= hn) next.down[h - 1] = running;
      }
    }
    cur = std::move(next);
  }

  auto at = [&](int h) -> Count {
    if (h < 0 || h > cur.max_height()) return 0;
    const auto u = static_cast<std::size_t>(h);
    switch (q.kind) {
      case EndKind::up: return cur.up[u];
      case EndKind::flat: return cur.flat[u];
      case EndKind::down: return cur.down[u];
      case EndKind::any: return cur.up[u] + cur.flat[u] + cur.down[u] + (q.n == 0 && h == 0 ? 1 : 0);
    }
    return 0;
  };
  if (q.k) return at(*q.k);
  Count sum = 0;
  for (int h = 0; h <= cur.max_height(); ++h) sum += at(h);
  return sum;
}

std::vector<Count> dp_counts(PathQuery q, int order) {
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(std::max(order, 0)));
  for (int n = 0; n < order; ++n) {
    q.n = n;
    out.push_back(dp_count(q));
  }
  return out;
}

}  // namespace lukas

#include "lukas/path.hpp"

#include <algorithm>
#include <cctype>

#include "lukas/error.hpp"

namespace lukas {

bool step_allowed(const Step& s, Orientation o) {
  switch (s.dir) {
    case Direction::flat:
      return s.size == 0;
    case Direction::up:
      return o == Orientation::left_to_right ? s.size >= 1 : s.size == 1;
    case Direction::down:
      return o == Orientation::left_to_right ? s.size == 1 : s.size >= 1;
  }
  return false;
}

bool validate(const Path& path) {
  long height = 0;
  for (const auto& s : path.steps) {
    if (!step_allowed(s, path.orientation)) return false;
    height += s.rise();
    if (height < 0) return false;
  }
  return true;
}

int max_height(const Path& path) {
  if (!validate(path)) throw Error(Errc::invalid_path, "max_height: invalid path");
  int height = 0;
  int best = 0;
  for (const auto& s : path.steps) {
    height += s.rise();
    best = std::max(best, height);
  }
  return best;
}

int end_height(const Path& path) {
  int height = 0;
  for (const auto& s : path.steps) height += s.rise();
  return height;
}

bool is_alternate(const Path& path) {
  for (std::size_t i = 1; i < path.steps.size(); ++i) {
    if (path.steps[i].dir == path.steps[i - 1].dir) return false;
  }
  return true;
}

bool ends_with(const Path& path, EndKind kind) {
  if (kind == EndKind::any) return true;
  if (path.steps.empty()) return false;
  switch (path.steps.back().dir) {
    case Direction::up: return kind == EndKind::up;
    case Direction::flat: return kind == EndKind::flat;
    case Direction::down: return kind == EndKind::down;
  }
  return false;
}

void check_query(const PathQuery& q) {
  if (q.n < 0) throw Error(Errc::invalid_argument, "length must be nonnegative");
  if (q.k && *q.k < 0) throw Error(Errc::invalid_argument, "end height must be nonnegative");
  if (q.bound && *q.bound < 0) throw Error(Errc::invalid_argument, "bound must be nonnegative");
  if (q.k && q.bound && *q.k > *q.bound) throw Error(Errc::height_above_bound, "height above bound");
}

Path parse_path(std::string_view word, Orientation o) {
  Path p;
  p.orientation = o;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(word[i++])));
    int size = 0;
    while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
      size = size * 10 + (word[i++] - '0');
    }
    switch (c) {
      case 'U': p.steps.push_back(Step::up(size == 0 ? 1 : size)); break;
      case 'D': p.steps.push_back(Step::down(size == 0 ? 1 : size)); break;
      case 'F':
        if (size != 0) throw Error(Errc::invalid_argument, "flat step takes no size");
        p.steps.push_back(Step::flat());
        break;
      case ' ': break;
      default: throw Error(Errc::invalid_argument, std::string("unknown step letter '") + c + "'");
    }
  }
  return p;
}

std::string to_string(EndKind kind) {
  switch (kind) {
    case EndKind::up: return "up";
    case EndKind::flat: return "flat";
    case EndKind::down: return "down";
    case EndKind::any: return "any";
  }
  return "any";
}

std::string to_string(Orientation o) {
  return o == Orientation::left_to_right ? "l2r" : "r2l";
}

EndKind parse_end_kind(std::string_view s) {
  if (s == "up") return EndKind::up;
  if (s == "flat") return EndKind::flat;
  if (s == "down") return EndKind::down;
  if (s == "any") return EndKind::any;
  throw Error(Errc::invalid_argument, "unknown end kind: " + std::string(s));
}

Orientation parse_orientation(std::string_view s) {
  if (s == "l2r") return Orientation::left_to_right;
  if (s == "r2l") return Orientation::right_to_left;
  throw Error(Errc::invalid_argument, "unknown orientation: " + std::string(s));
}

}  // namespace lukas

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lukas {

enum class Direction : std::uint8_t { up, flat, down };

/// A single lattice step (1, rise). Up and Down carry a positive size.
struct Step {
  Direction dir = Direction::flat;
  int size = 0;

  static constexpr Step up(int j) { return {Direction::up, j}; }
  static constexpr Step flat() { return {Direction::flat, 0}; }
  static constexpr Step down(int j = 1) { return {Direction::down, j}; }

  constexpr int rise() const {
    switch (dir) {
      case Direction::up: return size;
      case Direction::down: return -size;
      case Direction::flat: break;
    }
    return 0;
  }

  friend constexpr bool operator==(const Step&, const Step&) = default;
};

/// Left-to-right paths use steps (1,k), k >= -1 (prefixes of Lukasiewicz
/// paths). Right-to-left paths use steps (1,k), k <= 1 (suffixes read
/// backwards).
enum class Orientation : std::uint8_t { left_to_right, right_to_left };

struct Path {
  std::vector<Step> steps;
  Orientation orientation = Orientation::left_to_right;
};

/// Classification of the final step. `any` also admits the empty path.
enum class EndKind : std::uint8_t { up, flat, down, any };

/// The universal counting request. An absent `k` means "summed over all end
/// heights", which is a finite family only for right-to-left or bounded
/// queries.
struct PathQuery {
  int n = 0;
  std::optional<int> k = 0;
  EndKind kind = EndKind::any;
  Orientation orientation = Orientation::left_to_right;
  std::optional<int> bound;
  bool alternate = false;
};

bool step_allowed(const Step& s, Orientation o);

bool validate(const Path& path);

/// Requires validate(path).
int max_height(const Path& path);

int end_height(const Path& path);

/// True iff no two consecutive steps share a direction class.
bool is_alternate(const Path& path);

/// Whether the last step of `path` matches `kind`. The empty path matches
/// only `any`.
bool ends_with(const Path& path, EndKind kind);

/// Throws Errc::invalid_argument on negative fields and
/// Errc::height_above_bound when k exceeds the bound.
void check_query(const PathQuery& q);

/// Parses step words such as "U5DDFFU2D" (U without a size is U1;
/// D may carry a size in right-to-left words).
Path parse_path(std::string_view word, Orientation o = Orientation::left_to_right);

std::string to_string(EndKind kind);
std::string to_string(Orientation o);
EndKind parse_end_kind(std::string_view s);
Orientation parse_orientation(std::string_view s);

}  // namespace lukas

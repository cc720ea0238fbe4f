#ifndef WALLCUBE_WALLSPACE_HPP
#define WALLCUBE_WALLSPACE_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wallcube/bits.hpp"
#include "wallcube/error.hpp"

namespace wallcube {

/// A wall {A, A^c} stored with both sides explicit. side0 is the side that
/// contains point 0; for the trivial wall side0 = X and side1 = {}.
struct Wall {
  Mask side0 = 0;
  Mask side1 = 0;

  Mask side(int s) const { return s == 0 ? side0 : side1; }
  bool is_trivial() const { return side1 == 0; }

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Unchecked input for WallSpace::build. Sides may be anything; validate()
/// reports what is wrong with them. Wall indices in violations refer to
/// positions in `walls`.
struct WallSpaceDraft {
  std::vector<std::string> names;
  std::vector<Wall> walls;
};

struct Violation {
  ErrorKind kind;
  std::string message;
  int wall = -1;
  int x = -1;
  int y = -1;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const WallSpaceDraft& draft);

class WallSpace;
using SpacePtr = std::shared_ptr<const WallSpace>;

/// A finite space with walls in canonical form: wall 0 is the trivial wall,
/// walls are pairwise distinct, every pair of points is separated.
///
/// Also precomputes the inclusion and disjointness relations between
/// halfspaces, which the ultrafilter routines query on every flip.
class WallSpace {
 public:
  /// Normalizes and validates. Throws Error with the first violation.
  static SpacePtr build(const WallSpaceDraft& draft);

  int point_count() const { return static_cast<int>(names_.size()); }
  int wall_count() const { return static_cast<int>(walls_.size()); }
  Mask all_points() const { return low_bits(point_count()); }
  Mask all_walls() const { return low_bits(wall_count()); }
  Mask nontrivial_walls() const { return all_walls() & ~Mask{1}; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int x) const;
  std::optional<int> point_index(std::string_view name) const;

  const std::vector<Wall>& walls() const { return walls_; }
  const Wall& wall(int i) const;

  const std::vector<std::string>& notes() const { return notes_; }

  /// Walls j whose side `other_side` is a proper subset of side `side` of wall i.
  Mask strictly_inside(int i, int side, int other_side) const {
    return strict_sub_[static_cast<std::size_t>(2 * i + side)][static_cast<std::size_t>(other_side)];
  }
  /// Walls j whose side `other_side` does not meet side `side` of wall i.
  Mask disjoint_from(int i, int side, int other_side) const {
    return disjoint_[static_cast<std::size_t>(2 * i + side)][static_cast<std::size_t>(other_side)];
  }

  void check_point(int x, const char* where) const;
  void check_wall(int i, const char* where) const;

  /// Structural equality (names and canonical walls).
  friend bool operator==(const WallSpace& a, const WallSpace& b) {
    return a.names_ == b.names_ && a.walls_ == b.walls_;
  }

 private:
  WallSpace() = default;

  std::vector<std::string> names_;
  std::vector<Wall> walls_;
  std::vector<std::string> notes_;
  std::vector<std::array<Mask, 2>> strict_sub_;
  std::vector<std::array<Mask, 2>> disjoint_;
};

/// Walls with x and y on opposite sides, as a mask over wall indices.
Mask separating_walls(const WallSpace& space, int x, int y);

/// Number of separating walls.
int wall_metric(const WallSpace& space, int x, int y);

/// True iff all four side intersections of walls i and j are nonempty.
bool walls_cross(const WallSpace& space, int i, int j);

}  // namespace wallcube

#endif  // WALLCUBE_WALLSPACE_HPP

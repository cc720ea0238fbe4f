#include "wallcube/ultrafilter.hpp"

#include <utility>

namespace wallcube {

Orientation::Orientation(SpacePtr space, Mask bits) : space_(std::move(space)), bits_(bits) {
  if (!space_) throw Error(ErrorKind::InvalidSpace, "ultrafilter::Orientation", "null space");
  if ((bits_ & ~space_->all_walls()) != 0)
    throw Error(ErrorKind::InvalidWall, "ultrafilter::Orientation",
                "bits set beyond wall " + std::to_string(space_->wall_count() - 1));
  if (test(bits_, 0))
    throw Error(ErrorKind::NotUltrafilter, "ultrafilter::Orientation",
                "the trivial wall must select X");
}

Mask Orientation::chosen_side(int wall) const {
  return space_->wall(wall).side(side_of(wall));
}

Mask principal_bits(const WallSpace& space, int x) {
  // side0 contains x exactly when bit i stays clear
  Mask bits = 0;
  for (int i = 1; i < space.wall_count(); ++i)
    if (!test(space.walls()[static_cast<std::size_t>(i)].side0, x)) bits |= bit(i);
  return bits;
}

bool is_ultrafilter(const WallSpace& space, Mask bits) {
  const Mask all = space.all_walls();
  for (int i = 0; i < space.wall_count(); ++i) {
    const int s = test(bits, i) ? 1 : 0;
    const Mask clash = (space.disjoint_from(i, s, 1) & bits) | (space.disjoint_from(i, s, 0) & ~bits & all);
    if (clash != 0) return false;
  }
  return true;
}

Mask minimal_walls(const WallSpace& space, Mask bits) {
  const Mask all = space.all_walls();
  Mask out = 0;
  for (int i = 1; i < space.wall_count(); ++i) {
    const int s = test(bits, i) ? 1 : 0;
    const Mask smaller =
        (space.strictly_inside(i, s, 1) & bits) | (space.strictly_inside(i, s, 0) & ~bits & all);
    if (smaller == 0) out |= bit(i);
  }
  return out;
}

Orientation principal(const SpacePtr& space, int x) {
  if (!space) throw Error(ErrorKind::InvalidSpace, "ultrafilter::principal", "null space");
  space->check_point(x, "ultrafilter::principal");
  return {space, principal_bits(*space, x)};
}

bool is_ultrafilter(const Orientation& o) { return is_ultrafilter(*o.space(), o.bits()); }

Mask minimal_walls(const Orientation& o) {
  if (!is_ultrafilter(o))
    throw Error(ErrorKind::NotUltrafilter, "ultrafilter::minimal_walls",
                "orientation " + o.bitstring() + " is not coherent");
  return minimal_walls(*o.space(), o.bits());
}

Orientation flip(const Orientation& o, int wall) {
  o.space()->check_wall(wall, "ultrafilter::flip");
  if (wall == 0)
    throw Error(ErrorKind::TrivialFlip, "ultrafilter::flip", "the trivial wall cannot be flipped");
  if (!is_ultrafilter(o))
    throw Error(ErrorKind::NotUltrafilter, "ultrafilter::flip",
                "orientation " + o.bitstring() + " is not coherent");
  if (!test(minimal_walls(*o.space(), o.bits()), wall))
    throw Error(ErrorKind::NotMinimal, "ultrafilter::flip",
                "wall " + std::to_string(wall) + " is not minimal in " + o.bitstring());
  return detail::flip_unchecked(o, wall);
}

namespace {
void require_same_space(const Orientation& a, const Orientation& b, const char* where) {
  if (a.space() != b.space() && !(*a.space() == *b.space()))
    throw Error(ErrorKind::SpaceMismatch, where, "orientations live on different wall spaces");
}
}  // namespace

Mask symdiff(const Orientation& a, const Orientation& b) {
  require_same_space(a, b, "ultrafilter::symdiff");
  return a.bits() ^ b.bits();
}

Orientation boolean_median(const Orientation& a, const Orientation& b, const Orientation& c) {
  require_same_space(a, b, "ultrafilter::boolean_median");
  require_same_space(a, c, "ultrafilter::boolean_median");
  for (const Orientation* o : {&a, &b, &c})
    if (!is_ultrafilter(*o))
      throw Error(ErrorKind::NotUltrafilter, "ultrafilter::boolean_median",
                  "orientation " + o->bitstring() + " is not coherent");
  return {a.space(), majority(a.bits(), b.bits(), c.bits())};
}

namespace detail {
Orientation flip_unchecked(const Orientation& o, int wall) {
  return {o.space(), o.bits() ^ bit(wall)};
}
}  // namespace detail

}  // namespace wallcube

#ifndef WALLCUBE_ULTRAFILTER_HPP
#define WALLCUBE_ULTRAFILTER_HPP

#include <string>

#include "wallcube/bits.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube {

/// One chosen side per wall. Bit i clear selects side0 of wall i, set selects
/// side1. The trivial wall's bit is always clear (it selects X).
class Orientation {
 public:
  Orientation(SpacePtr space, Mask bits);

  const SpacePtr& space() const { return space_; }
  Mask bits() const { return bits_; }
  int side_of(int wall) const { return test(bits_, wall) ? 1 : 0; }
  Mask chosen_side(int wall) const;
  std::string bitstring() const { return to_bitstring(bits_, space_->wall_count()); }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.bits_ == b.bits_ && (a.space_ == b.space_ || *a.space_ == *b.space_);
  }

 private:
  SpacePtr space_;
  Mask bits_;
};

// Bit-level kernels. These skip argument validation and are what the graph
// construction loops call directly.

Mask principal_bits(const WallSpace& space, int x);

/// Pairwise-intersection coherence. Equivalent to upward closure: if A is
/// chosen and A ⊆ B with B unchosen, then B^c is chosen and A ∩ B^c = ∅;
/// conversely chosen A, C with A ∩ C = ∅ give A ⊆ C^c, so upward closure
/// would force C^c next to C.
bool is_ultrafilter(const WallSpace& space, Mask bits);

/// Nontrivial walls whose chosen side has no strictly smaller chosen side.
Mask minimal_walls(const WallSpace& space, Mask bits);

constexpr Mask majority(Mask a, Mask b, Mask c) { return (a & b) | (b & c) | (c & a); }

// Checked operations.

Orientation principal(const SpacePtr& space, int x);
bool is_ultrafilter(const Orientation& o);
Mask minimal_walls(const Orientation& o);
Orientation flip(const Orientation& o, int wall);
Mask symdiff(const Orientation& a, const Orientation& b);
Orientation boolean_median(const Orientation& a, const Orientation& b, const Orientation& c);

namespace detail {
// Flips without the minimality check. May produce an incoherent orientation;
// used by brute-force oracles only.
Orientation flip_unchecked(const Orientation& o, int wall);
}  // namespace detail

}  // namespace wallcube

#endif  // WALLCUBE_ULTRAFILTER_HPP

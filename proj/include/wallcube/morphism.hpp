#ifndef WALLCUBE_MORPHISM_HPP
#define WALLCUBE_MORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "wallcube/cubulation.hpp"
#include "wallcube/report.hpp"
#include "wallcube/ultrafilter.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube {

/// point_map[x] is the image of source point x.
using PointMap = std::vector<int>;

struct WallMap {
  SpacePtr source;
  SpacePtr target;
  PointMap point_map;
};

struct OffendingHalfspace {
  int wall;        // target wall
  int side;        // 0 or 1
  Mask preimage;   // over source points
};

struct MorphismCheck {
  bool ok = true;
  std::optional<OffendingHalfspace> offending;

  explicit operator bool() const { return ok; }
};

/// The preimage of every target halfspace is a source halfspace (or ∅ or X).
/// Reports the first offending target side in (wall, side) order.
MorphismCheck validate_morphism(const WallMap& m);

/// f_*(ω): for each target wall, the side whose preimage ω selects.
Orientation pushforward(const WallMap& m, const Orientation& omega);

struct InducedMap {
  std::vector<int> image;  // source vertex -> target vertex
  bool commutes_with_sigma = false;
  bool median_preserving = false;
  bool adjacency_preserving = false;  // every edge maps onto an edge
  bool bijective = false;

  bool is_graph_automorphism() const { return bijective && adjacency_preserving; }
  /// "median morphism", with ", graph automorphism" once adjacency is verified.
  std::string label() const;
};

/// Vertex-wise pushforward between two cubulations, with its properties
/// checked exhaustively.
InducedMap induced_graph_map(const WallMap& m, const MedianGraph& source, const MedianGraph& target);

/// Generators of a group acting on one wall space by point permutations.
struct GroupAction {
  SpacePtr space;
  std::vector<PointMap> generators;
};

/// Extends each generator to the cubulation. Throws NotWallPermuting for a
/// generator that is not a bijection or sends some wall to a non-wall.
std::vector<InducedMap> extend_action(const GroupAction& action, const MedianGraph& g);

/// Extension of a composed word equals the composition of the extensions,
/// for every generator word of length 2..max_word_length.
VerificationReport verify_action_composition(const GroupAction& action, const MedianGraph& g,
                                             int max_word_length = 3);

/// (p ∘ q)(x) = p(q(x)).
std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q);
int permutation_order(const std::vector<int>& p);

}  // namespace wallcube

#endif  // WALLCUBE_MORPHISM_HPP

#ifndef WALLCUBE_CUBECOMPLEX_HPP
#define WALLCUBE_CUBECOMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wallcube/bits.hpp"
#include "wallcube/cubulation.hpp"
#include "wallcube/report.hpp"

namespace wallcube {

/// A k-cube spanned at `base` by flipping any subset of the k walls in
/// `walls`. Canonical: base has every bit of `walls` cleared, which makes it
/// the lexicographically least bitstring among the cube's corners.
struct Cube {
  Mask base = 0;
  Mask walls = 0;

  int dimension() const { return popcount(walls); }

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

class CubeComplex {
 public:
  const MedianGraph& graph() const { return graph_; }

  /// cubes(0) are the vertices and cubes(1) the edges, both in canonical form.
  const std::vector<Cube>& cubes(int dimension) const;
  int dimension() const { return static_cast<int>(cubes_.size()) - 1; }
  bool contains(const Cube& c) const;

  /// (V, E, #squares, #3-cubes, ...), ending at the top dimension.
  std::vector<std::int64_t> f_vector() const;

 private:
  friend CubeComplex fill_cubes(const MedianGraph& g);

  MedianGraph graph_;
  std::vector<std::vector<Cube>> cubes_;  // sorted per dimension
};

/// Adds a square for every pair of walls alternating around a 4-cycle, then
/// a k-cube whenever its faces at the base and all its corners are present.
CubeComplex fill_cubes(const MedianGraph& g);

std::int64_t euler_characteristic(const CubeComplex& c);

/// Cubes of any dimension not contained in a cube of higher dimension.
std::vector<Cube> maximal_cubes(const CubeComplex& c);

/// The wall pairs labelling squares are exactly the crossing pairs.
VerificationReport verify_square_crossing(const CubeComplex& c);

/// Every (k-1)-face of every recorded k-cube is recorded, and all corners
/// of every cube are vertices.
VerificationReport verify_downward_closure(const CubeComplex& c);

/// Face-list dump of the squares: header, one bitstring per vertex, then
/// "4 a b c d" per square with corners in cyclic order.
std::string squares_face_list(const CubeComplex& c);

}  // namespace wallcube

#endif  // WALLCUBE_CUBECOMPLEX_HPP

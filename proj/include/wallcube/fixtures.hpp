#ifndef WALLCUBE_FIXTURES_HPP
#define WALLCUBE_FIXTURES_HPP

#include <random>

#include "wallcube/graph.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube::fixtures {

// Canonical wall spaces. Drafts list the trivial wall first so that draft
// wall k is canonical wall k.
WallSpaceDraft pt_draft();
WallSpaceDraft two_draft();
WallSpaceDraft p3_draft();
WallSpaceDraft hex6_draft();

SpacePtr pt();
SpacePtr two();
SpacePtr p3();
SpacePtr hex6();

Graph hypercube(int dimension);
Graph cycle(int n);
Graph path(int n);
/// Brick-wall drawing of the hexagonal tiling: `columns` x `rows` grid with
/// every horizontal edge and vertical edges where column + row is even.
Graph hexagonal_patch(int columns, int rows);

/// Uniform random wall space: 2..max_points points and up to max_walls - 1
/// random nonempty proper subsets as walls, resampled until every pair of
/// points is separated.
SpacePtr random_wallspace(std::mt19937_64& rng, int max_points = 7, int max_walls = 9);

}  // namespace wallcube::fixtures

#endif  // WALLCUBE_FIXTURES_HPP

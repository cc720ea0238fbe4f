#include "wallcube/wallspace.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace wallcube {
namespace {

struct Normalized {
  std::vector<Wall> walls;
  std::vector<std::string> notes;
  std::vector<Violation> violations;
};

std::string point_label(const std::vector<std::string>& names, int x) {
  const auto& n = names[static_cast<std::size_t>(x)];
  return n.empty() ? std::to_string(x) : n;
}

Normalized normalize(const WallSpaceDraft& draft) {
  Normalized out;
  const int n = static_cast<int>(draft.names.size());
  if (n == 0) {
    out.violations.push_back({ErrorKind::EmptyPointSet, "the point set is empty"});
    return out;
  }
  if (n > kMaxPoints) {
    out.violations.push_back({ErrorKind::TooManyPoints,
                              std::to_string(n) + " points exceed the limit of " +
                                  std::to_string(kMaxPoints)});
    return out;
  }
  {
    std::set<std::string> seen;
    for (int x = 0; x < n; ++x) {
      const auto& name = draft.names[static_cast<std::size_t>(x)];
      if (!name.empty() && !seen.insert(name).second)
        out.violations.push_back({ErrorKind::InvalidPoint, "duplicate point name '" + name + "'",
                                  -1, x});
    }
  }

  const Mask all = low_bits(n);
  for (std::size_t k = 0; k < draft.walls.size(); ++k) {
    const Wall& w = draft.walls[k];
    if ((w.side0 & w.side1) != 0 || (w.side0 | w.side1) != all) {
      out.violations.push_back({ErrorKind::NonComplementarySides,
                                "wall " + std::to_string(k) + " does not partition the point set",
                                static_cast<int>(k)});
    }
  }
  if (!out.violations.empty()) return out;

  const Wall trivial{all, 0};
  out.walls.push_back(trivial);
  bool saw_trivial = false;
  for (std::size_t k = 0; k < draft.walls.size(); ++k) {
    Wall w = draft.walls[k];
    if (w.side0 == 0 || w.side1 == 0) {
      if (saw_trivial || k != 0)
        out.notes.push_back("wall " + std::to_string(k) + " is the trivial wall; merged into wall 0");
      saw_trivial = true;
      continue;
    }
    if (!test(w.side0, 0)) std::swap(w.side0, w.side1);
    if (std::find(out.walls.begin(), out.walls.end(), w) != out.walls.end()) {
      out.notes.push_back("wall " + std::to_string(k) + " duplicates an earlier wall; removed");
      continue;
    }
    out.walls.push_back(w);
  }
  if (!saw_trivial) out.notes.insert(out.notes.begin(), "trivial wall inserted as wall 0");

  if (static_cast<int>(out.walls.size()) > kMaxWalls) {
    out.violations.push_back({ErrorKind::TooManyWalls,
                              std::to_string(out.walls.size()) + " walls exceed the limit of " +
                                  std::to_string(kMaxWalls)});
    return out;
  }

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool separated = std::any_of(out.walls.begin(), out.walls.end(), [&](const Wall& w) {
        return test(w.side0, x) != test(w.side0, y);
      });
      if (!separated) {
        out.violations.push_back({ErrorKind::UnseparatedPair,
                                  "no wall separates " + point_label(draft.names, x) + " and " +
                                      point_label(draft.names, y),
                                  -1, x, y});
      }
    }
  }
  return out;
}

}  // namespace

ValidationReport validate(const WallSpaceDraft& draft) {
  Normalized norm = normalize(draft);
  return {std::move(norm.violations), std::move(norm.notes)};
}

SpacePtr WallSpace::build(const WallSpaceDraft& draft) {
  Normalized norm = normalize(draft);
  if (!norm.violations.empty()) {
    const Violation& v = norm.violations.front();
    throw Error(v.kind, "wallspace::validate", v.message);
  }

  auto space = std::shared_ptr<WallSpace>(new WallSpace());
  space->names_ = draft.names;
  space->walls_ = std::move(norm.walls);
  space->notes_ = std::move(norm.notes);

  const int w = space->wall_count();
  space->strict_sub_.assign(static_cast<std::size_t>(2 * w), {0, 0});
  space->disjoint_.assign(static_cast<std::size_t>(2 * w), {0, 0});
  for (int i = 0; i < w; ++i) {
    for (int s = 0; s < 2; ++s) {
      const Mask a = space->walls_[static_cast<std::size_t>(i)].side(s);
      auto& sub = space->strict_sub_[static_cast<std::size_t>(2 * i + s)];
      auto& dis = space->disjoint_[static_cast<std::size_t>(2 * i + s)];
      for (int j = 0; j < w; ++j) {
        for (int t = 0; t < 2; ++t) {
          const Mask b = space->walls_[static_cast<std::size_t>(j)].side(t);
          if ((b & ~a) == 0 && b != a) sub[static_cast<std::size_t>(t)] |= bit(j);
          if ((a & b) == 0) dis[static_cast<std::size_t>(t)] |= bit(j);
        }
      }
    }
  }
  return space;
}

const std::string& WallSpace::name(int x) const {
  check_point(x, "wallspace::name");
  return names_[static_cast<std::size_t>(x)];
}

std::optional<int> WallSpace::point_index(std::string_view name) const {
  for (int x = 0; x < point_count(); ++x)
    if (names_[static_cast<std::size_t>(x)] == name) return x;
  return std::nullopt;
}

const Wall& WallSpace::wall(int i) const {
  check_wall(i, "wallspace::wall");
  return walls_[static_cast<std::size_t>(i)];
}

void WallSpace::check_point(int x, const char* where) const {
  if (x < 0 || x >= point_count())
    throw Error(ErrorKind::InvalidPoint, where, "point index " + std::to_string(x) + " out of range");
}

void WallSpace::check_wall(int i, const char* where) const {
  if (i < 0 || i >= wall_count())
    throw Error(ErrorKind::InvalidWall, where, "wall index " + std::to_string(i) + " out of range");
}

Mask separating_walls(const WallSpace& space, int x, int y) {
  space.check_point(x, "wallspace::separating_walls");
  space.check_point(y, "wallspace::separating_walls");
  Mask out = 0;
  for (int i = 0; i < space.wall_count(); ++i) {
    const Mask side0 = space.walls()[static_cast<std::size_t>(i)].side0;
    if (test(side0, x) != test(side0, y)) out |= bit(i);
  }
  return out;
}

int wall_metric(const WallSpace& space, int x, int y) {
  return popcount(separating_walls(space, x, y));
}

bool walls_cross(const WallSpace& space, int i, int j) {
  space.check_wall(i, "wallspace::walls_cross");
  space.check_wall(j, "wallspace::walls_cross");
  if (i == 0 || j == 0)
    throw Error(ErrorKind::TrivialWallQuery, "wallspace::walls_cross",
                "the trivial wall crosses nothing");
  const Wall& a = space.walls()[static_cast<std::size_t>(i)];
  const Wall& b = space.walls()[static_cast<std::size_t>(j)];
  return (a.side0 & b.side0) != 0 && (a.side0 & b.side1) != 0 && (a.side1 & b.side0) != 0 &&
         (a.side1 & b.side1) != 0;
}

}  // namespace wallcube

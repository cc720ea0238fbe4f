#ifndef WALLCUBE_ERROR_HPP
#define WALLCUBE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallcube {

enum class ErrorKind {
  EmptyPointSet,
  NonComplementarySides,
  UnseparatedPair,
  TooManyPoints,
  TooManyWalls,
  InvalidPoint,
  InvalidWall,
  TrivialWallQuery,
  NotUltrafilter,
  NotMinimal,
  TrivialFlip,
  SpaceMismatch,
  InvalidSpace,
  InvalidVertex,
  DisconnectedGraph,
  NonSimplicialGraph,
  GraphTooLarge,
  NotMedian,
  InvalidMorphism,
  NotWallPermuting,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. `where` names the module and
/// operation ("cubulation::geodesic_path") so the CLI can render it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string where, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string where_;
  std::string detail_;
};

}  // namespace wallcube

#endif  // WALLCUBE_ERROR_HPP

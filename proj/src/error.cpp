#include "wallcube/error.hpp"

#include <utility>

namespace wallcube {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyPointSet: return "EmptyPointSet";
    case ErrorKind::NonComplementarySides: return "NonComplementarySides";
    case ErrorKind::UnseparatedPair: return "UnseparatedPair";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::TooManyWalls: return "TooManyWalls";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidWall: return "InvalidWall";
    case ErrorKind::TrivialWallQuery: return "TrivialWallQuery";
    case ErrorKind::NotUltrafilter: return "NotUltrafilter";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::TrivialFlip: return "TrivialFlip";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NonSimplicialGraph: return "NonSimplicialGraph";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::NotWallPermuting: return "NotWallPermuting";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string where, const std::string& detail)
    : std::runtime_error(where + ": " + std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      where_(std::move(where)),
      detail_(detail) {}

}  // namespace wallcube

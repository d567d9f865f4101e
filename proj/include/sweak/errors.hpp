#pragma once

#include <stdexcept>
#include <string>

namespace sweak {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

#define SWEAK_ERROR(NAME)                           \
  struct NAME : Error {                             \
    explicit NAME(const std::string& msg)           \
        : Error(#NAME, msg) {}                      \
  }

SWEAK_ERROR(IndexOutOfRange);
SWEAK_ERROR(CapExceeded);
SWEAK_ERROR(NotAncestor);
SWEAK_ERROR(NotAnAscentOrDescent);
SWEAK_ERROR(NotAscents);
SWEAK_ERROR(WrongHoleCount);
SWEAK_ERROR(NotAPositionVector);
SWEAK_ERROR(DoublingFailed);
SWEAK_ERROR(CrossingDiagram);
SWEAK_ERROR(NotComparable);
SWEAK_ERROR(NotADownSet);
SWEAK_ERROR(NotACongruence);
SWEAK_ERROR(InvalidDecoration);
SWEAK_ERROR(DimensionMismatch);
SWEAK_ERROR(NotComplete);
SWEAK_ERROR(SeparationFailed);
SWEAK_ERROR(NonPositiveLambda);
SWEAK_ERROR(DegenerateConfig);
SWEAK_ERROR(InvalidInput);

#undef SWEAK_ERROR

}  // namespace sweak

#pragma once

#include <string>

#include "mlcd/errors.hpp"

namespace mlcd {

enum class Attitude { Positive = 0, Neutral = 1, Negative = 2 };

inline const char* to_string(Attitude a) {
  switch (a) {
    case Attitude::Positive: return "positive";
    case Attitude::Neutral: return "neutral";
    default: return "negative";
  }
}

inline Attitude attitude_from_string(const std::string& s) {
  if (s == "positive" || s == "pos") return Attitude::Positive;
  if (s == "neutral" || s == "neu") return Attitude::Neutral;
  if (s == "negative" || s == "neg") return Attitude::Negative;
  throw ParseError("unknown attitude label '" + s + "'");
}

}  // namespace mlcd

#pragma once

#include <stdexcept>

namespace mlcd {

#define MLCD_ERROR_TYPE(Name) \
  struct Name : std::runtime_error { using std::runtime_error::runtime_error; };

// netcore
MLCD_ERROR_TYPE(EmptyLayer)
MLCD_ERROR_TYPE(ZeroFeatureRow)
MLCD_ERROR_TYPE(BadK)
MLCD_ERROR_TYPE(ParseError)
MLCD_ERROR_TYPE(DuplicateNodeId)
MLCD_ERROR_TYPE(BadNodeId)
// synth
MLCD_ERROR_TYPE(InvalidConfig)
// numerics
MLCD_ERROR_TYPE(NotSymmetric)
MLCD_ERROR_TYPE(NoConvergence)
MLCD_ERROR_TYPE(BadRank)
MLCD_ERROR_TYPE(DegenerateInput)
// embed
MLCD_ERROR_TYPE(ShapeMismatch)
MLCD_ERROR_TYPE(NonFiniteLoss)
// metrics / simulation
MLCD_ERROR_TYPE(LengthMismatch)
MLCD_ERROR_TYPE(NegativeFeature)
// influence
MLCD_ERROR_TYPE(IsolatedAllNodes)
// cli / io
MLCD_ERROR_TYPE(IoError)

#undef MLCD_ERROR_TYPE

}  // namespace mlcd

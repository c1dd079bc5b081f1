#pragma once

#include <stdexcept>
#include <string>

namespace jamloc {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPointSet : Error {
    EmptyPointSet() : Error("empty point set") {}
};

struct DegenerateSegment : Error {
    DegenerateSegment() : Error("degenerate (zero-length) segment") {}
};

struct NearParallelLines : Error {
    NearParallelLines() : Error("lines are parallel or nearly parallel") {}
};

struct NonPositiveDistance : Error {
    explicit NonPositiveDistance(double d)
        : Error("distance " + std::to_string(d) + " m is below the model minimum") {}
};

struct NoBoundaryNodes : Error {
    NoBoundaryNodes() : Error("no boundary observations") {}
};

struct InsufficientBoundaryNodes : Error {
    InsufficientBoundaryNodes() : Error("need at least three distinct boundary positions") {}
};

struct NoTransverseChord : Error {
    NoTransverseChord() : Error("no second chord passes the angle gate") {}
};

}  // namespace jamloc

#pragma once

#include <stdexcept>
#include <string>

namespace archimedes {

// Base class for every failure the library reports. Callers that only want
// a coarse success/failure split can catch this one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval division where the divisor encloses zero.
struct DivisionByIntervalContainingZero : Error {
    using Error::Error;
};

// Square root requested for an interval whose lower endpoint is negative.
struct NegativeRadicand : Error {
    using Error::Error;
};

// Enclosures became too wide to keep certified quantities separated.
// Callers retry with more precision bits.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// A squeeze cannot reach the requested tolerance at the given depth.
// Carries an estimate of the depth that would suffice.
struct ToleranceUnreachable : Error {
    ToleranceUnreachable(const std::string& msg, int required)
        : Error(msg), required_doublings(required) {}
    int required_doublings;
};

// Angle outside the polygon doubling family.
struct UnsupportedAngle : Error {
    using Error::Error;
};

struct EndpointMismatch : Error {
    using Error::Error;
};

struct NotConcave : Error {
    using Error::Error;
};

struct PointNotInterior : Error {
    using Error::Error;
};

// Curve kind has no closed-form length in the catalog.
struct NoClosedForm : Error {
    using Error::Error;
};

// Polyline refinement failed the Cauchy criterion within the doubling cap.
struct NonConvergent : Error {
    using Error::Error;
};

// Malformed expression text (tokens outside the DSL grammar).
struct ParseError : Error {
    using Error::Error;
};

// Division node whose denominator enclosure contains zero.
struct DivisionByZeroRegion : Error {
    using Error::Error;
};

}  // namespace archimedes

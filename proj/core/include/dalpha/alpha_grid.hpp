#pragma once

#include <string>
#include <vector>

namespace dalpha {

/// Inclusive arithmetic grid start, start+step, ..., stop. Values are
/// produced as start + i*step so a grid anchored at 0 hits binary
/// doubles like 0.5 = 5*0.1 exactly. Constraints: 0 <= start <= stop
/// < 1 and step > 0; violations throw InvalidParams.
std::vector<double> alpha_grid(double start, double stop, double step);

/// Parses "START:STOP:STEP" (throws ParseError on malformed input).
std::vector<double> parse_alpha_grid(const std::string& spec);

/// The grid used throughout the verification suite: 0, 0.1, ..., 0.9.
std::vector<double> default_alpha_grid();

} // namespace dalpha

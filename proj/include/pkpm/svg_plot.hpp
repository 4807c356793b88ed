#pragma once

#include <iosfwd>
#include <string>

#include "pkpm/experiment.hpp"

namespace pkpm {

enum class LawChoice { two_steps, sigmoid, both };

/// Static comparison figure: empirical frequency as a solid marked line,
/// law curves dotted, and a vertical marker at the estimated critical mesh
/// size. Axis ranges auto-fit the data with 5% margins.
void write_comparison_svg(std::ostream& os, const FrequencyTable& table, LawChoice law,
                          const std::string& title);

}  // namespace pkpm

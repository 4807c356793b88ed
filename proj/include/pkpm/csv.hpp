#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "pkpm/experiment.hpp"

namespace pkpm {

/// Frozen schema: `h,n_effective,n_failed,frequency,two_steps,sigmoid`,
/// reals with 17 significant digits so rows round-trip losslessly.
void write_frequency_csv(std::ostream& os, const FrequencyTable& table);

/// Parse a frequency CSV back; throws std::runtime_error on malformed input.
std::vector<FrequencyRow> read_frequency_csv(std::istream& is);

/// Raw samples: `h,seed,degree,error`.
void write_samples_csv(std::ostream& os, std::span<const ErrorSample> samples);

/// Refinement study: `h,h_actual,error,slope` (slope column repeats the
/// fitted value, or `n/a` when errors sit at solver-noise level).
void write_convergence_csv(std::ostream& os, const ConvergenceResult& result);

/// Law tabulation at the given mesh sizes: `h,two_steps,sigmoid`.
void write_laws_csv(std::ostream& os, std::span<const double> h_list, double h_star, int k, int m);

}  // namespace pkpm

#pragma once

#include "weakphase/grid.hpp"

namespace weakphase::ref {

/// Serial O(n^2) direct-summation transforms. These are the slow reference
/// implementations kept for testing and benchmarking; they share no code
/// with the FFT-backed production path.
Spectrum dft(const SampledField& field);
SampledField idft(const Spectrum& spectrum);

/// Off-axis evaluation summed in descending k order (independent of the
/// ascending-order production sum).
cxd analytic_extension(const SampledField& field, double p, double q);

/// Serial sliver-scan reconstruction, one full direct simulation per cell.
SampledField scan_reconstruct(const SampledField& object, double theta);

}  // namespace weakphase::ref

#pragma once

#include <vector>

#include "weakphase/grid.hpp"

namespace weakphase::kernels {

/// O(n^2) direct-sum transform, parallel over output bins. Each bin keeps a
/// fixed serial inner summation order, so results are bit-identical to the
/// serial reference regardless of thread count.
Spectrum dft_direct(const SampledField& field);

/// All momentum bins of F(p_j + iq) by direct summation, parallel over bins.
/// Bin j equals analytic_extension(field, p_j, q) bitwise.
std::vector<cxd> extension_line(const SampledField& field, double q);

/// |F(p_j + iq)| for every bin.
std::vector<double> extension_line_modulus(const SampledField& field, double q);

}  // namespace weakphase::kernels

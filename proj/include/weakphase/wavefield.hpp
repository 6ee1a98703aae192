#pragma once

#include "weakphase/grid.hpp"

namespace weakphase {

/// Discrete Fourier pair with physical measure factors:
///   dft:  F(p_j) = sum_k f(x_k) exp(-i x_k p_j) dx
///   idft: f(x_k) = sum_j F(p_j) exp(+i x_k p_j) dp / (2 pi)
/// The pair is an exact round trip and satisfies Parseval with the 1/(2 pi)
/// weight. Backed by an FFT with explicit phase corrections for x0 != 0.
Spectrum dft(const SampledField& field);
SampledField idft(const Spectrum& spectrum);

/// Spectrum evaluated off the real axis at z = p + iq by direct summation:
///   sum_k f(x_k) exp(-i x_k (p + iq)) dx
/// Throws if |q| * max|x| > 700 (exp overflow guard).
cxd analytic_extension(const SampledField& field, double p, double q);

/// Intensity-weighted mean position, sum x |f|^2 / sum |f|^2.
double centroid(const SampledField& field);

/// Standard deviation of p under |F(p)|^2 dp.
double momentum_spread(const SampledField& field);

/// sum |f|^2 dx
double field_norm2(const SampledField& field);
/// sum |F|^2 dp / (2 pi)
double spectrum_norm2(const Spectrum& spectrum);

}  // namespace weakphase

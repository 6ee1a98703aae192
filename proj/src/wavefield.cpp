#include "weakphase/wavefield.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fft_backend.hpp"

namespace weakphase {

// With p_j = dp*(j - n/2) and x_k = x0 + k*dx,
//   x_k p_j = x0 p_j + (2 pi / n) k (j - n/2),
// so the physical transform reduces to a plain FFT of f_k*(-1)^k followed by
// the x0 phase ramp and the dx measure factor.
Spectrum dft(const SampledField& field) {
  const Grid& g = field.grid;
  const int n = g.n;
  std::vector<cxd> staged(n);
  for (int k = 0; k < n; ++k) {
    staged[k] = (k % 2 == 0) ? field.values[k] : -field.values[k];
  }
  std::vector<cxd> out;
  detail::fft_forward(staged, out);
  for (int j = 0; j < n; ++j) {
    const double ph = -g.x0 * g.p(j);
    out[j] *= g.dx * cxd(std::cos(ph), std::sin(ph));
  }
  return Spectrum(g, std::move(out));
}

SampledField idft(const Spectrum& spectrum) {
  const Grid& g = spectrum.grid;
  const int n = g.n;
  std::vector<cxd> staged(n);
  for (int j = 0; j < n; ++j) {
    const double ph = g.x0 * g.p(j);
    staged[j] = spectrum.values[j] * cxd(std::cos(ph), std::sin(ph));
  }
  std::vector<cxd> out;
  detail::fft_backward(staged, out);
  const double scale = 1.0 / (n * g.dx);
  for (int k = 0; k < n; ++k) {
    out[k] *= (k % 2 == 0) ? scale : -scale;
  }
  return SampledField(g, std::move(out));
}

cxd analytic_extension(const SampledField& field, double p, double q) {
  const Grid& g = field.grid;
  if (std::abs(q) * g.x_abs_max() > 700.0) {
    throw std::domain_error("analytic_extension: |q| = " + std::to_string(std::abs(q)) +
                            " overflows exp(q*x) on this grid");
  }
  // exp(-i x (p + iq)) = exp(q x) exp(-i x p)
  cxd acc(0.0, 0.0);
  for (int k = 0; k < g.n; ++k) {
    const double xk = g.x(k);
    const double amp = std::exp(q * xk);
    const double ph = -xk * p;
    acc += field.values[k] * cxd(amp * std::cos(ph), amp * std::sin(ph));
  }
  return acc * g.dx;
}

double centroid(const SampledField& field) {
  const Grid& g = field.grid;
  double w = 0.0, xw = 0.0;
  for (int k = 0; k < g.n; ++k) {
    const double a = std::norm(field.values[k]);
    w += a;
    xw += g.x(k) * a;
  }
  if (!(w > 0.0)) throw std::domain_error("centroid: zero total intensity");
  return xw / w;
}

double momentum_spread(const SampledField& field) {
  Spectrum s = dft(field);
  const Grid& g = s.grid;
  double w = 0.0, pw = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const double a = std::norm(s.values[j]);
    w += a;
    pw += g.p(j) * a;
  }
  if (!(w > 0.0)) throw std::domain_error("momentum_spread: zero field");
  const double mean = pw / w;
  double vw = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const double d = g.p(j) - mean;
    vw += d * d * std::norm(s.values[j]);
  }
  return std::sqrt(vw / w);
}

double field_norm2(const SampledField& field) {
  double w = 0.0;
  for (const cxd& z : field.values) w += std::norm(z);
  return w * field.grid.dx;
}

double spectrum_norm2(const Spectrum& spectrum) {
  double w = 0.0;
  for (const cxd& z : spectrum.values) w += std::norm(z);
  return w * spectrum.grid.dp() / (2.0 * kPi);
}

}  // namespace weakphase

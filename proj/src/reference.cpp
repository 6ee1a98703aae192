#include "weakphase/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "weakphase/direct_measure.hpp"

namespace weakphase::ref {

Spectrum dft(const SampledField& field) {
  const Grid& g = field.grid;
  std::vector<cxd> out(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double pj = g.p(j);
    cxd acc(0.0, 0.0);
    for (int k = 0; k < g.n; ++k) {
      const double ph = -g.x(k) * pj;
      acc += field.values[k] * cxd(std::cos(ph), std::sin(ph));
    }
    out[j] = acc * g.dx;
  }
  return Spectrum(g, std::move(out));
}

SampledField idft(const Spectrum& spectrum) {
  const Grid& g = spectrum.grid;
  std::vector<cxd> out(g.n);
  const double w = g.dp() / (2.0 * kPi);
  for (int k = 0; k < g.n; ++k) {
    const double xk = g.x(k);
    cxd acc(0.0, 0.0);
    for (int j = 0; j < g.n; ++j) {
      const double ph = xk * g.p(j);
      acc += spectrum.values[j] * cxd(std::cos(ph), std::sin(ph));
    }
    out[k] = acc * w;
  }
  return SampledField(g, std::move(out));
}

cxd analytic_extension(const SampledField& field, double p, double q) {
  const Grid& g = field.grid;
  if (std::abs(q) * g.x_abs_max() > 700.0) {
    throw std::domain_error("ref::analytic_extension: exp overflow guard");
  }
  cxd acc(0.0, 0.0);
  for (int k = g.n - 1; k >= 0; --k) {
    const double xk = g.x(k);
    const double amp = std::exp(q * xk);
    const double ph = -xk * p;
    acc += field.values[k] * cxd(amp * std::cos(ph), amp * std::sin(ph));
  }
  return acc * g.dx;
}

SampledField scan_reconstruct(const SampledField& object, double theta) {
  return weakphase::scan_reconstruct_serial(object, theta);
}

}  // namespace weakphase::ref

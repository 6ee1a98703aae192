#include "weakphase/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace weakphase::kernels {

Spectrum dft_direct(const SampledField& field) {
  const Grid& g = field.grid;
  std::vector<cxd> out(g.n);
#pragma omp parallel for schedule(static)
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

std::vector<cxd> extension_line(const SampledField& field, double q) {
  const Grid& g = field.grid;
  if (std::abs(q) * g.x_abs_max() > 700.0) {
    throw std::domain_error("extension_line: exp overflow guard");
  }
  std::vector<cxd> out(g.n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < g.n; ++j) {
    const double pj = g.p(j);
    cxd acc(0.0, 0.0);
    for (int k = 0; k < g.n; ++k) {
      const double xk = g.x(k);
      const double amp = std::exp(q * xk);
      const double ph = -xk * pj;
      acc += field.values[k] * cxd(amp * std::cos(ph), amp * std::sin(ph));
    }
    out[j] = acc * g.dx;
  }
  return out;
}

std::vector<double> extension_line_modulus(const SampledField& field, double q) {
  std::vector<cxd> line = extension_line(field, q);
  std::vector<double> out(line.size());
  for (std::size_t j = 0; j < line.size(); ++j) out[j] = std::abs(line[j]);
  return out;
}

}  // namespace weakphase::kernels

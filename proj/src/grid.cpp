#include "weakphase/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace weakphase {

Grid::Grid(double x0_, double dx_, int n_) : x0(x0_), dx(dx_), n(n_) {
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw std::invalid_argument("Grid: dx must be positive and finite");
  }
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("Grid: n must be even and >= 8, got " + std::to_string(n));
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("Grid: x0 must be finite");
  }
}

double Grid::x_abs_max() const {
  return std::max(std::abs(x0), std::abs(x0 + (n - 1) * dx));
}

Grid centered_grid(const Grid& g) {
  return Grid(-(g.n / 2) * g.dx, g.dx, g.n);
}

void require_finite(const std::vector<cxd>& v, const char* what) {
  for (const cxd& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

SampledField::SampledField(Grid g, std::vector<cxd> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n) {
    throw std::invalid_argument("SampledField: values length must equal grid.n");
  }
  require_finite(values, "SampledField");
}

Spectrum::Spectrum(Grid g, std::vector<cxd> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n) {
    throw std::invalid_argument("Spectrum: values length must equal grid.n");
  }
  require_finite(values, "Spectrum");
}

}  // namespace weakphase

#pragma once

#include <complex>
#include <vector>

namespace weakphase {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Uniform position grid. The conjugate momentum grid is
/// p_j = 2*pi*(j - n/2)/(n*dx), so p = 0 falls exactly on bin n/2.
struct Grid {
  double x0 = 0.0;  // leftmost sample coordinate
  double dx = 1.0;  // sample spacing, > 0
  int n = 0;        // sample count, even, >= 8

  Grid() = default;
  Grid(double x0_, double dx_, int n_);

  double x(int k) const { return x0 + k * dx; }
  double dp() const { return 2.0 * kPi / (n * dx); }
  double p(int j) const { return dp() * (j - n / 2); }
  int zero_bin() const { return n / 2; }
  double span() const { return n * dx; }
  double x_abs_max() const;

  bool operator==(const Grid&) const = default;
};

/// Same spacing and count as `g`, re-based so x = 0 sits on bin n/2.
/// Used for conjugate-domain work where symmetry about the origin matters.
Grid centered_grid(const Grid& g);

/// Complex amplitude samples f(x_k) on a position grid.
struct SampledField {
  Grid grid;
  std::vector<cxd> values;

  SampledField() = default;
  SampledField(Grid g, std::vector<cxd> v);
};

/// Complex amplitude samples F(p_j) on the momentum grid derived from `grid`.
struct Spectrum {
  Grid grid;  // the originating position grid
  std::vector<cxd> values;

  Spectrum() = default;
  Spectrum(Grid g, std::vector<cxd> v);
};

/// H/V spectral components of a field carrying polarization.
struct PolarizedSpectrum {
  Spectrum h;
  Spectrum v;
};

// Shared validation helpers.
void require_finite(const std::vector<cxd>& v, const char* what);
void require_finite(const std::vector<double>& v, const char* what);

}  // namespace weakphase

#include "fft_backend.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace weakphase::detail {

namespace {

std::mutex g_plan_mutex;

fftw_plan get_plan(int n, int sign) {
  // FFTW_UNALIGNED so the cached plan can execute on any caller buffer.
  static std::unordered_map<long long, fftw_plan> cache;
  const long long key = static_cast<long long>(n) * 4 + (sign == FFTW_FORWARD ? 0 : 1);
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(n);
  fftw_plan plan = fftw_plan_dft_1d(
      n, reinterpret_cast<fftw_complex*>(scratch.data()),
      reinterpret_cast<fftw_complex*>(scratch.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
  cache.emplace(key, plan);
  return plan;
}

void run(const std::vector<std::complex<double>>& in,
         std::vector<std::complex<double>>& out, int sign) {
  const int n = static_cast<int>(in.size());
  if (n == 0) throw std::invalid_argument("fft: empty input");
  out.resize(n);
  fftw_plan plan = get_plan(n, sign);
  // fftw_execute_dft on distinct buffers is thread-safe for a fixed plan.
  fftw_execute_dft(plan,
                   reinterpret_cast<fftw_complex*>(
                       const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void fft_forward(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
  run(in, out, FFTW_FORWARD);
}

void fft_backward(const std::vector<std::complex<double>>& in,
                  std::vector<std::complex<double>>& out) {
  run(in, out, FFTW_BACKWARD);
}

}  // namespace weakphase::detail

#pragma once

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "crestlab/grid.hpp"

namespace crestlab::fft {

// Cached FFTW plans per (d, N). Plans are built once on aligned scratch
// buffers; callers copy in and out, which costs a small fraction of the
// transform itself and keeps plan reuse trivially safe.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  /// Unnormalized DFT, sign = FFTW_FORWARD or FFTW_BACKWARD. Plans are built
  /// once with FFTW_UNALIGNED so they can run on the caller's arrays directly
  /// (in and out must be distinct).
  void execute(const PeriodicGrid& g, int sign,
               const std::complex<double>* in, std::complex<double>* out) {
    Entry& e = entry(g);
    // std::complex<double> is layout-compatible with fftw_complex
    auto* fin = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in));
    auto* fout = reinterpret_cast<fftw_complex*>(out);
    std::lock_guard<std::mutex> lock(e.mtx);
    fftw_execute_dft(sign == FFTW_FORWARD ? e.fwd : e.bwd, fin, fout);
  }

 private:
  struct Entry {
    fftw_complex* buf_in = nullptr;
    fftw_complex* buf_out = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::mutex mtx;
  };

  Entry& entry(const PeriodicGrid& g) {
    const auto key = std::make_pair(g.d, g.N);
    std::lock_guard<std::mutex> lock(map_mtx_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return *it->second;
    auto e = std::make_unique<Entry>();
    const std::size_t n = g.points();
    e->buf_in = fftw_alloc_complex(n);
    e->buf_out = fftw_alloc_complex(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    switch (g.d) {
      case 1:
        e->fwd = fftw_plan_dft_1d(g.N, e->buf_in, e->buf_out, FFTW_FORWARD, flags);
        e->bwd = fftw_plan_dft_1d(g.N, e->buf_in, e->buf_out, FFTW_BACKWARD, flags);
        break;
      case 2:
        e->fwd = fftw_plan_dft_2d(g.N, g.N, e->buf_in, e->buf_out, FFTW_FORWARD, flags);
        e->bwd = fftw_plan_dft_2d(g.N, g.N, e->buf_in, e->buf_out, FFTW_BACKWARD, flags);
        break;
      default:
        e->fwd = fftw_plan_dft_3d(g.N, g.N, g.N, e->buf_in, e->buf_out, FFTW_FORWARD, flags);
        e->bwd = fftw_plan_dft_3d(g.N, g.N, g.N, e->buf_in, e->buf_out, FFTW_BACKWARD, flags);
        break;
    }
    it = entries_.emplace(key, std::move(e)).first;
    return *it->second;
  }

  std::map<std::pair<int, int>, std::unique_ptr<Entry>> entries_;
  std::mutex map_mtx_;
};

/// samples[j] = sum_k coeffs[k] e^{+2 pi i j.k / N}  (synthesis, unnormalized).
inline void synthesis(const PeriodicGrid& g, const std::complex<double>* coeffs,
                      std::complex<double>* samples) {
  PlanCache::instance().execute(g, FFTW_BACKWARD, coeffs, samples);
}

/// coeffs[k] = (1/N^d) sum_j samples[j] e^{-2 pi i j.k / N}  (analysis).
inline void analysis(const PeriodicGrid& g, const std::complex<double>* samples,
                     std::complex<double>* coeffs) {
  PlanCache::instance().execute(g, FFTW_FORWARD, samples, coeffs);
  const double scale = 1.0 / static_cast<double>(g.points());
  const std::size_t n = g.points();
  for (std::size_t i = 0; i < n; ++i) coeffs[i] *= scale;
}

}  // namespace crestlab::fft

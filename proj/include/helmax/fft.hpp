// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_FFT_HPP
#define HELMAX_FFT_HPP

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <tuple>

#include "helmax/field.hpp"

namespace helmax {
namespace detail {

/// Process-wide FFTW plan cache. Plan creation is serialized (the FFTW
/// planner is not thread-safe); execution through fftw_execute_dft is
/// re-entrant, so concurrent transforms on distinct buffers are safe.
class FftPlans {
public:
  static FftPlans& instance() {
    static FftPlans p;
    return p;
  }

  fftw_plan get(int rank, int N, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(rank, N, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::size_t total = 1;
    for (int a = 0; a < rank; ++a) total *= static_cast<std::size_t>(N);
    fftw_complex* buf = fftw_alloc_complex(total);
    int dims[3] = {N, N, N};
    // FFTW_UNALIGNED lets the plan execute on any caller buffer.
    fftw_plan plan = fftw_plan_dft(rank, dims, buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

private:
  FftPlans() = default;
  ~FftPlans() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace detail

/// In-place forward transform of one component to plane-wave coefficients:
/// data[k] = (1/N^n) sum_x f(x) exp(-i xi_k . x). With this scaling the
/// coefficient of exp(i xi_k . x) is exactly 1, so every symbol acts on
/// plane waves as an exact eigenvalue.
inline void fft_forward(const Grid& g, Complex* data) {
  fftw_plan plan = detail::FftPlans::instance().get(g.dim(), g.extent(), FFTW_FORWARD);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
  const double scale = 1.0 / static_cast<double>(g.points());
  const std::size_t np = g.points();
  for (std::size_t i = 0; i < np; ++i) data[i] *= scale;
}

/// In-place inverse: f(x) = sum_k data[k] exp(i xi_k . x).
inline void fft_inverse(const Grid& g, Complex* data) {
  fftw_plan plan = detail::FftPlans::instance().get(g.dim(), g.extent(), FFTW_BACKWARD);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

inline void fft_forward(Field& f) {
  for (int c = 0; c < f.components(); ++c) fft_forward(f.grid(), f.comp(c));
}

inline void fft_inverse(Field& f) {
  for (int c = 0; c < f.components(); ++c) fft_inverse(f.grid(), f.comp(c));
}

}  // namespace helmax

#endif

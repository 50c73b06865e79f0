// feat/fft.cc

// Copyright 2026  snrkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "snrkit/feat/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {
namespace {

// The FFTW planner is not reentrant.
std::mutex &PlannerMutex() {
  static std::mutex mu;
  return mu;
}

struct FftwFree {
  void operator()(void *p) const { fftw_free(p); }
};

using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using RealBuffer = std::unique_ptr<double[], FftwFree>;

}  // namespace

struct Fft::Plans {
  fftw_plan complex_forward = nullptr;
  fftw_plan real_forward = nullptr;
};

bool IsPowerOfTwo(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

size_t NextPowerOfTwo(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(size_t size) : size_(size), plans_(std::make_unique<Plans>()) {
  if (!IsPowerOfTwo(size)) throw Error(ErrorCode::kInvalidArgument, "FFT size must be a power of two");
  const int n = static_cast<int>(size);
  ComplexBuffer c(fftw_alloc_complex(size));
  ComplexBuffer spectrum(fftw_alloc_complex(size / 2 + 1));
  RealBuffer r(fftw_alloc_real(size));
  std::lock_guard<std::mutex> lock(PlannerMutex());
  plans_->complex_forward = fftw_plan_dft_1d(n, c.get(), c.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->real_forward = fftw_plan_dft_r2c_1d(n, r.get(), spectrum.get(), FFTW_ESTIMATE);
  if (!plans_->complex_forward || !plans_->real_forward)
    throw Error(ErrorCode::kInvalidArgument, "cannot plan FFT of size " + std::to_string(size));
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  if (plans_->complex_forward) fftw_destroy_plan(plans_->complex_forward);
  if (plans_->real_forward) fftw_destroy_plan(plans_->real_forward);
}

void Fft::Forward(std::span<std::complex<double>> data) const {
  if (data.size() != size_) throw Error(ErrorCode::kInvalidArgument, "FFT input size mismatch");
  ComplexBuffer buf(fftw_alloc_complex(size_));
  for (size_t i = 0; i < size_; ++i) {
    buf[i][0] = data[i].real();
    buf[i][1] = data[i].imag();
  }
  fftw_execute_dft(plans_->complex_forward, buf.get(), buf.get());
  for (size_t i = 0; i < size_; ++i) data[i] = {buf[i][0], buf[i][1]};
}

void Fft::PowerSpectrum(std::span<const double> frame, std::vector<double> *power) const {
  RealBuffer in(fftw_alloc_real(size_));
  ComplexBuffer out(fftw_alloc_complex(size_ / 2 + 1));
  const size_t n = std::min(frame.size(), size_);
  std::copy_n(frame.begin(), n, in.get());
  std::fill(in.get() + n, in.get() + size_, 0.0);
  fftw_execute_dft_r2c(plans_->real_forward, in.get(), out.get());
  power->resize(size_ / 2 + 1);
  for (size_t k = 0; k <= size_ / 2; ++k) (*power)[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
}

}  // namespace snrkit

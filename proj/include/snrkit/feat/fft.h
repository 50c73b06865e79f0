// snrkit/feat/fft.h

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

#ifndef SNRKIT_FEAT_FFT_H_
#define SNRKIT_FEAT_FFT_H_

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace snrkit {

bool IsPowerOfTwo(size_t n);
size_t NextPowerOfTwo(size_t n);

// Forward DFT of a fixed power-of-two size, backed by FFTW. Plans are made
// once per object; transforms are safe to run from several threads.
class Fft {
 public:
  explicit Fft(size_t size);
  ~Fft();
  Fft(const Fft &) = delete;
  Fft &operator=(const Fft &) = delete;

  size_t size() const { return size_; }
  // In place; data.size() must equal size().
  void Forward(std::span<std::complex<double>> data) const;

  // |X_k|^2 for k = 0..size/2 of a real frame zero-padded to size().
  void PowerSpectrum(std::span<const double> frame, std::vector<double> *power) const;

 private:
  struct Plans;
  size_t size_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace snrkit

#endif  // SNRKIT_FEAT_FFT_H_

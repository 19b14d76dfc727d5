// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSIM_SIM_TYPES_HPP_
#define QSIM_SIM_TYPES_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qsim::sim {

using cplx = std::complex<double>;

// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<cplx, 4>;

// Ordered list of qubit indices; element 0 is the least significant bit of
// the register value.
using Register = std::vector<unsigned>;

struct QubitRange {
  unsigned start = 0;
  unsigned count = 0;

  unsigned end() const { return start + count; }
  Register qubits() const {
    Register r(count);
    for (unsigned i = 0; i < count; ++i) r[i] = start + i;
    return r;
  }
};

// A control line; `on_one == false` is an open (negated) control.
struct Control {
  unsigned qubit = 0;
  bool on_one = true;
};

namespace tolerance {
inline constexpr double kUnitarity = 1e-8;  // Frobenius norm of U^dag U - I
inline constexpr double kNorm = 1e-10;
inline constexpr double kZeroBranch = 1e-14;
}  // namespace tolerance

namespace gates {
Matrix2 identity();
Matrix2 x();
Matrix2 z();
Matrix2 h();
Matrix2 ry(double theta);
Matrix2 adjoint(const Matrix2& m);
double unitarity_defect(const Matrix2& m);
}  // namespace gates

}  // namespace qsim::sim

#endif  // QSIM_SIM_TYPES_HPP_

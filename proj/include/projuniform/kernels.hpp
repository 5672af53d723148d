#pragma once

#include <cstddef>
#include <vector>

#include "projuniform/jacobi_recurrence.hpp"

namespace projuniform::kernels {

// Point rows repacked into blocks of four with component-major layout:
// data[(block * comps + k) * 4 + lane] is component k of point
// 4*block + lane.  The tail block is zero padded.
struct PackedPoints {
  int comps = 0;
  int group = 1;  // real components per F-coordinate: 1 (R), 2 (C), 4 (H)
  std::size_t count = 0;
  std::vector<double> data;

  std::size_t blocks() const { return (count + 3) / 4; }
};

PackedPoints pack_points(const double* rows, std::size_t count, int comps,
                         int group);

// Exchangeable scalar/SIMD implementations of the arithmetic inner loops.
struct Ops {
  const char* name;

  // out[j] = |<x, y_j>|^2 for every packed point y_j.
  void (*abs2_row)(const PackedPoints& ys, const double* x, double* out);

  // sums[n] += sum_i P_n(t_i) for n = 0..rec.degree().
  void (*weyl_accumulate)(const JacobiRecurrence& rec, const double* t,
                          std::size_t count, double* sums);

  // out[i] = sum_{n=0}^{rec.degree()} coef[n] * P_n(t_i).
  void (*series_eval)(const JacobiRecurrence& rec, const double* coef,
                      const double* t, std::size_t count, double* out);

  // #{i : v[i] > threshold}
  std::size_t (*count_greater)(const double* v, std::size_t count,
                               double threshold);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unavailable on this CPU/build

// Honors PROJUNIFORM_SIMD = auto | scalar | avx2 (read once).
const Ops& active_ops();

}  // namespace projuniform::kernels

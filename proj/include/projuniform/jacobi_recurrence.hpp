#pragma once

#include <vector>

namespace projuniform {

// Coefficient table for the Jacobi three-term recurrence
//   P_0 = 1,  P_1(t) = p1_t * t + p1_c,
//   P_n(t) = (c1[n] * t + c2[n]) * P_{n-1}(t) - c3[n] * P_{n-2}(t),  n >= 2.
// Shared by the scalar and SIMD evaluation kernels so every backend runs
// the identical arithmetic.
struct JacobiRecurrence {
  double a = 0.0;
  double b = 0.0;
  double p1_t = 1.0;
  double p1_c = 0.0;
  std::vector<double> c1, c2, c3;  // index n, entries 0..1 unused

  int degree() const { return static_cast<int>(c1.size()) - 1; }
};

inline JacobiRecurrence make_recurrence(double a, double b, int n_max) {
  JacobiRecurrence rec;
  rec.a = a;
  rec.b = b;
  rec.p1_t = 0.5 * (a + b + 2.0);
  rec.p1_c = 0.5 * (a - b);
  const int m = n_max < 1 ? 1 : n_max;
  rec.c1.assign(m + 1, 0.0);
  rec.c2.assign(m + 1, 0.0);
  rec.c3.assign(m + 1, 0.0);
  for (int n = 2; n <= m; ++n) {
    const double s = 2.0 * n + a + b;
    const double denom = 2.0 * n * (n + a + b) * (s - 2.0);
    rec.c1[n] = (s - 1.0) * s * (s - 2.0) / denom;
    rec.c2[n] = (s - 1.0) * (a * a - b * b) / denom;
    rec.c3[n] = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s / denom;
  }
  return rec;
}

}  // namespace projuniform

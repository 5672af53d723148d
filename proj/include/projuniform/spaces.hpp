#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "projuniform/errors.hpp"
#include "projuniform/rng.hpp"

namespace projuniform {

enum class Field { R, C, H, O };

const char* field_name(Field f);          // "R", "C", "H", "O"
Field field_from_name(const std::string& name);

// Parameters of the projective space FP^{d-1}: the scalar field, the
// projective dimension parameter d, the real manifold dimension
// D = (d-1) dim_R(F), and the Jacobi parameters
//   alpha = (d-1) dim_R(F)/2 - 1,   beta = dim_R(F)/2 - 1.
// alpha and beta are half-integers; they are stored doubled so that exact
// rational identities can be checked without floating point.
struct SpaceParams {
  Field field = Field::R;
  int d = 3;
  int dim_f = 1;       // dim_R(F)
  int dimension = 2;   // D
  int alpha2 = 0;      // 2*alpha, exact
  int beta2 = -1;      // 2*beta, exact

  double alpha() const { return 0.5 * alpha2; }
  double beta() const { return 0.5 * beta2; }
  int components() const { return d * dim_f; }
  bool has_points() const { return field != Field::O; }

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

// Throws UnsupportedSpace for (O, d != 3), (R, d < 3), or d < 2.
SpaceParams make_space(Field field, int d);

// Parses a compact spec like "R4", "C3", "H2", "O3".
SpaceParams parse_space(const std::string& spec);
std::string space_code(const SpaceParams& params);

// A point of FP^{d-1} stored as a unit-norm representative vector,
// d coordinates over F laid out as d*dim_f real components
// (per coordinate: re | re,im | w,x,y,z).
struct ProjPoint {
  SpaceParams params;
  std::vector<double> comps;
};

enum class Provenance { iid, jittered, harmonic, maxdist, file };

const char* provenance_name(Provenance p);

// A finite configuration; rows stored contiguously for kernel consumption.
struct PointSet {
  SpaceParams params;
  Provenance provenance = Provenance::file;
  std::size_t count = 0;
  std::vector<double> coords;  // count * params.components(), row-major

  std::span<const double> row(std::size_t i) const {
    const std::size_t c = static_cast<std::size_t>(params.components());
    return {coords.data() + i * c, c};
  }
  std::span<double> row(std::size_t i) {
    const std::size_t c = static_cast<std::size_t>(params.components());
    return {coords.data() + i * c, c};
  }
  ProjPoint point(std::size_t i) const {
    auto r = row(i);
    return ProjPoint{params, {r.begin(), r.end()}};
  }
};

PointSet make_point_set(const SpaceParams& params, std::size_t count,
                        Provenance provenance);

// Scales a raw representative to unit norm.  Throws ZeroVector if the norm
// is below 1e-300 and UnsupportedSpace for field O.
ProjPoint normalize_representative(const SpaceParams& params,
                                   std::span<const double> raw);

// |<x, y>|^2 with the F-inner product <x,y> = sum_i conj(x_i) y_i.
double abs_inner_sq(const SpaceParams& params, std::span<const double> x,
                    std::span<const double> y);

// Normalized geodesic metric theta(x, y) = arccos |<x,y>| in [0, pi/2].
double geodesic_distance(const ProjPoint& p, const ProjPoint& q);
double geodesic_distance(const SpaceParams& params, std::span<const double> x,
                         std::span<const double> y);

// cos(2 theta(x,y)) = 2 |<x,y>|^2 - 1, the Jacobi polynomial argument.
double cos2theta(const ProjPoint& p, const ProjPoint& q);
double cos2theta(const SpaceParams& params, std::span<const double> x,
                 std::span<const double> y);

// Right-multiplies every coordinate by a scalar of F given by its dim_f
// real components.  Distances are invariant under unit scalars.
ProjPoint phase_multiply(const ProjPoint& p, std::span<const double> scalar);

// Uniform point via normalized Gaussians (isometry-invariant law).
ProjPoint random_point(const SpaceParams& params, RngStream& rng);
void fill_random(PointSet& set, RngStream& rng);

// Point-set CSV: header "# space=<R|C|H> d=<int>", one row per point with
// 17 significant digits.  Throws IoError on filesystem problems.
void write_points_csv(const std::string& path, const PointSet& set);
PointSet read_points_csv(const std::string& path);
std::string points_to_csv(const PointSet& set);
PointSet points_from_csv(const std::string& text);

}  // namespace projuniform

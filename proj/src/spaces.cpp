#include "projuniform/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace projuniform {

const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::O: return "O";
  }
  return "?";
}

Field field_from_name(const std::string& name) {
  if (name == "R") return Field::R;
  if (name == "C") return Field::C;
  if (name == "H") return Field::H;
  if (name == "O") return Field::O;
  throw UnsupportedSpace("unknown field '" + name + "'");
}

static int field_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    case Field::O: return 8;
  }
  return 0;
}

SpaceParams make_space(Field field, int d) {
  if (field == Field::O && d != 3) {
    throw UnsupportedSpace("OP^{d-1} is only supported for d = 3");
  }
  if (field == Field::R && d < 3) {
    throw UnsupportedSpace("RP^{d-1} requires d >= 3");
  }
  if (d < 2) {
    throw UnsupportedSpace("projective spaces require d >= 2");
  }
  SpaceParams p;
  p.field = field;
  p.d = d;
  p.dim_f = field_dim(field);
  p.dimension = (d - 1) * p.dim_f;
  p.alpha2 = (d - 1) * p.dim_f - 2;  // 2*((d-1) dim_f / 2 - 1)
  p.beta2 = p.dim_f - 2;
  return p;
}

SpaceParams parse_space(const std::string& spec) {
  if (spec.size() < 2) throw UnsupportedSpace("bad space spec '" + spec + "'");
  Field field = field_from_name(spec.substr(0, 1));
  int d = 0;
  try {
    size_t pos = 0;
    d = std::stoi(spec.substr(1), &pos);
    if (pos + 1 != spec.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UnsupportedSpace("bad space spec '" + spec + "'");
  }
  return make_space(field, d);
}

std::string space_code(const SpaceParams& params) {
  return std::string(field_name(params.field)) + std::to_string(params.d);
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::iid: return "iid";
    case Provenance::jittered: return "jittered";
    case Provenance::harmonic: return "harmonic";
    case Provenance::maxdist: return "maxdist";
    case Provenance::file: return "file";
  }
  return "?";
}

PointSet make_point_set(const SpaceParams& params, std::size_t count,
                        Provenance provenance) {
  if (!params.has_points()) {
    throw UnsupportedSpace("point-level operations are disabled for OP^2");
  }
  PointSet set;
  set.params = params;
  set.provenance = provenance;
  set.count = count;
  set.coords.assign(count * static_cast<std::size_t>(params.components()), 0.0);
  return set;
}

ProjPoint normalize_representative(const SpaceParams& params,
                                   std::span<const double> raw) {
  if (!params.has_points()) {
    throw UnsupportedSpace("point-level operations are disabled for OP^2");
  }
  if (raw.size() != static_cast<std::size_t>(params.components())) {
    throw DomainError("representative has wrong component count");
  }
  double norm_sq = 0.0;
  for (double v : raw) norm_sq += v * v;
  const double norm = std::sqrt(norm_sq);
  if (!(norm > 1e-300)) throw ZeroVector("cannot normalize a zero vector");
  ProjPoint p{params, {raw.begin(), raw.end()}};
  for (double& v : p.comps) v /= norm;
  return p;
}

double abs_inner_sq(const SpaceParams& params, std::span<const double> x,
                    std::span<const double> y) {
  const int d = params.d;
  switch (params.field) {
    case Field::R: {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += x[i] * y[i];
      return s * s;
    }
    case Field::C: {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < d; ++i) {
        const double xr = x[2 * i], xi = x[2 * i + 1];
        const double yr = y[2 * i], yi = y[2 * i + 1];
        re += xr * yr + xi * yi;   // conj(x_i) * y_i
        im += xr * yi - xi * yr;
      }
      return re * re + im * im;
    }
    case Field::H: {
      double sw = 0.0, sx = 0.0, sy = 0.0, sz = 0.0;
      for (int i = 0; i < d; ++i) {
        const double* a = &x[4 * i];
        const double* b = &y[4 * i];
        // conj(a) * b with Hamilton's product
        sw += a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
        sx += a[0] * b[1] - a[1] * b[0] - a[2] * b[3] + a[3] * b[2];
        sy += a[0] * b[2] + a[1] * b[3] - a[2] * b[0] - a[3] * b[1];
        sz += a[0] * b[3] - a[1] * b[2] + a[2] * b[1] - a[3] * b[0];
      }
      return sw * sw + sx * sx + sy * sy + sz * sz;
    }
    case Field::O:
      throw UnsupportedSpace("point-level operations are disabled for OP^2");
  }
  return 0.0;
}

static void check_same_space(const ProjPoint& p, const ProjPoint& q) {
  if (!(p.params == q.params)) {
    throw MixedSpaces("points belong to different spaces");
  }
}

double geodesic_distance(const SpaceParams& params, std::span<const double> x,
                         std::span<const double> y) {
  const double q = abs_inner_sq(params, x, y);
  const double c = std::sqrt(std::clamp(q, 0.0, 1.0));
  return std::acos(c);
}

double geodesic_distance(const ProjPoint& p, const ProjPoint& q) {
  check_same_space(p, q);
  return geodesic_distance(p.params, p.comps, q.comps);
}

double cos2theta(const SpaceParams& params, std::span<const double> x,
                 std::span<const double> y) {
  const double q = abs_inner_sq(params, x, y);
  return std::clamp(2.0 * q - 1.0, -1.0, 1.0);
}

double cos2theta(const ProjPoint& p, const ProjPoint& q) {
  check_same_space(p, q);
  return cos2theta(p.params, p.comps, q.comps);
}

ProjPoint phase_multiply(const ProjPoint& p, std::span<const double> scalar) {
  const int g = p.params.dim_f;
  if (scalar.size() != static_cast<std::size_t>(g)) {
    throw DomainError("scalar has wrong component count");
  }
  ProjPoint out = p;
  for (int i = 0; i < p.params.d; ++i) {
    const double* a = &p.comps[static_cast<std::size_t>(g) * i];
    double* o = &out.comps[static_cast<std::size_t>(g) * i];
    switch (g) {
      case 1:
        o[0] = a[0] * scalar[0];
        break;
      case 2:
        o[0] = a[0] * scalar[0] - a[1] * scalar[1];
        o[1] = a[0] * scalar[1] + a[1] * scalar[0];
        break;
      case 4: {
        const double w = scalar[0], xx = scalar[1], yy = scalar[2],
                     zz = scalar[3];
        o[0] = a[0] * w - a[1] * xx - a[2] * yy - a[3] * zz;
        o[1] = a[0] * xx + a[1] * w + a[2] * zz - a[3] * yy;
        o[2] = a[0] * yy - a[1] * zz + a[2] * w + a[3] * xx;
        o[3] = a[0] * zz + a[1] * yy - a[2] * xx + a[3] * w;
        break;
      }
      default:
        throw UnsupportedSpace("phase_multiply: unsupported field");
    }
  }
  return out;
}

ProjPoint random_point(const SpaceParams& params, RngStream& rng) {
  if (!params.has_points()) {
    throw UnsupportedSpace("point-level operations are disabled for OP^2");
  }
  std::vector<double> raw(static_cast<std::size_t>(params.components()));
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double& v : raw) {
      v = rng.gaussian();
      norm_sq += v * v;
    }
  } while (!(norm_sq > 1e-280));
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& v : raw) v *= inv;
  return ProjPoint{params, std::move(raw)};
}

void fill_random(PointSet& set, RngStream& rng) {
  for (std::size_t i = 0; i < set.count; ++i) {
    ProjPoint p = random_point(set.params, rng);
    std::copy(p.comps.begin(), p.comps.end(), set.row(i).begin());
  }
}

std::string points_to_csv(const PointSet& set) {
  std::ostringstream out;
  out << "# space=" << field_name(set.params.field) << " d=" << set.params.d
      << "\n";
  char buf[40];
  const int c = set.params.components();
  for (std::size_t i = 0; i < set.count; ++i) {
    auto r = set.row(i);
    for (int k = 0; k < c; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", r[k]);
      out << buf << (k + 1 < c ? "," : "\n");
    }
  }
  return out.str();
}

void write_points_csv(const std::string& path, const PointSet& set) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << points_to_csv(set);
  if (!out) throw IoError("write failed for '" + path + "'");
}

PointSet points_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty point file");
  std::string fname;
  int d = 0;
  {
    std::istringstream hs(line);
    std::string hash, kv;
    hs >> hash;
    if (hash != "#") throw IoError("missing '# space=... d=...' header");
    while (hs >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "space") fname = value;
      if (key == "d") d = std::stoi(value);
    }
  }
  if (fname.empty() || d == 0) throw IoError("bad point file header");
  const SpaceParams params = make_space(field_from_name(fname), d);
  PointSet set = make_point_set(params, 0, Provenance::file);
  const int c = params.components();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
    if (static_cast<int>(vals.size()) != c) {
      throw IoError("point row has wrong component count");
    }
    set.coords.insert(set.coords.end(), vals.begin(), vals.end());
    ++set.count;
  }
  if (set.count == 0) throw IoError("point file contains no points");
  return set;
}

PointSet read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return points_from_csv(buffer.str());
}

}  // namespace projuniform

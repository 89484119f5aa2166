#include "kwc/grid.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kwc/errors.hpp"

namespace kwc {

Grid make_grid(int dim, const std::vector<int>& cells,
               const std::vector<double>& lengths) {
  if (dim != 1 && dim != 2)
    throw ConfigError("grid dimension must be 1 or 2, got " +
                      std::to_string(dim));
  if (static_cast<int>(cells.size()) != dim ||
      static_cast<int>(lengths.size()) != dim)
    throw ConfigError("cells/lengths list size must match dim");
  Grid g;
  g.dim = dim;
  for (int k = 0; k < dim; ++k) {
    if (cells[static_cast<std::size_t>(k)] < 2)
      throw ConfigError("need at least 2 cells per axis");
    if (!(lengths[static_cast<std::size_t>(k)] > 0.0))
      throw ConfigError("axis length must be positive");
    g.cells[static_cast<std::size_t>(k)] = cells[static_cast<std::size_t>(k)];
    g.lengths[static_cast<std::size_t>(k)] = lengths[static_cast<std::size_t>(k)];
    g.spacing[static_cast<std::size_t>(k)] =
        lengths[static_cast<std::size_t>(k)] / cells[static_cast<std::size_t>(k)];
  }
  if (dim == 1) {
    g.cells[1] = 1;
    g.lengths[1] = 1.0;
    g.spacing[1] = 1.0;
  }
  g.cell_volume = (dim == 1) ? g.spacing[0] : g.spacing[0] * g.spacing[1];
  return g;
}

static void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw ConfigError("grid mismatch");
}

FaceField grad(const ScalarField& z) {
  const Grid& g = z.grid;
  FaceField w(g);
  const int nx = g.cells[0], ny = g.cells[1];
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix + 1 < nx; ++ix)
      w.comp[0][static_cast<std::size_t>(iy * (nx - 1) + ix)] =
          (z[g.cell_index(ix + 1, iy)] - z[g.cell_index(ix, iy)]) / g.spacing[0];
  if (g.dim == 2)
    for (int iy = 0; iy + 1 < ny; ++iy)
      for (int ix = 0; ix < nx; ++ix)
        w.comp[1][static_cast<std::size_t>(iy * nx + ix)] =
            (z[g.cell_index(ix, iy + 1)] - z[g.cell_index(ix, iy)]) / g.spacing[1];
  return w;
}

// Negative adjoint of grad under the cell_volume-weighted inner products:
// <grad z, w>_faces = -<z, div w>_cells exactly.
ScalarField div(const FaceField& w) {
  const Grid& g = w.grid;
  ScalarField d(g);
  const int nx = g.cells[0], ny = g.cells[1];
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      double left = (ix > 0) ? w.comp[0][static_cast<std::size_t>(iy * (nx - 1) + ix - 1)] : 0.0;
      double right = (ix + 1 < nx) ? w.comp[0][static_cast<std::size_t>(iy * (nx - 1) + ix)] : 0.0;
      d[g.cell_index(ix, iy)] = (right - left) / g.spacing[0];
    }
  if (g.dim == 2)
    for (int iy = 0; iy < ny; ++iy)
      for (int ix = 0; ix < nx; ++ix) {
        double lo = (iy > 0) ? w.comp[1][static_cast<std::size_t>((iy - 1) * nx + ix)] : 0.0;
        double hi = (iy + 1 < ny) ? w.comp[1][static_cast<std::size_t>(iy * nx + ix)] : 0.0;
        d[g.cell_index(ix, iy)] += (hi - lo) / g.spacing[1];
      }
  return d;
}

ScalarField neumann_laplacian(const ScalarField& z) {
  ScalarField r = div(grad(z));
  for (auto& x : r.v) x = -x;
  return r;
}

double inner_h(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  double s = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
  return a.grid.cell_volume * s;
}

double norm_h(const ScalarField& z) { return std::sqrt(inner_h(z, z)); }

double inner_face(const FaceField& a, const FaceField& b) {
  require_same_grid(a.grid, b.grid);
  double s = 0.0;
  for (int k = 0; k < a.grid.dim; ++k)
    for (std::size_t i = 0; i < a.comp[static_cast<std::size_t>(k)].size(); ++i)
      s += a.comp[static_cast<std::size_t>(k)][i] * b.comp[static_cast<std::size_t>(k)][i];
  return a.grid.cell_volume * s;
}

double norm_face(const FaceField& w) { return std::sqrt(inner_face(w, w)); }

double norm_v(const ScalarField& z) {
  FaceField w = grad(z);
  return std::sqrt(inner_h(z, z) + inner_face(w, w));
}

double max_abs(const ScalarField& z) {
  double m = 0.0;
  for (double x : z.v) m = std::max(m, std::fabs(x));
  return m;
}

bool all_finite(const ScalarField& z) {
  for (double x : z.v)
    if (!std::isfinite(x)) return false;
  return true;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  ScalarField r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  ScalarField r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
  return r;
}

ScalarField operator*(double s, const ScalarField& a) {
  ScalarField r = a;
  for (auto& x : r.v) x *= s;
  return r;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
  require_same_grid(x.grid, y.grid);
  for (std::size_t i = 0; i < y.v.size(); ++i) y.v[i] += a * x.v[i];
}

void write_snapshot(const std::string& path, const ScalarField& z, double time) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open snapshot file for writing: " + path);
  out.precision(17);
  out << "dim " << z.grid.dim << "\n";
  out << "cells " << z.grid.cells[0];
  if (z.grid.dim == 2) out << " " << z.grid.cells[1];
  out << "\n";
  out << "lengths " << z.grid.lengths[0];
  if (z.grid.dim == 2) out << " " << z.grid.lengths[1];
  out << "\n";
  out << "time " << time << "\n";
  for (double x : z.v) out << x << "\n";
}

ScalarField read_snapshot(const std::string& path, double* time_out) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open snapshot file: " + path);
  std::string key;
  int dim = 0;
  std::vector<int> cells;
  std::vector<double> lengths;
  double time = 0.0;
  for (int line = 0; line < 4; ++line) {
    in >> key;
    if (key == "dim") {
      in >> dim;
    } else if (key == "cells") {
      cells.resize(static_cast<std::size_t>(dim));
      for (auto& c : cells) in >> c;
    } else if (key == "lengths") {
      lengths.resize(static_cast<std::size_t>(dim));
      for (auto& l : lengths) in >> l;
    } else if (key == "time") {
      in >> time;
    } else {
      throw ConfigError("unexpected snapshot header key: " + key);
    }
  }
  if (!in) throw ConfigError("malformed snapshot header in " + path);
  ScalarField z(make_grid(dim, cells, lengths));
  for (auto& x : z.v) in >> x;
  if (!in) throw ConfigError("truncated snapshot values in " + path);
  if (time_out) *time_out = time;
  return z;
}

}  // namespace kwc

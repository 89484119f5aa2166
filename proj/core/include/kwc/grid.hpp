#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace kwc {

// Uniform cell-centered rectangular grid, 1D or 2D.
// Cell (ix, iy) has center ((ix + 1/2) h_0, (iy + 1/2) h_1) and linear
// index iy * cells[0] + ix. In 1D, cells[1] == 1 and h_1 == 1.
struct Grid {
  int dim = 1;
  std::array<int, 2> cells{1, 1};
  std::array<double, 2> lengths{1.0, 1.0};
  std::array<double, 2> spacing{1.0, 1.0};
  double cell_volume = 1.0;

  int total_cells() const { return cells[0] * cells[1]; }
  int cell_index(int ix, int iy) const { return iy * cells[0] + ix; }

  // Interior faces of axis k: cells[k]-1 along axis k, full extent on the
  // other axis. Boundary faces carry no degrees of freedom.
  int face_count(int axis) const {
    return axis == 0 ? (cells[0] - 1) * cells[1] : cells[0] * (cells[1] - 1);
  }

  bool operator==(const Grid& o) const {
    return dim == o.dim && cells == o.cells && lengths == o.lengths;
  }
};

Grid make_grid(int dim, const std::vector<int>& cells,
               const std::vector<double>& lengths);

// Cell values, row-major (x fastest).
struct ScalarField {
  Grid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), v(static_cast<std::size_t>(g.total_cells()), fill) {}

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(v.size()); }
};

// Values on interior faces, one array per axis.
struct FaceField {
  Grid grid;
  std::array<std::vector<double>, 2> comp;

  FaceField() = default;
  explicit FaceField(const Grid& g) : grid(g) {
    comp[0].assign(static_cast<std::size_t>(g.face_count(0)), 0.0);
    if (g.dim == 2)
      comp[1].assign(static_cast<std::size_t>(g.face_count(1)), 0.0);
  }
};

FaceField grad(const ScalarField& z);
ScalarField div(const FaceField& w);
// A_N z = -div(grad z): symmetric positive semidefinite, annihilates constants.
ScalarField neumann_laplacian(const ScalarField& z);

double inner_h(const ScalarField& a, const ScalarField& b);
double norm_h(const ScalarField& z);
double inner_face(const FaceField& a, const FaceField& b);
double norm_face(const FaceField& w);
double norm_v(const ScalarField& z);

double max_abs(const ScalarField& z);
bool all_finite(const ScalarField& z);

// Elementwise helpers.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
void axpy(double a, const ScalarField& x, ScalarField& y);  // y += a*x

// Snapshot format: text header (dim, cells, lengths, time) then one cell
// value per line at 17 significant digits.
void write_snapshot(const std::string& path, const ScalarField& z, double time);
ScalarField read_snapshot(const std::string& path, double* time_out = nullptr);

}  // namespace kwc

// Focal analysis of a two-dimensional family of lines along one of its
// lines r in P^4: the characteristic matrix, focal points, fixed tangent
// planes, and the reducedness test for Fano schemes of hypersurfaces.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multisecant/fano.hpp"

namespace msec {

// Where a derived characteristic matrix came from.
struct CharProvenance {
  MatrixP frame;              // chart frame; r is the chart point below
  std::vector<Fp> point;      // chart coordinates of r
  MatrixP tangent;            // chart_vars x 2, a basis of the family's tangent space at r
};

// 3 x 2 matrix of linear binary forms in the parameters (x0, x1) of r.
// Row i is the i-th normal coordinate, column j the j-th tangent vector.
struct CharMatrix {
  std::array<std::array<BinaryForm<Fp>, 2>, 3> entries;
  std::optional<CharProvenance> provenance;

  const BinaryForm<Fp>& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  bool is_zero() const;
  std::uint32_t prime() const;

  // Rows given as (a, b) pairs meaning a*x0 + b*x1.
  static CharMatrix from_coefficients(const std::array<std::array<std::array<Fp, 2>, 2>, 3>& rows);
};

// The 2x2 minor of rows i < j (0-based).
BinaryForm<Fp> char_minor(const CharMatrix& M, int i, int j);

// Coefficients of v1*phi_23 - v2*phi_13 + v3*phi_12 as a linear system in v:
// column k holds the coefficients of the k-th quadratic form.
MatrixP fixed_plane_system(const CharMatrix& M);

// Determinant of the system above, of degree 6 in the entries of M.
Fp g_polynomial(const CharMatrix& M);

// A normal direction v with det(v | M(P)) = 0 for every P on r, scaled so
// that its first nonzero entry is 1.
std::optional<std::array<Fp, 3>> fixed_tangent_plane(const CharMatrix& M);

struct FocalReport {
  BinaryForm<Fp> phi12, phi13, phi23;
  bool degenerate = false;          // all minors vanish
  BinaryForm<Fp> common_factor;     // monic gcd of the minors; undefined when degenerate
  std::vector<FormRoot<Fp>> focal_points;
  bool needs_extension = false;     // an irreducible quadratic factor: conjugate foci
  Fp g;
  std::optional<std::array<Fp, 3>> fixed_direction;
  std::string note;
};

FocalReport focal_points(const CharMatrix& M);

// Kernel of the Jacobian of the family at the chart point r, which must be a
// smooth point of a two-dimensional family (corank exactly 2).
MatrixP family_tangent_basis(const Ideal<Fp>& family, const std::vector<Fp>& r);

// The family lives in a Grassmann chart of P^4 (6 variables); the normal
// coordinates along r are taken in the chart frame, in which the line has
// rows e0 + sum a_j e_{j+2} and e1 + sum b_j e_{j+2}.
CharMatrix characteristic_matrix(const Ideal<Fp>& family, const std::vector<Fp>& r,
                                 const std::optional<MatrixP>& frame = std::nullopt);

// Local intersection number at Q of two plane curves f, g in a ring with two
// variables.  kInfinite when they share a component through Q.  The
// recursion is bounded by `budget` steps.
int fulton_multiplicity(const PolyP& f, const PolyP& g, const std::vector<Fp>& Q, long budget = 100000);

struct Reducedness {
  bool reduced = false;
  std::vector<ProjectivePoint<Fp>> points;  // the points P of r used
  std::vector<int> multiplicities;          // of F2 and F3 at [r], per point
};

// Whether the Fano scheme of the hypersurface V in P^4 is reduced at r: the
// conic F2 = 0 and the cubic F3 = 0 in P(T_P V) meet transversally at the
// direction of r, for two random points P of r.
Reducedness fano_reduced_at_line(const Variety<Fp>& V, const Line<Fp>& r, std::uint64_t seed);

struct LineAnalysis {
  Line<Fp> line;
  CharMatrix matrix;
  FocalReport focal;
  std::optional<Reducedness> reducedness;  // for cubic threefolds
};

// The family is the Fano scheme of V, taken in a chart adapted to r.
LineAnalysis analyze_line(const Variety<Fp>& V, const Line<Fp>& r, std::uint64_t seed);

}  // namespace msec

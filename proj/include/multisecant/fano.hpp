// Lines on varieties and k-secant lines: local forms at a point of a
// hypersurface, Fano ideals in Grassmann charts, secancy systems, family
// dimensions and congruence orders.  Everything here runs over GF(p).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multisecant/geometry.hpp"

namespace msec {

// Expansion of a hypersurface V(f) at a smooth point P in the frame
// e0 = P, e1..e_{n-1} spanning T_P V with P, and e_n scaled so that the
// linear part of f(P + sum y_j e_j) is exactly y_n.
struct TangentConeForms {
  ProjectivePoint<Fp> point;
  MatrixP frame;              // columns e0..en in ambient coordinates
  int degree = 0;
  std::vector<PolyP> parts;   // G_1..G_d in y_1..y_n (ring variables 0..n-1)
  std::vector<PolyP> forms;   // F_2..F_d = G_i at y_n = 0, in y_1..y_{n-1}
};

TangentConeForms tangent_cone_forms(const Variety<Fp>& V, const ProjectivePoint<Fp>& P);

// The ideal (F_2, ..., F_d) in the coordinates y_1..y_{n-1} of P(T_P V).
Ideal<Fp> lines_through_point(const Variety<Fp>& V, const ProjectivePoint<Fp>& P);

struct PencilCount {
  int dimension = -1;   // projective dimension of the set of directions
  long degree = 0;      // number of directions with multiplicity, when finite
};

// Dimension and degree of a homogeneous ideal's projective zero set.
PencilCount projective_count(const Ideal<Fp>& homogeneous, std::uint64_t seed);

Ideal<Fp> fano_ideal(const Variety<Fp>& X, const GrassmannChart<Fp>& chart);

// Krull dimension by random affine slices.  With a witness zero w of I the
// principal ideal theorem gives dim >= N - #generators, and the slicing
// starts right above that bound; otherwise it starts from I itself.  A
// non-unit slice J gives dim = slices + dim J.
struct SlicedDimension {
  int dimension = -1;
  int slices = 0;
  bool witnessed = false;
  std::uint64_t pairs = 0;
};

SlicedDimension sliced_dimension(const Ideal<Fp>& ideal, Sampler& sampler,
                                 const std::optional<std::vector<Fp>>& witness = std::nullopt);

GrassmannChart<Fp> random_chart(int n, Sampler& sampler);

struct ChartRun {
  std::uint64_t seed = 0;
  int dimension = -1;
  SlicedDimension detail;
  double seconds = 0;
};

struct FanoReport {
  int dimension = -1;   // max over charts; -1 when no lines were detected
  bool seeds_agree = true;
  std::vector<ChartRun> charts;
};

// Dimension of the Fano scheme of lines, the max over one random chart per
// seed.  Known lines of X serve as witnesses (the chart is redrawn until it
// contains the first one).
FanoReport fano_dimension(const Variety<Fp>& X, const std::vector<std::uint64_t>& seeds,
                          const std::vector<Line<Fp>>& known_lines = {});

// Secancy conditions for the family of lines s*row0 + t*row1 whose rows are
// polynomials in `base` (variables 0..m-1).  The system lives in a ring with
// m + h + 1 variables: the base variables, the coefficients h_0..h_{h-1} of
// a monic form s^k + sum h_i s^i t^(k-i), and y.  Restrictions of degree
// below k vanish identically; the others leave zero remainder modulo the
// monic form.  `certificate` is a random combination of all restriction
// coefficients, nonzero exactly off the lines contained in X.
struct SecancySystem {
  RingPtr<Fp> ring;
  int base_vars = 0;
  int h_vars = 0;  // k, or 0 when every generator has degree below k
  int k = 0;
  std::vector<PolyP> equations;
  PolyP certificate;

  int y_var() const { return base_vars + h_vars; }
  Ideal<Fp> ideal() const { return Ideal<Fp>(ring, equations); }
  // Lines of length >= k not contained in X: adds y * certificate - 1.
  Ideal<Fp> true_ideal() const;
};

SecancySystem secancy_system(const Variety<Fp>& X, int k, const std::vector<PolyP>& row0,
                             const std::vector<PolyP>& row1, const RingPtr<Fp>& base, Sampler& sampler);

// The secancy ideal (without the y variable) in a chart.
Ideal<Fp> secancy_ideal(const Variety<Fp>& X, int k, const GrassmannChart<Fp>& chart, std::uint64_t seed);

struct SecancyRun {
  std::uint64_t seed = 0;
  int sigma = -1;
  int sigma_true = -1;
  int fano = -1;
  std::string true_note;
  SlicedDimension true_detail;
  SlicedDimension fano_detail;
  double seconds = 0;
};

struct OrderReport {
  bool defined = false;
  int q = -1;                      // median over points, when defined
  std::vector<long> per_point;     // -1 for an undefined point
  std::vector<long> unsaturated;   // degree before removing lines in X, -1 if not finite
  bool saturation_changed = false;
  std::string note;
};

struct SecancyReport {
  int k = 0;
  int sigma = -1;
  int sigma_true = -1;
  int fano_dimension = -1;
  bool contains_lines_in_x = false;
  bool seeds_agree = true;
  std::vector<std::uint64_t> seeds;
  std::vector<SecancyRun> runs;
  std::optional<OrderReport> order;
};

struct SecancyOptions {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<Line<Fp>> known_lines;
  bool order = false;
};

SecancyReport sigma_k_dimension(const Variety<Fp>& X, int k, const SecancyOptions& opts = {});

// Number of true k-secant lines through a random point off X, with
// multiplicity; 0 when there are none.  Throws DomainError when the lines
// through a point form a positive-dimensional family.
long congruence_order_at(const Variety<Fp>& X, int k, const ProjectivePoint<Fp>& P, std::uint64_t seed,
                         long* unsaturated = nullptr);

OrderReport congruence_order(const Variety<Fp>& X, int k, const std::vector<std::uint64_t>& seeds);

}  // namespace msec

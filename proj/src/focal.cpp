#include "multisecant/focal.hpp"

namespace msec {

bool CharMatrix::is_zero() const {
  for (auto& row : entries)
    for (auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::uint32_t CharMatrix::prime() const {
  for (auto& row : entries)
    for (auto& e : row)
      for (auto& c : e.coeffs())
        if (c.modulus()) return c.modulus();
  throw DomainError("characteristic matrix entries carry no modulus");
}

CharMatrix CharMatrix::from_coefficients(const std::array<std::array<std::array<Fp, 2>, 2>, 3>& rows) {
  CharMatrix M;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& [a, b] = rows[i][j];
      M.entries[i][j] = BinaryForm<Fp>(1, {b, a});
    }
  return M;
}

BinaryForm<Fp> char_minor(const CharMatrix& M, int i, int j) {
  if (i < 0 || j > 2 || i >= j) throw DomainError("minor rows must satisfy 0 <= i < j <= 2");
  return M(i, 0) * M(j, 1) - M(i, 1) * M(j, 0);
}

MatrixP fixed_plane_system(const CharMatrix& M) {
  const Fp zero(0, M.prime());
  const std::array<BinaryForm<Fp>, 3> forms{char_minor(M, 1, 2), char_minor(M, 0, 2).scaled(Fp(-1, M.prime())),
                                            char_minor(M, 0, 1)};
  MatrixP C = zero_matrix(3, 3, zero);
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 3; ++c) C(k, c) = forms[static_cast<std::size_t>(c)][k];
  return C;
}

Fp g_polynomial(const CharMatrix& M) { return determinant(fixed_plane_system(M)); }

std::optional<std::array<Fp, 3>> fixed_tangent_plane(const CharMatrix& M) {
  const Fp zero(0, M.prime());
  MatrixP K = kernel(fixed_plane_system(M), zero);
  if (K.cols() == 0) return std::nullopt;
  ProjectivePoint<Fp> v(VectorP(K.col(0)));
  std::array<Fp, 3> out{v[0], v[1], v[2]};
  // the determinant (*) expanded along its first column must vanish
  BinaryForm<Fp> expansion = char_minor(M, 1, 2).scaled(out[0]) - char_minor(M, 0, 2).scaled(out[1]) +
                             char_minor(M, 0, 1).scaled(out[2]);
  if (!expansion.is_zero()) throw InvariantViolation("fixed plane direction does not annihilate the minors");
  return out;
}

FocalReport focal_points(const CharMatrix& M) {
  if (M.is_zero()) throw DomainError("characteristic matrix is identically zero");
  const std::uint32_t p = M.prime();
  FocalReport r;
  r.phi12 = char_minor(M, 0, 1);
  r.phi13 = char_minor(M, 0, 2);
  r.phi23 = char_minor(M, 1, 2);
  r.g = g_polynomial(M);
  r.fixed_direction = fixed_tangent_plane(M);
  if (r.phi12.is_zero() && r.phi13.is_zero() && r.phi23.is_zero()) {
    r.degenerate = true;
    r.common_factor = BinaryForm<Fp>(2, Fp(0, p));
    r.note = "degenerate: the two columns are dependent along the whole line";
    return r;
  }
  r.common_factor = gcd_binary_forms<Fp>({r.phi12, r.phi13, r.phi23});
  if (r.common_factor.degree() > 0) r.focal_points = form_roots(r.common_factor);
  r.needs_extension = r.common_factor.degree() == 2 && r.focal_points.empty();
  int foci = 0;
  for (auto& f : r.focal_points) foci += f.multiplicity;
  if (r.needs_extension)
    r.note = "two conjugate focal points over GF(p^2)";
  else if (foci == 0)
    r.note = "no focal point";
  else if (r.focal_points.size() == 1)
    r.note = foci == 1 ? "one focal point" : "one double focal point";
  else
    r.note = "two focal points";
  return r;
}

MatrixP family_tangent_basis(const Ideal<Fp>& family, const std::vector<Fp>& r) {
  const int N = family.ring()->nvars;
  if (static_cast<int>(r.size()) != N) throw DomainError("chart point has wrong arity");
  const Fp zero(0, family.ring()->field.p);
  const auto& gens = family.generators();
  MatrixP J = zero_matrix(static_cast<Eigen::Index>(gens.size()), N, zero);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].evaluate(r).is_zero()) throw DomainError("the line is not in the family");
    for (int v = 0; v < N; ++v) J(static_cast<Eigen::Index>(i), v) = gens[i].derivative(v).evaluate(r);
  }
  MatrixP K = kernel(J, zero);
  if (K.cols() != 2)
    throw DomainError("the family is not smooth of dimension 2 at the line (tangent space of dimension " +
                      std::to_string(K.cols()) + ")");
  return K;
}

CharMatrix characteristic_matrix(const Ideal<Fp>& family, const std::vector<Fp>& r, const std::optional<MatrixP>& frame) {
  if (family.ring()->nvars != 6) throw DomainError("characteristic matrices are defined for line families in P^4");
  MatrixP T = family_tangent_basis(family, r);
  CharMatrix M;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 2; ++i)
      M.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = BinaryForm<Fp>(1, {T(3 + j, i), T(j, i)});
  M.provenance = CharProvenance{frame.value_or(MatrixP()), r, T};
  return M;
}

namespace {

struct AxisView {
  bool vanishes = true;  // f(x, 0) == 0
  int degree = -1;
  int order = -1;
  Fp lead;
};

AxisView on_axis(const PolyP& f) {
  AxisView v;
  for (auto& t : f.terms()) {
    if (t.mono[1]) continue;
    const int e = t.mono[0];
    if (v.vanishes || e > v.degree) {
      v.degree = e;
      v.lead = t.coef;
    }
    if (v.vanishes || e < v.order) v.order = e;
    v.vanishes = false;
  }
  return v;
}

PolyP divide_by_y(const PolyP& g) {
  std::vector<Term<Fp>> out;
  for (auto& t : g.terms()) out.push_back({t.mono / Monomial::variable(1), t.coef});
  return PolyP::from_terms(g.ring(), std::move(out));
}

struct Fulton {
  long budget;
  long steps = 0;

  int operator()(PolyP f, PolyP g) {
    int total = 0;
    while (true) {
      if (++steps > budget) throw BudgetExceeded("intersection multiplicity recursion exceeded its budget");
      if (!f.coefficient(Monomial{}).is_zero() || !g.coefficient(Monomial{}).is_zero()) return total;
      if (f.is_zero() || g.is_zero()) return kInfinite;
      if (f.total_degree() > 100 || g.total_degree() > 100)
        throw BudgetExceeded("intersection multiplicity recursion grew past degree 100");
      AxisView a = on_axis(f), b = on_axis(g);
      if (!a.vanishes && (b.vanishes || a.degree <= b.degree)) {
      } else {
        std::swap(f, g);
        std::swap(a, b);
      }
      if (a.vanishes) return kInfinite;  // y divides both
      if (b.vanishes) {
        // g = y * g1: I(f, g) = I(f, y) + I(f, g1)
        total += a.order;
        g = divide_by_y(g);
        continue;
      }
      PolyP shift = PolyP::monomial(f.ring(), Monomial::variable(0, b.degree - a.degree), b.lead);
      g = g.scaled(a.lead) - shift * f;
    }
  }
};

}  // namespace

int fulton_multiplicity(const PolyP& f, const PolyP& g, const std::vector<Fp>& Q, long budget) {
  const auto& R = f.ring();
  if (R->nvars != 2 || g.ring()->nvars != 2) throw DomainError("plane curves need a ring with two variables");
  if (Q.size() != 2) throw DomainError("the point needs two coordinates");
  const std::vector<PolyP> shift{PolyP::variable(R, 0) + PolyP::constant(R, Q[0]),
                                 PolyP::variable(R, 1) + PolyP::constant(R, Q[1])};
  PolyP fs = f.substitute(shift, R), gs = g.substitute(shift, R);
  if (!fs.coefficient(Monomial{}).is_zero() || !gs.coefficient(Monomial{}).is_zero()) return 0;
  if (fs.is_zero() || gs.is_zero()) return kInfinite;
  // The recursion only terminates when no component through the origin is
  // shared.  Such a component survives saturation by a general linear form
  // through the origin, while an isolated intersection point does not.
  Ideal<Fp> J(R, {fs, gs});
  if (ideal_dimension(J) > 0) {
    Sampler s(0x9e3779b9, R->field.p);
    PolyP ell = PolyP::variable(R, 0).scaled(s.nonzero()) + PolyP::variable(R, 1).scaled(s.nonzero());
    Ideal<Fp> away = saturation(J, ell);
    const bool through = std::all_of(away.generators().begin(), away.generators().end(),
                                     [](const PolyP& h) { return h.coefficient(Monomial{}).is_zero(); });
    if (through) return kInfinite;
  }
  return Fulton{budget}(fs, gs);
}

namespace {

ProjectivePoint<Fp> point_on(const Line<Fp>& r, Sampler& s) {
  while (true) {
    VectorP v = r.point(0) * s.element() + r.point(1) * s.element();
    if (!std::all_of(v.begin(), v.end(), [](const Fp& c) { return c.is_zero(); })) return ProjectivePoint<Fp>(v);
  }
}

}  // namespace

Reducedness fano_reduced_at_line(const Variety<Fp>& V, const Line<Fp>& r, std::uint64_t seed) {
  if (V.ambient() != 4 || V.generators().size() != 1) throw DomainError("reducedness test needs a hypersurface in P^4");
  if (secant_length(V, r) != kInfinite) throw DomainError("the line is not contained in the hypersurface");
  const std::uint32_t p = V.ring()->field.p;
  const Fp zero(0, p);
  Sampler s(seed, p);
  Reducedness out;
  std::optional<bool> verdict;
  for (int k = 0; k < 2; ++k) {
    ProjectivePoint<Fp> P;
    int tries = 0;
    do {
      if (++tries > 50) throw DomainError("no smooth point of the hypersurface found on the line");
      P = point_on(r, s);
    } while (!tangent_space(V, P).smooth);
    auto tc = tangent_cone_forms(V, P);
    ProjectivePoint<Fp> Q = point_on(r, s);
    while (Q == P) Q = point_on(r, s);
    VectorP y = inverse(tc.frame, zero) * Q.coords();
    if (!y(4).is_zero()) throw InvariantViolation("the line leaves the tangent hyperplane");
    Eigen::Index i0 = 1;
    while (y(i0).is_zero()) ++i0;
    // affine chart y_{i0} = 1 of P(T_P V)
    auto A = make_ring_gf(2, p);
    std::vector<PolyP> images;
    std::vector<Fp> at;
    for (Eigen::Index i = 1; i <= 3; ++i) {
      if (i == i0) {
        images.push_back(PolyP::constant(A, 1));
        continue;
      }
      images.push_back(PolyP::variable(A, static_cast<int>(at.size())));
      at.push_back(y(i) * y(i0).inverse());
    }
    PolyP F2 = tc.forms.at(0).substitute(images, A);
    PolyP F3 = tc.forms.size() > 1 ? tc.forms[1].substitute(images, A) : PolyP(A);
    int m = fulton_multiplicity(F2, F3, at);
    out.points.push_back(P);
    out.multiplicities.push_back(m);
    if (verdict && *verdict != (m == 1)) throw InvariantViolation("reducedness differs between two points of the line");
    verdict = m == 1;
  }
  out.reduced = *verdict;
  return out;
}

LineAnalysis analyze_line(const Variety<Fp>& V, const Line<Fp>& r, std::uint64_t seed) {
  if (V.ambient() != 4) throw DomainError("focal analysis is implemented for varieties in P^4");
  if (secant_length(V, r) != kInfinite) throw DomainError("the line is not contained in the variety");
  Sampler s(seed, V.ring()->field.p);
  MatrixP frame;
  do {
    frame = s.matrix(5, 5);
    frame.col(0) = r.point(0);
    frame.col(1) = r.point(1);
  } while (rank(frame) != 5);
  GrassmannChart<Fp> chart(frame);
  Ideal<Fp> family = fano_ideal(V, chart);
  const std::vector<Fp> origin(6, Fp(0, V.ring()->field.p));
  LineAnalysis out{r, characteristic_matrix(family, origin, frame), {}, std::nullopt};
  out.focal = focal_points(out.matrix);
  if (V.generators().size() == 1 && V.generators().front().total_degree() == 3)
    out.reducedness = fano_reduced_at_line(V, r, s.next_seed());
  return out;
}

}  // namespace msec

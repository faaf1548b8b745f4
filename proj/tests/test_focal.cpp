#include <doctest.h>

#include "multisecant/io.hpp"
#include "oracles.hpp"

using namespace msec;

namespace {

constexpr std::uint32_t P = 32003;

Fp f(long v) { return Fp(v, P); }

CharMatrix worked() {
  // rows (x0, x1), (x1, x0), (x0, x0)
  return CharMatrix::from_coefficients({{{{{f(1), f(0)}, {f(0), f(1)}}},
                                         {{{f(0), f(1)}, {f(1), f(0)}}},
                                         {{{f(1), f(0)}, {f(1), f(0)}}}}});
}

BinaryForm<Fp> form(std::initializer_list<long> coeffs_by_x0_power) {
  std::vector<Fp> c;
  for (long v : coeffs_by_x0_power) c.push_back(f(v));
  return BinaryForm<Fp>(static_cast<int>(c.size()) - 1, c);
}

PolyP plane(const char* text) { return parse_poly<Fp>(text, make_ring_gf(2)); }

// A cubic in P^4 through the line x2 = x3 = x4 = 0, in the given variables.
PolyP cubic_through_base_line(const RingPtr<Fp>& R, Sampler& s, std::vector<int> vars) {
  PolyP c(R);
  for (int v = 2; v <= 4; ++v) c = c + PolyP::variable(R, v) * s.form(R, 2, vars);
  return c;
}

Line<Fp> base_line() { return parse_line("x2=x3=x4=0", 4, P); }

}  // namespace

TEST_CASE("worked characteristic matrix") {
  auto rep = focal_points(worked());
  CHECK(rep.phi12 == form({-1, 0, 1}));  // x0^2 - x1^2
  CHECK(rep.phi13 == form({0, -1, 1}));  // x0^2 - x0 x1
  CHECK(rep.phi23 == form({0, 1, -1}));  // x0 x1 - x0^2
  CHECK(rep.common_factor == form({-1, 1}));
  REQUIRE(rep.focal_points.size() == 1);
  CHECK(rep.focal_points[0].x0 == rep.focal_points[0].x1);
  CHECK(rep.g.is_zero());
  REQUIRE(rep.fixed_direction);
  CHECK(*rep.fixed_direction == std::array<Fp, 3>{f(1), f(-1), f(0)});
  CHECK(rep.note == "one focal point");
  CHECK(oracle::fixed_plane_failure(worked()).empty());
}

TEST_CASE("fixed-plane criterion on random and G = 0 matrices") {
  Sampler s(1, P);
  int nonzero_g = 0;
  for (int i = 0; i < 200; ++i) {
    auto M = oracle::random_matrix(s);
    CHECK_MESSAGE(oracle::fixed_plane_failure(M).empty(), oracle::fixed_plane_failure(M));
    nonzero_g += !g_polynomial(M).is_zero();
  }
  CHECK(nonzero_g == 200);
  for (int i = 0; i < 100; ++i) {
    auto M = oracle::g_zero_matrix(s);
    REQUIRE(g_polynomial(M).is_zero());
    CHECK_MESSAGE(oracle::fixed_plane_failure(M).empty(), oracle::fixed_plane_failure(M));
    auto rep = focal_points(M);
    CHECK(rep.fixed_direction);
    CHECK(rep.common_factor.degree() >= 1);
  }
}

TEST_CASE("fixed-plane criterion on constructed matrices") {
  Sampler s(2, P);
  auto cases = oracle::constructed_matrices(s);
  CHECK(cases.size() == 20);
  for (auto& [what, M] : cases) {
    CHECK_MESSAGE(oracle::fixed_plane_failure(M).empty(), what, ": ", oracle::fixed_plane_failure(M));
    CHECK_MESSAGE(g_polynomial(M).is_zero(), what);
  }
}

TEST_CASE("resultants of the minors vanish with G") {
  Sampler s(3, P);
  for (int i = 0; i < 100; ++i) {
    auto M = oracle::g_zero_matrix(s);
    auto a = char_minor(M, 0, 1), b = char_minor(M, 0, 2), c = char_minor(M, 1, 2);
    CHECK(oracle::resultant(a, b, P).is_zero());
    CHECK(oracle::resultant(a, c, P).is_zero());
    CHECK(oracle::resultant(b, c, P).is_zero());
  }
  int nonzero = 0;
  for (int i = 0; i < 20; ++i) {
    auto M = oracle::random_matrix(s);
    nonzero += !oracle::resultant(char_minor(M, 0, 1), char_minor(M, 0, 2), P).is_zero();
  }
  CHECK(nonzero == 20);
}

TEST_CASE("tangent basis changes and scaling") {
  Sampler s(4, P);
  for (int i = 0; i < 40; ++i) {
    auto M = i % 2 ? oracle::random_matrix(s) : oracle::g_zero_matrix(s);
    std::array<std::array<Fp, 2>, 2> T{{{s.element(), s.element()}, {s.element(), s.element()}}};
    const Fp d = T[0][0] * T[1][1] - T[0][1] * T[1][0];
    if (d.is_zero()) continue;
    auto N = oracle::times(M, T);
    CHECK(char_minor(N, 0, 1) == char_minor(M, 0, 1).scaled(d));
    CHECK(char_minor(N, 1, 2) == char_minor(M, 1, 2).scaled(d));
    CHECK(g_polynomial(N) == g_polynomial(M) * d * d * d);
    auto a = focal_points(M), b = focal_points(N);
    CHECK(a.fixed_direction.has_value() == b.fixed_direction.has_value());
    if (a.fixed_direction) CHECK(*a.fixed_direction == *b.fixed_direction);
    CHECK(a.common_factor == b.common_factor);
    CHECK(a.focal_points.size() == b.focal_points.size());
    // G is homogeneous of degree 6 in the entries
    const Fp c = s.nonzero();
    CHECK(g_polynomial(oracle::times(M, {{{c, f(0)}, {f(0), c}}})) == g_polynomial(M) * uni::pow(c, 6));
  }
}

TEST_CASE("degenerate and zero matrices") {
  Sampler s(5, P);
  CharMatrix zero = CharMatrix::from_coefficients({{{{{f(0), f(0)}, {f(0), f(0)}}},
                                                    {{{f(0), f(0)}, {f(0), f(0)}}},
                                                    {{{f(0), f(0)}, {f(0), f(0)}}}}});
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(focal_points(zero), DomainError);
  auto cases = oracle::constructed_matrices(s);
  auto rep = focal_points(cases[4].second);  // a zero column
  CHECK(rep.degenerate);
  CHECK(rep.fixed_direction);
}

TEST_CASE("star of lines through a point") {
  auto C = make_ring_gf(6);
  Ideal<Fp> star(C, {parse_poly<Fp>("x0 - 2", C), parse_poly<Fp>("x1 - 3", C), parse_poly<Fp>("x2 - 5", C),
                     parse_poly<Fp>("x5 - 7", C)});
  std::vector<Fp> r{f(2), f(3), f(5), f(0), f(0), f(7)};
  MatrixP T = family_tangent_basis(star, r);
  CHECK(T.cols() == 2);
  auto M = characteristic_matrix(star, r);
  REQUIRE(M.provenance);
  auto rep = focal_points(M);
  CHECK_FALSE(rep.degenerate);
  REQUIRE(rep.focal_points.size() == 1);
  CHECK(rep.focal_points[0].x1.is_zero());
  CHECK(rep.focal_points[0].multiplicity == 2);
  CHECK(rep.fixed_direction);

  std::vector<Fp> off{f(1), f(3), f(5), f(0), f(0), f(7)};
  CHECK_THROWS_AS(family_tangent_basis(star, off), DomainError);
  Ideal<Fp> thin(C, {parse_poly<Fp>("x0 - 2", C), parse_poly<Fp>("x1 - 3", C), parse_poly<Fp>("x2 - 5", C)});
  CHECK_THROWS_AS(family_tangent_basis(thin, r), DomainError);
}

TEST_CASE("Fulton multiplicity: textbook cases") {
  const std::vector<Fp> O{f(0), f(0)};
  CHECK(fulton_multiplicity(plane("x1"), plane("x0"), O) == 1);
  CHECK(fulton_multiplicity(plane("x1"), plane("x1 - x0^2"), O) == 2);
  CHECK(fulton_multiplicity(plane("x1^2 - x0^3"), plane("x0"), O) == 2);
  CHECK(fulton_multiplicity(plane("x1^2 - x0^3"), plane("x1^2 + x0^3"), O) == 6);
  CHECK(fulton_multiplicity(plane("x1 - 1"), plane("x0"), O) == 0);
  CHECK(fulton_multiplicity(plane("x0*x1"), plane("x0*x1 + x0"), O) == kInfinite);
  CHECK(fulton_multiplicity(plane("x0*x1 - x0"), plane("x0^2"), O) == kInfinite);
  // away from the origin
  CHECK(fulton_multiplicity(plane("x1 - 2"), plane("x1 - 2 - x0^2 + 6*x0 - 9"), {f(3), f(2)}) == 2);
}

TEST_CASE("Fulton multiplicity agrees with the local length") {
  Sampler s(6, P);
  auto R = make_ring_gf(2);
  int tested = 0, above_one = 0;
  while (tested < 50) {
    // random curves through the origin, some singular there
    auto curve = [&](int deg) {
      PolyP c(R);
      for (int d = tested % 3 == 0 ? 2 : 1; d <= deg; ++d) c = c + s.form(R, d);
      return c;
    };
    PolyP a = curve(2 + tested % 2), b = curve(2 + (tested / 2) % 2);
    if (tested % 5 == 1) b = b * PolyP::variable(R, 0) + a * PolyP::variable(R, 1);  // tangent-heavy pair
    Ideal<Fp> J(R, {a, b});
    if (ideal_dimension(J) != 0) continue;
    const int mult = fulton_multiplicity(a, b, {f(0), f(0)});
    CHECK(mult == oracle::local_length(a, b, s));
    above_one += mult > 1;
    ++tested;
  }
  CHECK(above_one > 10);
}

TEST_CASE("reducedness of the Fano scheme along a line") {
  Sampler s(7, P);
  auto R = make_ring_gf(5);
  int reduced = 0;
  for (int i = 0; i < 3; ++i) {
    Variety<Fp> V(4, {cubic_through_base_line(R, s, {})});
    auto red = fano_reduced_at_line(V, base_line(), s.next_seed());
    reduced += red.reduced;
    CHECK(red.points.size() == 2);
    for (int m : red.multiplicities) CHECK(m >= 1);
  }
  CHECK(reduced == 3);

  // a cone with vertex e0 = [1:0:0:0:0] on r
  Variety<Fp> cone(4, {cubic_through_base_line(R, s, {1, 2, 3, 4})});
  auto red = fano_reduced_at_line(cone, base_line(), 1);
  CHECK_FALSE(red.reduced);
  // the Fano scheme is singular at such a line, and the tangent hyperplane
  // is the same at every point of r
  CHECK_THROWS_AS(analyze_line(cone, base_line(), 1), DomainError);
  std::optional<ProjectivePoint<Fp>> hyperplane;
  for (int i = 1; i <= 4; ++i) {
    auto ts = tangent_space(cone, ProjectivePoint<Fp>(base_line().at(f(i), f(1))));
    REQUIRE(ts.rank == 1);
    ProjectivePoint<Fp> h(ts.jacobian.row(0).transpose().eval());
    if (hyperplane) CHECK(h == *hyperplane);
    hyperplane = h;
  }

  auto other = parse_line("x0=x1=x2=0", 4, P);
  Variety<Fp> V(4, {cubic_through_base_line(R, s, {})});
  CHECK_THROWS_AS(fano_reduced_at_line(V, other, 1), DomainError);
}

TEST_CASE("line analysis on a random cubic threefold") {
  Sampler s(8, P);
  auto R = make_ring_gf(5);
  for (int i = 0; i < 3; ++i) {
    Variety<Fp> V(4, {cubic_through_base_line(R, s, {})});
    auto a = analyze_line(V, base_line(), s.next_seed());
    CHECK_FALSE(a.focal.degenerate);
    CHECK(a.focal.note == "no focal point");
    REQUIRE(a.reducedness);
    CHECK(a.reducedness->reduced);
    CHECK(oracle::fixed_plane_failure(a.matrix).empty());
  }
}

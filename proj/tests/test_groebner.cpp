#include <doctest.h>

#include "multisecant/groebner.hpp"
#include "multisecant/parse.hpp"
#include "multisecant/random.hpp"

using namespace msec;

namespace {

template <class F>
MultiPoly<F> s_poly(const MultiPoly<F>& f, const MultiPoly<F>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto R = f.ring();
  return MultiPoly<F>::monomial(R, l / f.leading_monomial(), g.leading_coefficient()) * f -
         MultiPoly<F>::monomial(R, l / g.leading_monomial(), f.leading_coefficient()) * g;
}

template <class F>
void audit(const GroebnerBasis<F>& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      CHECK(normal_form(s_poly(gb.basis[i], gb.basis[j]), gb).is_zero());
}

std::vector<PolyP> parse_all(const RingPtr<Fp>& R, std::initializer_list<const char*> texts) {
  std::vector<PolyP> out;
  for (auto* t : texts) out.push_back(parse_poly<Fp>(t, R));
  return out;
}

// Substitutes x -> A x.
PolyP change(const PolyP& f, const MatrixP& A) {
  auto R = f.ring();
  std::vector<PolyP> images;
  for (int i = 0; i < R->nvars; ++i) {
    PolyP x(R);
    for (int j = 0; j < R->nvars; ++j) x = x + PolyP::variable(R, j).scaled(A(i, j));
    images.push_back(std::move(x));
  }
  return f.substitute(images, R);
}

}  // namespace

TEST_CASE("twisted cubic over QQ") {
  auto R = make_ring<Rational>(4);
  std::vector<MultiPoly<Rational>> gens{parse_poly<Rational>("x0*x2 - x1^2", R), parse_poly<Rational>("x1*x3 - x2^2", R),
                                        parse_poly<Rational>("x0*x3 - x1*x2", R)};
  Ideal<Rational> I(R, gens);
  const auto& gb = I.groebner();
  CHECK(gb.basis.size() == 3);
  audit(gb);
  CHECK(ideal_dimension(I) == 2);
  CHECK(contains(I, parse_poly<Rational>("x0*x3^2 - x2^3", R)));
  CHECK_FALSE(contains(I, parse_poly<Rational>("x0*x3", R)));
}

TEST_CASE("S-polynomial audit on random ideals") {
  Sampler s(3, 32003);
  for (int trial = 0; trial < 12; ++trial) {
    auto R = make_ring_gf(3 + trial % 2);
    std::vector<PolyP> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(s.form(R, 2 + (i + trial) % 2));
    if (trial % 3 == 0) gens.push_back(s.affine_linear(R, {0, 1}));
    auto gb = buchberger(gens, R);
    audit(gb);
    for (auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("lex and elimination orders") {
  // implicitization of the twisted cubic
  auto R = make_ring_gf(6);  // s, t, x0..x3
  auto gens = parse_all(R, {"x2 - x0^3", "x3 - x0^2*x1", "x4 - x0*x1^2", "x5 - x1^3"});
  auto E = elimination_ideal(Ideal<Fp>(R, gens), {2, 3, 4, 5});
  for (auto* t : {"x2*x4 - x3^2", "x3*x5 - x4^2", "x2*x5 - x3*x4"}) CHECK(contains(E, parse_poly<Fp>(t, R)));
  CHECK_FALSE(contains(E, parse_poly<Fp>("x2*x5", R)));
}

TEST_CASE("known dimensions and degrees") {
  auto R = make_ring_gf(3);
  CHECK(ideal_dimension(Ideal<Fp>(R, parse_all(R, {"x0*x1", "x0*x2"}))) == 2);
  CHECK(ideal_dimension(Ideal<Fp>(R, parse_all(R, {"x0^2", "x1^3"}))) == 1);
  CHECK(ideal_dimension(Ideal<Fp>(R, parse_all(R, {"x0 - 1", "x0"}))) == -1);
  CHECK(ideal_dimension(Ideal<Fp>(R, {})) == 3);
  auto A = make_ring_gf(2);
  CHECK(quotient_degree(Ideal<Fp>(A, parse_all(A, {"x0^2 - 1", "x1^3 - x0"}))) == 6);
  CHECK(quotient_degree(Ideal<Fp>(A, parse_all(A, {"x0^2", "x0*x1", "x1^2"}))) == 3);
  CHECK_THROWS_AS(quotient_degree(Ideal<Fp>(A, parse_all(A, {"x0*x1"}))), DomainError);
}

TEST_CASE("dimension is invariant under random linear changes of variables") {
  Sampler s(21, 32003);
  auto R = make_ring_gf(5);
  std::vector<std::vector<PolyP>> ideals{
      parse_all(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}),
      parse_all(R, {"x0*x1", "x0*x2", "x0*x3"}),
      {s.form(R, 2), s.form(R, 3)},
      parse_all(R, {"x0^2", "x1^2", "x2*x3*x4"}),
  };
  for (auto& gens : ideals) {
    const int d = ideal_dimension(Ideal<Fp>(R, gens));
    for (int k = 0; k < 5; ++k) {
      MatrixP A = s.invertible(5);
      std::vector<PolyP> moved;
      for (auto& g : gens) moved.push_back(change(g, A));
      CHECK(ideal_dimension(Ideal<Fp>(R, moved)) == d);
    }
  }
}

TEST_CASE("saturation") {
  auto R = make_ring_gf(3);
  Ideal<Fp> I(R, parse_all(R, {"x0*x1", "x0*x2"}));
  auto S = saturation(I, parse_poly<Fp>("x0", R));
  CHECK(contains(S, parse_poly<Fp>("x1", R)));
  CHECK(contains(S, parse_poly<Fp>("x2", R)));
  CHECK_FALSE(contains(S, parse_poly<Fp>("x0", R)));

  Sampler s(5, 32003);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = s.form(R, 1), a = s.form(R, 2), b = s.form(R, 2), c = s.form(R, 3);
    Ideal<Fp> J(R, {f * a, f * f * b, c});
    auto sat = saturation(J, f);
    for (auto& g : J.generators()) CHECK(contains(sat, g));  // I is contained in its saturation
    CHECK(contains(sat, a));                                 // f * a is in I
    CHECK(contains(sat, b));                                 // f^2 * b is in I
  }
}

TEST_CASE("the pair budget is enforced") {
  Sampler s(8, 32003);
  auto R = make_ring_gf(5);
  std::vector<PolyP> gens{s.form(R, 3), s.form(R, 3), s.form(R, 3)};
  CHECK_THROWS_AS(buchberger(gens, R, GbOptions{2}), BudgetExceeded);
  const auto before = pair_counter();
  auto gb = buchberger(std::vector<PolyP>{s.form(R, 2), s.form(R, 2)}, R);
  CHECK(pair_counter() > before);
  CHECK_FALSE(gb.is_unit());
}

#include <doctest.h>

#include <random>

#include "multisecant/binary_form.hpp"
#include "multisecant/parse.hpp"
#include "multisecant/random.hpp"

using namespace msec;

namespace {

// Plain Gaussian elimination over mpq, kept apart from the library's linear
// algebra so it can serve as an oracle.
mpq_class det_oracle(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// j-th principal subresultant coefficient from the Sylvester submatrix:
// n-j shifts of a and m-j shifts of b, columns x^(m+n-j-1) .. x^(j+1), x^j.
mpq_class sylvester_sres(const UniPoly<Rational>& a, const UniPoly<Rational>& b, int j) {
  const int m = uni::degree(a), n = uni::degree(b);
  const int width = m + n - j;
  std::vector<std::vector<mpq_class>> rows;
  auto shifted = [&](const UniPoly<Rational>& p, int deg, int shift) {
    std::vector<mpq_class> row(static_cast<std::size_t>(width), 0);
    for (int e = 0; e <= deg; ++e) {
      const int power = e + shift;
      row[static_cast<std::size_t>(width - 1 - power)] = p[static_cast<std::size_t>(e)].get();
    }
    return row;
  };
  for (int s = n - j - 1; s >= 0; --s) rows.push_back(shifted(a, m, s));
  for (int s = m - j - 1; s >= 0; --s) rows.push_back(shifted(b, n, s));
  const int size = m + n - 2 * j;
  std::vector<std::vector<mpq_class>> sq;
  for (auto& r : rows) {
    std::vector<mpq_class> row(r.begin(), r.begin() + (size - 1));
    row.push_back(r[static_cast<std::size_t>(width - 1 - j)]);
    sq.push_back(std::move(row));
  }
  return det_oracle(sq);
}

UniPoly<Rational> random_q(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> d(-9, 9);
  UniPoly<Rational> p;
  for (int i = 0; i <= deg; ++i) p.push_back(Rational(d(rng)));
  if (p.back().is_zero()) p.back() = Rational(1);
  return p;
}

BinaryForm<Fp> random_form(Sampler& s, int deg) {
  std::vector<Fp> c;
  for (int i = 0; i <= deg; ++i) c.push_back(s.element());
  return BinaryForm<Fp>(deg, c);
}

}  // namespace

TEST_CASE("GF(p) arithmetic") {
  const std::uint32_t p = 32003;
  Fp a(12345, p), b(-7, p);
  CHECK((a * a.inverse()).is_one());
  CHECK((a + b - a) == b);
  CHECK(b.signed_value() == -7);
  CHECK(Fp(p, p).is_zero());
  CHECK_THROWS_AS(Fp(0, p).inverse(), DomainError);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("rationals are kept canonical") {
  Rational a(mpz_class(6), mpz_class(-4));
  CHECK(a.str() == "-3/2");
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DomainError);
  CHECK(reduce_mod(Rational(mpz_class(1), mpz_class(2)), 7) == Fp(4, 7));
}

TEST_CASE("polynomial parsing and printing round trip") {
  auto R = make_ring<Rational>(3);
  auto f = parse_poly<Rational>("3/2*x0^2*x1 - x2^3 + 7 - x0*x1*x2", R);
  CHECK(f.total_degree() == 3);
  CHECK(parse_poly<Rational>(f.to_string(), R) == f);
  CHECK(parse_poly<Rational>(" x0 *x1 +x1*x0 ", R) == parse_poly<Rational>("2*x0*x1", R));
  CHECK_THROWS_AS(parse_poly<Rational>("x3", R), ParseError);
  CHECK_THROWS_AS(parse_poly<Rational>("x0^", R), ParseError);
  CHECK_THROWS_AS(parse_poly<Rational>("2*+x1", R), ParseError);
  CHECK(parse_field_tag("GF 11").prime == 11);
  CHECK(parse_field_tag("QQ").rational);
  CHECK_THROWS_AS(parse_field_tag("GF 12"), ParseError);
}

TEST_CASE("ring axioms on random triples") {
  Sampler s(7, 32003);
  auto R = make_ring_gf(4);
  auto Q = make_ring<Rational>(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  auto random_q_poly = [&](int deg) {
    MultiPoly<Rational> f(Q);
    for (int i = 0; i < 6; ++i) {
      Monomial m;
      int left = deg;
      for (int v = 0; v < 3 && left; ++v) {
        int e = std::uniform_int_distribution<int>(0, left)(rng);
        m.set(v, e);
        left -= e;
      }
      f = f + MultiPoly<Rational>::monomial(Q, m, Rational(mpz_class(d(rng)), mpz_class(1 + std::abs(d(rng)))));
    }
    return f;
  };
  for (int i = 0; i < 200; ++i) {
    auto a = s.form(R, 1 + i % 3), b = s.form(R, 2), c = s.form(R, i % 2 + 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    auto x = random_q_poly(2), y = random_q_poly(3), z = random_q_poly(1);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("reduction mod p is a ring homomorphism") {
  auto Q = make_ring<Rational>(3);
  auto R = make_ring_gf(3, 101);
  const char* texts[] = {"x0^2 - 1/3*x1*x2 + 5", "7/5*x0*x1 - x2^2", "x0 + x1 + x2 - 2/7", "x1^3 - 4*x0*x2*x1"};
  for (auto* s : texts)
    for (auto* t : texts) {
      auto f = parse_poly<Rational>(s, Q), g = parse_poly<Rational>(t, Q);
      CHECK(reduce_mod(f + g, R) == reduce_mod(f, R) + reduce_mod(g, R));
      CHECK(reduce_mod(f * g, R) == reduce_mod(f, R) * reduce_mod(g, R));
    }
}

TEST_CASE("evaluation, substitution and derivatives agree") {
  Sampler s(11, 32003);
  auto R = make_ring_gf(3);
  for (int i = 0; i < 20; ++i) {
    auto f = s.form(R, 3), g = s.form(R, 2);
    std::vector<Fp> pt{s.element(), s.element(), s.element()};
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    // Euler: sum x_i df/dx_i = deg * f
    PolyP euler(R);
    for (int v = 0; v < 3; ++v) euler = euler + PolyP::variable(R, v) * f.derivative(v);
    CHECK(euler == f.scaled(Fp(3, 32003)));
    std::vector<PolyP> images{PolyP::constant(R, pt[0]), PolyP::constant(R, pt[1]), PolyP::constant(R, pt[2])};
    CHECK(f.substitute(images, R) == PolyP::constant(R, f.evaluate(pt)));
  }
}

TEST_CASE("subresultants match Sylvester determinants over QQ") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 4, n = 1 + trial % 3;
    auto a = random_q(rng, m), b = random_q(rng, std::min(n, m));
    auto s = subresultant_sequence(a, b);
    REQUIRE(static_cast<int>(s.size()) == uni::degree(b));
    for (int j = 0; j < uni::degree(b); ++j) CHECK(s[static_cast<std::size_t>(j)].get() == sylvester_sres(a, b, j));
    CHECK(resultant(a, b).get() == sylvester_sres(a, b, 0));
  }
}

TEST_CASE("subresultant gcd degree equals Euclidean gcd degree on 200 pairs") {
  Sampler s(17, 32003);
  int with_common = 0;
  for (int i = 0; i < 200; ++i) {
    // a shared factor of degree 0..3 makes the comparison non-trivial
    const int c = i % 4;
    auto common = random_form(s, c);
    if (i % 10 == 0) common = common * BinaryForm<Fp>(1, {Fp(1, 32003), Fp(0, 32003)});  // a root at [1:0]
    auto a = common * random_form(s, 1 + i % 3), b = common * random_form(s, 2 + i % 2);
    const int euclid = gcd_binary_forms<Fp>({a, b}).degree();
    CHECK(gcd_degree(a, b) == euclid);
    with_common += euclid > 0;
  }
  CHECK(with_common > 100);
}

TEST_CASE("Euclidean gcd over QQ") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto c = random_q(rng, 1 + i % 2);
    auto a = uni::mul(c, random_q(rng, 2)), b = uni::mul(c, random_q(rng, 3));
    auto g = uni::gcd(a, b);
    CHECK(uni::degree(g) >= uni::degree(c));
    CHECK(uni::rem(a, g).empty());
    CHECK(uni::rem(b, g).empty());
  }
}

TEST_CASE("roots of binary forms over GF(p)") {
  const std::uint32_t p = 32003;
  auto lin = [&](int a, int b) { return BinaryForm<Fp>(1, {Fp(b, p), Fp(a, p)}); };  // a*x0 + b*x1
  // (x0 - 2 x1)^2 (x0 + 5 x1) x1
  auto f = lin(1, -2) * lin(1, -2) * lin(1, 5) * lin(0, 1);
  auto roots = form_roots(f);
  int total = 0;
  for (auto& r : roots) {
    total += r.multiplicity;
    CHECK(f.evaluate(r.x0, r.x1).is_zero());
  }
  CHECK(total == 4);
  CHECK(roots.size() == 3);
  // x0^2 + x1^2 has no roots when p = 3 mod 4
  CHECK(form_roots(lin(1, 0) * lin(1, 0) + lin(0, 1) * lin(0, 1)).empty());
}

TEST_CASE("zero forms keep their declared degree") {
  BinaryForm<Fp> z(3, Fp(0, 32003));
  CHECK(z.is_zero());
  CHECK(z.degree() == 3);
  CHECK_THROWS_AS(gcd_binary_forms<Fp>({z}), DomainError);
}

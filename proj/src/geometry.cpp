#include "multisecant/geometry.hpp"

namespace msec {

namespace {

// Generators of X pulled back to the affine space u -> v0 + sum u_j v_j
// spanned by c+1 random points.
struct Slice {
  std::vector<VectorP> points;
  std::vector<PolyP> equations;

  VectorP ambient_point(const std::vector<Fp>& u) const {
    VectorP x = points[0];
    for (std::size_t j = 0; j < u.size(); ++j) x = x + points[j + 1] * u[j];
    return x;
  }
};

Slice random_slice(const Variety<Fp>& X, int c, Sampler& s, const RingPtr<Fp>& ring) {
  const int n = X.ambient();
  Slice out;
  for (int j = 0; j <= c; ++j) out.points.push_back(s.vector(n + 1));
  std::vector<PolyP> images;
  for (int i = 0; i <= n; ++i) {
    PolyP x = PolyP::constant(ring, out.points[0](i));
    for (int j = 1; j <= c; ++j) x = x + PolyP::variable(ring, j - 1).scaled(out.points[static_cast<std::size_t>(j)](i));
    images.push_back(std::move(x));
  }
  for (auto& g : X.generators()) out.equations.push_back(g.substitute(images, ring));
  return out;
}

// A solution of a zero-dimensional lex basis in shape position, if the
// basis has that shape and its eliminant has a root in the field.
std::optional<std::vector<Fp>> shape_solution(const GroebnerBasis<Fp>& gb, Sampler& s) {
  const int c = gb.ring->nvars;
  if (gb.is_unit() || static_cast<int>(gb.basis.size()) != c) return std::nullopt;
  const PolyP* eliminant = nullptr;
  for (auto& g : gb.basis) {
    const Monomial lm = g.leading_monomial();
    int var = -1;
    for (int i = 0; i < c; ++i)
      if (lm[i]) var = var == -1 ? i : -2;
    if (var < 0) return std::nullopt;
    if (var == c - 1)
      eliminant = &g;
    else if (lm[var] != 1)
      return std::nullopt;
  }
  if (!eliminant) return std::nullopt;
  UniPoly<Fp> h(static_cast<std::size_t>(eliminant->degree_in(c - 1) + 1), gb.ring->zero());
  for (auto& t : eliminant->terms()) h[t.mono[c - 1]] += t.coef;
  auto roots = roots_mod_p(h, s.next_seed());
  if (roots.empty()) return std::nullopt;
  std::vector<Fp> x(static_cast<std::size_t>(c), gb.ring->zero());
  x.back() = roots[static_cast<std::size_t>(s.engine()() % roots.size())];
  for (auto& g : gb.basis)
    if (&g != eliminant) {
      int var = 0;
      while (!g.leading_monomial()[var]) ++var;
      x[static_cast<std::size_t>(var)] = -g.evaluate(x);
    }
  return x;
}

}  // namespace

ProjectivePoint<Fp> random_point_on(const Variety<Fp>& X, std::uint64_t seed, bool smooth) {
  const std::uint32_t p = X.ring()->field.p;
  Sampler s(seed, p);
  const int n = X.ambient();
  for (int attempt = 0; attempt < 200; ++attempt) {
    VectorP x;
    if (auto& par = X.parametrization()) {
      std::vector<Fp> t;
      for (int i = 0; i < par->params; ++i) t.push_back(s.element());
      x.resize(n + 1);
      for (int i = 0; i <= n; ++i) x(i) = par->coords[static_cast<std::size_t>(i)].evaluate(t);
    } else {
      const int c = X.codimension();
      if (c > n) throw DomainError("the variety is empty");
      if (c == 0) {
        x = s.vector(n + 1);
      } else {
        auto ring = make_ring_gf(c, p, MonomialOrder::lex());
        Slice slice = random_slice(X, c, s, ring);
        auto u = shape_solution(buchberger(slice.equations, ring), s);
        if (!u) continue;
        x = slice.ambient_point(*u);
      }
    }
    if (std::all_of(x.data(), x.data() + x.size(), [](const Fp& v) { return v.is_zero(); })) continue;
    ProjectivePoint<Fp> P(x);
    if (!X.contains(P)) throw InvariantViolation("sampled point " + P.to_string() + " is not on the variety");
    if (smooth && !tangent_space(X, P).smooth) continue;
    return P;
  }
  throw DomainError("no point found on the variety within the retry budget");
}

long projective_degree(const Variety<Fp>& X, std::uint64_t seed) {
  const int c = X.codimension();
  if (c > X.ambient()) return 0;
  Sampler s(seed, X.ring()->field.p);
  auto ring = make_ring_gf(c, X.ring()->field.p);
  if (c == 0) return 1;
  Slice slice = random_slice(X, c, s, ring);
  return quotient_degree(Ideal<Fp>(ring, slice.equations));
}

Variety<Fp> reduce_mod(const Variety<Rational>& X, std::uint32_t p) {
  auto ring = make_ring_gf(X.ambient() + 1, p);
  std::vector<PolyP> gens;
  for (auto& g : X.generators()) gens.push_back(reduce_mod(g, ring));
  std::optional<Parametrization<Fp>> par;
  if (auto& q = X.parametrization()) {
    auto pring = make_ring_gf(q->params, p);
    par.emplace();
    par->params = q->params;
    for (auto& c : q->coords) par->coords.push_back(reduce_mod(c, pring));
  }
  return Variety<Fp>(X.ambient(), std::move(gens), std::move(par));
}

}  // namespace msec

#include "multisecant/binary_form.hpp"

#include <random>

namespace msec {

namespace {

UniPoly<Fp> powmod(UniPoly<Fp> base, std::uint64_t e, const UniPoly<Fp>& mod) {
  const Fp one = mod[0] * Fp(0) + Fp(1);
  UniPoly<Fp> r{one};
  base = uni::rem(base, mod);
  while (e) {
    if (e & 1) r = uni::rem(uni::mul(r, base), mod);
    e >>= 1;
    if (e) base = uni::rem(uni::mul(base, base), mod);
  }
  return r;
}

// f squarefree, monic, a product of distinct linear factors.
void split_linear(const UniPoly<Fp>& f, std::mt19937_64& rng, std::vector<Fp>& out) {
  int d = uni::degree(f);
  if (d <= 0) return;
  const std::uint32_t p = f[0].bound() ? f[0].modulus() : uni::lead(f).modulus();
  if (d == 1) {
    out.push_back(-f[0] / f[1]);
    return;
  }
  if (p == 2) {
    for (std::uint32_t x = 0; x < 2; ++x)
      if (uni::evaluate(f, Fp(x, 2)).is_zero()) out.push_back(Fp(x, 2));
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  while (true) {
    UniPoly<Fp> shift{Fp(dist(rng), p), Fp(1, p)};
    UniPoly<Fp> h = powmod(shift, (p - 1) / 2, f);
    h = uni::sub(h, UniPoly<Fp>{Fp(1, p)});
    UniPoly<Fp> g = uni::gcd(f, h);
    int dg = uni::degree(g);
    if (dg > 0 && dg < d) {
      split_linear(g, rng, out);
      split_linear(uni::divmod(f, g).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Fp> roots_mod_p(const UniPoly<Fp>& f_in, std::uint64_t seed) {
  UniPoly<Fp> f = uni::monic(f_in);
  int d = uni::degree(f);
  if (d < 0) throw DomainError("roots of the zero polynomial");
  if (d == 0) return {};
  const std::uint32_t p = uni::lead(f).modulus();
  // g = gcd(f, x^p - x) collects the distinct rational roots.
  UniPoly<Fp> xp = powmod(UniPoly<Fp>{Fp(0, p), Fp(1, p)}, p, f);
  UniPoly<Fp> g = uni::gcd(f, uni::sub(xp, UniPoly<Fp>{Fp(0, p), Fp(1, p)}));
  std::vector<Fp> out;
  std::mt19937_64 rng(seed);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return out;
}

std::vector<FormRoot<Fp>> form_roots(const BinaryForm<Fp>& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("roots of the zero form");
  std::vector<FormRoot<Fp>> out;
  auto u = f.dehomogenize();
  const Fp one = uni::lead(u) * Fp(0) + Fp(1);
  for (auto& r : roots_mod_p(u, seed)) out.push_back({r, one, root_multiplicity(u, r)});
  if (int inf = f.multiplicity_at_infinity(); inf > 0) out.push_back({one, one * Fp(0), inf});
  return out;
}

}  // namespace msec

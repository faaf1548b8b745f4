#include "multisecant/random.hpp"

#include <numeric>

namespace msec {

PolyP Sampler::form(const RingPtr<Fp>& ring, int degree, std::vector<int> vars) {
  if (vars.empty()) {
    vars.resize(static_cast<std::size_t>(ring->nvars));
    std::iota(vars.begin(), vars.end(), 0);
  }
  std::vector<Term<Fp>> terms;
  auto rec = [&](auto&& self, std::size_t k, int left, Monomial m) -> void {
    if (k + 1 == vars.size()) {
      m.set(vars[k], left);
      terms.push_back({m, element()});
      return;
    }
    for (int e = 0; e <= left; ++e) {
      Monomial mm = m;
      mm.set(vars[k], e);
      self(self, k + 1, left - e, mm);
    }
  };
  if (vars.empty()) return PolyP(ring);
  rec(rec, 0, degree, Monomial{});
  return PolyP::from_terms(ring, std::move(terms));
}

PolyP Sampler::affine_linear(const RingPtr<Fp>& ring, const std::vector<int>& vars) {
  PolyP l = PolyP::constant(ring, nonzero());
  for (int v : vars) l = l + PolyP::variable(ring, v).scaled(element());
  return l;
}

}  // namespace msec

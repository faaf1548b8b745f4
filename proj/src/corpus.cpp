#include "multisecant/corpus.hpp"

#include <functional>
#include <map>

namespace msec {

namespace {

using Builder = std::function<CorpusEntry(std::uint64_t, std::uint32_t)>;

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

// The line L0 = {x2 = ... = xn = 0}.
Line<Fp> base_line(int n, std::uint32_t p) {
  VectorP a = VectorP::Constant(n + 1, Fp(0, p)), b = a;
  a(0) = Fp(1, p);
  b(1) = Fp(1, p);
  return Line<Fp>(a, b);
}

// Random form of degree d in the listed variables that vanishes on L0.
PolyP form_through_base_line(const RingPtr<Fp>& R, int d, const std::vector<int>& vars, Sampler& s) {
  PolyP f(R);
  for (int v : vars)
    if (v >= 2) f = f + PolyP::variable(R, v) * s.form(R, d - 1, vars);
  return f;
}

PolyP det3(const std::vector<std::vector<PolyP>>& m, int c0, int c1, int c2) {
  auto at = [&](int r, int c) -> const PolyP& { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  return at(0, c0) * (at(1, c1) * at(2, c2) - at(1, c2) * at(2, c1)) -
         at(0, c1) * (at(1, c0) * at(2, c2) - at(1, c2) * at(2, c0)) +
         at(0, c2) * (at(1, c0) * at(2, c1) - at(1, c1) * at(2, c0));
}

// Adds scalar combinations of same-degree generators and a linear multiple.
std::vector<PolyP> augment(const std::vector<PolyP>& gens, Sampler& s) {
  std::vector<PolyP> out = gens;
  std::map<int, std::vector<const PolyP*>> by_degree;
  for (auto& g : gens) by_degree[g.total_degree()].push_back(&g);
  for (auto& [d, gs] : by_degree) {
    PolyP c(gens.front().ring());
    for (auto* g : gs) c = c + g->scaled(s.nonzero());
    out.push_back(std::move(c));
  }
  out.push_back(gens.front() * s.form(gens.front().ring(), 1));
  return out;
}

CorpusEntry make(std::string name, int n, std::vector<PolyP> gens, Sampler& s, Expectations e,
                 std::vector<Line<Fp>> lines = {}, std::optional<Parametrization<Fp>> par = std::nullopt) {
  CorpusEntry entry{std::move(name), 0, Variety<Fp>(n, gens, std::move(par)), {}, std::move(lines), std::move(e)};
  entry.augmented = augment(gens, s);
  return entry;
}

Expectations threefold(long degree, int sigma4, std::string row) {
  Expectations e;
  e.dimension = 3;
  e.degree = degree;
  e.fano_dimension = sigma4;
  e.secancy.push_back({4, sigma4, -1});
  e.row = std::move(row);
  return e;
}

CorpusEntry p3_linear(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{s.form(R, 1, range(2, 6)), s.form(R, 1, range(2, 6))};
  Expectations e = threefold(1, 4, "sigma4 = 4: a linear P3");
  e.secancy.push_back({2, 4, -1});
  e.in_quadric = true;
  e.in_cubic = true;
  return make("p3-linear", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry quadric_3fold(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{PolyP::variable(R, 5), form_through_base_line(R, 2, range(0, 5), s)};
  Expectations e = threefold(2, 3, "sigma4 = 3: a quadric threefold");
  e.secancy.push_back({2, 6, 6});
  e.in_quadric = true;
  return make("quadric-3fold", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry segre_p1p2(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  auto x = [&](int i) { return PolyP::variable(R, i); };
  std::vector<PolyP> gens{x(0) * x(4) - x(1) * x(3), x(0) * x(5) - x(2) * x(3), x(1) * x(5) - x(2) * x(4)};
  // [s0 t0 : s0 t1 : s0 t2 : s1 t0 : s1 t1 : s1 t2]
  auto T = make_ring_gf(5, p);
  Parametrization<Fp> par{5, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) par.coords.push_back(PolyP::variable(T, i) * PolyP::variable(T, 2 + j));
  Expectations e = threefold(3, 3, "sigma4 = 3: the Segre threefold P1 x P2");
  e.secancy.push_back({3, 3, -1});
  e.secancy.push_back({2, 6, 6});
  e.orders.push_back({3, 0});
  e.in_quadric = true;
  e.in_cubic = true;
  return make("segre-p1p2", 5, gens, s, e, {base_line(5, p)}, par);
}

CorpusEntry ci_2_2(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{form_through_base_line(R, 2, range(0, 6), s), form_through_base_line(R, 2, range(0, 6), s)};
  Expectations e = threefold(4, 2, "sigma4 = 2: complete intersection (2,2)");
  e.secancy.push_back({3, 2, -1});
  e.secancy.push_back({2, 6, 6});
  e.in_quadric = true;
  e.in_cubic = true;
  return make("ci-2-2", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry cubic_3fold(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{PolyP::variable(R, 5), form_through_base_line(R, 3, range(0, 5), s)};
  Expectations e = threefold(3, 2, "sigma4 = 2: a cubic threefold in P4");
  e.secancy.push_back({3, 6, 6});
  e.in_quadric = true;
  e.in_cubic = true;
  return make("cubic-3fold-p4", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry castelnuovo(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  const auto all = range(0, 6);
  // first row vanishes on L0, so L0 lies in the fibre of the quadric
  // fibration over [1:0]
  PolyP a = form_through_base_line(R, 1, all, s), b = form_through_base_line(R, 1, all, s),
        c = form_through_base_line(R, 2, all, s);
  PolyP d = s.form(R, 1), e1 = s.form(R, 1), f = s.form(R, 2);
  std::vector<PolyP> gens{a * e1 - b * d, a * f - c * d, b * f - c * e1};
  Expectations e = threefold(5, 2, "sigma4 = 2: Castelnuovo threefold");
  e.stretch = true;
  e.in_quadric = true;
  e.in_cubic = true;
  return make("castelnuovo", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry bordiga(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<std::vector<PolyP>> m(3);
  for (int c = 0; c < 4; ++c) m[0].push_back(s.form(R, 1, range(2, 6)));
  for (int r = 1; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(r)].push_back(s.form(R, 1));
  std::vector<PolyP> gens{det3(m, 1, 2, 3), det3(m, 0, 2, 3), det3(m, 0, 1, 3), det3(m, 0, 1, 2)};
  Expectations e = threefold(6, 2, "sigma4 = 2: Bordiga scroll");
  e.stretch = true;
  e.in_quadric = false;
  e.in_cubic = true;
  return make("bordiga", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry ci_2_3(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{form_through_base_line(R, 2, range(0, 6), s), form_through_base_line(R, 3, range(0, 6), s)};
  Expectations e = threefold(6, 1, "sigma4 = 1: complete intersection (2,3)");
  e.orders.push_back({4, 0});
  e.secancy.push_back({2, 6, 6});
  e.in_quadric = true;
  e.in_cubic = true;
  return make("ci-2-3", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry ci_3_3(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(6, p);
  std::vector<PolyP> gens{form_through_base_line(R, 3, range(0, 6), s), form_through_base_line(R, 3, range(0, 6), s)};
  Expectations e = threefold(9, 0, "sigma4 = 0: complete intersection (3,3)");
  e.orders.push_back({4, 0});
  e.secancy.push_back({2, 6, 6});
  e.in_quadric = false;
  e.in_cubic = true;
  return make("ci-3-3", 5, gens, s, e, {base_line(5, p)});
}

CorpusEntry twisted_cubic(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(4, p);
  auto x = [&](int i) { return PolyP::variable(R, i); };
  std::vector<PolyP> gens{x(0) * x(2) - x(1) * x(1), x(1) * x(3) - x(2) * x(2), x(0) * x(3) - x(1) * x(2)};
  auto T = make_ring_gf(2, p);
  auto u = PolyP::variable(T, 0), v = PolyP::variable(T, 1);
  Parametrization<Fp> par{2, {u.pow(3), u.pow(2) * v, u * v.pow(2), v.pow(3)}};
  Expectations e;
  e.dimension = 1;
  e.degree = 3;
  e.fano_dimension = -1;
  e.secancy.push_back({3, -1, -1});
  e.secancy.push_back({2, 2, 2});
  e.orders.push_back({2, 1});
  e.in_quadric = true;
  e.in_cubic = true;
  e.row = "curve without trisecant lines";
  return make("twisted-cubic-curve", 3, gens, s, e, {}, par);
}

CorpusEntry quadric_surface(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(4, p);
  std::vector<PolyP> gens{form_through_base_line(R, 2, range(0, 4), s)};
  Expectations e;
  e.dimension = 2;
  e.degree = 2;
  e.fano_dimension = 1;
  e.in_quadric = true;
  e.row = "two rulings of lines";
  return make("quadric-surface-p3", 3, gens, s, e, {base_line(3, p)});
}

CorpusEntry cubic_surface(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(4, p);
  std::vector<PolyP> gens{s.form(R, 3)};
  Expectations e;
  e.dimension = 2;
  e.degree = 3;
  e.fano_dimension = 0;
  e.fano_degree = 27;
  e.in_quadric = false;
  e.in_cubic = true;
  e.row = "27 lines";
  return make("cubic-surface-p3", 3, gens, s, e);
}

CorpusEntry quadric_cone(std::uint64_t seed, std::uint32_t p) {
  Sampler s(seed, p);
  auto R = make_ring_gf(5, p);
  std::vector<PolyP> gens{form_through_base_line(R, 2, range(0, 4), s)};
  Expectations e;
  e.dimension = 3;
  e.degree = 2;
  e.smooth = false;
  e.fano_dimension = 3;
  e.in_quadric = true;
  e.row = "cone with vertex [0:0:0:0:1]";
  return make("cone-over-quadric-surface", 4, gens, s, e, {base_line(4, p)});
}

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table{
      {"p3-linear", p3_linear},
      {"quadric-3fold", quadric_3fold},
      {"segre-p1p2", segre_p1p2},
      {"ci-2-2", ci_2_2},
      {"cubic-3fold-p4", cubic_3fold},
      {"castelnuovo", castelnuovo},
      {"bordiga", bordiga},
      {"ci-2-3", ci_2_3},
      {"ci-3-3", ci_3_3},
      {"twisted-cubic-curve", twisted_cubic},
      {"quadric-surface-p3", quadric_surface},
      {"cubic-surface-p3", cubic_surface},
      {"cone-over-quadric-surface", quadric_cone},
  };
  return table;
}

// Why the instance is unusable, or empty when it passes the screening.
std::string screen(const CorpusEntry& e, std::uint64_t seed) {
  const Variety<Fp>& X = e.variety;
  if (X.dimension() != e.expected.dimension)
    return "dimension " + std::to_string(X.dimension()) + " instead of " + std::to_string(e.expected.dimension);
  if (long d = projective_degree(X, seed); d != e.expected.degree)
    return "degree " + std::to_string(d) + " instead of " + std::to_string(e.expected.degree);
  for (auto& l : e.known_lines)
    if (secant_length(X, l) != kInfinite) return "known line is not on the variety";
  if (e.expected.smooth) {
    Sampler s(seed, X.ring()->field.p);
    for (int i = 0; i < 5; ++i)
      if (!tangent_space(X, random_point_on(X, s.next_seed())).smooth) return "singular at a random point";
  }
  return {};
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& [name, b] : builders()) v.push_back(name);
    return v;
  }();
  return names;
}

CorpusEntry build_entry(const std::string& name, std::uint64_t seed, std::uint32_t p) {
  for (auto& [n, make_one] : builders()) {
    if (n != name) continue;
    std::string why;
    for (std::uint64_t s = seed; s < seed + 8; ++s) {
      CorpusEntry e = make_one(s, p);
      e.seed = s;
      why = screen(e, s);
      if (why.empty()) return e;
    }
    throw InvariantViolation(name + ": no usable instance near seed " + std::to_string(seed) + " (" + why + ")");
  }
  throw DomainError("unknown corpus entry '" + name + "'");
}

long graded_part_dimension(const Ideal<Fp>& ideal, int degree) {
  const auto& gb = ideal.groebner();
  if (gb.is_unit()) throw DomainError("graded part of the unit ideal");
  const int n = ideal.ring()->nvars;
  long count = 0;
  auto rec = [&](auto&& self, int var, int left, Monomial m) -> void {
    if (var == n - 1) {
      m.set(var, left);
      for (auto& g : gb.basis)
        if (g.leading_monomial().divides(m)) {
          ++count;
          break;
        }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      Monomial mm = m;
      mm.set(var, e);
      self(self, var + 1, left - e, mm);
    }
  };
  rec(rec, 0, degree, Monomial{});
  return count;
}

namespace {

std::string show(int v) { return v < 0 ? "empty" : std::to_string(v); }

void add(CheckReport& r, std::string what, std::string expected, std::string measured) {
  const bool pass = expected == measured;
  r.pass = r.pass && pass;
  r.items.push_back({std::move(what), std::move(expected), std::move(measured), pass});
}

}  // namespace

CheckReport check_entry(const CorpusEntry& entry, const CheckOptions& opts) {
  CheckReport r;
  r.name = entry.name;
  r.seed = entry.seed;
  const Variety<Fp>& X = entry.variety;
  const Expectations& e = entry.expected;
  try {
    add(r, "dimension", std::to_string(e.dimension), std::to_string(X.dimension()));
    add(r, "degree", std::to_string(e.degree), std::to_string(projective_degree(X, entry.seed)));
    if (e.in_quadric) add(r, "contained in a quadric", *e.in_quadric ? "yes" : "no", graded_part_dimension(X.ideal(), 2) > 0 ? "yes" : "no");
    if (e.in_cubic) add(r, "contained in a cubic", *e.in_cubic ? "yes" : "no", graded_part_dimension(X.ideal(), 3) > 0 ? "yes" : "no");
    if (e.fano_dimension) {
      auto f = fano_dimension(X, opts.seeds, entry.known_lines);
      add(r, "fano dimension", show(*e.fano_dimension), show(f.dimension));
      add(r, "fano dimension agrees across seeds", "yes", f.seeds_agree ? "yes" : "no");
    }
    if (e.fano_degree) {
      std::string measured;
      for (auto seed : opts.seeds) {
        Sampler s(seed, X.ring()->field.p);
        auto I = fano_ideal(X, random_chart(X.ambient(), s));
        std::string d = std::to_string(quotient_degree(I));
        if (!measured.empty() && measured != d) measured += "/";
        if (measured.empty() || measured.find('/') != std::string::npos) measured += d;
      }
      add(r, "number of lines", std::to_string(*e.fano_degree), measured);
    }
    for (auto& se : e.secancy) {
      auto rep = sigma_k_dimension(X, se.k, {opts.seeds, entry.known_lines, false});
      const std::string k = std::to_string(se.k);
      if (se.sigma) add(r, "sigma_" + k, show(*se.sigma), show(rep.sigma));
      if (se.sigma_true) add(r, "true " + k + "-secant family", show(*se.sigma_true), show(rep.sigma_true));
      add(r, "sigma_" + k + " agrees across seeds", "yes", rep.seeds_agree ? "yes" : "no");
      if (X.ambient() == 5 && rep.sigma_true >= 0)
        add(r, "true " + k + "-secant family meets the lower bound " + std::to_string(8 - se.k), "yes",
            rep.sigma_true >= 8 - se.k ? "yes" : "no");
    }
    if (opts.orders)
      for (auto& oe : e.orders) {
        auto o = congruence_order(X, oe.k, opts.seeds);
        add(r, "q_" + std::to_string(oe.k), std::to_string(oe.q), o.defined ? std::to_string(o.q) : "undefined");
      }
  } catch (const BudgetExceeded& ex) {
    r.complete = false;
    r.pass = false;
    r.error = ex.what();
  }
  return r;
}

}  // namespace msec

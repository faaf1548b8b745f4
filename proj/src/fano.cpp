#include "multisecant/fano.hpp"

#include <chrono>

namespace msec {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint32_t prime_of(const Variety<Fp>& X) { return X.ring()->field.p; }

// A chart drawn from the sampler; when `must_contain` is given, redrawn
// until that line has coordinates in it.
GrassmannChart<Fp> chart_containing(int n, Sampler& s, const Line<Fp>* must_contain, std::optional<std::vector<Fp>>& coords) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    GrassmannChart<Fp> chart = random_chart(n, s);
    if (!must_contain) return chart;
    if ((coords = chart.coordinates_of(*must_contain))) return chart;
  }
  throw DomainError("no random chart contains the known line");
}

// Coefficients h_0..h_{k-1} of a monic s^k + ... dividing every form in
// `forms` (already known to have a nonzero gcd), built from affine roots.
std::optional<std::vector<Fp>> monic_divisor(const std::vector<BinaryForm<Fp>>& forms, int k, Sampler& s) {
  BinaryForm<Fp> g = gcd_binary_forms(forms);
  const Fp zero = Fp(0, s.prime()), one = Fp(1, s.prime());
  UniPoly<Fp> h;
  if (g.degree() == k && g.multiplicity_at_infinity() == 0) {
    h = uni::monic(g.dehomogenize());
  } else {
    if (g.degree() < k) return std::nullopt;
    h = UniPoly<Fp>{one};
    int got = 0;
    for (auto& r : form_roots(g, s.next_seed())) {
      if (r.x1.is_zero()) continue;
      const Fp root = r.x0 / r.x1;
      for (int m = 0; m < r.multiplicity && got < k; ++m, ++got) h = uni::mul(h, UniPoly<Fp>{-root, one});
    }
    if (got < k) return std::nullopt;
  }
  std::vector<Fp> out(static_cast<std::size_t>(k), zero);
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)];
  return out;
}

// A zero of the true secancy ideal: a line of length >= k not on X that
// lies in the chart, found among random chords and random lines of the
// linear span of X.
std::optional<std::vector<Fp>> true_witness(const Variety<Fp>& X, const GrassmannChart<Fp>& chart,
                                            const SecancySystem& sys, Sampler& s) {
  const int n = X.ambient();
  std::vector<Line<Fp>> candidates;
  for (int t = 0; t < 3; ++t) {
    try {
      auto P = random_point_on(X, s.next_seed()), Q = random_point_on(X, s.next_seed());
      if (!(P == Q)) candidates.push_back(Line<Fp>::through(P, Q));
    } catch (const DomainError&) {
    }
  }
  auto lin = X.linear_generators();
  if (!lin.empty()) {
    MatrixP m = zero_matrix(static_cast<Eigen::Index>(lin.size()), n + 1, X.ring()->zero());
    for (std::size_t r = 0; r < lin.size(); ++r)
      for (int i = 0; i <= n; ++i) m(static_cast<Eigen::Index>(r), i) = lin[r].coefficient(Monomial::variable(i));
    MatrixP span = kernel(m, X.ring()->zero());
    if (span.cols() >= 2)
      for (int t = 0; t < 3; ++t) {
        VectorP a = span * s.vector(span.cols()), b = span * s.vector(span.cols());
        try {
          candidates.emplace_back(a, b);
        } catch (const DomainError&) {
        }
      }
  }
  for (auto& line : candidates) {
    auto c = chart.coordinates_of(line);
    if (!c) continue;
    // forms along the chart's own parametrization s*row0 + t*row1
    const auto [a, b] = chart.rows_at(*c);
    std::vector<BinaryForm<Fp>> high;
    bool ok = true;
    for (auto& g : X.generators()) {
      BinaryForm<Fp> f = restrict_along(g, a, b);
      if (g.total_degree() < sys.k) {
        ok = ok && f.is_zero();
      } else if (!f.is_zero()) {
        high.push_back(f);
      }
    }
    if (!ok || high.empty()) continue;
    auto h = monic_divisor(high, sys.k, s);
    if (!h) continue;
    const Fp cert = sys.certificate.evaluate(*c);
    if (cert.is_zero()) continue;
    std::vector<Fp> w = *c;
    w.insert(w.end(), h->begin(), h->end());
    w.push_back(cert.inverse());
    return w;
  }
  return std::nullopt;
}

}  // namespace

TangentConeForms tangent_cone_forms(const Variety<Fp>& V, const ProjectivePoint<Fp>& P) {
  if (V.generators().size() != 1) throw DomainError("tangent cone forms need a hypersurface given by one equation");
  const PolyP& f = V.generators().front();
  const int n = V.ambient();
  const std::uint32_t p = prime_of(V);
  const Fp zero = Fp(0, p);
  auto ts = tangent_space(V, P);
  if (ts.rank == 0) throw DomainError("point " + P.to_string() + " is singular on the hypersurface");
  MatrixP grad = ts.jacobian.topRows(1);

  TangentConeForms out;
  out.point = P;
  out.degree = f.total_degree();
  out.frame = zero_matrix(n + 1, n + 1, zero);
  out.frame.col(0) = P.coords();
  MatrixP ker = kernel(grad, zero);
  int filled = 1;
  for (Eigen::Index c = 0; c < ker.cols() && filled < n; ++c) {
    MatrixP trial = out.frame.leftCols(filled + 1);
    trial.col(filled) = ker.col(c);
    if (rank(trial) == filled + 1) {
      out.frame.col(filled) = ker.col(c);
      ++filled;
    }
  }
  if (filled != n) throw InvariantViolation("tangent hyperplane basis is incomplete");
  Eigen::Index i0 = 0;
  while (grad(0, i0).is_zero()) ++i0;
  out.frame(i0, n) = grad(0, i0).inverse();

  auto Y = make_ring_gf(n, p);
  std::vector<PolyP> images;
  for (int i = 0; i <= n; ++i) {
    PolyP x = PolyP::constant(Y, out.frame(i, 0));
    for (int j = 1; j <= n; ++j) x = x + PolyP::variable(Y, j - 1).scaled(out.frame(i, j));
    images.push_back(std::move(x));
  }
  const PolyP G = f.substitute(images, Y);
  if (!G.homogeneous_part(0).is_zero()) throw InvariantViolation("expansion has a constant term at a point of V");
  for (int d = 1; d <= out.degree; ++d) out.parts.push_back(G.homogeneous_part(d));
  if (out.parts.front() != PolyP::variable(Y, n - 1)) throw InvariantViolation("linear part is not the last coordinate");

  auto Y0 = make_ring_gf(n - 1, p);
  for (int d = 2; d <= out.degree; ++d) {
    std::vector<Term<Fp>> kept;
    for (auto& t : out.parts[static_cast<std::size_t>(d - 1)].terms())
      if (!t.mono[n - 1]) kept.push_back(t);
    out.forms.push_back(PolyP::from_terms(Y, std::move(kept)).in_ring(Y0));
  }
  return out;
}

Ideal<Fp> lines_through_point(const Variety<Fp>& V, const ProjectivePoint<Fp>& P) {
  auto tc = tangent_cone_forms(V, P);
  return Ideal<Fp>(make_ring_gf(V.ambient() - 1, prime_of(V)), tc.forms);
}

PencilCount projective_count(const Ideal<Fp>& I, std::uint64_t seed) {
  PencilCount out;
  out.dimension = ideal_dimension(I) - 1;
  if (out.dimension < 0) {
    out.dimension = -1;
    return out;
  }
  if (out.dimension == 0) {
    Sampler s(seed, I.ring()->field.p);
    std::vector<int> vars(static_cast<std::size_t>(I.ring()->nvars));
    std::iota(vars.begin(), vars.end(), 0);
    PolyP hyper = s.affine_linear(I.ring(), vars);
    hyper = hyper - PolyP::constant(I.ring(), hyper.coefficient(Monomial{})) - PolyP::constant(I.ring(), 1);
    out.degree = quotient_degree(I.with({hyper}));
  }
  return out;
}

Ideal<Fp> fano_ideal(const Variety<Fp>& X, const GrassmannChart<Fp>& chart) {
  auto C = make_ring_gf(chart.chart_vars(), prime_of(X));
  auto [r0, r1] = chart.generic_rows(C);
  std::vector<PolyP> eqs;
  for (auto& g : X.generators())
    for (auto& c : restriction_coefficients(g, r0, r1, C))
      if (!c.is_zero()) eqs.push_back(std::move(c));
  return Ideal<Fp>(C, std::move(eqs));
}

SlicedDimension sliced_dimension(const Ideal<Fp>& ideal, Sampler& s, const std::optional<std::vector<Fp>>& witness) {
  const RingPtr<Fp>& ring = ideal.ring();
  const int N = ring->nvars;
  const auto& gens = ideal.generators();
  SlicedDimension out;
  int lower = -1;
  if (witness) {
    if (static_cast<int>(witness->size()) != N) throw DomainError("witness has wrong arity");
    for (auto& g : gens)
      if (!g.evaluate(*witness).is_zero()) throw InvariantViolation("witness is not a zero of the ideal");
    out.witnessed = true;
    lower = std::max(0, N - static_cast<int>(gens.size()));
  }
  if (lower >= N) {
    out.dimension = N;
    return out;
  }
  const int m = lower + 1;
  out.slices = m;
  // Restrict to a random affine subspace of dimension N - m: the last m
  // variables become random affine functions of the others.
  auto sub = make_ring_gf(N - m, s.prime());
  std::vector<PolyP> images;
  std::vector<int> free_vars(static_cast<std::size_t>(N - m));
  std::iota(free_vars.begin(), free_vars.end(), 0);
  for (int v = 0; v < N; ++v)
    images.push_back(v < N - m ? PolyP::variable(sub, v) : s.affine_linear(sub, free_vars));
  std::vector<PolyP> eqs;
  for (auto& g : gens) eqs.push_back(g.substitute(images, sub));
  const std::uint64_t before = pair_counter();
  auto gb = buchberger(eqs, sub);
  out.pairs = pair_counter() - before;
  out.dimension = gb.is_unit() ? m - 1 : m + dimension_from_basis(gb);
  return out;
}

GrassmannChart<Fp> random_chart(int n, Sampler& s) { return GrassmannChart<Fp>(s.invertible(n + 1)); }

FanoReport fano_dimension(const Variety<Fp>& X, const std::vector<std::uint64_t>& seeds,
                          const std::vector<Line<Fp>>& known_lines) {
  if (seeds.empty()) throw DomainError("at least one seed is required");
  FanoReport report;
  for (auto seed : seeds) {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler s(seed, prime_of(X));
    std::optional<std::vector<Fp>> witness;
    auto chart = chart_containing(X.ambient(), s, known_lines.empty() ? nullptr : &known_lines.front(), witness);
    ChartRun run;
    run.seed = seed;
    run.detail = sliced_dimension(fano_ideal(X, chart), s, witness);
    run.dimension = run.detail.dimension;
    run.seconds = seconds_since(t0);
    report.charts.push_back(run);
  }
  for (auto& c : report.charts) {
    report.dimension = std::max(report.dimension, c.dimension);
    report.seeds_agree = report.seeds_agree && c.dimension == report.charts.front().dimension;
  }
  return report;
}

Ideal<Fp> SecancySystem::true_ideal() const {
  std::vector<PolyP> eqs = equations;
  eqs.push_back(PolyP::variable(ring, y_var()) * certificate.in_ring(ring) - PolyP::constant(ring, 1));
  return Ideal<Fp>(ring, std::move(eqs));
}

SecancySystem secancy_system(const Variety<Fp>& X, int k, const std::vector<PolyP>& row0,
                             const std::vector<PolyP>& row1, const RingPtr<Fp>& base, Sampler& s) {
  if (k < 1) throw DomainError("secancy order must be positive");
  SecancySystem sys;
  sys.k = k;
  sys.base_vars = base->nvars;
  const auto& gens = X.generators();
  sys.h_vars = std::any_of(gens.begin(), gens.end(), [k](const PolyP& g) { return g.total_degree() >= k; }) ? k : 0;
  sys.ring = make_ring_gf(sys.base_vars + sys.h_vars + 1, s.prime());
  sys.certificate = PolyP(base);
  for (auto& g : gens) {
    auto cs = restriction_coefficients(g, row0, row1, base);
    for (auto& c : cs) sys.certificate = sys.certificate + c.scaled(s.element());
    const int d = g.total_degree();
    std::vector<PolyP> r;
    for (auto& c : cs) r.push_back(c.in_ring(sys.ring));
    if (d >= k) {
      // remainder modulo s^k + sum h_i s^i, working at t = 1
      for (int j = d; j >= k; --j) {
        const PolyP q = r[static_cast<std::size_t>(j)];
        if (q.is_zero()) continue;
        for (int i = 0; i < k; ++i)
          r[static_cast<std::size_t>(j - k + i)] =
              r[static_cast<std::size_t>(j - k + i)] - q * PolyP::variable(sys.ring, sys.base_vars + i);
        r[static_cast<std::size_t>(j)] = PolyP(sys.ring);
      }
      r.resize(static_cast<std::size_t>(k));
    }
    for (auto& e : r)
      if (!e.is_zero()) sys.equations.push_back(std::move(e));
  }
  return sys;
}

Ideal<Fp> secancy_ideal(const Variety<Fp>& X, int k, const GrassmannChart<Fp>& chart, std::uint64_t seed) {
  Sampler s(seed, prime_of(X));
  auto C = make_ring_gf(chart.chart_vars(), prime_of(X));
  auto [r0, r1] = chart.generic_rows(C);
  auto sys = secancy_system(X, k, r0, r1, C, s);
  // the y variable is unused here; drop it
  auto R = make_ring_gf(sys.base_vars + sys.h_vars, prime_of(X));
  std::vector<PolyP> eqs;
  for (auto& e : sys.equations) eqs.push_back(e.in_ring(R));
  return Ideal<Fp>(R, std::move(eqs));
}

SecancyReport sigma_k_dimension(const Variety<Fp>& X, int k, const SecancyOptions& opts) {
  if (opts.seeds.empty()) throw DomainError("at least one seed is required");
  SecancyReport report;
  report.k = k;
  report.seeds = opts.seeds;
  for (auto seed : opts.seeds) {
    const auto t0 = std::chrono::steady_clock::now();
    Sampler s(seed, prime_of(X));
    SecancyRun run;
    run.seed = seed;
    std::optional<std::vector<Fp>> line_witness;
    auto chart = chart_containing(X.ambient(), s, opts.known_lines.empty() ? nullptr : &opts.known_lines.front(), line_witness);
    run.fano_detail = sliced_dimension(fano_ideal(X, chart), s, line_witness);
    run.fano = run.fano_detail.dimension;

    auto C = make_ring_gf(chart.chart_vars(), prime_of(X));
    auto [r0, r1] = chart.generic_rows(C);
    auto sys = secancy_system(X, k, r0, r1, C, s);
    if (sys.h_vars == 0) {
      // every restriction is forced to vanish, so only lines on X remain
      run.sigma_true = -1;
      run.true_note = "every generator has degree below k";
    } else {
      auto w = true_witness(X, chart, sys, s);
      run.true_detail = sliced_dimension(sys.true_ideal(), s, w);
      run.sigma_true = run.true_detail.dimension;
    }
    run.sigma = std::max(run.sigma_true, run.fano);
    run.seconds = seconds_since(t0);
    report.runs.push_back(run);
  }
  const SecancyRun& first = report.runs.front();
  for (auto& r : report.runs) {
    report.sigma = std::max(report.sigma, r.sigma);
    report.sigma_true = std::max(report.sigma_true, r.sigma_true);
    report.fano_dimension = std::max(report.fano_dimension, r.fano);
    report.seeds_agree = report.seeds_agree && r.sigma == first.sigma && r.sigma_true == first.sigma_true && r.fano == first.fano;
  }
  report.contains_lines_in_x = report.fano_dimension >= 0;
  if (opts.order) report.order = congruence_order(X, k, opts.seeds);
  return report;
}

long congruence_order_at(const Variety<Fp>& X, int k, const ProjectivePoint<Fp>& P, std::uint64_t seed, long* unsaturated) {
  if (X.contains(P)) throw DomainError("the base point lies on the variety");
  const int n = X.ambient();
  const std::uint32_t p = prime_of(X);
  Sampler s(seed, p);
  MatrixP frame;
  do {
    frame = s.matrix(n + 1, n + 1);
    frame.col(0) = P.coords();
  } while (rank(frame) != n + 1);
  // lines through P: P and e1 + sum b_j e_{j+2}
  auto B = make_ring_gf(n - 1, p);
  std::vector<PolyP> r0, r1;
  for (int i = 0; i <= n; ++i) {
    r0.push_back(PolyP::constant(B, frame(i, 0)));
    PolyP v = PolyP::constant(B, frame(i, 1));
    for (int j = 0; j < n - 1; ++j) v = v + PolyP::variable(B, j).scaled(frame(i, j + 2));
    r1.push_back(std::move(v));
  }
  auto sys = secancy_system(X, k, r0, r1, B, s);
  auto count = [](const Ideal<Fp>& I) -> long {
    const auto& gb = I.groebner();
    if (gb.is_unit()) return 0;
    if (dimension_from_basis(gb) > 0) return -1;
    return standard_monomial_count(gb);
  };
  if (unsaturated) *unsaturated = count(sys.ideal());
  const long q = count(sys.true_ideal());
  if (q < 0) throw DomainError("the k-secant lines through a general point form a positive-dimensional family");
  return q;
}

OrderReport congruence_order(const Variety<Fp>& X, int k, const std::vector<std::uint64_t>& seeds) {
  OrderReport out;
  out.defined = true;
  std::vector<long> values;
  for (auto seed : seeds) {
    Sampler s(seed ^ 0x5bd1e995u, prime_of(X));
    ProjectivePoint<Fp> P;
    do {
      P = ProjectivePoint<Fp>(s.vector(X.ambient() + 1));
    } while (X.contains(P));
    long unsat = -1;
    try {
      const long q = congruence_order_at(X, k, P, s.next_seed(), &unsat);
      out.per_point.push_back(q);
      values.push_back(q);
      out.saturation_changed = out.saturation_changed || unsat != q;
    } catch (const DomainError& e) {
      out.per_point.push_back(-1);
      out.defined = false;
      out.note = e.what();
    }
    out.unsaturated.push_back(unsat);
  }
  if (out.defined) {
    std::sort(values.begin(), values.end());
    out.q = static_cast<int>(values[values.size() / 2]);
    if (out.q == 0) out.note = "no true k-secant line through a general point";
  }
  return out;
}

}  // namespace msec

// Reduced Gröbner bases by Buchberger's algorithm and the ideal queries
// built on them: membership, Krull dimension, elimination, saturation and
// the length of zero-dimensional quotients.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

#include "multisecant/errors.hpp"
#include "multisecant/polynomial.hpp"

namespace msec {

struct GbOptions {
  // Maximum number of S-pairs reduced before giving up.
  std::uint64_t max_pairs = 0;  // 0: use default_pair_budget()
};

// Process-wide default pair budget (the CLI sets it from --budget).
std::uint64_t default_pair_budget();
void set_default_pair_budget(std::uint64_t pairs);

struct GbStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
};

// Thread-local counter of pairs reduced by every Buchberger run, used for
// the budget counters in reports.
std::uint64_t& pair_counter();

template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;  // carries the monomial order
  std::vector<MultiPoly<F>> basis;
  GbStats stats;

  const MonomialOrder& order() const { return ring->order; }
  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

namespace detail {

template <class F>
struct Reducer {
  const MultiPoly<F>* poly;
  Monomial lm;
  std::uint32_t mask;
};

// Open-addressing map from monomials to coefficients, with a max-heap of
// entry indices.  Entries are never erased; a popped entry is simply done.
template <class F>
class Accumulator {
public:
  explicit Accumulator(const Ring<F>& ring, std::size_t hint) : ring_(ring) {
    std::size_t cap = 64;
    while (cap < 4 * hint) cap <<= 1;
    table_.assign(cap, -1);
    entries_.reserve(hint * 2);
  }

  void add(const Monomial& m, const F& c) {
    std::size_t mask = table_.size() - 1;
    std::size_t h = MonomialHash{}(m) & mask;
    while (true) {
      int idx = table_[h];
      if (idx < 0) break;
      if (entries_[static_cast<std::size_t>(idx)].mono == m) {
        entries_[static_cast<std::size_t>(idx)].coef += c;
        return;
      }
      h = (h + 1) & mask;
    }
    int idx = static_cast<int>(entries_.size());
    entries_.push_back({m, c});
    table_[h] = idx;
    heap_.push_back(idx);
    std::push_heap(heap_.begin(), heap_.end(), Cmp{this});
    if (entries_.size() * 2 > table_.size()) grow();
  }

  bool empty() const { return heap_.empty(); }

  // Removes and returns the largest pending term.
  const Term<F>& pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Cmp{this});
    int idx = heap_.back();
    heap_.pop_back();
    return entries_[static_cast<std::size_t>(idx)];
  }

private:
  struct Cmp {
    const Accumulator* self;
    bool operator()(int a, int b) const {
      return self->ring_.compare(self->entries_[static_cast<std::size_t>(a)].mono,
                                 self->entries_[static_cast<std::size_t>(b)].mono) < 0;
    }
  };

  void grow() {
    std::vector<int> fresh(table_.size() * 2, -1);
    std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      std::size_t h = MonomialHash{}(entries_[i].mono) & mask;
      while (fresh[h] >= 0) h = (h + 1) & mask;
      fresh[h] = static_cast<int>(i);
    }
    table_ = std::move(fresh);
  }

  const Ring<F>& ring_;
  std::vector<Term<F>> entries_;
  std::vector<int> table_;
  std::vector<int> heap_;
};

// Full reduction of f modulo monic reducers.  Every monomial enters the
// accumulator once: terms added by a reduction step are strictly smaller
// than the term being eliminated.
template <class F>
MultiPoly<F> reduce(const MultiPoly<F>& f, const std::vector<Reducer<F>>& reducers, bool tail = true) {
  if (f.is_zero()) return f;
  const RingPtr<F>& ring = f.ring();
  Accumulator<F> acc(*ring, f.size() * 8);
  for (auto& t : f.terms()) acc.add(t.mono, t.coef);
  std::vector<Term<F>> out;
  bool reducing = true;
  while (!acc.empty()) {
    const Term<F> top = acc.pop();
    if (is_zero(top.coef)) continue;
    const Reducer<F>* red = nullptr;
    if (reducing) {
      const std::uint32_t mm = top.mono.support_mask();
      for (auto& g : reducers)
        if ((g.mask & ~mm) == 0 && g.lm.divides(top.mono)) {
          red = &g;
          break;
        }
    }
    if (!red) {
      out.push_back(top);
      if (!tail) reducing = false;
      continue;
    }
    const Monomial shift = top.mono / red->lm;
    const F c = -top.coef;
    const auto& gt = red->poly->terms();
    for (std::size_t k = 1; k < gt.size(); ++k) acc.add(gt[k].mono * shift, c * gt[k].coef);
  }
  MultiPoly<F> r(ring);
  r.mutable_terms() = std::move(out);
  return r;
}

template <class F>
std::vector<Reducer<F>> make_reducers(const std::vector<MultiPoly<F>>& polys) {
  std::vector<Reducer<F>> rs;
  rs.reserve(polys.size());
  for (auto& p : polys) rs.push_back({&p, p.leading_monomial(), p.leading_monomial().support_mask()});
  return rs;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

}  // namespace detail

// Reduced Gröbner basis of the generators in the order of `ring` (the
// generators are moved into that ring).  Deterministic; throws
// BudgetExceeded when more than the allowed number of pairs are reduced.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<MultiPoly<F>>& gens, const RingPtr<F>& ring, GbOptions opts = {}) {
  const std::uint64_t budget = opts.max_pairs ? opts.max_pairs : default_pair_budget();
  const Ring<F>& R = *ring;
  GroebnerBasis<F> out;
  out.ring = ring;

  std::vector<MultiPoly<F>> input;
  for (auto& g : gens) {
    if (g.ring()->nvars != ring->nvars || !(g.ring()->field == ring->field)) throw DomainError("ring mismatch");
    if (!g.is_zero()) input.push_back(g.in_ring(ring).monic());
  }
  if (input.empty()) return out;
  std::sort(input.begin(), input.end(), [&R](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  std::vector<std::unique_ptr<MultiPoly<F>>> polys;
  std::vector<bool> active;
  std::vector<detail::Reducer<F>> reducers;  // active elements only
  std::vector<detail::Pair> pairs;           // sorted so that the smallest lcm is last
  bool unit = false;

  auto rebuild_reducers = [&] {
    reducers.clear();
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) reducers.push_back({polys[k].get(), polys[k]->leading_monomial(), polys[k]->leading_monomial().support_mask()});
  };

  // normal strategy: smallest lcm first
  auto pair_greater = [&R](const detail::Pair& a, const detail::Pair& b) {
    int c = R.compare(a.lcm, b.lcm);
    if (c) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };

  // Gebauer–Möller update for a new element h.
  auto insert = [&](MultiPoly<F> h) {
    if (h.is_constant()) {
      unit = true;
      return;
    }
    h = h.monic();
    const int hi = static_cast<int>(polys.size());
    const Monomial lh = h.leading_monomial();
    polys.push_back(std::make_unique<MultiPoly<F>>(std::move(h)));
    active.push_back(true);

    // chain criterion on existing pairs
    std::vector<detail::Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm)) {
        Monomial li = lcm(polys[static_cast<std::size_t>(p.i)]->leading_monomial(), lh);
        Monomial lj = lcm(polys[static_cast<std::size_t>(p.j)]->leading_monomial(), lh);
        if (li != p.lcm && lj != p.lcm) {
          ++out.stats.pairs_skipped;
          continue;
        }
      }
      kept.push_back(p);
    }

    // new pairs (k, h) with criteria M and F, then the product criterion
    struct Cand {
      int k;
      Monomial l;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    for (int k = 0; k < hi; ++k) {
      if (!active[static_cast<std::size_t>(k)]) continue;
      const Monomial& lk = polys[static_cast<std::size_t>(k)]->leading_monomial();
      cands.push_back({k, lcm(lk, lh), coprime(lk, lh)});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || cands[b].dead) continue;
        if (cands[b].l.divides(cands[a].l)) {
          if (cands[b].l != cands[a].l) {
            cands[a].dead = true;  // criterion M
            break;
          }
        }
      }
    }
    // criterion F: one representative per lcm, none if a coprime pair shares it
    std::vector<detail::Pair> fresh;
    std::vector<bool> taken(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].dead || taken[a]) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (!cands[b].dead && !taken[b] && cands[b].l == cands[a].l) {
          taken[b] = true;
          any_coprime = any_coprime || cands[b].coprime;
          ++out.stats.pairs_skipped;
        }
      if (any_coprime) {
        ++out.stats.pairs_skipped;
        continue;
      }
      fresh.push_back({cands[a].k, hi, cands[a].l});
    }

    for (int k = 0; k < hi; ++k)
      if (active[static_cast<std::size_t>(k)] && lh.divides(polys[static_cast<std::size_t>(k)]->leading_monomial()))
        active[static_cast<std::size_t>(k)] = false;

    std::sort(fresh.begin(), fresh.end(), pair_greater);
    pairs.clear();
    std::merge(kept.begin(), kept.end(), fresh.begin(), fresh.end(), std::back_inserter(pairs), pair_greater);
    rebuild_reducers();
  };

  for (auto& g : input) {
    MultiPoly<F> h = detail::reduce(g, reducers);
    if (!h.is_zero()) insert(std::move(h));
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    detail::Pair p = pairs.back();
    pairs.pop_back();
    if (out.stats.pairs_reduced >= budget)
      throw BudgetExceeded("Groebner pair budget of " + std::to_string(budget) + " exhausted");
    ++out.stats.pairs_reduced;
    ++pair_counter();
    const MultiPoly<F>& gi = *polys[static_cast<std::size_t>(p.i)];
    const MultiPoly<F>& gj = *polys[static_cast<std::size_t>(p.j)];
    MultiPoly<F> s = gi.times_monomial(p.lcm / gi.leading_monomial(), R.one()) -
                     gj.times_monomial(p.lcm / gj.leading_monomial(), R.one());
    MultiPoly<F> h = detail::reduce(s, reducers);
    if (h.is_zero()) {
      ++out.stats.zero_reductions;
      continue;
    }
    insert(std::move(h));
  }

  if (unit) {
    out.basis = {MultiPoly<F>::constant(ring, 1)};
    return out;
  }

  // minimal basis, then interreduce
  std::vector<MultiPoly<F>> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(*polys[k]);
  std::sort(minimal.begin(), minimal.end(), [&R](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<MultiPoly<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<MultiPoly<F>> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    auto rs = detail::make_reducers(others);
    // the leading term stays: no other leading monomial divides it
    MultiPoly<F> tail = minimal[k] - MultiPoly<F>::monomial(ring, minimal[k].leading_monomial(), minimal[k].leading_coefficient());
    MultiPoly<F> t = detail::reduce(tail, rs);
    reduced.push_back(MultiPoly<F>::monomial(ring, minimal[k].leading_monomial(), minimal[k].leading_coefficient()) + t);
  }
  out.basis = std::move(reduced);
  return out;
}

// Remainder of f modulo the basis; zero iff f lies in the ideal.
template <class F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const GroebnerBasis<F>& gb) {
  if (f.ring()->nvars != gb.ring->nvars || !(f.ring()->field == gb.ring->field)) throw DomainError("ring mismatch");
  return detail::reduce(f.in_ring(gb.ring), detail::make_reducers(gb.basis));
}

template <class F>
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<MultiPoly<F>> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (g.ring()->nvars != ring_->nvars || !(g.ring()->field == ring_->field))
        throw DomainError("generator from a different ring");
      if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
    }
    cache_ = std::make_shared<Cache>();
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<MultiPoly<F>>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  // Reduced basis for the ring's own order; computed once.
  const GroebnerBasis<F>& groebner(GbOptions opts = {}) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->gb) cache_->gb = std::make_shared<const GroebnerBasis<F>>(buchberger(gens_, ring_, opts));
    return *cache_->gb;
  }

  Ideal with(std::vector<MultiPoly<F>> more) const {
    std::vector<MultiPoly<F>> all = gens_;
    for (auto& g : more) all.push_back(std::move(g));
    return Ideal(ring_, std::move(all));
  }

private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GroebnerBasis<F>> gb;
  };
  RingPtr<F> ring_;
  std::vector<MultiPoly<F>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Krull dimension from the leading monomials of a Gröbner basis: the size
// of a largest variable set S such that no leading monomial lies in k[S].
// -1 for the unit ideal.
template <class F>
int dimension_from_basis(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return -1;
  const int n = gb.ring->nvars;
  std::vector<std::uint32_t> masks;
  for (auto& g : gb.basis) masks.push_back(g.leading_monomial().support_mask());
  int best = 0;
  std::uint32_t set = 0;
  auto independent = [&](std::uint32_t s) {
    for (auto m : masks)
      if ((m & ~s) == 0) return false;
    return true;
  };
  // depth-first over variables, pruned by the best size found so far
  auto dfs = [&](auto&& self, int var, int size) -> void {
    if (size + (n - var) <= best) return;
    if (var == n) {
      best = std::max(best, size);
      return;
    }
    std::uint32_t with = set | (1u << var);
    if (independent(with)) {
      set = with;
      self(self, var + 1, size + 1);
      set &= ~(1u << var);
    }
    self(self, var + 1, size);
  };
  dfs(dfs, 0, 0);
  return best;
}

template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring<F>(ring->nvars, ring->field, order);
}

// Krull dimension of k[x]/I (degrevlex basis); -1 for the unit ideal.
template <class F>
int ideal_dimension(const Ideal<F>& ideal, GbOptions opts = {}) {
  if (ideal.empty()) return ideal.ring()->nvars;
  if (ideal.ring()->order == MonomialOrder::degrevlex()) return dimension_from_basis(ideal.groebner(opts));
  auto ring = with_order(ideal.ring(), MonomialOrder::degrevlex());
  return dimension_from_basis(buchberger(ideal.generators(), ring, opts));
}

// Number of standard monomials of a zero-dimensional basis, or -1 when
// the quotient is infinite-dimensional.
template <class F>
long standard_monomial_count(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return 0;
  const int n = gb.ring->nvars;
  std::vector<Monomial> lms;
  for (auto& g : gb.basis) lms.push_back(g.leading_monomial());
  std::vector<int> bound(static_cast<std::size_t>(n), -1);
  for (auto& m : lms) {
    int vars = 0, v = -1;
    for (int i = 0; i < n; ++i)
      if (m[i]) {
        ++vars;
        v = i;
      }
    if (vars == 1 && (bound[static_cast<std::size_t>(v)] < 0 || m[v] < bound[static_cast<std::size_t>(v)]))
      bound[static_cast<std::size_t>(v)] = m[v];
  }
  for (int b : bound)
    if (b < 0) return -1;
  long count = 0;
  Monomial cur;
  auto standard = [&](const Monomial& m) {
    for (auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  // standard monomials form an order ideal: extend only standard ones
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[static_cast<std::size_t>(var)]; ++e) {
      cur.set(var, e);
      if (!standard(cur)) break;
      self(self, var + 1);
    }
    cur.set(var, 0);
  };
  rec(rec, 0);
  return count;
}

// dim_k k[x]/I for a zero-dimensional (or unit) ideal.
template <class F>
long quotient_degree(const Ideal<F>& ideal, GbOptions opts = {}) {
  const GroebnerBasis<F>* gb;
  GroebnerBasis<F> local;
  if (ideal.ring()->order == MonomialOrder::degrevlex()) {
    gb = &ideal.groebner(opts);
  } else {
    local = buchberger(ideal.generators(), with_order(ideal.ring(), MonomialOrder::degrevlex()), opts);
    gb = &local;
  }
  if (ideal.empty() && ideal.ring()->nvars > 0) throw DomainError("ideal is not zero-dimensional");
  long c = standard_monomial_count(*gb);
  if (c < 0) throw DomainError("ideal is not zero-dimensional");
  return c;
}

// I ∩ k[keep], computed with a block order eliminating the other variables.
template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& ideal, const std::vector<int>& keep, GbOptions opts = {}) {
  const int n = ideal.ring()->nvars;
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int v : keep) {
    if (v < 0 || v >= n) throw DomainError("variable index out of range");
    kept[static_cast<std::size_t>(v)] = true;
  }
  // eliminated variables first
  std::vector<int> to_new(static_cast<std::size_t>(n)), to_old(static_cast<std::size_t>(n));
  int pos = 0, elim = 0;
  for (int v = 0; v < n; ++v)
    if (!kept[static_cast<std::size_t>(v)]) to_new[static_cast<std::size_t>(v)] = pos++, ++elim;
  for (int v = 0; v < n; ++v)
    if (kept[static_cast<std::size_t>(v)]) to_new[static_cast<std::size_t>(v)] = pos++;
  for (int v = 0; v < n; ++v) to_old[static_cast<std::size_t>(to_new[static_cast<std::size_t>(v)])] = v;
  auto block = make_ring<F>(n, ideal.ring()->field, elim ? MonomialOrder::elimination(elim) : MonomialOrder::degrevlex());
  std::vector<MultiPoly<F>> moved;
  for (auto& g : ideal.generators()) moved.push_back(g.rename(to_new, block));
  auto gb = buchberger(moved, block, opts);
  std::vector<MultiPoly<F>> result;
  for (auto& g : gb.basis) {
    bool free = true;
    for (int v = 0; v < elim && free; ++v)
      if (g.uses_variable(v)) free = false;
    if (free) result.push_back(g.rename(to_old, ideal.ring()));
  }
  return Ideal<F>(ideal.ring(), std::move(result));
}

// (I : f^∞) via an auxiliary variable y and the ideal I + (1 - y f).
template <class F>
Ideal<F> saturation(const Ideal<F>& ideal, const MultiPoly<F>& f, GbOptions opts = {}) {
  if (f.is_zero()) throw DomainError("saturation by zero");
  const int n = ideal.ring()->nvars;
  if (n + 1 > kMaxVars) throw DomainError("too many variables for saturation");
  if (f.is_constant()) return Ideal<F>(ideal.ring(), ideal.generators());
  auto big = make_ring<F>(n + 1, ideal.ring()->field, MonomialOrder::elimination(1));
  std::vector<int> shift(static_cast<std::size_t>(n));
  std::iota(shift.begin(), shift.end(), 1);
  std::vector<MultiPoly<F>> gens;
  for (auto& g : ideal.generators()) gens.push_back(g.rename(shift, big));
  MultiPoly<F> fy = f.rename(shift, big) * MultiPoly<F>::variable(big, 0);
  gens.push_back(MultiPoly<F>::constant(big, 1) - fy);
  auto gb = buchberger(gens, big, opts);
  std::vector<int> back(static_cast<std::size_t>(n + 1), 0);
  for (int v = 1; v <= n; ++v) back[static_cast<std::size_t>(v)] = v - 1;
  std::vector<MultiPoly<F>> result;
  for (auto& g : gb.basis)
    if (!g.uses_variable(0)) result.push_back(g.rename(back, ideal.ring()));
  return Ideal<F>(ideal.ring(), std::move(result));
}

// Membership test through the cached basis.
template <class F>
bool contains(const Ideal<F>& ideal, const MultiPoly<F>& f, GbOptions opts = {}) {
  return normal_form(f, ideal.groebner(opts)).is_zero();
}

}  // namespace msec

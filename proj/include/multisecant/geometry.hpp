// Points, lines and Grassmann charts of P^n, varieties given by homogeneous
// generators, and restriction of forms to lines.
#pragma once

#include <climits>
#include <mutex>
#include <optional>
#include <sstream>

#include "multisecant/binary_form.hpp"
#include "multisecant/groebner.hpp"
#include "multisecant/linalg.hpp"
#include "multisecant/random.hpp"

namespace msec {

// Length of a non-finite intersection (a line inside the variety, curves
// sharing a component).
inline constexpr int kInfinite = INT_MAX;

template <class F>
class ProjectivePoint {
public:
  ProjectivePoint() = default;
  // Scaled so that the first nonzero coordinate is one.
  explicit ProjectivePoint(Vector<F> coords) : x_(std::move(coords)) {
    Eigen::Index lead = 0;
    while (lead < x_.size() && is_zero(x_(lead))) ++lead;
    if (lead == x_.size()) throw DomainError("all homogeneous coordinates are zero");
    const F inv = x_(lead).inverse();
    for (Eigen::Index i = 0; i < x_.size(); ++i) x_(i) = x_(i) * inv;
  }
  static ProjectivePoint from(const std::vector<F>& coords) {
    Vector<F> v(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
    return ProjectivePoint(std::move(v));
  }

  int ambient() const { return static_cast<int>(x_.size()) - 1; }
  const Vector<F>& coords() const { return x_; }
  const F& operator[](int i) const { return x_(i); }
  std::vector<F> to_vector() const { return {x_.data(), x_.data() + x_.size()}; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.x_.size() != b.x_.size()) return false;
    for (Eigen::Index i = 0; i < a.x_.size(); ++i)
      if (a.x_(i) != b.x_(i)) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (Eigen::Index i = 0; i < x_.size(); ++i) os << (i ? ":" : "") << x_(i);
    os << ']';
    return os.str();
  }

private:
  Vector<F> x_;
};

// A line of P^n, stored by the reduced row echelon form of a 2 x (n+1)
// spanning matrix, which makes equality exact.
template <class F>
class Line {
public:
  Line(const Vector<F>& a, const Vector<F>& b) {
    if (a.size() != b.size() || a.size() < 2) throw DomainError("spanning vectors of different lengths");
    span_.resize(2, a.size());
    span_.row(0) = a.transpose();
    span_.row(1) = b.transpose();
    if (row_reduce(span_).size() != 2) throw DomainError("points do not span a line");
  }
  static Line through(const ProjectivePoint<F>& p, const ProjectivePoint<F>& q) { return Line(p.coords(), q.coords()); }

  // The line cut out by n-1 independent linear forms in n+1 variables.
  static Line from_equations(const std::vector<MultiPoly<F>>& forms, int n) {
    if (forms.empty()) throw DomainError("no equations for the line");
    const RingPtr<F>& ring = forms.front().ring();
    if (ring->nvars != n + 1) throw DomainError("equations live in the wrong ring");
    Matrix<F> m = zero_matrix(static_cast<Eigen::Index>(forms.size()), n + 1, ring->zero());
    for (std::size_t r = 0; r < forms.size(); ++r) {
      if (!forms[r].is_zero() && (!forms[r].is_homogeneous() || forms[r].total_degree() != 1))
        throw DomainError("line equations must be linear forms");
      for (int i = 0; i <= n; ++i)
        m(static_cast<Eigen::Index>(r), i) = forms[r].coefficient(Monomial::variable(i));
    }
    Matrix<F> k = kernel(m, ring->zero());
    if (k.cols() != 2) throw DomainError("equations do not cut out a line");
    return Line(k.col(0), k.col(1));
  }

  int ambient() const { return static_cast<int>(span_.cols()) - 1; }
  const Matrix<F>& basis() const { return span_; }
  Vector<F> point(int i) const { return span_.row(i).transpose(); }
  Vector<F> at(const F& s, const F& t) const {
    Vector<F> v(span_.cols());
    for (Eigen::Index j = 0; j < span_.cols(); ++j) v(j) = s * span_(0, j) + t * span_(1, j);
    return v;
  }

  // p_ij for i < j in lexicographic order.
  std::vector<F> plucker() const {
    std::vector<F> p;
    for (Eigen::Index i = 0; i < span_.cols(); ++i)
      for (Eigen::Index j = i + 1; j < span_.cols(); ++j)
        p.push_back(span_(0, i) * span_(1, j) - span_(0, j) * span_(1, i));
    return p;
  }

  bool contains(const ProjectivePoint<F>& q) const {
    Matrix<F> m(3, span_.cols());
    m.topRows(2) = span_;
    m.row(2) = q.coords().transpose();
    return rank(m) == 2;
  }

  friend bool operator==(const Line& a, const Line& b) {
    if (a.span_.cols() != b.span_.cols()) return false;
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < a.span_.cols(); ++j)
        if (a.span_(i, j) != b.span_(i, j)) return false;
    return true;
  }

  std::string to_string() const {
    return ProjectivePoint<F>(point(0)).to_string() + " " + ProjectivePoint<F>(point(1)).to_string();
  }

private:
  Matrix<F> span_;
};

// Index of p_ij (i < j) in Line::plucker().
inline int plucker_index(int i, int j, int n) { return i * (2 * n + 1 - i) / 2 + (j - i - 1); }

// The three-term quadratic relations p_ij p_kl - p_ik p_jl + p_il p_jk = 0.
template <class F>
bool satisfies_plucker_relations(const std::vector<F>& p, int n) {
  auto at = [&](int i, int j) { return p[static_cast<std::size_t>(plucker_index(i, j, n))]; };
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (!is_zero(at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k))) return false;
  return true;
}

// Affine chart of G(1,n).  Column j of `frame` is the j-th frame vector in
// ambient coordinates; the chart point (a, b) is the line spanned by
// e0 + sum a_j e_{j+2} and e1 + sum b_j e_{j+2}.  Chart variable j < n-1 is
// a_j, variable n-1+j is b_j.
template <class F>
class GrassmannChart {
public:
  explicit GrassmannChart(Matrix<F> frame) : frame_(std::move(frame)) {
    if (frame_.rows() != frame_.cols() || frame_.rows() < 3) throw DomainError("chart frame must be square of size >= 3");
    if (rank(frame_) != frame_.rows()) throw DomainError("chart frame is singular");
  }

  int ambient() const { return static_cast<int>(frame_.rows()) - 1; }
  int chart_vars() const { return 2 * (ambient() - 1); }
  const Matrix<F>& frame() const { return frame_; }

  // Ambient coordinates of the two spanning rows of the generic chart line,
  // as linear polynomials in variables offset .. offset + chart_vars() - 1.
  std::pair<std::vector<MultiPoly<F>>, std::vector<MultiPoly<F>>> generic_rows(const RingPtr<F>& ring, int offset = 0) const {
    const int n = ambient();
    std::vector<MultiPoly<F>> r0, r1;
    for (int i = 0; i <= n; ++i) {
      MultiPoly<F> u = MultiPoly<F>::constant(ring, frame_(i, 0));
      MultiPoly<F> v = MultiPoly<F>::constant(ring, frame_(i, 1));
      for (int j = 0; j < n - 1; ++j) {
        u = u + MultiPoly<F>::variable(ring, offset + j).scaled(frame_(i, j + 2));
        v = v + MultiPoly<F>::variable(ring, offset + n - 1 + j).scaled(frame_(i, j + 2));
      }
      r0.push_back(std::move(u));
      r1.push_back(std::move(v));
    }
    return {std::move(r0), std::move(r1)};
  }

  // The two spanning rows at a chart point, in ambient coordinates.
  std::pair<Vector<F>, Vector<F>> rows_at(const std::vector<F>& c) const {
    const int n = ambient();
    if (static_cast<int>(c.size()) != chart_vars()) throw DomainError("chart point has wrong arity");
    const F zero = frame_(0, 0) * F(0);
    Vector<F> y0 = Vector<F>::Constant(n + 1, zero), y1 = Vector<F>::Constant(n + 1, zero);
    y0(0) = zero + F(1);
    y1(1) = zero + F(1);
    for (int j = 0; j < n - 1; ++j) {
      y0(j + 2) = c[static_cast<std::size_t>(j)];
      y1(j + 2) = c[static_cast<std::size_t>(n - 1 + j)];
    }
    return {frame_ * y0, frame_ * y1};
  }

  Line<F> line_at(const std::vector<F>& c) const {
    auto [a, b] = rows_at(c);
    return Line<F>(a, b);
  }

  // Chart coordinates of a line, or nothing when the line meets the
  // frame's subspace <e2, ..., en>.
  std::optional<std::vector<F>> coordinates_of(const Line<F>& line) const {
    const int n = ambient();
    if (line.ambient() != n) throw DomainError("line lives in a different ambient space");
    const F zero = frame_(0, 0) * F(0);
    Matrix<F> y = (inverse(frame_, zero) * line.basis().transpose()).transpose();
    Matrix<F> lead = y.leftCols(2);
    if (rank(lead) != 2) return std::nullopt;
    Matrix<F> m = inverse(lead, zero) * y;
    std::vector<F> c(static_cast<std::size_t>(chart_vars()), zero);
    for (int j = 0; j < n - 1; ++j) {
      c[static_cast<std::size_t>(j)] = m(0, j + 2);
      c[static_cast<std::size_t>(n - 1 + j)] = m(1, j + 2);
    }
    return c;
  }

private:
  Matrix<F> frame_;
};

// Coefficients c_j of s^j t^(d-j) in f(s*row0 + t*row1), where the rows are
// polynomials in `target`.
template <class F>
std::vector<MultiPoly<F>> restriction_coefficients(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& row0,
                                                   const std::vector<MultiPoly<F>>& row1, const RingPtr<F>& target) {
  if (!f.is_homogeneous()) throw DomainError("restriction of an inhomogeneous polynomial");
  const int d = f.total_degree();
  const int m = target->nvars;
  auto big = make_ring<F>(m + 2, target->field);
  auto s = MultiPoly<F>::variable(big, m), t = MultiPoly<F>::variable(big, m + 1);
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < row0.size(); ++i) images.push_back(s * row0[i].in_ring(big) + t * row1[i].in_ring(big));
  std::vector<std::vector<Term<F>>> parts(static_cast<std::size_t>(std::max(d, 0) + 1));
  const MultiPoly<F> g = f.substitute(images, big);
  for (auto& term : g.terms()) {
    Monomial mono = term.mono;
    const int e = mono[m];
    mono.set(m, 0);
    mono.set(m + 1, 0);
    parts[static_cast<std::size_t>(e)].push_back({mono, term.coef});
  }
  std::vector<MultiPoly<F>> out;
  for (auto& p : parts) out.push_back(MultiPoly<F>::from_terms(target, std::move(p)));
  return out;
}

// f(s*a + t*b) as a binary form in (s, t).
template <class F>
BinaryForm<F> restrict_along(const MultiPoly<F>& f, const Vector<F>& a, const Vector<F>& b) {
  if (f.ring()->nvars != a.size() || a.size() != b.size()) throw DomainError("form and line live in different spaces");
  if (f.is_zero()) throw DomainError("restriction of the zero polynomial has no degree");
  if (!f.is_homogeneous()) throw DomainError("restriction of an inhomogeneous polynomial");
  auto point = make_ring<F>(0, f.ring()->field);
  std::vector<MultiPoly<F>> r0, r1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    r0.push_back(MultiPoly<F>::constant(point, a(i)));
    r1.push_back(MultiPoly<F>::constant(point, b(i)));
  }
  auto coeffs = restriction_coefficients(f, r0, r1, point);
  const F zero = f.ring()->zero();
  std::vector<F> c;
  for (auto& p : coeffs) c.push_back(p.is_zero() ? zero : p.leading_coefficient());
  return BinaryForm<F>(f.total_degree(), std::move(c));
}

// f restricted to the line along its normalized basis rows; the zero form of
// degree d when the line lies on V(f).
template <class F>
BinaryForm<F> restrict_to_line(const MultiPoly<F>& f, const Line<F>& line) {
  return restrict_along(f, line.point(0), line.point(1));
}

template <class F>
struct Parametrization {
  int params = 0;
  std::vector<MultiPoly<F>> coords;  // in a ring with `params` variables
};

// A projective variety V(I) in P^n given by homogeneous generators.
template <class F>
class Variety {
public:
  Variety(int ambient, std::vector<MultiPoly<F>> generators, std::optional<Parametrization<F>> par = std::nullopt)
      : n_(ambient), par_(std::move(par)) {
    if (generators.empty()) throw DomainError("a variety needs at least one generator");
    ring_ = generators.front().ring();
    if (ring_->nvars != n_ + 1) throw DomainError("generators do not live in P^" + std::to_string(n_));
    for (auto& g : generators)
      if (!g.is_homogeneous()) throw DomainError("generator " + g.to_string() + " is not homogeneous");
    ideal_ = Ideal<F>(ring_, std::move(generators));
    if (par_) {
      if (static_cast<int>(par_->coords.size()) != n_ + 1) throw DomainError("parametrization has wrong arity");
      for (auto& g : ideal_.generators())
        if (!g.substitute(par_->coords, par_->coords.front().ring()).is_zero())
          throw InvariantViolation("parametrization does not satisfy " + g.to_string());
    }
  }

  int ambient() const { return n_; }
  const RingPtr<F>& ring() const { return ring_; }
  const Ideal<F>& ideal() const { return ideal_; }
  const std::vector<MultiPoly<F>>& generators() const { return ideal_.generators(); }
  const std::optional<Parametrization<F>>& parametrization() const { return par_; }

  // Projective dimension (-1 when empty).
  int dimension() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->dim) {
      int d = ideal_dimension(ideal_) - 1;
      cache_->dim = d < 0 ? -1 : d;
    }
    return *cache_->dim;
  }
  int codimension() const { return n_ - dimension(); }

  bool contains(const ProjectivePoint<F>& p) const {
    auto x = p.to_vector();
    return std::all_of(generators().begin(), generators().end(), [&](const MultiPoly<F>& g) { return is_zero(g.evaluate(x)); });
  }

  // Linear generators, cutting out the span when the ideal has them.
  std::vector<MultiPoly<F>> linear_generators() const {
    std::vector<MultiPoly<F>> out;
    for (auto& g : generators())
      if (g.total_degree() == 1) out.push_back(g);
    return out;
  }

private:
  struct Cache {
    std::mutex mutex;
    std::optional<int> dim;
  };
  int n_ = 0;
  RingPtr<F> ring_;
  Ideal<F> ideal_;
  std::optional<Parametrization<F>> par_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Length of X ∩ line: degree of the gcd of the restricted generators, or
// kInfinite when the line lies on X.
template <class F>
int secant_length(const Variety<F>& X, const Line<F>& line) {
  std::vector<BinaryForm<F>> forms;
  for (auto& g : X.generators()) forms.push_back(restrict_to_line(g, line));
  if (std::all_of(forms.begin(), forms.end(), [](const BinaryForm<F>& f) { return f.is_zero(); })) return kInfinite;
  return gcd_binary_forms(forms).degree();
}

template <class F>
struct TangentSpace {
  std::vector<MultiPoly<F>> equations;  // independent linear forms
  Matrix<F> jacobian;
  int rank = 0;
  bool smooth = false;  // rank equals the codimension
};

template <class F>
TangentSpace<F> tangent_space(const Variety<F>& X, const ProjectivePoint<F>& P) {
  if (P.ambient() != X.ambient()) throw DomainError("point lives in a different ambient space");
  if (!X.contains(P)) throw DomainError("point " + P.to_string() + " is not on the variety");
  const auto& gens = X.generators();
  const auto x = P.to_vector();
  const int n = X.ambient();
  TangentSpace<F> out;
  out.jacobian = zero_matrix(static_cast<Eigen::Index>(gens.size()), n + 1, X.ring()->zero());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int i = 0; i <= n; ++i) out.jacobian(static_cast<Eigen::Index>(r), i) = gens[r].derivative(i).evaluate(x);
  Matrix<F> m = out.jacobian;
  out.rank = static_cast<int>(row_reduce(m).size());
  for (int r = 0; r < out.rank; ++r) {
    MultiPoly<F> l(X.ring());
    for (int i = 0; i <= n; ++i) l = l + MultiPoly<F>::variable(X.ring(), i).scaled(m(r, i));
    out.equations.push_back(std::move(l));
  }
  out.smooth = out.rank == X.codimension();
  return out;
}

// Generic-point sampling over GF(p): the parametrization when there is one,
// otherwise a random linear slice of complementary dimension solved through
// a lex basis in shape position.  With `smooth`, retries until the Jacobian
// has full rank.
ProjectivePoint<Fp> random_point_on(const Variety<Fp>& X, std::uint64_t seed, bool smooth = false);

// Number of points of X on a random linear space of complementary dimension.
long projective_degree(const Variety<Fp>& X, std::uint64_t seed);

Variety<Fp> reduce_mod(const Variety<Rational>& X, std::uint32_t p);

}  // namespace msec

#include "rigidlift/homology.hpp"

#include <algorithm>

#include "rigidlift/error.hpp"

namespace rigidlift {

Cochain Cochain::from_integers(const std::vector<std::int64_t>& c) {
  Cochain x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x.c_[i] = c[i];
  return x;
}

Cochain Cochain::indicator(const Multigraph& g, EdgeIndex e) {
  Cochain x(g.edge_count());
  x.c_[e] = 1;
  return x;
}

bool Cochain::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

Rational Cochain::dot(const Cochain& o) const {
  Rational s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && o.c_[i] != 0) s += c_[i] * o.c_[i];
  return s;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cochain operator-(Cochain a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Cochain operator*(const Rational& k, Cochain a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::Internal, "singular Gram matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace

CycleLattice::CycleLattice(const Multigraph& g) : edges_(g.edge_count()), cotree_(cotree_edges(g)) {
  for (const auto& c : fundamental_cycles(g)) basis_.push_back(Cochain::from_integers(c.algebraic(g)));
  const std::size_t r = basis_.size();
  gram_.assign(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_[i][j] = basis_[i].dot(basis_[j]);
  gram_inverse_ = invert(gram_);
}

Cochain CycleLattice::project(const Cochain& x) const {
  const std::size_t r = basis_.size();
  std::vector<Rational> pair(r);
  for (std::size_t i = 0; i < r; ++i) pair[i] = basis_[i].dot(x);
  Cochain out(edges_);
  for (std::size_t i = 0; i < r; ++i) {
    Rational coef = 0;
    for (std::size_t j = 0; j < r; ++j) coef += gram_inverse_[i][j] * pair[j];
    if (coef != 0) out += coef * basis_[i];
  }
  return out;
}

bool CycleLattice::in_cycle_space(const Cochain& x) const { return project(x) == x; }

std::vector<Rational> CycleLattice::coordinates(const Cochain& x) const {
  if (!in_cycle_space(x)) fail(ErrorKind::NotInCycleSpace, "cochain is not in the cycle space");
  std::vector<Rational> out;
  for (EdgeIndex e : cotree_) out.push_back(x[e]);
  return out;
}

bool CycleLattice::lattice_equivalent(const Cochain& x, const Cochain& y) const {
  if (!in_cycle_space(x) || !in_cycle_space(y)) fail(ErrorKind::NotInCycleSpace, "cochain is not in the cycle space");
  auto c = coordinates(x - y);
  return std::all_of(c.begin(), c.end(), is_integer);
}

Cochain CycleLattice::h_edge(EdgeIndex e) const {
  Cochain x(edges_);
  x[e] = 1;
  return project(x);
}

Divisor iota_inverse(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, const Cochain& x,
                     std::int64_t k) {
  if (!lat.in_cycle_space(x)) fail(ErrorKind::NotInCycleSpace, "cochain is not in the cycle space");
  // An integer chain a on the cotree edges with <a, b_i> = <x, b_i> for every
  // basis cycle has π(a) = x, so x = Σ a_ℓ h_ℓ.
  auto cotree = cotree_edges(g);
  std::vector<std::int64_t> a(g.edge_count(), 0);
  for (std::size_t i = 0; i < cotree.size(); ++i) {
    Rational t = lat.basis()[i].dot(x);
    if (!is_integer(t)) fail(ErrorKind::NonIntegralClass, "cochain does not pair integrally with the cycle lattice");
    a[cotree[i]] = static_cast<std::int64_t>(numerator(t));
  }
  Divisor d = boundary(g, a);
  d[g.head(base_edge)] += k;
  return d;
}

JacobianPoint iota(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, const Divisor& d) {
  const std::int64_t n = d.degree();
  Divisor d0 = d;
  d0[g.head(base_edge)] -= n;
  return {lat.project(Cochain::from_integers(boundary_preimage(g, d0))), n};
}

Cochain p_vertex(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, VertexIndex v) {
  return lat.project(Cochain::from_integers(shortest_path(g, g.head(base_edge), v).algebraic(g)));
}

}  // namespace rigidlift

#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidlift/divisor.hpp"
#include "rigidlift/multigraph.hpp"

namespace rigidlift {

using Rational = boost::multiprecision::cpp_rational;

// Exact rational 1-cochain indexed by edge.
class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(std::size_t edges) : c_(edges, Rational(0)) {}
  explicit Cochain(std::vector<Rational> c) : c_(std::move(c)) {}
  static Cochain from_integers(const std::vector<std::int64_t>& c);
  static Cochain indicator(const Multigraph& g, EdgeIndex e);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](EdgeIndex e) const { return c_[e]; }
  Rational& operator[](EdgeIndex e) { return c_[e]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  Rational dot(const Cochain& o) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a);
  friend Cochain operator*(const Rational& k, Cochain a);
  bool operator==(const Cochain& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

// H¹(G, Z) with the fundamental-cycle basis and exact projection onto its span.
class CycleLattice {
 public:
  explicit CycleLattice(const Multigraph& g);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Cochain>& basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  // Orthogonal projection π onto the rational span of the basis.
  Cochain project(const Cochain& x) const;
  bool in_cycle_space(const Cochain& x) const;
  // Coordinates of a cycle-space element in the basis (read off the cotree
  // edges). Errors: NotInCycleSpace.
  std::vector<Rational> coordinates(const Cochain& x) const;
  // Errors: NotInCycleSpace.
  bool lattice_equivalent(const Cochain& x, const Cochain& y) const;
  // h_ℓ = π(ℓ*).
  Cochain h_edge(EdgeIndex e) const;

 private:
  std::size_t edges_ = 0;
  std::vector<EdgeIndex> cotree_;
  std::vector<Cochain> basis_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<Rational>> gram_inverse_;
};

struct JacobianPoint {
  Cochain cochain;  // meaningful modulo the lattice
  std::int64_t degree = 0;
};

// Divisor of degree k representing ι⁻¹(x, k). Errors: NotInCycleSpace,
// NonIntegralClass.
Divisor iota_inverse(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, const Cochain& x,
                     std::int64_t k);

// ι(d), summing projected algebraic paths from t(base_edge) to the chips.
JacobianPoint iota(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, const Divisor& d);

// P_v: π of the shortest algebraic path from t(base_edge) to v.
Cochain p_vertex(const Multigraph& g, const CycleLattice& lat, EdgeIndex base_edge, VertexIndex v);

}  // namespace rigidlift

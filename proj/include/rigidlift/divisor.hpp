#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidlift/multigraph.hpp"

namespace rigidlift {

// Integer chip counts indexed by vertex.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t vertices) : c_(vertices, 0) {}
  explicit Divisor(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) {}

  static Divisor zero(const Multigraph& g) { return Divisor(g.vertex_count()); }
  static Divisor point(const Multigraph& g, VertexIndex v, std::int64_t k = 1);
  // Σ v over all vertices.
  static Divisor all_ones(const Multigraph& g);

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](VertexIndex v) const { return c_[v]; }
  std::int64_t& operator[](VertexIndex v) { return c_[v]; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  std::int64_t degree() const;
  bool is_effective() const;
  bool is_zero() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a);
  friend Divisor operator*(std::int64_t k, Divisor a);

  auto operator<=>(const Divisor&) const = default;

 private:
  std::vector<std::int64_t> c_;
};

// A divisor class, stored as its reduced form at the graph's base vertex.
class DivisorClass {
 public:
  DivisorClass() = default;
  const Divisor& representative() const { return rep_; }
  std::int64_t degree() const { return rep_.degree(); }
  bool is_zero() const { return rep_.is_zero(); }
  auto operator<=>(const DivisorClass&) const = default;

 private:
  friend DivisorClass class_of(const Multigraph& g, const Divisor& d);
  explicit DivisorClass(Divisor rep) : rep_(std::move(rep)) {}
  Divisor rep_;
};

inline constexpr std::size_t kDefaultMaxClasses = 1'000'000;

// Δ(script): firing v sends one chip along each incident edge.
Divisor laplacian_fire(const Multigraph& g, const std::vector<std::int64_t>& script);

Divisor q_reduce(const Multigraph& g, const Divisor& d, VertexIndex q);
// Order in which Dhar's fire from q burns the vertices, one at a time with
// ties by index. Covers every vertex exactly when d is q-reduced.
std::vector<VertexIndex> burning_order(const Multigraph& g, const Divisor& d, VertexIndex q);
DivisorClass class_of(const Multigraph& g, const Divisor& d);
bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);
bool is_effective_class(const Multigraph& g, const Divisor& d);

Divisor canonical_divisor(const Multigraph& g);

// Class of Σ v_i − n·t(base_edge).
DivisorClass abel_jacobi(const Multigraph& g, EdgeIndex base_edge, std::span<const VertexIndex> points);

// All classes of the given degree. Errors: EnumerationBoundExceeded.
std::vector<DivisorClass> enumerate_picard(const Multigraph& g, std::int64_t degree,
                                           std::size_t bound = kDefaultMaxClasses);

// Degree-0 classes c with c + (g−1)·t(base_edge) effective.
// Errors: GenusTooSmall (genus 0), EnumerationBoundExceeded.
std::vector<DivisorClass> theta_divisor(const Multigraph& g, EdgeIndex base_edge,
                                        std::size_t bound = kDefaultMaxClasses);

// Matrix-tree count, the order of Pic⁰. Fraction-free elimination on the
// reduced Laplacian.
boost::multiprecision::cpp_int spanning_tree_count(const Multigraph& g);

enum class Speciality { Special, Nonspecial };
// Errors: WrongDegree.
Speciality classify_gminus1(const Multigraph& g, const Divisor& d);

// ∂ of an integer 1-chain, with ∂(e*) = t(e) − o(e).
Divisor boundary(const Multigraph& g, const std::vector<std::int64_t>& chain);
// An integer 1-chain supported on a spanning tree whose boundary is d.
// Errors: WrongDegree unless deg d = 0.
std::vector<std::int64_t> boundary_preimage(const Multigraph& g, const Divisor& d);

// Every effective divisor in the class of d whose coefficients stay at or
// below `caps`, in lexicographic order. Errors: EnumerationBoundExceeded.
std::vector<Divisor> bounded_linear_system(const Multigraph& g, const Divisor& d,
                                           const std::vector<std::int64_t>& caps,
                                           std::size_t bound = kDefaultMaxClasses);

}  // namespace rigidlift

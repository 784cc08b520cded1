#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigidlift/divisor.hpp"
#include "rigidlift/homology.hpp"
#include "rigidlift/multigraph.hpp"
#include "rigidlift/orientation.hpp"

namespace rigidlift {

// True iff the edge bijection carries the mod-2 cycle space of g onto that of
// h. Errors: NotBijection, BaseNotPreserved.
bool validate_cyclic_bijection(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map);

// Signs from cycles through the base edge. An engine shuffles the cycle
// choices; the result must not depend on it.
std::vector<int> compute_signs(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map,
                               std::mt19937_64* shuffle = nullptr);

// A base-preserving cyclic bijection between 2-connected, 2-edge-connected
// based oriented graphs, with its sign function.
class OrCycMorphism {
 public:
  // Errors: NotBijection, BaseNotPreserved, NotTwoConnected,
  // NotTwoEdgeConnected, InvalidCyclicBijection.
  static OrCycMorphism create(Multigraph source, Multigraph target, std::vector<EdgeIndex> edge_map);
  static OrCycMorphism from_ids(Multigraph source, Multigraph target, const std::map<std::string, std::string>& edge_map);

  const Multigraph& source() const { return source_; }
  const Multigraph& target() const { return target_; }
  EdgeIndex operator()(EdgeIndex e) const { return edge_map_[e]; }
  const std::vector<EdgeIndex>& edge_map() const { return edge_map_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign(EdgeIndex e) const { return signs_[e]; }

 private:
  Multigraph source_;
  Multigraph target_;
  std::vector<EdgeIndex> edge_map_;
  std::vector<int> signs_;
};

OrCycMorphism identity_morphism(const Multigraph& g);
// m2 ∘ m1. Errors: CompositionMismatch.
OrCycMorphism compose(const OrCycMorphism& m2, const OrCycMorphism& m1);

struct WhitneyMove {
  Multigraph graph;
  OrCycMorphism morphism;
};
// W_X G with the identity-on-ids morphism. Errors: BaseEdgeInArch.
WhitneyMove whitney_move(const Multigraph& g, const Arch& x);

Cochain pushforward_cochain(const OrCycMorphism& m, const Cochain& x);
std::vector<std::int64_t> pushforward_chain(const OrCycMorphism& m, const std::vector<std::int64_t>& a);
PartialOrientation pushforward_orientation(const OrCycMorphism& m, const PartialOrientation& u);
// Inverse of pushforward_orientation.
PartialOrientation pullback_orientation(const OrCycMorphism& m, const PartialOrientation& u);

// ι_ŵ⁻¹ ∘ φ_* ∘ ι_ê on divisors: the pushforward of a divisor class, of any
// degree. Computed by pushing an integer chain with the right boundary.
Divisor transport_divisor(const OrCycMorphism& m, const Divisor& d);
DivisorClass transport_class(const OrCycMorphism& m, const Divisor& d);

DivisorClass rigidity_divisor(const OrCycMorphism& m);
// The same quantity assembled from projected cochains and converted with ι⁻¹,
// an independent route used for cross-checking.
Divisor rigidity_divisor_via_cochains(const OrCycMorphism& m);

DivisorClass lowering_divisor(const OrCycMorphism& m, const std::vector<EdgeIndex>& x);
DivisorClass diagram_defect(const OrCycMorphism& m, const PartialOrientation& u);

// Errors: GenusTooSmall.
bool is_rigid(const OrCycMorphism& m);
// Errors: GenusTooSmall, EnumerationBoundExceeded.
bool theta_preserved(const OrCycMorphism& m, std::size_t bound = kDefaultMaxClasses);
// φ_* carries {P_v} onto {P_w}. Errors: GenusTooSmall.
bool abel_jacobi_image_preserved(const OrCycMorphism& m);
// c(φ_O U) ~ φ_* c(U) for every full orientation U (up to `limit` of them,
// enumerated in order). Errors: GenusTooSmall.
bool diagram_commutes(const OrCycMorphism& m, std::size_t limit = 1u << 12);

struct NonrigidityWitness {
  Divisor source_points;  // effective, degree g−1, reduced at t(ê)
  DivisorClass source_theta;
  Divisor image;          // transported points, reduced at t(ŵ)
  VertexIndex pivot = -1; // vertex v of the target used in the search
};

// Errors: MorphismIsRigid, GenusTooSmall.
NonrigidityWitness nonrigidity_witness(const OrCycMorphism& m);
bool verify_witness(const OrCycMorphism& m, const NonrigidityWitness& w);

struct GraphIsomorphism {
  std::vector<EdgeIndex> psi;        // permutation of target edges
  std::vector<EdgeIndex> edge_map;   // ψ∘φ, source → target
  std::vector<VertexIndex> vertex_map;
  bool unique = true;                // false on two-vertex graphs
  bool base_reversed = false;        // vertex_map sends t(ê) to the tail of its image edge
};

bool verify_graph_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map,
                              const std::vector<VertexIndex>& vertex_map);
// ψ maps every edge into its own series class.
bool is_series_fixing(const Multigraph& h, const std::vector<EdgeIndex>& psi);

// Errors: MorphismNotRigid, GenusTooSmall, NotLiftable (rigid morphisms
// between non-isomorphic graphs exist).
GraphIsomorphism lift_to_graph_isomorphism(const OrCycMorphism& m);

struct MatroidLift {
  std::optional<GraphIsomorphism> isomorphism;
  std::vector<EdgeIndex> tried;  // target base candidates, in order
};

// Errors: InvalidCyclicBijection, GenusTooSmall, NotBijection,
// NotTwoConnected, NotTwoEdgeConnected.
MatroidLift lift_matroid_isomorphism(const Multigraph& g, const Multigraph& h, const std::vector<EdgeIndex>& edge_map);

}  // namespace rigidlift

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "rigidlift/divisor.hpp"
#include "rigidlift/multigraph.hpp"

namespace rigidlift {

// Forward agrees with the graph's reference direction, Backward opposes it.
enum class EdgeState : std::uint8_t { Forward, Backward, Unoriented, Bioriented };

class PartialOrientation {
 public:
  PartialOrientation() = default;
  explicit PartialOrientation(std::vector<EdgeState> states) : s_(std::move(states)) {}
  // The reference orientation: every edge Forward.
  static PartialOrientation reference(const Multigraph& g);

  std::size_t size() const { return s_.size(); }
  EdgeState operator[](EdgeIndex e) const { return s_[e]; }
  void set(EdgeIndex e, EdgeState st) { s_[e] = st; }
  const std::vector<EdgeState>& states() const { return s_; }

  // +1 Forward, −1 Backward, 0 Unoriented. Errors: BiorientedPresent.
  int sign(EdgeIndex e) const;
  bool is_oriented(EdgeIndex e) const { return s_[e] == EdgeState::Forward || s_[e] == EdgeState::Backward; }
  VertexIndex head(const Multigraph& g, EdgeIndex e) const;
  VertexIndex tail(const Multigraph& g, EdgeIndex e) const;
  void reverse(EdgeIndex e);

  bool is_full() const;
  bool has_bioriented() const;
  std::vector<EdgeIndex> edges_in_state(EdgeState st) const;

  auto operator<=>(const PartialOrientation&) const = default;

 private:
  std::vector<EdgeState> s_;
};

// Σ heads − Σ vertices. Errors: BiorientedPresent.
Divisor chern_class(const Multigraph& g, const PartialOrientation& u);
// As chern_class, with each bioriented edge contributing both endpoints.
Divisor extended_chern_class(const Multigraph& g, const PartialOrientation& u);

enum class MoveKind { CycleReversal, CutReversal, EdgeSlide };

struct OrientationMove {
  MoveKind kind = MoveKind::CycleReversal;
  std::vector<EdgeIndex> edges;  // cycle or cut
  EdgeIndex oriented = -1;       // slide: ℓ, pointing at pivot
  EdgeIndex unoriented = -1;     // slide: r, unoriented at pivot
  VertexIndex pivot = -1;

  static OrientationMove cycle_reversal(std::vector<EdgeIndex> edges);
  static OrientationMove cut_reversal(std::vector<EdgeIndex> edges);
  static OrientationMove edge_slide(EdgeIndex oriented, EdgeIndex unoriented, VertexIndex pivot);
};

// Errors: InvalidMove.
PartialOrientation apply_move(const Multigraph& g, const PartialOrientation& u, const OrientationMove& m);

// For each (p, q), adds p − q to the Chern class: grow the oriented reach of
// p by cut reversals until it contains q, then reverse a p→q path.
// Errors: NotFullyOriented.
PartialOrientation torsor_act(const Multigraph& g, std::span<const std::pair<VertexIndex, VertexIndex>> moves,
                              const PartialOrientation& u);
// Degree-0 divisor, split into chip moves. Errors: WrongDegree, NotFullyOriented.
PartialOrientation torsor_act(const Multigraph& g, const Divisor& d, const PartialOrientation& u);

struct LiftOutcome {
  enum class Status {
    Lifted,
    // |d + Σv| is empty: no partial orientation of this size at all.
    NotPartiallyOrientable,
    // d is partially orientable, but not with exactly the requested
    // unoriented edge set.
    UnorientedSetInfeasible,
  };
  Status status = Status::Lifted;
  std::optional<PartialOrientation> orientation;
  Divisor shifted;  // d + Σv
  Divisor reduced;  // its reduced form at the base vertex
};

// Errors: DegreeMismatch, EnumerationBoundExceeded.
LiftOutcome lift_divisor_to_orientation(const Multigraph& g, const Divisor& d,
                                        const std::vector<EdgeIndex>& unoriented,
                                        std::size_t bound = kDefaultMaxClasses);

struct SourcelessWitness {
  PartialOrientation orientation;
  Divisor effective;  // B′ = c(W), B′ ~ q
};

struct AcyclicWitness {
  PartialOrientation orientation;
  Divisor dominated;  // A ~ q with c(U) ≥ A
};

using EffectivenessCertificate = std::variant<SourcelessWitness, AcyclicWitness>;

// Errors: DegreeTooHigh. The acyclic branch reduces q at `root`, defaulting
// to the base vertex.
EffectivenessCertificate effectiveness_certificate(const Multigraph& g, const Divisor& q,
                                                   std::optional<VertexIndex> root = std::nullopt,
                                                   std::size_t bound = kDefaultMaxClasses);
bool verify_certificate(const Multigraph& g, const Divisor& q, const EffectivenessCertificate& cert);

struct NonspecialExtension {
  Divisor t;                   // T ≥ 0
  Divisor dominated;           // A ~ q
  PartialOrientation acyclic;  // full acyclic orientation, c = A + T
};

// Errors: QIsEffective, DegreeTooHigh.
NonspecialExtension extend_to_nonspecial(const Multigraph& g, const Divisor& q,
                                         std::optional<VertexIndex> root = std::nullopt);

PartialOrientation dual_orientation(const PartialOrientation& u);
bool is_sourceless(const Multigraph& g, const PartialOrientation& u);
bool is_acyclic(const Multigraph& g, const PartialOrientation& u);

// Full orientation pointing every edge from the earlier to the later vertex.
PartialOrientation orientation_from_order(const Multigraph& g, const std::vector<VertexIndex>& order);

}  // namespace rigidlift

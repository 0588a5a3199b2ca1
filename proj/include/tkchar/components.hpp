#pragma once

// Closed-form component structure of the SL(2,C) character variety X and its
// SU(2) locus Y for G(m,n) = <x, y | x^m = y^n>.
//
// Reducible components are indexed by i in Z/d (d = gcd(m, n)) through
// lambda^a mu^{-b} = xi^i with xi = e^{2 pi i/d}; i and -i are identified, so
// canonical indices live in [0, floor(d/2)]. Irreducible components are the
// pairs (k, k') with 0 < k < m, 0 < k' < n, k = k' (mod 2), carrying
// eigenvalues lambda = e^{i pi k/m}, mu = e^{i pi k'/n}.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tkchar/root_of_unity.hpp"

namespace tkchar {

/// m = a d, n = b d with d = gcd(m, n).
class GroupParams {
 public:
  /// Throws std::invalid_argument unless m, n >= 2.
  GroupParams(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  bool coprime() const noexcept { return d_ == 1; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int m_, n_, d_, a_, b_;
};

struct RedId {
  int index = 0;
  friend auto operator<=>(const RedId&, const RedId&) = default;
};

struct IrrId {
  int k = 0;
  int kp = 0;
  friend auto operator<=>(const IrrId&, const IrrId&) = default;
};

/// Red components sort before Irr components.
using ComponentId = std::variant<RedId, IrrId>;

std::string to_string(const ComponentId& id);
std::string to_string(const RedId& id);
std::string to_string(const IrrId& id);

enum class Su2Topology { ClosedInterval, Circle, OpenInterval };
enum class Sl2cTopology { ComplexLine, PuncturedComplexLine, ThricePuncturedLine };

std::string to_string(Su2Topology t);
std::string to_string(Sl2cTopology t);

struct EigenPair {
  RootOfUnity lambda;
  RootOfUnity mu;
  friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

struct ComponentInfo {
  ComponentId id;
  Su2Topology su2_topology;
  Sl2cTopology sl2c_topology;
  std::optional<EigenPair> eigen_data;  // Irr only
};

/// True iff (k, k') indexes an irreducible component of G(m,n).
bool is_admissible(const GroupParams& p, int k, int kp);

/// All admissible (k, k') in ascending lexicographic order.
std::vector<IrrId> enumerate_irr(const GroupParams& p);

/// Closed form: ((m-1)(n-1)+1)/2 when m, n are both even, (m-1)(n-1)/2 otherwise.
int count_irr(const GroupParams& p);

/// Red(0) .. Red(floor(d/2)); Red(0) and (d even) Red(d/2) are closed
/// intervals / complex lines, the rest circles / punctured lines.
std::vector<ComponentInfo> enumerate_red(const GroupParams& p);

/// Irr(k, k') with lambda = root(k, m), mu = root(k', n). Throws
/// std::invalid_argument for inadmissible pairs.
ComponentInfo describe_irr(const GroupParams& p, IrrId id);

/// i ~ -i (mod d) folded into [0, floor(d/2)].
int fold_index(const GroupParams& p, int raw);

/// Red(i) is an interval (rather than a circle) iff i = -i (mod d).
bool is_interval_node(const GroupParams& p, int canonical_index);

struct Attachment {
  int i0_raw;        ///< (k - k')/2 mod d: the r = 0 end, eigenvalues (lambda, mu)
  int i1_raw;        ///< (k + k')/2 mod d: the r = -inf end, eigenvalues (lambda, mu^{-1})
  int i0_canonical;
  int i1_canonical;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// Reducible components met by the closure of Irr(k, k').
Attachment attachment(const GroupParams& p, int k, int kp);

/// An arc joining Red(i0) to Red(i1): k = d + i0 - i1,
/// k' = d - i0 - i1. Requires 0 <= i0 < i1 <= d/2.
IrrId joining_component(const GroupParams& p, int i0, int i1);

struct SelfLoop {
  IrrId arc;
  int index;  ///< canonical index of the node the arc returns to
  friend bool operator==(const SelfLoop&, const SelfLoop&) = default;
};

/// Every arc whose two attachment indices fold to the same node.
std::vector<SelfLoop> self_loops(const GroupParams& p);

// --- reducible chart ------------------------------------------------------
//
// On X_red^i the eigenvalue pair (lambda, mu) is parametrized by the unique t
// with t^b = lambda and t^a = alpha_i mu, where alpha_i = omega^{2 a i} and
// omega = e^{i pi/(d a b)}. Swapping the basis sends (lambda, mu) in X^i to
// (lambda^{-1}, mu^{-1}) in X^{-i}. On the interval nodes this acts on t as
// t -> gamma^2 / t, so the folded coordinate is the angle of t / gamma taken
// in [0, pi]; gamma = 1 on Red(0).

/// alpha_i for a raw index i.
RootOfUnity reducible_alpha(const GroupParams& p, int raw_index);

/// gamma for an interval node (identity for Red(0)).
RootOfUnity reducible_center(const GroupParams& p, int canonical_index);

/// Raw index of (lambda, mu): lambda^a mu^{-b} = xi^i. Throws
/// NoSolutionError when lambda^m != mu^n.
int reducible_index(const GroupParams& p, const EigenPair& eig);

/// The exact t with t^b = lambda, t^a = alpha_i mu for i = reducible_index.
RootOfUnity reducible_parameter(const GroupParams& p, const EigenPair& eig);

/// A reducible character written on its canonical node.
struct ReducibleCoordinate {
  int raw_index;       ///< index of the eigenvalue pair as given
  RootOfUnity raw_t;   ///< parameter of the pair as given
  bool folded;         ///< the pair was inverted to reach the canonical chart
  int index;           ///< canonical node index
  RootOfUnity t;       ///< canonical parameter on that node
  friend bool operator==(const ReducibleCoordinate&, const ReducibleCoordinate&) = default;
};

ReducibleCoordinate canonical_reducible(const GroupParams& p, const EigenPair& eig);

/// Position of a canonical point on its node: the angle of t / gamma in
/// [0, pi] for intervals (s = 2 cos of it), the angle of t in [0, 2 pi) for
/// circles.
double node_angle(const GroupParams& p, const ReducibleCoordinate& c);

/// s = 2 cos(node_angle) on interval nodes; 2 Re(t) on circle nodes.
double node_s(const GroupParams& p, const ReducibleCoordinate& c);

}  // namespace tkchar

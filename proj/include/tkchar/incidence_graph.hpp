#pragma once

#include <string>
#include <vector>

#include "tkchar/components.hpp"
#include "tkchar/root_of_unity.hpp"

namespace tkchar {

/// Where the closure of an irreducible arc meets Y_red, in exact terms.
struct AttachmentPoint {
  RedId node;                  ///< canonical component
  ReducibleCoordinate coord;   ///< raw chart, fold flag and canonical t
  double s;                    ///< node_s(coord)

  /// (node, canonical t): the identity of the point on the folded space.
  friend bool same_point(const AttachmentPoint& x, const AttachmentPoint& y) {
    return x.node == y.node && x.coord.t == y.coord.t;
  }
};

struct Arc {
  IrrId id;
  EigenPair eigen;
  AttachmentPoint r_zero;      ///< eigenvalues (lambda, mu), t -> 0
  AttachmentPoint r_infinity;  ///< eigenvalues (lambda, mu^{-1}), t -> 1
};

/// The topological model of Y: reducible components as nodes, irreducible
/// intervals as arcs (a multigraph; self-loops allowed).
struct IncidenceGraph {
  GroupParams params;
  std::vector<ComponentInfo> nodes;
  std::vector<Arc> arcs;
};

/// Attachment indices are (k - k')/2 and (k + k')/2 mod d; points come, in the
/// coprime case, from crt_attachment; otherwise from the exact chart
/// t^b = lambda, t^a = alpha mu.
IncidenceGraph build_graph(const GroupParams& p);

/// Connectivity of the node/arc multigraph; a single node is connected.
bool is_connected(const IncidenceGraph& g);

struct SharedEndpoint {
  IrrId first;
  IrrId second;
  RedId node;
  RootOfUnity t;
};

/// Pairs of distinct arcs meeting Y_red at the same point.
std::vector<SharedEndpoint> shared_endpoints(const IncidenceGraph& g);

/// "tkchar-graph/1": {"params", "nodes", "arcs"}; floats at 12 significant digits.
std::string to_json(const IncidenceGraph& g);
std::string to_dot(const IncidenceGraph& g);
/// Schematic: interval nodes as segments, circle nodes as circles, arcs as
/// curves between their attachment coordinates. Topology and order only.
std::string to_svg_schematic(const IncidenceGraph& g);

/// Rounds to 12 significant digits for serialization.
double round12(double v);

}  // namespace tkchar

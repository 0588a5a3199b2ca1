#include "tkchar/incidence_graph.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tkchar {
namespace {

AttachmentPoint make_point(const GroupParams& p, const ReducibleCoordinate& c) {
  return {RedId{c.index}, c, node_s(p, c)};
}

// Coprime: one node, Red(0), with t ~ 1/t.
ReducibleCoordinate coprime_coordinate(const RootOfUnity& raw_t) {
  ReducibleCoordinate c{};
  c.raw_index = 0;
  c.index = 0;
  c.raw_t = raw_t;
  c.folded = raw_t.num() > raw_t.den();
  c.t = c.folded ? conj(raw_t) : raw_t;
  return c;
}

AttachmentPoint endpoint(const GroupParams& p, const EigenPair& eig, int expected_raw_index,
                         std::int64_t k, std::int64_t kp_exponent) {
  ReducibleCoordinate c;
  if (p.coprime()) {
    c = coprime_coordinate(crt_attachment(k, p.m(), kp_exponent, p.n()));
  } else {
    c = canonical_reducible(p, eig);
  }
  if (c.raw_index != expected_raw_index) {
    throw std::logic_error("build_graph: attachment index disagrees with eigenvalue chart");
  }
  return make_point(p, c);
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string node_name(const RedId& id) { return "R" + std::to_string(id.index); }

std::string topology_glyph(const ComponentInfo& info) {
  return info.su2_topology == Su2Topology::Circle ? "S^1" : "[-2,2]";
}

}  // namespace

double round12(double v) {
  const double r = std::strtod(fmt12(v).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

IncidenceGraph build_graph(const GroupParams& p) {
  IncidenceGraph g{p, enumerate_red(p), {}};
  for (const IrrId& id : enumerate_irr(p)) {
    const EigenPair eig = *describe_irr(p, id).eigen_data;
    const Attachment at = attachment(p, id.k, id.kp);
    Arc arc{id, eig,
            endpoint(p, eig, at.i0_raw, id.k, id.kp),
            endpoint(p, EigenPair{eig.lambda, conj(eig.mu)}, at.i1_raw, id.k,
                     2 * std::int64_t{p.n()} - id.kp)};
    if (arc.r_zero.node.index != at.i0_canonical || arc.r_infinity.node.index != at.i1_canonical) {
      throw std::logic_error("build_graph: folded attachment index mismatch");
    }
    g.arcs.push_back(arc);
  }
  return g;
}

bool is_connected(const IncidenceGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<int> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto position = [&](const RedId& id) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (std::get<RedId>(g.nodes[i].id) == id) return static_cast<int>(i);
    }
    throw std::logic_error("is_connected: arc endpoint references a missing node");
  };
  for (const Arc& arc : g.arcs) {
    parent[find(position(arc.r_zero.node))] = find(position(arc.r_infinity.node));
  }
  const int root0 = find(0);
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    if (find(static_cast<int>(i)) != root0) return false;
  }
  return true;
}

std::vector<SharedEndpoint> shared_endpoints(const IncidenceGraph& g) {
  std::vector<SharedEndpoint> out;
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < g.arcs.size(); ++j) {
      for (const AttachmentPoint* x : {&g.arcs[i].r_zero, &g.arcs[i].r_infinity}) {
        for (const AttachmentPoint* y : {&g.arcs[j].r_zero, &g.arcs[j].r_infinity}) {
          if (same_point(*x, *y)) out.push_back({g.arcs[i].id, g.arcs[j].id, x->node, x->coord.t});
        }
      }
    }
  }
  return out;
}

std::string to_json(const IncidenceGraph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["params"] = {{"m", g.params.m()}, {"n", g.params.n()}, {"d", g.params.d()}};
  j["nodes"] = ordered_json::array();
  for (const ComponentInfo& info : g.nodes) {
    j["nodes"].push_back({{"id", to_string(info.id)}, {"topology", to_string(info.su2_topology)}});
  }
  j["arcs"] = ordered_json::array();
  for (const Arc& arc : g.arcs) {
    ordered_json endpoints = ordered_json::array();
    for (const AttachmentPoint* pt : {&arc.r_zero, &arc.r_infinity}) {
      endpoints.push_back({{"node", to_string(pt->node)},
                           {"t_num", pt->coord.t.num()},
                           {"t_den", pt->coord.t.den()},
                           {"s_real", round12(pt->s)}});
    }
    j["arcs"].push_back({{"k", arc.id.k}, {"kp", arc.id.kp}, {"endpoints", endpoints}});
  }
  return j.dump(2) + "\n";
}

std::string to_dot(const IncidenceGraph& g) {
  std::ostringstream os;
  os << "graph \"Y(" << g.params.m() << "," << g.params.n() << ")\" {\n";
  os << "  // d = " << g.params.d() << ", " << g.nodes.size() << " reducible, " << g.arcs.size()
     << " irreducible\n";
  for (const ComponentInfo& info : g.nodes) {
    const auto& id = std::get<RedId>(info.id);
    os << "  " << node_name(id) << " [label=\"" << to_string(id) << "\\n" << topology_glyph(info)
       << "\", shape=" << (info.su2_topology == Su2Topology::Circle ? "circle" : "box") << "];\n";
  }
  for (const Arc& arc : g.arcs) {
    os << "  " << node_name(arc.r_zero.node) << " -- " << node_name(arc.r_infinity.node)
       << " [label=\"" << to_string(arc.id) << "\", taillabel=\"t=" << arc.r_zero.coord.t.num() << "/"
       << arc.r_zero.coord.t.den() << " s=" << fmt12(arc.r_zero.s) << "\", headlabel=\"t="
       << arc.r_infinity.coord.t.num() << "/" << arc.r_infinity.coord.t.den()
       << " s=" << fmt12(arc.r_infinity.s) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_svg_schematic(const IncidenceGraph& g) {
  constexpr double kLeft = 120, kRight = 520, kRowHeight = 220, kTop = 140, kRadius = 80;
  const double mid_x = (kLeft + kRight) / 2;
  const double height = kTop + kRowHeight * static_cast<double>(g.nodes.size());

  struct Anchor {
    double x, y;
  };
  auto anchor = [&](const AttachmentPoint& pt) {
    const double row_y = kTop + kRowHeight * pt.node.index;
    const double theta = node_angle(g.params, pt.coord);
    if (is_interval_node(g.params, pt.node.index)) {
      // s = 2 cos(theta) in [-2, 2] along the segment
      return Anchor{mid_x + (kRight - kLeft) / 4 * 2 * std::cos(theta), row_y};
    }
    return Anchor{mid_x + kRadius * std::cos(theta), row_y - kRadius * std::sin(theta)};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" << fixed3(height)
     << "\" viewBox=\"0 0 640 " << fixed3(height) << "\">\n";
  os << "  <title>Y(" << g.params.m() << "," << g.params.n() << ")</title>\n";
  os << "  <g class=\"nodes\" stroke=\"black\" stroke-width=\"3\" fill=\"none\">\n";
  for (const ComponentInfo& info : g.nodes) {
    const auto& id = std::get<RedId>(info.id);
    const double y = kTop + kRowHeight * id.index;
    if (info.su2_topology == Su2Topology::Circle) {
      os << "    <circle class=\"node\" id=\"" << node_name(id) << "\" cx=\"" << fixed3(mid_x)
         << "\" cy=\"" << fixed3(y) << "\" r=\"" << fixed3(kRadius) << "\"/>\n";
    } else {
      os << "    <line class=\"node\" id=\"" << node_name(id) << "\" x1=\"" << fixed3(kLeft)
         << "\" y1=\"" << fixed3(y) << "\" x2=\"" << fixed3(kRight) << "\" y2=\"" << fixed3(y)
         << "\"/>\n";
    }
  }
  os << "  </g>\n";
  os << "  <g class=\"arcs\" stroke=\"steelblue\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& arc = g.arcs[i];
    const Anchor p0 = anchor(arc.r_zero), p1 = anchor(arc.r_infinity);
    // Bulge alternates sides and grows with the arc index so parallel arcs separate.
    const double bulge = (40.0 + 8.0 * static_cast<double>(i % 8)) * (i % 2 == 0 ? 1.0 : -1.0);
    double cx = (p0.x + p1.x) / 2, cy = (p0.y + p1.y) / 2;
    if (arc.r_zero.node == arc.r_infinity.node) {
      cy -= std::abs(bulge) + 20.0;
    } else {
      cx += bulge;
    }
    os << "    <path class=\"arc\" data-k=\"" << arc.id.k << "\" data-kp=\"" << arc.id.kp
       << "\" d=\"M " << fixed3(p0.x) << " " << fixed3(p0.y) << " Q " << fixed3(cx) << " "
       << fixed3(cy) << " " << fixed3(p1.x) << " " << fixed3(p1.y) << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const ComponentInfo& info : g.nodes) {
    const auto& id = std::get<RedId>(info.id);
    os << "    <text x=\"10\" y=\"" << fixed3(kTop + kRowHeight * id.index + 5) << "\">"
       << to_string(id) << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace tkchar

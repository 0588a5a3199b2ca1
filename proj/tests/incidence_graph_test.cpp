#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <regex>
#include <set>

#include "tkchar/incidence_graph.hpp"

using namespace tkchar;
using json = nlohmann::json;

namespace {

struct DotCounts {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::set<std::string> declared;
  bool edges_reference_declared = true;
};

// Minimal reader for the undirected DOT subset we emit.
DotCounts parse_dot(const std::string& text) {
  static const std::regex node_re(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*\[)");
  static const std::regex edge_re(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*--\s*([A-Za-z_][A-Za-z0-9_]*))");
  DotCounts out;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> edges;
  std::smatch mt;
  while (std::getline(in, line)) {
    if (std::regex_search(line, mt, edge_re)) {
      edges.emplace_back(mt[1], mt[2]);
    } else if (std::regex_search(line, mt, node_re) && mt[1] != "graph" && mt[1] != "node" &&
               mt[1] != "edge") {
      out.declared.insert(mt[1]);
    }
  }
  out.nodes = out.declared.size();
  out.edges = edges.size();
  for (const auto& [u, v] : edges)
    if (!out.declared.count(u) || !out.declared.count(v)) out.edges_reference_declared = false;
  return out;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("trefoil graph") {
  const auto g = build_graph(GroupParams(3, 2));
  REQUIRE(g.nodes.size() == 1);
  REQUIRE(g.arcs.size() == 1);
  const auto& arc = g.arcs[0];
  CHECK(arc.id == IrrId{1, 1});
  // crt_attachment(1,3,1,2) = e^{i pi/6}, crt_attachment(1,3,3,2) = e^{i 7 pi/6}
  CHECK(arc.r_zero.coord.raw_t == root(1, 6));
  CHECK(arc.r_infinity.coord.raw_t == root(7, 6));
  CHECK(arc.r_zero.s == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(arc.r_infinity.s == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("small graphs") {
  const auto g = build_graph(GroupParams(4, 6));
  CHECK(g.nodes.size() == 2);
  CHECK(g.arcs.size() == 8);
  CHECK(std::any_of(g.arcs.begin(), g.arcs.end(), [](const Arc& a) {
    return a.r_zero.node.index != a.r_infinity.node.index;
  }));

  const auto h = build_graph(GroupParams(2, 2));
  REQUIRE(h.arcs.size() == 1);
  CHECK(h.arcs[0].id == IrrId{1, 1});
  std::set<int> ends{h.arcs[0].r_zero.node.index, h.arcs[0].r_infinity.node.index};
  CHECK(ends == std::set<int>{0, 1});
}

TEST_CASE("arc count and endpoint structure for m, n <= 12") {
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      const GroupParams p(m, n);
      const auto g = build_graph(p);
      CHECK(static_cast<int>(g.arcs.size()) == count_irr(p));
      CHECK(g.nodes.size() == enumerate_red(p).size());
      for (const auto& arc : g.arcs) {
        const auto at = attachment(p, arc.id.k, arc.id.kp);
        CHECK(arc.r_zero.node.index == at.i0_canonical);
        CHECK(arc.r_infinity.node.index == at.i1_canonical);
        CHECK_FALSE(same_point(arc.r_zero, arc.r_infinity));

        const auto lam = root(arc.id.k, m), mu = root(arc.id.kp, n);
        const auto& c0 = arc.r_zero.coord;
        const auto& c1 = arc.r_infinity.coord;
        if (p.coprime()) {
          CHECK(pow(c0.raw_t, n) == lam);
          CHECK(pow(c0.raw_t, m) == mu);
          CHECK(pow(c1.raw_t, n) == lam);
          CHECK(pow(c1.raw_t, m) == conj(mu));
        }
        CHECK(pow(c0.raw_t, p.b()) == lam);
        CHECK(pow(c0.raw_t, p.a()) == reducible_alpha(p, c0.raw_index) * mu);
        CHECK(pow(c1.raw_t, p.b()) == lam);
        CHECK(pow(c1.raw_t, p.a()) == reducible_alpha(p, c1.raw_index) * conj(mu));
        CHECK(c0.raw_index == at.i0_raw);
        CHECK(c1.raw_index == at.i1_raw);
      }
    }
}

TEST_CASE("coprime attachment points are pairwise distinct") {
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      const GroupParams p(m, n);
      if (!p.coprime()) continue;
      const auto g = build_graph(p);
      std::set<RootOfUnity> seen;
      for (const auto& arc : g.arcs) {
        seen.insert(arc.r_zero.coord.t);
        seen.insert(arc.r_infinity.coord.t);
      }
      CHECK(seen.size() == 2 * g.arcs.size());
      CHECK(static_cast<int>(seen.size()) == (m - 1) * (n - 1));
      CHECK(shared_endpoints(g).empty());
    }
}

TEST_CASE("shared endpoints agree with a pairwise scan") {
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      const auto g = build_graph(GroupParams(m, n));
      std::size_t expected = 0;
      for (std::size_t i = 0; i < g.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < g.arcs.size(); ++j)
          for (const auto* x : {&g.arcs[i].r_zero, &g.arcs[i].r_infinity})
            for (const auto* y : {&g.arcs[j].r_zero, &g.arcs[j].r_infinity})
              expected += same_point(*x, *y);
      CHECK(shared_endpoints(g).size() == expected);
      // observed: no two arcs meet Y_red at the same point in this range
      CHECK(expected == 0);
    }
}

TEST_CASE("Y is connected for m, n <= 10") {
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) CHECK(is_connected(build_graph(GroupParams(m, n))));
}

TEST_CASE("is_connected on artificial graphs") {
  auto single = build_graph(GroupParams(3, 2));
  single.arcs.clear();
  CHECK(is_connected(single));
  auto pair = build_graph(GroupParams(2, 2));
  pair.arcs.clear();
  CHECK_FALSE(is_connected(pair));
  auto three = build_graph(GroupParams(6, 9));
  auto loops_only = three;
  std::erase_if(loops_only.arcs, [](const Arc& a) { return a.r_zero.node != a.r_infinity.node; });
  CHECK_FALSE(is_connected(loops_only));
}

TEST_CASE("every pair of nodes is joined by an arc for d <= 10") {
  for (int m = 2; m <= 30; ++m)
    for (int n = 2; n <= 30; ++n) {
      const GroupParams p(m, n);
      if (p.d() > 10 || p.d() < 2) continue;
      std::set<std::pair<int, int>> joined;
      for (const auto& arc : build_graph(p).arcs) {
        const int u = arc.r_zero.node.index, v = arc.r_infinity.node.index;
        joined.insert({std::min(u, v), std::max(u, v)});
      }
      for (int i = 0; 2 * i <= p.d(); ++i)
        for (int j = i + 1; 2 * j <= p.d(); ++j) CHECK(joined.count({i, j}) == 1);
    }
}

TEST_CASE("JSON serialization") {
  const auto j = json::parse(to_json(build_graph(GroupParams(3, 2))));
  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"params", "nodes", "arcs"});
  CHECK(j["params"]["d"] == 1);
  REQUIRE(j["nodes"].size() == 1);
  CHECK(j["nodes"][0]["topology"] == "closed-interval");
  REQUIRE(j["arcs"].size() == 1);
  const auto& ep = j["arcs"][0]["endpoints"];
  REQUIRE(ep.size() == 2);
  CHECK(ep[0]["t_num"] == 1);
  CHECK(ep[0]["t_den"] == 6);
  CHECK(ep[0]["s_real"].get<double>() == doctest::Approx(1.73205080757).epsilon(1e-12));

  const auto k = json::parse(to_json(build_graph(GroupParams(6, 9))));
  CHECK(k["nodes"][1]["topology"] == "circle");
  CHECK(k["arcs"].size() == 20);
}

TEST_CASE("DOT and SVG round-trip the counts") {
  for (auto [m, n] : {std::pair{3, 2}, {4, 6}, {6, 9}, {12, 18}, {7, 7}}) {
    const auto g = build_graph(GroupParams(m, n));
    const auto dot = parse_dot(to_dot(g));
    CHECK(dot.nodes == g.nodes.size());
    CHECK(dot.edges == g.arcs.size());
    CHECK(dot.edges_reference_declared);

    const auto svg = to_svg_schematic(g);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "class=\"arc\"") == g.arcs.size());
    CHECK(count(svg, "class=\"node\"") == g.nodes.size());
    std::size_t circles = 0;
    for (const auto& node : g.nodes) circles += node.su2_topology == Su2Topology::Circle;
    CHECK(count(svg, "<circle class=\"node\"") == circles);
  }
}

TEST_CASE("serialization is deterministic") {
  const GroupParams p(12, 18);
  const auto a = build_graph(p), b = build_graph(p);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_dot(a) == to_dot(b));
  CHECK(to_svg_schematic(a) == to_svg_schematic(b));
}

TEST_CASE("round12") {
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(round12(2.0) == 2.0);
  CHECK(round12(-1.93185165257813657) == -1.93185165258);
}

// tkchar: components, incidence graphs, representatives and sampling
// verification for G(m,n) = <x, y | x^m = y^n>.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tkchar/components.hpp"
#include "tkchar/incidence_graph.hpp"
#include "tkchar/oracle.hpp"
#include "tkchar/rep_builder.hpp"

namespace {

using namespace tkchar;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  int m = 0;
  int n = 0;
  std::string format = "text";
  std::string output;
  // rep
  int k = 0;
  int kp = 0;
  double t = 0.5;
  bool reducible = false;
  std::string t_angle = "0/1";
  int index = 0;
  std::string words = "x,y,xy,xY,xyXY";
  // verify
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double reducible_fraction = 0.2;
};

double global_tolerance() {
  if (const char* env = std::getenv("TKCHAR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw UsageError("TKCHAR_TOL must be a positive number");
    return v;
  }
  return kDefaultTol;
}

std::string num12(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string complex12(std::complex<double> z) {
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) return num12(z.real());
  return num12(z.real()) + (im < 0 ? "-" : "+") + num12(std::abs(im)) + "i";
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not available for this subcommand");
}

// --- components -------------------------------------------------------------

std::string reducible_summary(const std::vector<ComponentInfo>& nodes) {
  std::string list;
  for (const ComponentInfo& info : nodes) {
    if (!list.empty()) list += ", ";
    list += info.su2_topology == Su2Topology::Circle ? "S^1" : "[-2,2]";
  }
  return std::to_string(nodes.size()) + " reducible (" + list + ")";
}

int cmd_components(const CliConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const GroupParams p(cfg.m, cfg.n);
  const IncidenceGraph g = build_graph(p);
  if (cfg.format == "json") {
    ordered_json j = ordered_json::parse(to_json(g));
    j["counts"] = {{"reducible", g.nodes.size()}, {"irreducible", count_irr(p)}};
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      j["nodes"][i]["sl2c_topology"] = to_string(g.nodes[i].sl2c_topology);
    }
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      const Arc& arc = g.arcs[i];
      j["arcs"][i]["topology"] = to_string(Su2Topology::OpenInterval);
      j["arcs"][i]["sl2c_topology"] = to_string(Sl2cTopology::ThricePuncturedLine);
      j["arcs"][i]["lambda"] = {{"num", arc.eigen.lambda.num()}, {"den", arc.eigen.lambda.den()}};
      j["arcs"][i]["mu"] = {{"num", arc.eigen.mu.num()}, {"den", arc.eigen.mu.den()}};
    }
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  const int irr = count_irr(p);
  os << "G(" << p.m() << "," << p.n() << "): d=" << p.d() << ", a=" << p.a() << ", b=" << p.b()
     << "\n";
  os << reducible_summary(g.nodes) << ", " << irr << " irreducible interval" << (irr == 1 ? "" : "s")
     << "\n";
  for (const ComponentInfo& info : g.nodes) {
    os << "  " << to_string(info.id) << "  SU(2): " << to_string(info.su2_topology)
       << "  SL(2,C): " << to_string(info.sl2c_topology) << "\n";
  }
  for (const Arc& arc : g.arcs) {
    os << "  " << to_string(arc.id) << "  SU(2): open-interval  SL(2,C): thrice-punctured-line"
       << "  lambda=" << arc.eigen.lambda.to_string() << "  mu=" << arc.eigen.mu.to_string()
       << "  joins " << to_string(arc.r_zero.node) << " (s=" << num12(arc.r_zero.s) << ") -- "
       << to_string(arc.r_infinity.node) << " (s=" << num12(arc.r_infinity.s) << ")\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

// --- graph ------------------------------------------------------------------

int cmd_graph(const CliConfig& cfg) {
  const std::string format = cfg.format == "text" ? "json" : cfg.format;
  if (format != "json" && format != "dot" && format != "svg") {
    throw UsageError("graph: format must be json, dot or svg");
  }
  const IncidenceGraph g = build_graph(GroupParams(cfg.m, cfg.n));
  emit(cfg, format == "json" ? to_json(g) : format == "dot" ? to_dot(g) : to_svg_schematic(g));
  return kExitOk;
}

// --- rep --------------------------------------------------------------------

RootOfUnity parse_angle(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return root(std::stoll(text), 1);
    return root(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("--t-angle expects c/N (t = e^(i*pi*c/N)), got '" + text + "'");
  }
}

ordered_json matrix_json(const Mat2d& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < 2; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 2; ++c) row.push_back({round12(m(r, c).real()), round12(m(r, c).imag())});
    rows.push_back(row);
  }
  return rows;
}

int cmd_rep(const CliConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const GroupParams p(cfg.m, cfg.n);
  std::vector<Word> words;
  try {
    words = parse_word_list(cfg.words);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  RepPaird rep;
  std::string label;
  if (cfg.reducible) {
    if (cfg.index < 0 || cfg.index >= p.d()) throw UsageError("--index must lie in [0, d)");
    const RootOfUnity t = parse_angle(cfg.t_angle);
    rep = build_red_noncoprime(p, cfg.index, t);
    label = "reducible chart i=" + std::to_string(cfg.index) + " t=" + t.to_string();
  } else {
    if (!is_admissible(p, cfg.k, cfg.kp)) throw UsageError(to_string(IrrId{cfg.k, cfg.kp}) + " is not a component");
    if (!(cfg.t > 0 && cfg.t < 1)) throw UsageError("-t must lie in (0, 1)");
    rep = build_irr(p, cfg.k, cfg.kp, cfg.t);
    label = to_string(IrrId{cfg.k, cfg.kp}) + " t=" + num12(cfg.t) + " r=" + num12(cfg.t / (cfg.t - 1));
  }
  const auto chi = character(rep, words);

  if (cfg.format == "json") {
    ordered_json j;
    j["params"] = {{"m", p.m()}, {"n", p.n()}, {"d", p.d()}};
    j["point"] = label;
    j["A"] = matrix_json(rep.A.matrix());
    j["B"] = matrix_json(rep.B.matrix());
    j["relation_residual"] = round12(relation_residual(p, rep));
    j["characters"] = ordered_json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
      j["characters"].push_back({{"word", words[i].to_string()},
                                 {"re", round12(chi[i].real())},
                                 {"im", round12(chi[i].imag())}});
    }
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "G(" << p.m() << "," << p.n() << ") " << label << "\n";
  for (const auto& [name, m] : {std::pair{"A", rep.A.matrix()}, std::pair{"B", rep.B.matrix()}}) {
    os << name << " = [[" << complex12(m(0, 0)) << ", " << complex12(m(0, 1)) << "], ["
       << complex12(m(1, 0)) << ", " << complex12(m(1, 1)) << "]]\n";
  }
  os << "|A^m - B^n| = " << num12(relation_residual(p, rep)) << "\n";
  for (std::size_t i = 0; i < words.size(); ++i) {
    os << "chi(" << (words[i].empty() ? "1" : words[i].to_string()) << ") = " << complex12(chi[i]) << "\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const CliConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("verify: format must be json");
  if (cfg.samples < 1) throw UsageError("-N must be >= 1");
  if (!(cfg.reducible_fraction >= 0 && cfg.reducible_fraction <= 1)) {
    throw UsageError("--reducible-fraction must lie in [0, 1]");
  }
  SampleConfig sc(GroupParams(cfg.m, cfg.n));
  sc.sample_count = cfg.samples;
  sc.seed = cfg.seed;
  sc.reducible_fraction = cfg.reducible_fraction;
  sc.threads = cfg.threads;
  sc.tol = global_tolerance();
  const EmpiricalSummary summary = empirical_structure(sc);
  emit(cfg, to_json(summary));
  return summary.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties of G(m,n) = <x, y | x^m = y^n>: components, incidence graphs, "
               "representatives and sampling verification"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("-m", cfg.m, "exponent of x")->required();
    sub->add_option("-n", cfg.n, "exponent of y")->required();
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };

  auto* components = app.add_subcommand("components", "list reducible and irreducible components");
  add_common(components);
  components->add_option("--format", cfg.format, "text or json");

  auto* graph = app.add_subcommand("graph", "emit the incidence graph of Y");
  add_common(graph);
  graph->add_option("--format", cfg.format, "json, dot or svg (default json)");

  auto* rep = app.add_subcommand("rep", "build a representative pair and evaluate characters");
  add_common(rep);
  rep->add_option("-k", cfg.k, "exponent of lambda = e^(i*pi*k/m)");
  rep->add_option("--kp", cfg.kp, "exponent of mu = e^(i*pi*k'/n)");
  rep->add_option("-t", cfg.t, "irreducible parameter t = |b|^2 in (0, 1)");
  rep->add_flag("--red", cfg.reducible, "build a reducible (diagonal) pair instead");
  rep->add_option("--t-angle", cfg.t_angle, "reducible parameter t = e^(i*pi*c/N), given as c/N");
  rep->add_option("--index", cfg.index, "raw reducible chart index i in [0, d)");
  rep->add_option("--words", cfg.words, "comma-separated words over x, y, X, Y");
  rep->add_option("--format", cfg.format, "text or json");

  auto* verify = app.add_subcommand("verify", "sample, classify and compare with the incidence graph");
  add_common(verify);
  verify->add_option("-N,--samples", cfg.samples, "number of samples");
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  verify->add_option("--threads", cfg.threads, "worker threads (output does not depend on it)");
  verify->add_option("--reducible-fraction", cfg.reducible_fraction, "share of reducible draws");
  verify->add_option("--format", cfg.format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*components) return cmd_components(cfg);
    if (*graph) return cmd_graph(cfg);
    if (*rep) return cmd_rep(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

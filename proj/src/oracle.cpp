#include "tkchar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tkchar/errors.hpp"
#include "tkchar/incidence_graph.hpp"

namespace tkchar {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kPi = std::numbers::pi;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double wrap(double angle) { return std::remainder(angle, 2 * kPi); }

double circular_distance(double x, double y) { return std::abs(wrap(x - y)); }

Mat2d diag(std::complex<double> z) {
  Mat2d m = Mat2d::Zero();
  m(0, 0) = z;
  m(1, 1) = std::conj(z);
  return m;
}

double max_abs_diff(const std::vector<std::complex<double>>& x,
                    const std::vector<std::complex<double>>& y) {
  double out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) out = std::max(out, std::abs(x[i] - y[i]));
  return out;
}

// Eigenvalue angles (lambda, mu) of a commuting pair in a common eigenbasis.
std::pair<double, double> common_eigen_angles(const Mat2d& A, const Mat2d& B, double tol) {
  const double gap_a = distance_to_center(A), gap_b = distance_to_center(B);
  if (std::max(gap_a, gap_b) <= tol) {
    return {std::arg(A.trace() / 2.0), std::arg(B.trace() / 2.0)};
  }
  const auto eig = eigen_decompose(gap_a >= gap_b ? A : B, tol);
  const Vec2d v = eig.e1.v.normalized();
  return {std::arg(v.dot(A * v)), std::arg(v.dot(B * v))};
}

ClassifiedPoint classify_reducible(const GroupParams& p, const Mat2d& A, const Mat2d& B,
                                   double tol, double relation) {
  auto [theta_l, theta_m] = common_eigen_angles(A, B, tol);
  const int d = p.d();
  const double turns = wrap(p.a() * theta_l - p.b() * theta_m) * d / (2 * kPi);
  const int raw = static_cast<int>(mod_floor(std::lround(turns), d));
  const int index = fold_index(p, raw);
  if (index != raw) {
    theta_l = -theta_l;
    theta_m = -theta_m;
  }
  const Bezout bz = extended_gcd(p.b(), p.a());
  const double alpha = reducible_alpha(p, index).angle();
  auto chart = [&](double tl, double tm) { return wrap(bz.x * tl + bz.y * (alpha + tm)); };

  double theta_t = chart(theta_l, theta_m);
  double coordinate;
  if (is_interval_node(p, index)) {
    const double gamma = reducible_center(p, index).angle();
    double centered = wrap(theta_t - gamma);
    if (centered < 0) {
      theta_t = chart(-theta_l, -theta_m);
      centered = wrap(theta_t - gamma);
    }
    coordinate = std::abs(centered);
  } else {
    coordinate = theta_t < 0 ? theta_t + 2 * kPi : theta_t;
  }

  const auto t = std::polar(1.0, theta_t);
  const RepPaird rebuilt = build_red_noncoprime(p, index, t);
  const auto words = default_words();
  const double residual =
      max_abs_diff(character(A, B, words), character(rebuilt.A.matrix(), rebuilt.B.matrix(), words));
  return {RedId{index}, coordinate, t, relation, residual};
}

int decode_exponent(std::complex<double> trace, int m, const char* which) {
  const double radius = trace_decode_radius(m);
  std::vector<int> candidates;
  for (int k = 1; k < m; ++k) {
    if (std::abs(trace - 2.0 * std::cos(kPi * k / m)) <= radius) candidates.push_back(k);
  }
  if (candidates.size() > 1) {
    throw AmbiguityError(std::string("classify: ambiguous exponent for ") + which, candidates);
  }
  if (candidates.empty()) {
    throw NoSolutionError(std::string("classify: trace of ") + which +
                          " is not 2cos(pi k/m) for an admissible k");
  }
  return candidates.front();
}

ClassifiedPoint classify_irreducible(const GroupParams& p, const Mat2d& A, const Mat2d& B,
                                     double tol, double relation) {
  const int k = decode_exponent(A.trace(), p.m(), "A");
  const int kp = decode_exponent(B.trace(), p.n(), "B");
  if ((k - kp) % 2 != 0) {
    throw NoSolutionError("classify: decoded exponents " + to_string(IrrId{k, kp}) +
                          " have different parity");
  }
  const std::complex<double> r = eigenvector_cross_ratio(A, B, tol);
  const double t = (r / (r - 1.0)).real();
  const double residual = std::max({std::abs(A.trace() - 2.0 * std::cos(kPi * k / p.m())),
                                    std::abs(B.trace() - 2.0 * std::cos(kPi * kp / p.n())),
                                    std::abs(r.imag())});
  return {IrrId{k, kp}, t, {}, relation, residual};
}

struct Partial {
  std::map<ComponentId, std::int64_t> counts;
  std::int64_t failures = 0;
  double max_relation = 0.0;
  double max_classification = 0.0;
  std::map<IrrId, std::array<EndpointObservation, 2>> endpoints;

  void merge(const Partial& other) {
    for (const auto& [id, c] : other.counts) counts[id] += c;
    failures += other.failures;
    max_relation = std::max(max_relation, other.max_relation);
    max_classification = std::max(max_classification, other.max_classification);
    for (const auto& [id, sides] : other.endpoints) {
      auto& mine = endpoints[id];
      for (int s = 0; s < 2; ++s) {
        mine[s].samples += sides[s].samples;
        mine[s].nodes.insert(sides[s].nodes.begin(), sides[s].nodes.end());
        mine[s].max_error = std::max(mine[s].max_error, sides[s].max_error);
        mine[s].any_mismatch = mine[s].any_mismatch || sides[s].any_mismatch;
      }
    }
  }
};

// A sample near an end of its arc: drop the off-diagonal part of B in A's
// eigenbasis and snap both eigenvalues to the 2m-th / 2n-th roots of unity
// that every arc end carries (A^m = B^n = +-Id). Then decode that reducible
// pair and compare with the graph.
void observe_limit(const GroupParams& p, const RepPaird& rep, const Arc& arc, int side,
                   double tol, EndpointObservation& obs) {
  ++obs.samples;
  try {
    const Mat2d A = rep.A.matrix(), B = rep.B.matrix();
    const Vec2d v = eigen_decompose(A, tol).e1.v.normalized();
    const double tl = std::arg(v.dot(A * v)), tm = std::arg(v.dot(B * v));
    const long jl = std::lround(tl * p.m() / kPi), jm = std::lround(tm * p.n() / kPi);
    const ClassifiedPoint lim = classify(p, diag(std::polar(1.0, kPi * jl / p.m())),
                                         diag(std::polar(1.0, kPi * jm / p.n())), tol);
    const int node = std::get<RedId>(lim.id).index;
    obs.nodes.insert(node);
    const AttachmentPoint& expected = side == 0 ? arc.r_zero : arc.r_infinity;
    if (node != expected.node.index) {
      obs.any_mismatch = true;
      return;
    }
    obs.max_error = std::max(obs.max_error,
                             circular_distance(lim.coordinate, node_angle(p, expected.coord)));
  } catch (const std::exception&) {
    obs.any_mismatch = true;
  }
}

Partial run_range(const SampleConfig& cfg, const IncidenceGraph& graph, std::int64_t begin,
                  std::int64_t end) {
  Partial part;
  std::map<IrrId, const Arc*> arcs;
  for (const Arc& arc : graph.arcs) arcs[arc.id] = &arc;
  for (std::int64_t i = begin; i < end; ++i) {
    const Sample s = sample_at(cfg, static_cast<std::uint64_t>(i));
    ClassifiedPoint cp;
    try {
      cp = classify(cfg.params, s.rep, cfg.tol);
    } catch (const std::exception&) {
      ++part.failures;
      continue;
    }
    ++part.counts[cp.id];
    part.max_relation = std::max(part.max_relation, cp.relation_residual);
    part.max_classification = std::max(part.max_classification, cp.classification_residual);
    if (const auto* irr = std::get_if<IrrId>(&cp.id)) {
      const int side = cp.coordinate < kNearLimit ? 0 : cp.coordinate > 1 - kNearLimit ? 1 : -1;
      const auto it = arcs.find(*irr);
      if (side >= 0 && it != arcs.end()) {
        observe_limit(cfg.params, s.rep, *it->second, side, cfg.tol, part.endpoints[*irr][side]);
      }
    }
  }
  return part;
}

}  // namespace

// --- SampleStream -----------------------------------------------------------

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix64(seed) ^ mix64(stream_id + kGolden)) {}

std::uint64_t SampleStream::next_u64() { return mix64(state_ += kGolden); }

double SampleStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SampleStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double SampleStream::normal() {
  const double u1 = uniform_open(), u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * kPi * u2);
}

std::uint64_t SampleStream::below(std::uint64_t bound) {
  return std::min(bound - 1, static_cast<std::uint64_t>(uniform() * static_cast<double>(bound)));
}

UnitaryMatrixd haar_unitary(SampleStream& rng) {
  while (true) {
    const double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
    const double norm = std::sqrt(w * w + x * x + y * y + z * z);
    if (norm > 1e-12) {
      return UnitaryMatrixd::from_quaternion({w / norm, x / norm}, {y / norm, z / norm});
    }
  }
}

// --- sampling ---------------------------------------------------------------

Sample sample_pair(const SampleConfig& cfg, SampleStream& rng) {
  const GroupParams& p = cfg.params;
  Sample s{};
  if (rng.uniform() < cfg.reducible_fraction) {
    const int raw = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.d())));
    const double theta = 2 * kPi * rng.uniform() - kPi;
    const auto t = std::polar(1.0, theta);
    s.rep = p.coprime() ? build_red_coprime(p, t) : build_red_noncoprime(p, raw, t);
    s.source = RedId{fold_index(p, raw)};
    s.parameter = theta;
    s.raw_index = raw;
  } else {
    const auto irr = enumerate_irr(p);
    const IrrId id = irr[rng.below(irr.size())];
    const double t = rng.uniform_open();
    s.rep = build_irr(p, id.k, id.kp, t);
    s.source = id;
    s.parameter = t;
  }
  s.rep = conjugate_pair(s.rep, haar_unitary(rng));
  return s;
}

Sample sample_at(const SampleConfig& cfg, std::uint64_t index) {
  SampleStream rng(cfg.seed, index);
  return sample_pair(cfg, rng);
}

// --- classification ---------------------------------------------------------

double trace_decode_radius(int m) {
  double gap = 4.0;
  for (int j = 0; j < m; ++j) {
    gap = std::min(gap, std::abs(2.0 * std::cos(kPi * j / m) - 2.0 * std::cos(kPi * (j + 1) / m)));
  }
  return gap / 2.0;
}

ClassifiedPoint classify(const GroupParams& p, const Mat2d& A, const Mat2d& B, double tol) {
  const double relation = relation_residual(p, A, B);
  if (!(relation < 1e-6)) {
    throw std::invalid_argument("classify: A^m != B^n (residual " + std::to_string(relation) + ")");
  }
  if (is_reducible_pair(A, B, tol)) return classify_reducible(p, A, B, tol, relation);
  return classify_irreducible(p, A, B, tol, relation);
}

ClassifiedPoint classify(const GroupParams& p, const RepPaird& rep, double tol) {
  return classify(p, rep.A.matrix(), rep.B.matrix(), tol);
}

double character_distance(const RepPaird& first, const RepPaird& second,
                          const std::vector<Word>& words) {
  return max_abs_diff(character(first, words), character(second, words));
}

std::optional<UnitaryMatrixd> find_conjugator(const RepPaird& first, const RepPaird& second,
                                              double tol) {
  if (is_reducible_pair(first.A, first.B, tol) || is_reducible_pair(second.A, second.B, tol)) {
    throw std::invalid_argument("find_conjugator: reducible pairs are compared by character only");
  }
  if (character_distance(first, second) > 1e-8) return std::nullopt;

  // U = [e1 e2] is already in SU(2) because e2 is the Hermitian complement of e1.
  auto eigenbasis = [&](const UnitaryMatrixd& m) {
    const Vec2d e = eigen_decompose(m, tol).e1.v.normalized();
    return UnitaryMatrixd::from_quaternion(e(0), e(1));
  };
  const UnitaryMatrixd U1 = eigenbasis(first.A), U2 = eigenbasis(second.A);
  const Mat2d B1 = (U1.inverse() * first.B * U1).matrix();
  const Mat2d B2 = (U2.inverse() * second.B * U2).matrix();
  if (std::abs(B1(1, 0)) <= tol || std::abs(B2(1, 0)) <= tol) return std::nullopt;
  // diag(z, 1/z) B1 diag(1/z, z) has (1,0) entry B1(1,0) / z^2.
  std::complex<double> rho = B1(1, 0) / B2(1, 0);
  rho /= std::abs(rho);
  const UnitaryMatrixd D = diagonal(std::sqrt(rho));
  const UnitaryMatrixd P = U2 * D * U1.inverse();

  const RepPaird moved = conjugate_pair(first, P);
  const double residual = (moved.A.matrix() - second.A.matrix()).cwiseAbs().maxCoeff() +
                          (moved.B.matrix() - second.B.matrix()).cwiseAbs().maxCoeff();
  if (!(residual < 1e-7)) return std::nullopt;
  return P;
}

// --- empirical structure ----------------------------------------------------

int EmpiricalSummary::observed_reducible() const {
  return static_cast<int>(std::count_if(counts.begin(), counts.end(), [](const auto& kv) {
    return std::holds_alternative<RedId>(kv.first) && kv.second > 0;
  }));
}

int EmpiricalSummary::observed_irreducible() const {
  return static_cast<int>(std::count_if(counts.begin(), counts.end(), [](const auto& kv) {
    return std::holds_alternative<IrrId>(kv.first) && kv.second > 0;
  }));
}

EmpiricalSummary empirical_structure(const SampleConfig& cfg) {
  if (cfg.sample_count < 1) throw std::invalid_argument("empirical_structure: sample_count < 1");
  const IncidenceGraph graph = build_graph(cfg.params);

  const std::int64_t n = cfg.sample_count;
  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n)));
  std::vector<Partial> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = run_range(cfg, graph, n * w / workers, n * (w + 1) / workers);
      });
    }
  }
  Partial total;
  for (const Partial& part : parts) total.merge(part);

  EmpiricalSummary out(cfg.params);
  out.seed = cfg.seed;
  out.sample_count = cfg.sample_count;
  out.reducible_fraction = cfg.reducible_fraction;
  for (const Word& w : cfg.words) out.words.push_back(w.to_string());
  out.counts = total.counts;
  out.classification_failures = total.failures;
  out.max_relation_residual = total.max_relation;
  out.max_classification_residual = total.max_classification;
  out.endpoints = total.endpoints;

  std::set<ComponentId> expected, observed;
  for (const ComponentInfo& info : graph.nodes) expected.insert(info.id);
  for (const Arc& arc : graph.arcs) expected.insert(arc.id);
  for (const auto& [id, c] : out.counts) {
    if (c > 0) observed.insert(id);
  }
  out.components_agree = expected == observed;

  out.endpoints_agree = true;
  std::vector<int> parent(graph.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arc& arc : graph.arcs) {
    const auto it = out.endpoints.find(arc.id);
    if (it == out.endpoints.end()) {
      out.endpoints_agree = false;
      continue;
    }
    const std::array<int, 2> want = {arc.r_zero.node.index, arc.r_infinity.node.index};
    for (int s = 0; s < 2; ++s) {
      const EndpointObservation& obs = it->second[s];
      if (obs.samples == 0 || obs.any_mismatch || obs.nodes != std::set<int>{want[s]} ||
          obs.max_error > 1e-8) {
        out.endpoints_agree = false;
      }
    }
    const auto& sides = it->second;
    if (sides[0].nodes.size() == 1 && sides[1].nodes.size() == 1) {
      parent[find(*sides[0].nodes.begin())] = find(*sides[1].nodes.begin());
    }
  }
  out.connected = true;
  for (std::size_t i = 1; i < parent.size(); ++i) {
    if (find(static_cast<int>(i)) != find(0)) out.connected = false;
  }
  out.clean = out.classification_failures == 0 && out.max_relation_residual < 1e-9 &&
              out.max_classification_residual < 1e-6;
  return out;
}

std::string to_json(const EmpiricalSummary& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "tkchar-verify/1";
  j["params"] = {{"m", s.params.m()}, {"n", s.params.n()}, {"d", s.params.d()}};
  j["seed"] = s.seed;
  j["sample_count"] = s.sample_count;
  j["reducible_fraction"] = round12(s.reducible_fraction);
  j["words"] = s.words;
  j["counts"] = ordered_json::array();
  for (const auto& [id, c] : s.counts) j["counts"].push_back({{"id", to_string(id)}, {"count", c}});
  j["observed"] = {{"reducible", s.observed_reducible()}, {"irreducible", s.observed_irreducible()}};
  j["classification_failures"] = s.classification_failures;
  j["max_relation_residual"] = round12(s.max_relation_residual);
  j["max_classification_residual"] = round12(s.max_classification_residual);
  j["endpoints"] = ordered_json::array();
  for (const auto& [id, sides] : s.endpoints) {
    ordered_json e = {{"k", id.k}, {"kp", id.kp}};
    const char* names[2] = {"r_zero", "r_infinity"};
    for (int side = 0; side < 2; ++side) {
      ordered_json nodes = ordered_json::array();
      for (int node : sides[side].nodes) nodes.push_back(to_string(RedId{node}));
      e[names[side]] = {{"samples", sides[side].samples},
                        {"nodes", nodes},
                        {"max_error", round12(sides[side].max_error)},
                        {"mismatch", sides[side].any_mismatch}};
    }
    j["endpoints"].push_back(e);
  }
  j["agreement"] = {{"components", s.components_agree},
                    {"endpoints", s.endpoints_agree},
                    {"connected", s.connected},
                    {"clean", s.clean}};
  j["ok"] = s.ok();
  return j.dump(2) + "\n";
}

}  // namespace tkchar

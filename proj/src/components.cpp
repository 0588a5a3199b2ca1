#include "tkchar/components.hpp"

#include <numeric>
#include <stdexcept>

#include "tkchar/errors.hpp"

namespace tkchar {

GroupParams::GroupParams(int m, int n) : m_(m), n_(n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("G(m,n) needs m, n >= 2; got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  }
  d_ = std::gcd(m, n);
  a_ = m / d_;
  b_ = n / d_;
}

std::string to_string(const RedId& id) { return "Red(" + std::to_string(id.index) + ")"; }

std::string to_string(const IrrId& id) {
  return "Irr(" + std::to_string(id.k) + "," + std::to_string(id.kp) + ")";
}

std::string to_string(const ComponentId& id) {
  return std::visit([](const auto& v) { return to_string(v); }, id);
}

std::string to_string(Su2Topology t) {
  switch (t) {
    case Su2Topology::ClosedInterval: return "closed-interval";
    case Su2Topology::Circle: return "circle";
    case Su2Topology::OpenInterval: return "open-interval";
  }
  return "?";
}

std::string to_string(Sl2cTopology t) {
  switch (t) {
    case Sl2cTopology::ComplexLine: return "complex-line";
    case Sl2cTopology::PuncturedComplexLine: return "punctured-complex-line";
    case Sl2cTopology::ThricePuncturedLine: return "thrice-punctured-line";
  }
  return "?";
}

bool is_admissible(const GroupParams& p, int k, int kp) {
  return 0 < k && k < p.m() && 0 < kp && kp < p.n() && (k - kp) % 2 == 0;
}

std::vector<IrrId> enumerate_irr(const GroupParams& p) {
  std::vector<IrrId> out;
  for (int k = 1; k < p.m(); ++k) {
    for (int kp = 1 + (k + 1) % 2; kp < p.n(); kp += 2) out.push_back({k, kp});
  }
  return out;
}

int count_irr(const GroupParams& p) {
  const int prod = (p.m() - 1) * (p.n() - 1);
  if (p.m() % 2 == 0 && p.n() % 2 == 0) return (prod + 1) / 2;
  return prod / 2;
}

int fold_index(const GroupParams& p, int raw) {
  const int i = static_cast<int>(mod_floor(raw, p.d()));
  return std::min(i, (p.d() - i) % p.d());
}

bool is_interval_node(const GroupParams& p, int canonical_index) {
  return canonical_index == 0 || 2 * canonical_index == p.d();
}

std::vector<ComponentInfo> enumerate_red(const GroupParams& p) {
  std::vector<ComponentInfo> out;
  for (int i = 0; 2 * i <= p.d(); ++i) {
    const bool interval = is_interval_node(p, i);
    out.push_back({RedId{i}, interval ? Su2Topology::ClosedInterval : Su2Topology::Circle,
                   interval ? Sl2cTopology::ComplexLine : Sl2cTopology::PuncturedComplexLine,
                   std::nullopt});
  }
  return out;
}

ComponentInfo describe_irr(const GroupParams& p, IrrId id) {
  if (!is_admissible(p, id.k, id.kp)) {
    throw std::invalid_argument(to_string(id) + " is not a component of G(" +
                                std::to_string(p.m()) + "," + std::to_string(p.n()) + ")");
  }
  return {id, Su2Topology::OpenInterval, Sl2cTopology::ThricePuncturedLine,
          EigenPair{root(id.k, p.m()), root(id.kp, p.n())}};
}

Attachment attachment(const GroupParams& p, int k, int kp) {
  if (!is_admissible(p, k, kp)) {
    throw std::invalid_argument("attachment: " + to_string(IrrId{k, kp}) + " is not admissible");
  }
  const int i0 = static_cast<int>(mod_floor((k - kp) / 2, p.d()));
  const int i1 = static_cast<int>(mod_floor((k + kp) / 2, p.d()));
  return {i0, i1, fold_index(p, i0), fold_index(p, i1)};
}

IrrId joining_component(const GroupParams& p, int i0, int i1) {
  if (!(0 <= i0 && i0 < i1 && 2 * i1 <= p.d())) {
    throw std::invalid_argument("joining_component: need 0 <= i0 < i1 <= d/2");
  }
  return {p.d() + i0 - i1, p.d() - i0 - i1};
}

std::vector<SelfLoop> self_loops(const GroupParams& p) {
  std::vector<SelfLoop> out;
  for (const IrrId& id : enumerate_irr(p)) {
    const Attachment at = attachment(p, id.k, id.kp);
    if (at.i0_canonical == at.i1_canonical) out.push_back({id, at.i0_canonical});
  }
  return out;
}

// --- reducible chart ------------------------------------------------------

RootOfUnity reducible_alpha(const GroupParams& p, int raw_index) {
  const std::int64_t dab = std::int64_t{p.d()} * p.a() * p.b();
  return root(2 * std::int64_t{p.a()} * mod_floor(raw_index, p.d()), dab);
}

RootOfUnity reducible_center(const GroupParams& p, int canonical_index) {
  if (canonical_index == 0) return {};
  if (2 * canonical_index != p.d()) {
    throw std::invalid_argument("reducible_center: Red(" + std::to_string(canonical_index) +
                                ") is a circle node");
  }
  // gamma^2 = beta with beta^b = 1 and beta^a = alpha_{d/2}^2 = e^{2 pi i/b}.
  const std::int64_t a_inv = p.b() == 1 ? 0 : mod_floor(extended_gcd(p.a(), p.b()).x, p.b());
  return root(a_inv, p.b());
}

int reducible_index(const GroupParams& p, const EigenPair& eig) {
  const RootOfUnity x = pow(eig.lambda, p.a()) * pow(eig.mu, -p.b());
  if (pow(x, p.d()) != RootOfUnity{}) {
    throw NoSolutionError("reducible_index: lambda^m != mu^n");
  }
  // x = e^{i pi c/N} = e^{2 pi i j/d}  =>  j = c d / (2N)
  return static_cast<int>(x.num() * p.d() / (2 * x.den()));
}

RootOfUnity reducible_parameter(const GroupParams& p, const EigenPair& eig) {
  const int i = reducible_index(p, eig);
  const Bezout bz = extended_gcd(p.b(), p.a());  // u b + v a = 1
  return pow(eig.lambda, bz.x) * pow(reducible_alpha(p, i) * eig.mu, bz.y);
}

ReducibleCoordinate canonical_reducible(const GroupParams& p, const EigenPair& eig) {
  ReducibleCoordinate c{};
  c.raw_index = reducible_index(p, eig);
  c.raw_t = reducible_parameter(p, eig);
  c.index = fold_index(p, c.raw_index);
  const EigenPair inverted{conj(eig.lambda), conj(eig.mu)};
  c.folded = c.index != c.raw_index;
  c.t = c.folded ? reducible_parameter(p, inverted) : c.raw_t;
  if (is_interval_node(p, c.index)) {
    const RootOfUnity gamma = reducible_center(p, c.index);
    const RootOfUnity centered = c.t * conj(gamma);
    if (centered.num() > centered.den()) {
      c.folded = !c.folded;
      c.t = reducible_parameter(p, c.folded ? inverted : eig);
    }
  }
  return c;
}

double node_angle(const GroupParams& p, const ReducibleCoordinate& c) {
  if (is_interval_node(p, c.index)) {
    return (c.t * conj(reducible_center(p, c.index))).angle();
  }
  return c.t.angle();
}

double node_s(const GroupParams& p, const ReducibleCoordinate& c) {
  if (is_interval_node(p, c.index)) return 2.0 * std::cos(node_angle(p, c));
  return 2.0 * c.t.to_complex().real();
}

}  // namespace tkchar

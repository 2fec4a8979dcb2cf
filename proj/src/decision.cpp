#include "cayci/decision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cayci/intlin.hpp"

namespace cayci {

const char* to_string(CiReason reason) {
  switch (reason) {
    case CiReason::N1Rigidity: return "N1_RIGIDITY";
    case CiReason::ComponentsInfinite: return "COMPONENTS_INFINITE";
    case CiReason::ComponentsNotSquarefree: return "COMPONENTS_NOT_SQUAREFREE";
    case CiReason::IndexObstruction: return "INDEX_OBSTRUCTION";
    case CiReason::ProductConditionHolds: return "PRODUCT_CONDITION_HOLDS";
    case CiReason::ProductConditionFails: return "PRODUCT_CONDITION_FAILS";
  }
  return "?";
}

const char* to_string(IsoKind kind) {
  switch (kind) {
    case IsoKind::Ambient: return "AMBIENT_AUTOMORPHISM";
    case IsoKind::Componentwise: return "COMPONENTWISE";
    case IsoKind::None: return "NONE";
  }
  return "?";
}

const char* to_string(Linearity result) {
  switch (result) {
    case Linearity::Linear: return "LINEAR";
    case Linearity::NotLinear: return "NOT_LINEAR";
    case Linearity::NotDetermined: return "NOT_DETERMINED";
  }
  return "?";
}

namespace {

/// The component map of a valid witness, or nullopt when S' fails the contract.
std::optional<IntMatrix> check_witness(const ConnectionSet& s, const ConnectionSet& s_prime, std::stop_token stop) {
  if (s.dim() != s_prime.dim() || s.mode() != s_prime.mode()) return std::nullopt;
  const Lattice h = generated_lattice(s);
  const Lattice h_prime = generated_lattice(s_prime);
  if (h.rank() != h_prime.rank() || !(index(h) == index(h_prime))) return std::nullopt;
  std::optional<IntMatrix> component_map;
  bool ambient = false;
  for_each_transporter(
      h, s, h_prime, s_prime,
      [&](const IntMatrix& f) {
        if (!component_map) component_map = f;
        ambient = ambient_extension(h, h_prime, f).has_value();
        return ambient;
      },
      stop);
  if (ambient) return std::nullopt;
  return component_map;
}

/// S' = Y diag(new_factors) diag(factors)^{-1} Y^{-1} S.
ConnectionSet rescale_factors(const ConnectionSet& s, const SimultaneousBasis& sb,
                              const std::vector<Integer>& new_factors) {
  std::vector<IntVector> image;
  for (const auto& v : s.vectors()) {
    IntVector w = sb.y_inverse * v;
    for (Index i = 0; i < w.size(); ++i) {
      if (i < static_cast<Index>(sb.factors.size())) {
        if (w(i) % sb.factors[i] != 0) throw std::logic_error("rescale_factors: vector outside the lattice");
        w(i) = w(i) / sb.factors[i] * new_factors[i];
      }
    }
    image.push_back(sb.y * w);
  }
  return ConnectionSet::validate(std::move(image), s.dim(), s.mode());
}

unsigned valuation(Integer x, const Integer& p) {
  unsigned e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

Integer power(const Integer& p, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

std::optional<ConnectionSet> doubled_direction(const ConnectionSet& s) {
  const auto sb = simultaneous_basis(generated_lattice(s));
  auto factors = sb.factors;
  factors[0] *= 2;
  return rescale_factors(s, sb, factors);
}

std::optional<ConnectionSet> regrouped_prime_part(const ConnectionSet& s) {
  const Lattice h = generated_lattice(s);
  const auto sb = simultaneous_basis(h);
  const Integer k = index(h).value();
  for (const auto& p : prime_divisors(k)) {
    if (k % (p * p) != 0) continue;
    std::vector<unsigned> e;
    for (const auto& a : sb.factors) e.push_back(valuation(a, p));
    const auto nonzero = std::count_if(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    std::vector<unsigned> e_new(e.size(), 0);
    if (nonzero == 1) {
      const auto big = std::find_if(e.begin(), e.end(), [](unsigned x) { return x > 0; }) - e.begin();
      const auto free = std::find(e.begin(), e.end(), 0u) - e.begin();
      if (free == static_cast<std::ptrdiff_t>(e.size())) return std::nullopt;
      e_new[big] = e[big] - 1;
      e_new[free] = 1;
    } else {
      unsigned total = 0;
      for (auto x : e) total += x;
      e_new.back() = total;
    }
    std::vector<Integer> factors;
    for (std::size_t i = 0; i < e.size(); ++i) factors.push_back(sb.factors[i] / power(p, e[i]) * power(p, e_new[i]));
    return rescale_factors(s, sb, factors);
  }
  return std::nullopt;
}

struct QuotientFailure {
  ConnectionSet s_prime;
  IntMatrix tau;
};

std::optional<QuotientFailure> quotient_failure(const ConnectionSet& s, const CiVerdict& verdict,
                                                std::stop_token stop) {
  const Lattice h = generated_lattice(s);
  const auto frame = standard_frame(h);
  std::optional<IntMatrix> lift;
  if (verdict.coverage && verdict.coverage->uncovered_lift) {
    lift = verdict.coverage->uncovered_lift;
  } else {
    const int n = static_cast<int>(s.dim());
    const auto a = congruence_image(n, frame.k);
    ModMatrixSet b;
    for (const auto& tau : set_stabilizer(h, s, stop).elements)
      b.insert(ModMatrix::reduce(in_frame(frame, tau), a.k));
    const auto found = find_uncovered(a, sorted(b), stop);
    if (!found) return std::nullopt;
    lift = found->second;
  }
  return QuotientFailure{apply_in_frame(frame, *lift, s), out_of_frame(frame, *lift)};
}

}  // namespace

bool verify_non_ci_witness(const ConnectionSet& s, const ConnectionSet& s_prime, std::stop_token stop) {
  return check_witness(s, s_prime, stop).has_value();
}

std::optional<NonCiWitness> non_ci_witness(const ConnectionSet& s, const CiVerdict& verdict, std::stop_token stop) {
  if (verdict.is_ci) return std::nullopt;
  std::optional<ConnectionSet> s_prime;
  std::optional<IntMatrix> tau;
  switch (verdict.reason) {
    case CiReason::ComponentsInfinite:
      s_prime = doubled_direction(s);
      break;
    case CiReason::ComponentsNotSquarefree:
      s_prime = regrouped_prime_part(s);
      break;
    case CiReason::IndexObstruction:
    case CiReason::ProductConditionFails:
      if (auto failure = quotient_failure(s, verdict, stop)) {
        s_prime = failure->s_prime;
        tau = failure->tau;
      }
      break;
    default:
      break;
  }
  if (!s_prime) return std::nullopt;
  auto map = check_witness(s, *s_prime, stop);
  if (!map) return std::nullopt;
  return NonCiWitness{*s_prime, *map, tau};
}

CiVerdict decide_ci(const ConnectionSet& s, std::stop_token stop) {
  CiVerdict verdict;
  verdict.components = component_count(s);
  const int n = static_cast<int>(s.dim());
  if (n == 1) {
    verdict.is_ci = true;
    verdict.reason = CiReason::N1Rigidity;
    return verdict;
  }
  if (!verdict.components.is_finite()) {
    verdict.reason = CiReason::ComponentsInfinite;
    verdict.witness = non_ci_witness(s, verdict, stop);
    return verdict;
  }
  const Integer k = verdict.components.value();
  if (!is_square_free(k)) {
    verdict.reason = CiReason::ComponentsNotSquarefree;
    verdict.witness = non_ci_witness(s, verdict, stop);
    return verdict;
  }
  const Lattice h = generated_lattice(s);
  if (k > 1) {
    const Integer quotient_index = signed_quotient_order(n, k) / congruence_subgroup_order(n, k);
    const auto stabilizer_order = set_stabilizer(h, s, stop).order();
    if (Integer(stabilizer_order) < quotient_index) {
      verdict.reason = CiReason::IndexObstruction;
      verdict.index_bound.emplace(stabilizer_order, quotient_index);
      verdict.witness = non_ci_witness(s, verdict, stop);
      return verdict;
    }
  }
  auto product = product_condition(h, s, stop);
  verdict.coverage = product.certificate;
  if (product.holds) {
    verdict.is_ci = true;
    verdict.reason = CiReason::ProductConditionHolds;
    verdict.uncertain = product.certificate.uncertain;
    return verdict;
  }
  verdict.reason = CiReason::ProductConditionFails;
  verdict.witness = non_ci_witness(s, verdict, stop);
  verdict.uncertain = !verdict.witness.has_value();
  return verdict;
}

IsoWitness are_isomorphic(const ConnectionSet& s, const ConnectionSet& s_prime, std::stop_token stop) {
  if (s.dim() != s_prime.dim()) throw std::invalid_argument("are_isomorphic: dimension mismatch");
  if (s.mode() != s_prime.mode()) throw std::invalid_argument("are_isomorphic: mode mismatch");
  IsoWitness w;
  w.components = component_count(s);
  w.components_prime = component_count(s_prime);
  const Lattice h = generated_lattice(s);
  const Lattice h_prime = generated_lattice(s_prime);
  if (h.rank() != h_prime.rank() || s.size() != s_prime.size()) return w;
  const bool same_count = w.components == w.components_prime;
  for_each_transporter(
      h, s, h_prime, s_prime,
      [&](const IntMatrix& f) {
        if (!w.component_map) w.component_map = f;
        if (!same_count) return true;
        if (auto m = ambient_extension(h, h_prime, f)) {
          w.ambient = *m;
          w.component_map = f;
          return true;
        }
        return false;
      },
      stop);
  if (w.ambient)
    w.kind = IsoKind::Ambient;
  else if (w.component_map && same_count)
    w.kind = IsoKind::Componentwise;
  return w;
}

std::optional<int> z_iso_decide(const ConnectionSet& s, const ConnectionSet& s_prime) {
  if (s.dim() != 1 || s_prime.dim() != 1) throw std::invalid_argument("z_iso_decide: sets must lie in Z");
  if (s == s_prime) return 1;
  if (s.transformed(-identity_matrix(1)) == s_prime) return -1;
  return std::nullopt;
}

Linearity verify_linearity(const ConnectionSet& s, const VertexMap& phi, int radius) {
  if (radius < 2) throw std::invalid_argument("verify_linearity: radius must be at least 2");
  const Index n = s.dim();
  const FiniteGraph outer = ball(s, radius);
  std::set<Label> images;
  for (const auto& label : outer.labels()) {
    auto it = phi.find(label);
    if (it == phi.end()) throw std::invalid_argument("verify_linearity: map is not total on the ball");
    if (!outer.find(it->second)) throw std::invalid_argument("verify_linearity: image leaves the ball");
    images.insert(it->second);
  }
  if (images.size() != static_cast<std::size_t>(outer.order()))
    throw std::invalid_argument("verify_linearity: map is not injective");
  if (phi.at(Label(n, 0)) != Label(n, 0)) throw std::invalid_argument("verify_linearity: map does not fix 0");

  auto to_vector = [](const Label& l) {
    IntVector v(static_cast<Index>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i) v(static_cast<Index>(i)) = l[i];
    return v;
  };
  auto to_label = [](const IntVector& v) {
    Label l(static_cast<std::size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) l[static_cast<std::size_t>(i)] = to_int64(v(i));
    return l;
  };

  const Lattice h = generated_lattice(s);
  const Index r = h.rank();
  IntMatrix x_basis(r, 0), y_basis(n, 0);
  for (const auto& v : s.vectors()) {
    if (x_basis.cols() == r) break;
    IntMatrix trial(r, x_basis.cols() + 1);
    trial << x_basis, *coordinates(h, v);
    if (rank<Integer>(trial) != trial.cols()) continue;
    x_basis = trial;
    IntMatrix y_trial(n, y_basis.cols() + 1);
    y_trial << y_basis, to_vector(phi.at(to_label(v)));
    y_basis = y_trial;
  }
  if (rank<Integer>(y_basis) < r) return Linearity::NotDetermined;
  const RatMatrix linear = to_rational(y_basis) * *rational_inverse(to_rational(x_basis));

  const FiniteGraph inner = ball(s, radius - 1);
  for (const auto& label : inner.labels()) {
    const RatVector image = linear * to_rational(IntMatrix(*coordinates(h, to_vector(label))));
    const auto integral = to_integer(RatMatrix(image));
    if (!integral || !equal(*integral, IntMatrix(to_vector(phi.at(label))))) return Linearity::NotLinear;
  }
  return Linearity::Linear;
}

}  // namespace cayci

#include "cayci/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "cayci/intlin.hpp"

namespace cayci {

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

bool SymmetryGroup::contains(const IntMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), m, matrix_less);
}

namespace {

using VectorSet = std::set<IntVector, LexLess>;

/// Coordinates of every vector with respect to the lattice basis; throws when
/// one of them is outside the lattice.
std::vector<IntVector> coordinate_list(const Lattice& lattice, const std::vector<IntVector>& vectors) {
  const auto s = snf<Integer>(lattice.basis());
  std::vector<IntVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    const IntVector c = s.U * v;
    IntVector y = IntVector::Zero(lattice.rank());
    for (Index i = 0; i < c.size(); ++i) {
      if (i < s.rank) {
        if (c(i) % s.D(i, i) != 0) throw std::invalid_argument("vector " + to_string(v) + " is outside the lattice");
        y(i) = c(i) / s.D(i, i);
      } else if (c(i) != 0) {
        throw std::invalid_argument("vector " + to_string(v) + " is outside the lattice");
      }
    }
    out.push_back(s.V * y);
  }
  return out;
}

void require_span(const Lattice& lattice, const ConnectionSet& s, const char* what) {
  if (s.dim() != lattice.ambient_dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  if (!(generated_lattice(s) == lattice))
    throw std::invalid_argument(std::string(what) + ": connection set does not span the lattice");
}

struct Signature {
  bool negation;
  std::size_t sums;
  std::size_t differences;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const std::vector<IntVector>& coords, const VectorSet& set) {
  std::vector<Signature> out;
  for (const auto& x : coords) {
    Signature sig{set.count(IntVector(-x)) > 0, 0, 0};
    for (const auto& t : coords) {
      if (set.count(IntVector(x + t))) ++sig.sums;
      if (set.count(IntVector(x - t))) ++sig.differences;
    }
    out.push_back(sig);
  }
  return out;
}

}  // namespace

void for_each_transporter(const Lattice& from, const ConnectionSet& s, const Lattice& to,
                          const ConnectionSet& s_prime, const std::function<bool(const IntMatrix&)>& visit,
                          std::stop_token stop) {
  require_span(from, s, "transporter");
  require_span(to, s_prime, "transporter");
  if (from.rank() != to.rank() || s.size() != s_prime.size()) return;
  const Index r = from.rank();

  const auto xs = coordinate_list(from, s.vectors());
  const auto ys = coordinate_list(to, s_prime.vectors());
  const VectorSet x_set(xs.begin(), xs.end());
  const VectorSet y_set(ys.begin(), ys.end());
  const auto x_sig = signatures(xs, x_set);
  const auto y_sig = signatures(ys, y_set);

  std::vector<std::size_t> chosen;
  IntMatrix x_basis(r, 0);
  for (std::size_t i = 0; i < xs.size() && static_cast<Index>(chosen.size()) < r; ++i) {
    IntMatrix trial(r, x_basis.cols() + 1);
    trial << x_basis, xs[i];
    if (rank<Integer>(trial) == trial.cols()) {
      x_basis = trial;
      chosen.push_back(i);
    }
  }
  if (static_cast<Index>(chosen.size()) != r) throw std::logic_error("transporter: spanning set has deficient rank");

  const Integer det_x = det<Integer>(x_basis);
  const Integer abs_det_x = det_x < 0 ? Integer(-det_x) : det_x;
  const IntMatrix adj_x = *to_integer(RatMatrix(*rational_inverse(to_rational(x_basis)) * Rational(det_x)));

  std::vector<std::size_t> image(r);
  std::vector<bool> used(ys.size(), false);
  bool stopped = false;

  auto leaf = [&]() {
    throw_if_stopped(stop);
    IntMatrix y_basis(r, r);
    for (Index c = 0; c < r; ++c) y_basis.col(c) = ys[image[c]];
    const Integer det_y = det<Integer>(y_basis);
    if ((det_y < 0 ? Integer(-det_y) : det_y) != abs_det_x) return;
    IntMatrix f = y_basis * adj_x;
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) {
        if (f(i, j) % det_x != 0) return;
        f(i, j) /= det_x;
      }
    for (const auto& x : xs)
      if (!y_set.count(IntVector(f * x))) return;
    stopped = visit(f);
  };

  auto consistent = [&](std::size_t depth, std::size_t j) {
    if (!(x_sig[chosen[depth]] == y_sig[j])) return false;
    const auto& x = xs[chosen[depth]];
    const auto& y = ys[j];
    for (std::size_t q = 0; q < depth; ++q) {
      const auto& xq = xs[chosen[q]];
      const auto& yq = ys[image[q]];
      if ((x_set.count(IntVector(x + xq)) > 0) != (y_set.count(IntVector(y + yq)) > 0)) return false;
      if ((x_set.count(IntVector(x - xq)) > 0) != (y_set.count(IntVector(y - yq)) > 0)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == static_cast<std::size_t>(r)) {
      leaf();
      return;
    }
    for (std::size_t j = 0; j < ys.size() && !stopped; ++j) {
      if (used[j] || !consistent(depth, j)) continue;
      used[j] = true;
      image[depth] = j;
      extend(depth + 1);
      used[j] = false;
    }
  };
  extend(0);
}

SymmetryGroup set_stabilizer(const Lattice& lattice, const ConnectionSet& s, std::stop_token stop) {
  SymmetryGroup group{lattice, {}};
  for_each_transporter(
      lattice, s, lattice, s,
      [&](const IntMatrix& f) {
        group.elements.push_back(f);
        return false;
      },
      stop);
  std::sort(group.elements.begin(), group.elements.end(), matrix_less);
  return group;
}

std::optional<IntMatrix> transporter(const Lattice& lattice, const ConnectionSet& s, const ConnectionSet& s_prime,
                                     std::stop_token stop) {
  std::optional<IntMatrix> found;
  for_each_transporter(
      lattice, s, lattice, s_prime,
      [&](const IntMatrix& f) {
        found = f;
        return true;
      },
      stop);
  return found;
}

std::optional<IntMatrix> ambient_extension(const Lattice& from, const Lattice& to, const IntMatrix& f) {
  const Index n = from.ambient_dim();
  const Index r = from.rank();
  if (to.ambient_dim() != n || to.rank() != r || f.rows() != r || f.cols() != r)
    throw std::invalid_argument("ambient_extension: shape mismatch");

  // U B V = D, so B V e_i = a_i y_i with y_i the columns of U^{-1}.
  const auto s = snf<Integer>(from.basis());
  const IntMatrix image_of_bv = to.basis() * f * s.V;
  IntMatrix z(n, r);
  for (Index i = 0; i < r; ++i) {
    const Integer a = s.D(i, i);
    for (Index row = 0; row < n; ++row) {
      if (image_of_bv(row, i) % a != 0) return std::nullopt;
      z(row, i) = image_of_bv(row, i) / a;
    }
  }
  if (rank<Integer>(z) != r || !(Lattice::from_basis(z) == saturation(to))) return std::nullopt;

  const auto target = simultaneous_basis(to);
  IntMatrix columns(n, n);
  columns.leftCols(r) = z;
  columns.rightCols(n - r) = target.y.rightCols(n - r);
  IntMatrix m = columns * s.U;
  if (!equal(IntMatrix(m * from.basis()), IntMatrix(to.basis() * f)))
    throw std::logic_error("ambient_extension: result does not restrict to f");
  return m;
}

std::optional<IntMatrix> extends_to_ambient(const Lattice& lattice, const IntMatrix& tau) {
  return ambient_extension(lattice, lattice, tau);
}

StandardFrame standard_frame(const Lattice& lattice) {
  const Index n = lattice.ambient_dim();
  StandardFrame frame;
  frame.k = index(lattice).value();
  frame.sigma = standardize(lattice);
  IntMatrix scale = identity_matrix(n);
  scale(0, 0) = frame.k;
  frame.basis = unimodular_inverse(frame.sigma) * scale;
  // basis = B * from_frame, with both bases spanning the same lattice.
  frame.from_frame = IntMatrix(n, n);
  const auto frame_columns = coordinate_list(lattice, [&] {
    std::vector<IntVector> cols;
    for (Index j = 0; j < n; ++j) cols.push_back(frame.basis.col(j));
    return cols;
  }());
  for (Index j = 0; j < n; ++j) frame.from_frame.col(j) = frame_columns[j];
  frame.to_frame = unimodular_inverse(frame.from_frame);
  return frame;
}

IntMatrix in_frame(const StandardFrame& frame, const IntMatrix& tau) {
  return frame.to_frame * tau * frame.from_frame;
}

IntMatrix out_of_frame(const StandardFrame& frame, const IntMatrix& t) {
  return frame.from_frame * t * frame.to_frame;
}

ConnectionSet apply_in_frame(const StandardFrame& frame, const IntMatrix& t, const ConnectionSet& s) {
  std::vector<IntVector> image;
  for (const auto& v : s.vectors()) {
    const auto c = solve_integer<Integer>(frame.basis, v);
    if (!c) throw std::invalid_argument("apply_in_frame: vector " + to_string(v) + " is outside the lattice");
    image.push_back(frame.basis * t * *c);
  }
  return ConnectionSet::validate(std::move(image), s.dim(), s.mode());
}

std::vector<IntMatrix> extendable_generators(int n, const Integer& k) {
  if (n < 1 || k < 1) throw std::invalid_argument("extendable_generators: invalid n or k");
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IntMatrix e = identity_matrix(n);
      e(i, j) = (j == 0) ? k : Integer(1);
      gens.push_back(e);
    }
  for (int i = 0; i < n; ++i) {
    IntMatrix d = identity_matrix(n);
    d(i, i) = -1;
    gens.push_back(d);
  }
  // Determinant-one lifts [[u, -x], [k, d]] of every unit u mod k.
  if (n >= 2) {
    for (Integer u = 2; u < k; ++u) {
      const auto [g, d, x] = detail::ext_gcd<Integer>(u, k);
      if (g != 1) continue;
      IntMatrix m = identity_matrix(n);
      m(0, 0) = u;
      m(0, 1) = -x;
      m(1, 0) = k;
      m(1, 1) = d;
      gens.push_back(m);
    }
  }
  return gens;
}

bool QuotientGroup::contains(const ModMatrix& m) const {
  return explicit_elements ? elements.count(m) > 0 : in_congruence_subgroup(m);
}

namespace {

std::uint32_t small_modulus(const Integer& k) {
  if (k < 2 || k > 65535) throw std::domain_error("quotient groups require 2 <= k <= 65535, got " + k.str());
  return static_cast<std::uint32_t>(k);
}

void require_small_dim(int n) {
  if (n < 2 || n > ModMatrix::kMaxDim)
    throw std::domain_error("quotient groups require 2 <= n <= 4, got " + std::to_string(n));
}

}  // namespace

QuotientGroup congruence_image(int n, const Integer& k, std::size_t enumeration_limit) {
  require_small_dim(n);
  if (k < 2 || !is_square_free(k)) throw std::invalid_argument("congruence_image: k must be square-free and >= 2");
  QuotientGroup group;
  group.n = n;
  group.k = small_modulus(k);
  group.described_order = congruence_subgroup_order(n, k);
  if (group.described_order > enumeration_limit) {
    group.explicit_elements = false;
    group.order = group.described_order;
    group.uncertain = true;
    return group;
  }
  std::vector<ModMatrix> gens;
  for (const auto& g : extendable_generators(n, k)) gens.push_back(ModMatrix::reduce(g, group.k));
  group.elements = generate_group(gens, n, group.k, enumeration_limit);
  for (const auto& m : group.elements)
    if (!in_congruence_subgroup(m)) throw std::logic_error("congruence_image: generator outside the congruence set");
  group.explicit_elements = true;
  group.order = group.elements.size();
  group.uncertain = group.order != group.described_order;
  return group;
}

Integer CoverageCertificate::covered_order() const { return a_order * b_order / intersection_order; }

std::optional<std::pair<ModMatrix, IntMatrix>> find_uncovered(const QuotientGroup& a, const std::vector<ModMatrix>& b,
                                                              std::stop_token stop) {
  std::optional<std::pair<ModMatrix, IntMatrix>> found;
  walk_signed_quotient(a.n, a.k, [&](const ModMatrix& q, const IntMatrix& lift) {
    throw_if_stopped(stop);
    const bool covered = std::any_of(b.begin(), b.end(), [&](const ModMatrix& y) { return a.contains(q * y); });
    if (!covered) found.emplace(q, lift);
    return found.has_value();
  });
  return found;
}

ProductConditionResult product_condition(const Lattice& lattice, const ConnectionSet& s, std::stop_token stop) {
  require_span(lattice, s, "product_condition");
  const Index n = lattice.ambient_dim();
  if (n < 2) throw std::invalid_argument("product_condition: requires n >= 2");
  const auto k_index = index(lattice);
  if (!k_index.is_finite()) throw std::invalid_argument("product_condition: infinitely many components");
  const Integer k = k_index.value();
  if (!is_square_free(k)) throw std::invalid_argument("product_condition: index " + k.str() + " is not square-free");

  const auto stabilizer = set_stabilizer(lattice, s, stop);
  ProductConditionResult result;
  auto& cert = result.certificate;
  cert.k = k;
  cert.stabilizer_order = stabilizer.order();
  if (k == 1) {
    result.holds = true;
    cert.a_order = cert.b_order = cert.intersection_order = cert.q_order = 1;
    cert.sigma = identity_matrix(n);
    return result;
  }

  require_small_dim(static_cast<int>(n));
  const auto frame = standard_frame(lattice);
  cert.sigma = frame.sigma;
  const auto modulus = small_modulus(k);
  ModMatrixSet b_set;
  for (const auto& tau : stabilizer.elements) b_set.insert(ModMatrix::reduce(in_frame(frame, tau), modulus));
  cert.b_elements = sorted(b_set);

  const auto a = congruence_image(static_cast<int>(n), k);
  cert.uncertain = a.uncertain;
  cert.a_order = a.order;
  cert.b_order = cert.b_elements.size();
  std::size_t common = 0;
  for (const auto& b : cert.b_elements)
    if (a.contains(b)) ++common;
  cert.intersection_order = common;
  cert.q_order = signed_quotient_order(static_cast<int>(n), k);
  result.holds = cert.covered_order() == cert.q_order;
  if (!result.holds) {
    auto uncovered = find_uncovered(a, cert.b_elements, stop);
    if (!uncovered) throw std::logic_error("product_condition: counting and coverage disagree");
    cert.uncovered = uncovered->first;
    cert.uncovered_lift = uncovered->second;
  }
  return result;
}

}  // namespace cayci

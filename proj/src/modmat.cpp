#include "cayci/modmat.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "cayci/intlin.hpp"

namespace cayci {

ModMatrix::ModMatrix(int n, std::uint32_t k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("ModMatrix: dimension must be in [1, 4]");
  if (k < 1 || k > 65535) throw std::invalid_argument("ModMatrix: modulus must be in [1, 65535]");
}

ModMatrix ModMatrix::identity(int n, std::uint32_t k) {
  ModMatrix m(n, k);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::reduce(const IntMatrix& a, std::uint32_t k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("ModMatrix::reduce: matrix is not square");
  ModMatrix m(static_cast<int>(a.rows()), k);
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) {
      Integer r = a(i, j) % k;
      if (r < 0) r += k;
      m.e_[i * kMaxDim + j] = static_cast<std::uint16_t>(r);
    }
  return m;
}

void ModMatrix::set(int i, int j, std::int64_t value) {
  const std::int64_t k = k_;
  e_[i * kMaxDim + j] = static_cast<std::uint16_t>(((value % k) + k) % k);
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("ModMatrix: shape or modulus mismatch");
  ModMatrix c(a.n_, a.k_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      std::uint64_t s = 0;
      for (int l = 0; l < a.n_; ++l) s += std::uint64_t{a(i, l)} * b(l, j);
      c.e_[i * ModMatrix::kMaxDim + j] = static_cast<std::uint16_t>(s % a.k_);
    }
  return c;
}

std::uint32_t ModMatrix::det() const {
  std::array<int, kMaxDim> perm{};
  std::iota(perm.begin(), perm.begin() + n_, 0);
  const std::int64_t k = k_;
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::int64_t term = 1;
    for (int i = 0; i < n_; ++i) term = term * (*this)(i, perm[i]) % k;
    total = (total + (inversions % 2 ? k - term : term)) % k;
  } while (std::next_permutation(perm.begin(), perm.begin() + n_));
  return static_cast<std::uint32_t>(total);
}

bool ModMatrix::is_identity() const { return *this == identity(n_, k_); }

std::size_t ModMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(k_) * 31 + static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) h = h * 1000003u ^ e_[i * kMaxDim + j];
  return h;
}

IntMatrix ModMatrix::to_integer() const {
  IntMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

ModMatrixSet generate_group(const std::vector<ModMatrix>& generators, int n, std::uint32_t k,
                            std::size_t limit) {
  ModMatrixSet group;
  const ModMatrix id = ModMatrix::identity(n, k);
  group.insert(id);
  std::deque<ModMatrix> queue{id};
  while (!queue.empty()) {
    ModMatrix x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      ModMatrix y = x * g;
      if (group.insert(y).second) {
        if (group.size() > limit) throw std::length_error("generate_group: group exceeds the size limit");
        queue.push_back(y);
      }
    }
  }
  return group;
}

std::vector<ModMatrix> sorted(const ModMatrixSet& set) {
  std::vector<ModMatrix> v(set.begin(), set.end());
  std::sort(v.begin(), v.end());
  return v;
}

void walk_signed_quotient(int n, std::uint32_t k,
                          const std::function<bool(const ModMatrix&, const IntMatrix&)>& visit) {
  std::vector<IntMatrix> generators;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        IntMatrix e = identity_matrix(n);
        e(i, j) = sign;
        generators.push_back(e);
      }
    }
  IntMatrix flip = identity_matrix(n);
  flip(0, 0) = -1;
  generators.push_back(flip);

  ModMatrixSet seen;
  std::deque<IntMatrix> queue;
  const IntMatrix id = identity_matrix(n);
  seen.insert(ModMatrix::reduce(id, k));
  queue.push_back(id);
  while (!queue.empty()) {
    IntMatrix x = std::move(queue.front());
    queue.pop_front();
    if (visit(ModMatrix::reduce(x, k), x)) return;
    for (const auto& g : generators) {
      IntMatrix y = x * g;
      if (seen.insert(ModMatrix::reduce(y, k)).second) queue.push_back(std::move(y));
    }
  }
}

IntMatrix lift_to_gl(const ModMatrix& q) {
  if (!is_signed_unit_det(q)) throw std::invalid_argument("lift_to_gl: determinant is not +-1");
  std::optional<IntMatrix> lift;
  walk_signed_quotient(q.dim(), q.modulus(), [&](const ModMatrix& m, const IntMatrix& x) {
    if (m == q) lift = x;
    return lift.has_value();
  });
  if (!lift) throw std::logic_error("lift_to_gl: element not reached");
  return *lift;
}

namespace {

Integer gl_order(int n, const Integer& p) {
  Integer order = 1, pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  Integer pi = 1;
  for (int i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

Integer signed_units(const Integer& k) { return k <= 2 ? Integer(1) : Integer(2); }

Integer checked_squarefree_phi(const Integer& k, std::vector<Integer>& primes) {
  if (k < 1 || !is_square_free(k)) throw std::invalid_argument("quotient order: k must be square-free");
  primes = prime_divisors(k);
  Integer phi = 1;
  for (const auto& p : primes) phi *= p - 1;
  return phi;
}

}  // namespace

Integer signed_quotient_order(int n, const Integer& k) {
  std::vector<Integer> primes;
  const Integer phi = checked_squarefree_phi(k, primes);
  Integer order = 1;
  for (const auto& p : primes) order *= gl_order(n, p);
  return order * signed_units(k) / phi;
}

Integer congruence_subgroup_order(int n, const Integer& k) {
  std::vector<Integer> primes;
  const Integer phi = checked_squarefree_phi(k, primes);
  Integer order = 1;
  for (const auto& p : primes) {
    Integer block = (p - 1) * gl_order(n - 1, p);
    for (int i = 1; i < n; ++i) block *= p;
    order *= block;
  }
  return order * signed_units(k) / phi;
}

bool is_signed_unit_det(const ModMatrix& m) {
  const auto d = m.det();
  const auto k = m.modulus();
  return k == 1 || d == 1 % k || d == k - 1;
}

bool in_congruence_subgroup(const ModMatrix& m) {
  for (int i = 1; i < m.dim(); ++i)
    if (m(i, 0) != 0) return false;
  return is_signed_unit_det(m);
}

}  // namespace cayci

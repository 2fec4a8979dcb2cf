#include "cayci/lattice.hpp"

#include <stdexcept>

#include "cayci/intlin.hpp"

namespace cayci {

namespace {

IntMatrix canonical_basis(const IntMatrix& generators) {
  const auto h = hnf<Integer>(generators.transpose()).H;
  Index r = 0;
  while (r < h.rows() && !h.row(r).isZero()) ++r;
  if (r == 0) throw std::invalid_argument("lattice: all generators are zero");
  return h.topRows(r).transpose();
}

}  // namespace

const Integer& LatticeIndex::value() const {
  if (!is_finite()) throw std::logic_error("LatticeIndex: index is infinite");
  return std::get<Integer>(value_);
}

std::string LatticeIndex::to_string() const { return is_finite() ? value().str() : "INFINITE"; }

Lattice Lattice::span(const std::vector<IntVector>& vectors, Index n) {
  if (n <= 0) throw std::invalid_argument("span: dimension must be positive");
  if (vectors.empty()) throw std::invalid_argument("span: no generators");
  IntMatrix g(n, static_cast<Index>(vectors.size()));
  for (Index j = 0; j < g.cols(); ++j) {
    if (vectors[j].size() != n) throw std::invalid_argument("span: vector length differs from dimension");
    g.col(j) = vectors[j];
  }
  return Lattice(canonical_basis(g));
}

Lattice Lattice::from_basis(const IntMatrix& basis) {
  if (basis.cols() == 0 || basis.rows() == 0) throw std::invalid_argument("from_basis: empty basis");
  if (basis.cols() > basis.rows() || cayci::rank<Integer>(basis) != basis.cols())
    throw std::invalid_argument("from_basis: basis columns are dependent");
  return Lattice(canonical_basis(basis));
}

Lattice Lattice::standard(Index n, const Integer& k) {
  if (k <= 0) throw std::invalid_argument("standard lattice: k must be positive");
  IntMatrix b = identity_matrix(n);
  b(0, 0) = k;
  return Lattice(canonical_basis(b));
}

bool Lattice::contains(const IntVector& v) const { return coordinates(*this, v).has_value(); }

Lattice Lattice::image(const IntMatrix& m) const {
  if (m.rows() != ambient_dim() || m.cols() != ambient_dim())
    throw std::invalid_argument("Lattice::image: matrix has wrong shape");
  return Lattice(canonical_basis(m * basis_));
}

LatticeIndex index(const Lattice& lattice) {
  if (lattice.rank() < lattice.ambient_dim()) return LatticeIndex::infinite();
  Integer k = 1;
  for (const auto& d : snf<Integer>(lattice.basis()).invariant_factors()) k *= d;
  return LatticeIndex(k);
}

SimultaneousBasis simultaneous_basis(const Lattice& lattice) {
  // U B V = D  =>  B V = U^{-1} D, so the columns of U^{-1} are the y_i.
  auto s = snf<Integer>(lattice.basis());
  SimultaneousBasis out;
  out.y_inverse = s.U;
  out.y = unimodular_inverse(s.U);
  out.factors = s.invariant_factors();
  return out;
}

IntMatrix standardize(const Lattice& lattice) {
  const Index n = lattice.ambient_dim();
  if (n < 2) throw std::invalid_argument("standardize: requires n > 1");
  const auto k = index(lattice);
  if (!k.is_finite()) throw std::invalid_argument("standardize: index is infinite");
  if (!is_square_free(k.value()))
    throw std::invalid_argument("standardize: index " + k.value().str() + " is not square-free");
  const Lattice target = Lattice::standard(n, k.value());
  if (lattice == target) return identity_matrix(n);

  // a_1 = ... = a_{n-1} = 1, a_n = k: send y_n -> e_1, y_1 -> e_n, y_i -> e_i.
  const auto sb = simultaneous_basis(lattice);
  IntMatrix perm = IntMatrix::Zero(n, n);
  perm(0, n - 1) = 1;
  perm(n - 1, 0) = 1;
  for (Index i = 1; i + 1 < n; ++i) perm(i, i) = 1;
  IntMatrix sigma = perm * sb.y_inverse;
  if (!(lattice.image(sigma) == target))
    throw std::logic_error("standardize: construction did not reach the standard lattice");
  return sigma;
}

std::optional<IntVector> coordinates(const Lattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient_dim()) throw std::invalid_argument("coordinates: vector length mismatch");
  return solve_integer<Integer>(lattice.basis(), v);
}

Lattice saturation(const Lattice& lattice) {
  const auto sb = simultaneous_basis(lattice);
  return Lattice::from_basis(sb.y.leftCols(lattice.rank()));
}

}  // namespace cayci

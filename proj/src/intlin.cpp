#include "cayci/intlin.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cayci {

IntVector int_vector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long long e : entries) v(i++) = e;
  return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("int_matrix: ragged rows");
    Index j = 0;
    for (long long e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

IntMatrix identity_matrix(Index n) { return IntMatrix::Identity(n, n); }

bool lex_less(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return static_cast<std::int64_t>(x);
}

std::vector<Integer> prime_divisors(Integer k) {
  if (k < 0) k = -k;
  std::vector<Integer> primes;
  for (Integer p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    primes.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) primes.push_back(k);
  return primes;
}

bool is_square_free(const Integer& k) {
  if (k == 0) return false;
  Integer rest = k < 0 ? Integer(-k) : k;
  for (const Integer& p : prime_divisors(rest)) {
    if ((rest / p) % p == 0) return false;
  }
  return true;
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v(i);
  out << ')';
  return out.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    out << (i ? "," : "") << '[';
    for (Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (denominator(a(i, j)) != 1) return std::nullopt;
      r(i, j) = numerator(a(i, j));
    }
  return r;
}

std::optional<RatMatrix> rational_inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rational_inverse: matrix is not square");
  const Index n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      m.row(p).swap(m.row(c));
      inv.row(p).swap(inv.row(c));
    }
    const Rational pivot = m(c, c);
    for (Index j = 0; j < n; ++j) {
      m(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (Index j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& a) {
  auto inv = rational_inverse(to_rational(a));
  if (!inv) return std::nullopt;
  return to_integer(*inv);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return *integer_inverse(a);
}

template HermiteDecomposition<Integer> hnf<Integer>(const IntMatrix&);
template SmithDecomposition<Integer> snf<Integer>(const IntMatrix&);
template Integer det<Integer>(const IntMatrix&);
template Index rank<Integer>(const IntMatrix&);
template bool is_unimodular<Integer>(const IntMatrix&);
template std::optional<IntVector> solve_integer<Integer>(const IntMatrix&, const IntVector&);

}  // namespace cayci

#pragma once

// Exact scalar types and the dense Eigen aliases used throughout the library.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every constructor argument for a byte-container interface,
// and Eigen 3.4 expressions expose begin()/end(), which turns that probe into a
// hard error. Eigen expressions are never byte containers.
namespace boost::multiprecision::detail {
template <class T>
  requires requires { T::RowsAtCompileTime; }
struct is_byte_container<T> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace cayci {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

IntVector int_vector(std::initializer_list<long long> entries);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntMatrix identity_matrix(Index n);

/// Lexicographic order on vectors of equal length; shorter vectors sort first.
bool lex_less(const IntVector& a, const IntVector& b);
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

bool equal(const IntMatrix& a, const IntMatrix& b);

/// Converts to a machine integer, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& x);

bool is_square_free(const Integer& k);
/// Distinct prime divisors in increasing order (trial division).
std::vector<Integer> prime_divisors(Integer k);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

}  // namespace cayci

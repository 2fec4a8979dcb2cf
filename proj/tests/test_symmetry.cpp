#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "cayci/intlin.hpp"
#include "cayci/modmat.hpp"
#include "cayci/symmetry.hpp"
#include "support.hpp"

namespace cayci {
namespace {

using testing::make_set;
using testing::random_unimodular;

/// Every n x n matrix over Z_k, by odometer.
std::vector<ModMatrix> all_matrices(int n, std::uint32_t k) {
  std::vector<ModMatrix> out;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(n * n), 0);
  while (true) {
    ModMatrix m(n, k);
    for (int i = 0; i < n * n; ++i) m.set(i / n, i % n, digits[static_cast<std::size_t>(i)]);
    out.push_back(m);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == k) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return out;
}

bool signed_det(const ModMatrix& m) {
  const auto d = m.det();
  return d == 1 % m.modulus() || d == (m.modulus() - 1) % m.modulus();
}

RatMatrix ambient_form(const Lattice& l, const IntMatrix& tau) {
  const RatMatrix b = to_rational(l.basis());
  if (b.rows() != b.cols()) throw std::invalid_argument("ambient_form: lattice must have full rank");
  return b * to_rational(tau) * *rational_inverse(b);
}

std::string key(const RatMatrix& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out += m(i, j).str() + ",";
  return out;
}

/// tau(S) computed through the rational ambient form.
ConnectionSet image(const Lattice& l, const IntMatrix& tau, const ConnectionSet& s) {
  const RatMatrix m = ambient_form(l, tau);
  std::vector<IntVector> out;
  for (const auto& v : s.vectors()) out.push_back(to_integer(RatMatrix(m * to_rational(IntMatrix(v))))->col(0));
  return ConnectionSet::validate(out, s.dim(), s.mode());
}

TEST(ModMatrix, Arithmetic) {
  const ModMatrix a = ModMatrix::reduce(int_matrix({{1, 1}, {0, 1}}), 5);
  ModMatrix p = ModMatrix::identity(2, 5);
  for (int i = 0; i < 5; ++i) p = p * a;
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(ModMatrix::reduce(int_matrix({{2, 3}, {1, 4}}), 7).det(), 5u);
  EXPECT_EQ(ModMatrix::reduce(int_matrix({{-1, 0}, {0, 1}}), 3)(0, 0), 2u);
  EXPECT_EQ(generate_group({a}, 2, 5).size(), 5u);
  EXPECT_THROW(ModMatrix(5, 3), std::invalid_argument);
  EXPECT_THROW(ModMatrix(2, 70000), std::invalid_argument);
}

TEST(ModMatrix, QuotientOrdersAgainstBruteForce) {
  for (const std::uint32_t k : {2u, 3u, 5u, 6u}) {
    std::size_t q = 0, c = 0;
    for (const auto& m : all_matrices(2, k)) {
      if (!signed_det(m)) continue;
      ++q;
      if (m(1, 0) == 0) ++c;
      EXPECT_EQ(is_signed_unit_det(m), true);
      EXPECT_EQ(in_congruence_subgroup(m), m(1, 0) == 0);
    }
    EXPECT_EQ(signed_quotient_order(2, k), Integer(q)) << k;
    EXPECT_EQ(congruence_subgroup_order(2, k), Integer(c)) << k;
  }
  EXPECT_EQ(signed_quotient_order(2, 2), 6);
  EXPECT_EQ(signed_quotient_order(2, 3), 48);
}

TEST(ModMatrix, QuotientOrdersInDimensionThree) {
  std::size_t q = 0, c = 0;
  for (const auto& m : all_matrices(3, 2)) {
    if (!signed_det(m)) continue;
    ++q;
    if (m(1, 0) == 0 && m(2, 0) == 0) ++c;
  }
  EXPECT_EQ(signed_quotient_order(3, 2), Integer(q));
  EXPECT_EQ(congruence_subgroup_order(3, 2), Integer(c));
}

TEST(ModMatrix, LiftsReduceBack) {
  for (const std::uint32_t k : {3u, 5u, 6u}) {
    for (const auto& m : all_matrices(2, k)) {
      if (!signed_det(m)) continue;
      const IntMatrix lift = lift_to_gl(m);
      ASSERT_TRUE(is_unimodular<Integer>(lift));
      ASSERT_EQ(ModMatrix::reduce(lift, k), m);
    }
  }
  EXPECT_THROW(lift_to_gl(ModMatrix::reduce(int_matrix({{2, 0}, {0, 1}}), 5)), std::invalid_argument);
}

TEST(Stabilizer, Examples) {
  const auto square = make_set({{1, 0}, {0, 1}});
  const auto g8 = set_stabilizer(Lattice::standard(2, 1), square);
  EXPECT_EQ(g8.order(), 8u);
  const auto hex = make_set({{1, 0}, {0, 1}, {1, 1}});
  const auto g12 = set_stabilizer(Lattice::standard(2, 1), hex);
  EXPECT_EQ(g12.order(), 12u);
  EXPECT_TRUE(g12.contains(int_matrix({{0, -1}, {1, -1}})));
  const auto line = make_set({{2}, {3}});
  const auto g2 = set_stabilizer(Lattice::span({int_vector({1})}, 1), line);
  EXPECT_EQ(g2.order(), 2u);
  EXPECT_TRUE(g2.contains(int_matrix({{-1}})));
}

TEST(Stabilizer, RejectsSpanMismatch) {
  EXPECT_THROW(set_stabilizer(Lattice::standard(2, 1), make_set({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST(Stabilizer, ElementsFixSetAndFormGroup) {
  const std::vector<ConnectionSet> fixtures = {make_set({{2, 0}, {0, 1}, {2, 1}}), make_set({{1, 0}, {0, 1}, {1, 1}}),
                                               make_set({{1, 2}, {3, 1}}), make_set({{1, 0}, {0, 1}}, Mode::Directed),
                                               make_set({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  for (const auto& s : fixtures) {
    const Lattice l = generated_lattice(s);
    const auto g = set_stabilizer(l, s);
    for (const auto& tau : g.elements) {
      ASSERT_TRUE(is_unimodular<Integer>(tau));
      EXPECT_EQ(image(l, tau, s), s);
      for (const auto& sigma : g.elements) EXPECT_TRUE(g.contains(IntMatrix(tau * sigma)));
      EXPECT_TRUE(g.contains(unimodular_inverse(tau)));
    }
    EXPECT_TRUE(std::is_sorted(g.elements.begin(), g.elements.end(), matrix_less));
  }
}

TEST(Stabilizer, Equivariance) {
  std::mt19937_64 rng(17);
  const std::vector<ConnectionSet> fixtures = {make_set({{2, 0}, {0, 1}, {2, 1}}), make_set({{1, 0}, {0, 1}, {1, 1}}),
                                               make_set({{2, 0}, {0, 1}}), make_set({{3, 1}, {0, 3}})};
  for (int trial = 0; trial < 24; ++trial) {
    const auto& s = fixtures[static_cast<std::size_t>(trial) % fixtures.size()];
    const IntMatrix alpha = random_unimodular(rng, 2);
    const auto g = set_stabilizer(generated_lattice(s), s);
    const auto moved = s.transformed(alpha);
    const auto h = set_stabilizer(generated_lattice(moved), moved);
    std::set<std::string> expected, actual;
    const RatMatrix a = to_rational(alpha);
    const RatMatrix a_inv = *rational_inverse(a);
    for (const auto& tau : g.elements) expected.insert(key(a * ambient_form(g.lattice, tau) * a_inv));
    for (const auto& tau : h.elements) actual.insert(key(ambient_form(h.lattice, tau)));
    EXPECT_EQ(actual, expected) << to_string(alpha);
  }
}

TEST(Transporter, Examples) {
  const auto s = make_set({{2, 0}, {0, 1}, {2, 1}});
  const Lattice l = generated_lattice(s);
  const auto id = transporter(l, s, s);
  ASSERT_TRUE(id);
  EXPECT_TRUE(set_stabilizer(l, s).contains(*id));

  const auto a = make_set({{2, 0}, {0, 1}});
  const auto b = make_set({{2, 1}, {0, 1}});
  const auto t = transporter(Lattice::standard(2, 2), a, b);
  ASSERT_TRUE(t);
  EXPECT_EQ(image(Lattice::standard(2, 2), *t, a), b);

  EXPECT_TRUE(transporter(Lattice::standard(2, 1), make_set({{1, 0}, {0, 1}}), make_set({{1, 0}, {1, 1}})));
  EXPECT_FALSE(transporter(Lattice::standard(2, 1), make_set({{1, 0}, {0, 1}}), make_set({{1, 0}, {0, 1}, {1, 1}})));
}

TEST(ExtendsToAmbient, Examples) {
  const Lattice l = Lattice::standard(2, 2);
  const auto id = extends_to_ambient(l, identity_matrix(2));
  ASSERT_TRUE(id);
  EXPECT_TRUE(equal(*id, identity_matrix(2)));
  EXPECT_FALSE(extends_to_ambient(l, int_matrix({{0, 1}, {1, 0}})));
  const auto flip = extends_to_ambient(l, int_matrix({{1, 0}, {0, -1}}));
  ASSERT_TRUE(flip);
  EXPECT_TRUE(equal(*flip, int_matrix({{1, 0}, {0, -1}})));
}

TEST(ExtendsToAmbient, RestrictsToTau) {
  const auto s = make_set({{2, 0}, {0, 1}, {2, 1}, {4, 3}});
  const Lattice l = generated_lattice(s);
  for (const auto& tau : set_stabilizer(l, s).elements) {
    const auto m = extends_to_ambient(l, tau);
    if (!m) continue;
    EXPECT_TRUE(is_unimodular<Integer>(*m));
    EXPECT_TRUE(equal(IntMatrix(*m * l.basis()), IntMatrix(l.basis() * tau)));
  }
}

TEST(ExtendsToAmbient, LowerRank) {
  const Lattice line = Lattice::span({int_vector({2, 0})}, 2);
  const auto m = extends_to_ambient(line, int_matrix({{-1}}));
  ASSERT_TRUE(m);
  EXPECT_TRUE(equal(IntMatrix(*m * line.basis()), IntMatrix(-line.basis())));
}

TEST(StandardFrame, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix alpha = random_unimodular(rng, 2);
    const Lattice l = Lattice::standard(2, 6).image(alpha);
    const auto f = standard_frame(l);
    EXPECT_EQ(f.k, 6);
    EXPECT_EQ(Lattice::from_basis(f.basis), l);
    EXPECT_TRUE(equal(IntMatrix(f.sigma * f.basis), int_matrix({{6, 0}, {0, 1}})));
    const IntMatrix tau = random_unimodular(rng, 2);
    EXPECT_TRUE(equal(out_of_frame(f, in_frame(f, tau)), tau));
  }
}

TEST(CongruenceImage, Examples) {
  const auto a2 = congruence_image(2, 2);
  EXPECT_EQ(a2.order, 2);
  EXPECT_TRUE(a2.contains(ModMatrix::identity(2, 2)));
  EXPECT_TRUE(a2.contains(ModMatrix::reduce(int_matrix({{1, 1}, {0, 1}}), 2)));
  EXPECT_EQ(congruence_image(2, 3).order, 12);
  EXPECT_THROW(congruence_image(2, 4), std::invalid_argument);
  EXPECT_THROW(congruence_image(5, 2), std::domain_error);
}

TEST(CongruenceImage, EqualsDescribedSet) {
  for (const std::uint32_t k : {2u, 3u, 5u, 6u}) {
    const auto a = congruence_image(2, k);
    ASSERT_TRUE(a.explicit_elements);
    EXPECT_FALSE(a.uncertain);
    ModMatrixSet described;
    for (const auto& m : all_matrices(2, k))
      if (signed_det(m) && m(1, 0) == 0) described.insert(m);
    EXPECT_EQ(a.elements, described) << k;
    EXPECT_EQ(a.described_order, Integer(described.size()));
  }
}

TEST(CongruenceImage, DimensionThree) {
  const auto a = congruence_image(3, 3);
  EXPECT_FALSE(a.uncertain);
  EXPECT_EQ(a.order, congruence_subgroup_order(3, 3));
}

TEST(CongruenceImage, GeneratorsAreExtendable) {
  for (const auto& g : extendable_generators(3, 5)) {
    EXPECT_TRUE(is_unimodular<Integer>(g));
    for (Index i = 1; i < 3; ++i) EXPECT_EQ(g(i, 0) % 5, 0);
  }
}

TEST(ProductCondition, Examples) {
  const auto ok = product_condition(Lattice::standard(2, 2), make_set({{2, 0}, {0, 1}, {2, 1}}));
  EXPECT_TRUE(ok.holds);
  EXPECT_EQ(ok.certificate.a_order, 2);
  EXPECT_EQ(ok.certificate.q_order, 6);
  EXPECT_EQ(ok.certificate.b_order, 6);
  EXPECT_EQ(ok.certificate.intersection_order, 2);
  EXPECT_EQ(ok.certificate.covered_order(), 6);
  EXPECT_FALSE(ok.certificate.uncovered);

  const auto bad = product_condition(Lattice::standard(2, 2), make_set({{2, 0}, {0, 1}}));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.certificate.uncovered);
  ASSERT_TRUE(bad.certificate.uncovered_lift);
  EXPECT_EQ(ModMatrix::reduce(*bad.certificate.uncovered_lift, 2), *bad.certificate.uncovered);

  EXPECT_TRUE(product_condition(Lattice::standard(2, 1), make_set({{1, 0}, {0, 1}})).holds);
  EXPECT_THROW(product_condition(Lattice::standard(2, 4), make_set({{4, 0}, {0, 1}})), std::invalid_argument);
  EXPECT_THROW(product_condition(Lattice::span({int_vector({1, 0})}, 2), make_set({{1, 0}})), std::invalid_argument);
}

/// Coverage oracle: Q = A.B iff every right coset A q meets B, with A the
/// described congruence subgroup and Q enumerated directly.
bool coverage_oracle(const std::vector<ModMatrix>& b, std::uint32_t k) {
  std::vector<ModMatrix> q, a;
  for (const auto& m : all_matrices(2, k)) {
    if (!signed_det(m)) continue;
    q.push_back(m);
    if (m(1, 0) == 0) a.push_back(m);
  }
  const std::set<ModMatrix> b_set(b.begin(), b.end());
  std::set<ModMatrix> seen;
  for (const auto& rep : q) {
    if (seen.count(rep)) continue;
    bool meets = false;
    for (const auto& x : a) {
      const ModMatrix y = x * rep;
      seen.insert(y);
      if (b_set.count(y)) meets = true;
    }
    if (!meets) return false;
  }
  return true;
}

TEST(ProductCondition, AgreesWithCosetOracle) {
  std::mt19937_64 rng(29);
  std::vector<ConnectionSet> fixtures = {make_set({{2, 0}, {0, 1}, {2, 1}}), make_set({{2, 0}, {0, 1}}),
                                         make_set({{3, 0}, {0, 1}}),         make_set({{3, 0}, {0, 1}, {3, 1}}),
                                         make_set({{3, 0}, {0, 1}, {3, 1}, {3, -1}}), make_set({{2, 1}, {0, 1}, {2, -1}}),
                                         make_set({{1, 1}, {1, -1}}),        make_set({{1, 1}, {1, -1}, {2, 0}})};
  std::uniform_int_distribution<int> coord(-4, 4);
  while (fixtures.size() < 40) {
    const long long k = 2 + static_cast<long long>(rng() % 2);
    std::vector<IntVector> raw;
    const int count = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) raw.push_back(int_vector({k * coord(rng), coord(rng)}));
    bool nonzero = true;
    for (const auto& v : raw) nonzero = nonzero && !v.isZero();
    if (!nonzero) continue;
    const auto s = ConnectionSet::validate(raw, 2, Mode::Undirected);
    const auto c = component_count(s);
    if (!c.is_finite() || c.value() != k) continue;
    fixtures.push_back(s);
  }
  int holds = 0;
  for (const auto& s : fixtures) {
    const Lattice l = generated_lattice(s);
    const auto r = product_condition(l, s);
    const auto k = static_cast<std::uint32_t>(r.certificate.k);
    EXPECT_EQ(r.holds, coverage_oracle(r.certificate.b_elements, k)) << to_string(IntMatrix(l.basis()));
    holds += r.holds;
  }
  EXPECT_GT(holds, 0);
  EXPECT_LT(holds, static_cast<int>(fixtures.size()));
}

TEST(ProductCondition, InvariantUnderAmbientAutomorphisms) {
  std::mt19937_64 rng(31);
  const std::vector<ConnectionSet> fixtures = {make_set({{2, 0}, {0, 1}, {2, 1}}), make_set({{2, 0}, {0, 1}}),
                                               make_set({{3, 0}, {0, 1}, {3, 1}}), make_set({{5, 0}, {0, 1}, {5, 2}})};
  for (const auto& s : fixtures) {
    const bool base = product_condition(generated_lattice(s), s).holds;
    for (int trial = 0; trial < 5; ++trial) {
      const auto moved = s.transformed(random_unimodular(rng, 2));
      EXPECT_EQ(product_condition(generated_lattice(moved), moved).holds, base);
    }
  }
}

TEST(FindUncovered, NoneWhenBIsEverything) {
  const auto a = congruence_image(2, 3);
  std::vector<ModMatrix> q;
  for (const auto& m : all_matrices(2, 3))
    if (signed_det(m)) q.push_back(m);
  EXPECT_FALSE(find_uncovered(a, q));
  const auto miss = find_uncovered(a, {ModMatrix::identity(2, 3)});
  ASSERT_TRUE(miss);
  EXPECT_FALSE(a.contains(miss->first));
}

TEST(Cancellation, StopTokenInterruptsSearch) {
  std::stop_source source;
  source.request_stop();
  EXPECT_THROW(set_stabilizer(Lattice::standard(2, 1), make_set({{1, 0}, {0, 1}}), source.get_token()), Cancelled);
}

}  // namespace
}  // namespace cayci

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "salemtwist/error.hpp"
#include "salemtwist/penner.hpp"

using namespace salemtwist;
using namespace salemtwist::penner;

namespace {

// Dominant eigenvalue of a nonnegative matrix by power iteration in double.
double power_iteration(const IntMatrix& m, int steps = 4000) {
  const std::size_t k = m.dimension();
  std::vector<double> v(k, 1.0), w(k);
  double lambda = 0.0;
  for (int s = 0; s < steps; ++s) {
    for (std::size_t r = 0; r < k; ++r) {
      w[r] = 0.0;
      for (std::size_t c = 0; c < k; ++c) w[r] += m(r, c).get_d() * v[c];
    }
    const double norm = *std::max_element(w.begin(), w.end());
    for (std::size_t r = 0; r < k; ++r) v[r] = w[r] / norm;
    lambda = norm;
  }
  return lambda;
}

// For a bipartite curve graph the product stretch factor solves
// lambda + 1/lambda = mu^2 + 2 with mu the adjacency spectral radius.
double coxeter_stretch(const IntMatrix& omega) {
  // Omega^2 + I is primitive with spectral radius mu^2 + 1.
  IntMatrix shifted = omega * omega;
  for (std::size_t i = 0; i < shifted.dimension(); ++i) shifted(i, i) += 1;
  const double mu_squared = power_iteration(shifted) - 1.0;
  const double s = mu_squared + 2.0;
  return (s + std::sqrt(s * s - 4.0)) / 2.0;
}

IntPolynomial leibniz_determinant(const PolyMatrix& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  IntPolynomial sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    IntPolynomial term{inversions % 2 ? -1 : 1};
    for (std::size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace

TEST_CASE("curve graphs") {
  const CurveGraph e = e_diagram(10);
  CHECK(e.edges.size() == 9);
  std::vector<int> degree(11, 0);
  for (auto [u, v] : e.edges) ++degree[u], ++degree[v];
  CHECK(std::count(degree.begin() + 1, degree.end(), 3) == 1);
  CHECK(std::count(degree.begin() + 1, degree.end(), 1) == 3);
  CHECK_THROWS_AS(e_diagram(5), Error);
  CHECK_NOTHROW(validate_tree_shape(d_diagram(10)));
  CHECK_THROWS_AS(validate_tree_shape(CurveGraph{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}}), Error);  // path
  CHECK_THROWS_AS(validate_tree_shape(CurveGraph{6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}}}), Error);
}

TEST_CASE("intersection and Q matrices") {
  const IntMatrix omega = intersection_matrix(e_diagram(10));
  CHECK(omega == omega.transposed());
  int threes = 0;
  for (std::size_t r = 0; r < 10; ++r) {
    CHECK(omega(r, r) == 0);
    mpz_class row = 0;
    for (std::size_t c = 0; c < 10; ++c) row += omega(r, c);
    CHECK(row >= 1);
    CHECK(row <= 3);
    threes += row == 3;
  }
  CHECK(threes == 1);
  CHECK(q_matrix(IntMatrix(10), 3) == IntMatrix::identity(10));
  for (int i = 1; i <= 10; ++i) {
    const IntMatrix q = q_matrix(omega, i);
    CHECK(determinant(q) == 1);
    CHECK(q.is_nonnegative());
  }
  // Vertex 1 is a leaf: one off-diagonal 1 in its row.
  const IntMatrix q1 = q_matrix(omega, 1);
  int off = 0;
  for (std::size_t c = 1; c < 10; ++c) off += q1(0, c) == 1;
  CHECK(off == 1);
  CHECK_THROWS_AS(q_matrix(omega, 11), Error);
}

TEST_CASE("permutations") {
  const Permutation p = Permutation::parse_cycles("(1 3 2)(4 5)", 6);
  CHECK(p.one_line() == std::vector<int>{3, 1, 2, 5, 4, 6});
  CHECK(p.to_cycles() == "(1 3 2)(4 5)");
  CHECK(Permutation::identity(4).to_cycles() == "()");
  CHECK(Permutation::parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(Permutation::parse_cycles("", 4) == Permutation::identity(4));
  // (1 2)(2 3) applies (2 3) first: 1->2? no: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(Permutation::parse_cycles("(1 2)(2 3)", 3).one_line() == std::vector<int>{2, 3, 1});
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 7)", 6), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 1)", 6), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles("1 2", 6), Error);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
  oracle::Rng rng(3);
  for (const auto& s : sample_permutations(9, 200, 11))
    CHECK(Permutation::parse_cycles(s.to_cycles(), 9) == s);
  CHECK(sample_permutations(10, 5, 42) == sample_permutations(10, 5, 42));
  CHECK_FALSE(sample_permutations(10, 5, 42) == sample_permutations(10, 5, 43));
}

TEST_CASE("identity product entries") {
  const IntMatrix q = q_product(8, Permutation::identity(10));
  CHECK(q(0, 0) == 2);
  CHECK(q(0, 1) == 2);
  CHECK(q(1, 0) == 1);
  CHECK(q(1, 1) == 2);
  for (std::size_t c = 0; c < 10; ++c) CHECK(q(9, c) == (c >= 8 ? 1 : 0));
  // first five rows as displayed
  const std::vector<std::vector<long>> rows{{2, 2, 1, 2, 2, 2, 2, 2, 2, 1}, {1, 2, 1, 2, 2, 2, 2, 2, 2, 1},
                                            {0, 1, 2, 2, 2, 2, 2, 2, 2, 1}, {0, 1, 1, 2, 2, 2, 2, 2, 2, 1},
                                            {0, 0, 0, 1, 2, 2, 2, 2, 2, 1}};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < 10; ++c) CHECK(q(r, c) == rows[r][c]);
  CHECK(determinant(q) == 1);
  CHECK_THROWS_AS(q_product(8, Permutation::identity(9)), Error);
}

TEST_CASE("q_product agrees with the naive product") {
  const CurveGraph g = e_diagram(10);
  const IntMatrix omega = intersection_matrix(g);
  for (const auto& s : sample_permutations(10, 50, 5)) {
    IntMatrix naive = IntMatrix::identity(10);
    for (int j = 1; j <= 10; ++j) naive = naive * q_matrix(omega, s(j));
    CHECK(q_product(g, s) == naive);
    CHECK(determinant(naive) == 1);
  }
}

TEST_CASE("stretch factors against independent oracles") {
  // Frozen from an independent Python computation of the same product.
  CHECK(std::abs(stretch_factor(8, Permutation::identity(10), 1e-12).value - 5.855642496168029) < 1e-9);
  for (int n = 8; n <= 23; ++n) {
    const IntMatrix q = q_product(n, Permutation::identity(n + 2));
    CHECK(q.is_nonnegative());
    CHECK(is_primitive(q));
    const double exact = stretch_factor(n, Permutation::identity(n + 2), 1e-12).value;
    CHECK(std::abs(exact - power_iteration(q)) < 1e-8);
    CHECK(std::abs(exact - coxeter_stretch(intersection_matrix(e_diagram(n + 2)))) < 1e-8);
  }
}

TEST_CASE("D diagram products follow the closed form") {
  const double pi = std::acos(-1.0);
  for (int n = 8; n <= 23; ++n) {
    const double mu = 2 * std::cos(pi / (2 * n + 2));
    const double s = mu * mu + 2;
    const double expected = (s + std::sqrt(s * s - 4)) / 2;
    CHECK(std::abs(spectral_radius(q_product(d_diagram(n + 2), Permutation::identity(n + 2)), 1e-12).value - expected) < 1e-9);
  }
}

TEST_CASE("b polynomials") {
  CHECK(b_poly(1) == IntPolynomial::parse("1 - t"));
  CHECK(b_poly(2) == IntPolynomial::parse("t^2 - 3t + 1"));
  CHECK(b_poly(3) == IntPolynomial::parse("-t^3 + 5t^2 - 5t + 1"));
  for (int m = 1; m <= 6; ++m) {
    CHECK(leibniz_determinant(b_matrix(m)) == b_poly(m));
    CHECK(poly_determinant(b_matrix(m)) == b_poly(m));
  }
  for (int m = 7; m <= 14; ++m) CHECK(poly_determinant(b_matrix(m)) == b_poly(m));
  CHECK(recurrence_charpoly(8).degree() == 11);
}

TEST_CASE("recurrence is the D-family product one size up") {
  for (int n = 8; n <= 23; ++n) {
    const IntPolynomial d = char_poly(q_product(d_diagram(n + 3), Permutation::identity(n + 3)));
    CHECK(same_up_to_normalization(recurrence_charpoly(n), d));
  }
}

TEST_CASE("sweep") {
  SweepOptions o;
  o.count = 200;
  o.seed = 1;
  o.threads = 4;
  const SweepReport r = sigma_sweep(8, o);
  CHECK(r.entries.size() == 200);
  CHECK(r.spread < 1e-9);
  CHECK(r.within_tol);
  CHECK(std::is_sorted(r.entries.begin(), r.entries.end(), [](const auto& a, const auto& b) { return a.sigma < b.sigma; }));
  o.threads = 1;
  const SweepReport single = sigma_sweep(8, o);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    CHECK(r.entries[i].sigma == single.entries[i].sigma);
    CHECK(r.entries[i].stretch.value == single.entries[i].stretch.value);
  }
  SweepOptions ex;
  ex.mode = SweepMode::exhaustive;
  ex.exhaustive_bound = 1000;
  CHECK_THROWS_AS(sigma_sweep(8, ex), Error);
}

TEST_CASE("rotations and commuting transpositions") {
  const CurveGraph g = e_diagram(10);
  const Permutation id = Permutation::identity(10);
  const IntPolynomial base = char_poly(q_product(g, id));
  for (int shift = 1; shift < 10; ++shift) {
    std::vector<int> v = id.one_line();
    std::rotate(v.begin(), v.begin() + shift, v.end());
    CHECK(char_poly(q_product(g, Permutation(v))) == base);
  }
  // Curves 1 and 3 are disjoint, so Q_1 and Q_3 commute: swapping them
  // when adjacent in sigma leaves the product unchanged.
  CHECK(q_product(g, Permutation({1, 3, 2, 4, 5, 6, 7, 8, 9, 10})) ==
        q_product(g, Permutation({3, 1, 2, 4, 5, 6, 7, 8, 9, 10})));
  CHECK(q_product(g, Permutation({2, 5, 7, 1, 3, 4, 6, 8, 9, 10})) ==
        q_product(g, Permutation({2, 7, 5, 1, 3, 4, 6, 8, 9, 10})));
  // Curves 1 and 2 intersect; that swap changes the product.
  CHECK_FALSE(q_product(g, Permutation({2, 1, 3, 4, 5, 6, 7, 8, 9, 10})) == q_product(g, id));
}

TEST_CASE("multicurve split") {
  const PennerSplit s = multicurve_split(8);
  CHECK(s.a == std::vector<int>{1, 4, 6, 8, 10});
  CHECK(s.b == std::vector<int>{2, 3, 5, 7, 9});
  for (int n = 8; n <= 25; ++n) {
    const PennerSplit t = multicurve_split(n);
    CHECK(t.a.size() + t.b.size() == static_cast<std::size_t>(n + 2));
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salemtwist/matrix.hpp"
#include "salemtwist/polynomial.hpp"
#include "salemtwist/roots.hpp"

namespace salemtwist::penner {

struct CurveGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, first < second
};

// Throws invalid_argument unless g is a tree with one degree-3 vertex and
// three leaves.
void validate_tree_shape(const CurveGraph& g);

// Edges 1-2, 2-4, 3-4 and the path 4-5-...-k. This is the labeling whose
// identity product has the displayed Q_{Id,n} entries. Needs k >= 6.
CurveGraph e_diagram(int k);
// Edges 1-3, 2-3 and the path 3-...-k; used for comparison only. k >= 4.
CurveGraph d_diagram(int k);

IntMatrix intersection_matrix(const CurveGraph& g);
// I + D_i Omega: the identity with row i of omega added to row i.
IntMatrix q_matrix(const IntMatrix& omega, int i);

// Bijection of {1..k} in one-line form: image(i) = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int k);
  // Disjoint or overlapping cycles such as "(1 3 2)(4 5)", composed right
  // to left; "()" or "" is the identity.
  static Permutation parse_cycles(std::string_view text, int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return images_; }
  // Canonical disjoint cycle form, each cycle starting at its smallest
  // element, fixed points omitted; the identity is "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

// Q_{sigma(1)} Q_{sigma(2)} ... Q_{sigma(k)}
IntMatrix q_product(const CurveGraph& g, const Permutation& sigma);
IntMatrix q_product(int n, const Permutation& sigma);

CertifiedReal stretch_factor(int n, const Permutation& sigma, double tol);

// b_1 = 1 - t, b_2 = 1 - 3t + t^2, b_m = -(t - 1) b_{m-1} - t b_{m-2}
IntPolynomial b_poly(int m);

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;
// m x m: 2 - t on the diagonal except 1 - t in the corner, 2 above the
// diagonal except 1 in the last column, 1 on the subdiagonal.
PolyMatrix b_matrix(int m);
// Fraction-free elimination over Z[t].
IntPolynomial poly_determinant(PolyMatrix m);

// t b_{n+3} + (t^2 - 3t + 2) b_{n+2} + (2t - 1) b_{n+1}
IntPolynomial recurrence_charpoly(int n);

// a and b agree after dividing out content and fixing the leading sign.
bool same_up_to_normalization(const IntPolynomial& a, const IntPolynomial& b);

enum class SweepMode { sample, exhaustive };

struct SweepOptions {
  SweepMode mode = SweepMode::sample;
  std::size_t count = 1000;        // sample size
  std::uint64_t seed = 1;
  std::size_t exhaustive_bound = 0;  // exhaustive needs (n+2)! <= bound
  double tol = 1e-9;
  unsigned threads = 0;
};

struct SweepEntry {
  Permutation sigma;
  CertifiedReal stretch;
};

struct SweepReport {
  int n = 0;
  std::vector<SweepEntry> entries;  // ascending one-line order
  double min = 0.0;
  double max = 0.0;
  double spread = 0.0;
  bool within_tol = false;
  std::size_t distinct_char_polys = 0;
};

// Fisher-Yates over mt19937_64 with rejection sampling, so the sequence of
// permutations depends only on the seed.
std::vector<Permutation> sample_permutations(int k, std::size_t count, std::uint64_t seed);

SweepReport sigma_sweep(int n, const SweepOptions& options);

struct PennerSplit {
  std::vector<int> a;
  std::vector<int> b;
};

// A = {1} and the even indices from 4, B = {2} and the odd indices from 3.
// Throws invalid_argument if an edge of e_diagram joins two curves of the
// same multicurve.
PennerSplit multicurve_split(int n);

// (n, value) for n = 8..23 as printed.
const std::vector<std::pair<int, double>>& printed_stretch_table();

}  // namespace salemtwist::penner

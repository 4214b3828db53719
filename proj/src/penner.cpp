#include "salemtwist/penner.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "salemtwist/error.hpp"
#include "salemtwist/parallel.hpp"

namespace salemtwist::penner {

void validate_tree_shape(const CurveGraph& g) {
  const int k = g.vertex_count;
  auto fail = [](const std::string& why) { return Error(ErrorCode::invalid_argument, "curve graph: " + why); };
  if (k < 4) throw fail("needs at least 4 vertices");
  if (g.edges.size() != static_cast<std::size_t>(k - 1)) throw fail("a tree on k vertices has k - 1 edges");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k + 1));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > k || v > k || u == v) throw fail("bad edge");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw fail("repeated edge");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> reached(static_cast<std::size_t>(k + 1), false);
  std::vector<int> stack{1};
  reached[1] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (reached[static_cast<std::size_t>(y)]) continue;
      reached[static_cast<std::size_t>(y)] = true;
      ++count;
      stack.push_back(y);
    }
  }
  if (count != k) throw fail("not connected");
  int trivalent = 0, leaves = 0;
  for (int v = 1; v <= k; ++v) {
    const auto d = adj[static_cast<std::size_t>(v)].size();
    if (d > 3) throw fail("vertex of degree above 3");
    trivalent += d == 3;
    leaves += d == 1;
  }
  if (trivalent != 1 || leaves != 3) throw fail("needs exactly one degree-3 vertex and three leaves");
}

CurveGraph e_diagram(int k) {
  if (k < 6) throw Error(ErrorCode::invalid_argument, "E diagram needs k >= 6");
  CurveGraph g{k, {{1, 2}, {2, 4}, {3, 4}}};
  for (int i = 4; i < k; ++i) g.edges.emplace_back(i, i + 1);
  validate_tree_shape(g);
  return g;
}

CurveGraph d_diagram(int k) {
  if (k < 4) throw Error(ErrorCode::invalid_argument, "D diagram needs k >= 4");
  CurveGraph g{k, {{1, 3}, {2, 3}}};
  for (int i = 3; i < k; ++i) g.edges.emplace_back(i, i + 1);
  validate_tree_shape(g);
  return g;
}

IntMatrix intersection_matrix(const CurveGraph& g) {
  IntMatrix m(static_cast<std::size_t>(g.vertex_count));
  for (auto [u, v] : g.edges) {
    m(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = 1;
    m(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = 1;
  }
  return m;
}

IntMatrix q_matrix(const IntMatrix& omega, int i) {
  const std::size_t k = omega.dimension();
  if (i < 1 || static_cast<std::size_t>(i) > k)
    throw Error(ErrorCode::index_out_of_range, "Q index " + std::to_string(i) + " outside [1, " + std::to_string(k) + "]");
  IntMatrix q = IntMatrix::identity(k);
  const auto r = static_cast<std::size_t>(i - 1);
  for (std::size_t c = 0; c < k; ++c) q(r, c) += omega(r, c);
  return q;
}

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  const auto k = images_.size();
  std::vector<bool> hit(k + 1, false);
  for (int x : images_) {
    if (x < 1 || static_cast<std::size_t>(x) > k || hit[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::invalid_permutation, "not a bijection of 1.." + std::to_string(k));
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(std::string_view text, int k) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::invalid_permutation, "cycle text '" + std::string(text) + "': " + why);
  };
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw fail("unclosed cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("unexpected character");
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > k) throw fail("entry exceeds " + std::to_string(k));
        ++pos;
      }
      if (v < 1) throw fail("entries start at 1");
      if (std::find(cycle.begin(), cycle.end(), static_cast<int>(v)) != cycle.end()) throw fail("repeated entry in a cycle");
      cycle.push_back(static_cast<int>(v));
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  std::vector<int> images = identity(k).images_;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    std::vector<int> step = identity(k).images_;
    for (std::size_t j = 0; j < c.size(); ++j) step[static_cast<std::size_t>(c[j] - 1)] = c[(j + 1) % c.size()];
    for (int& x : images) x = step[static_cast<std::size_t>(x - 1)];
  }
  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[static_cast<std::size_t>(x)] = true;
      x = (*this)(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

IntMatrix q_product(const CurveGraph& g, const Permutation& sigma) {
  if (sigma.size() != g.vertex_count)
    throw Error(ErrorCode::invalid_permutation, "permutation size " + std::to_string(sigma.size()) +
                                                     " does not match " + std::to_string(g.vertex_count) + " curves");
  const IntMatrix omega = intersection_matrix(g);
  const auto k = static_cast<std::size_t>(g.vertex_count);
  IntMatrix p = IntMatrix::identity(k);
  // Right multiplication by Q_i adds (column i of p) * omega(i, .) to p.
  for (int j = 1; j <= g.vertex_count; ++j) {
    const auto i = static_cast<std::size_t>(sigma(j) - 1);
    IntMatrix next = p;
    for (std::size_t r = 0; r < k; ++r) {
      if (sgn(p(r, i)) == 0) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (sgn(omega(i, c)) != 0) next(r, c) += p(r, i) * omega(i, c);
    }
    p = std::move(next);
  }
  return p;
}

IntMatrix q_product(int n, const Permutation& sigma) { return q_product(e_diagram(n + 2), sigma); }

CertifiedReal stretch_factor(int n, const Permutation& sigma, double tol) {
  return spectral_radius(q_product(n, sigma), tol);
}

IntPolynomial b_poly(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "b index must be positive");
  IntPolynomial prev{1, -1};       // b_1
  if (m == 1) return prev;
  IntPolynomial cur{1, -3, 1};     // b_2
  const IntPolynomial one_minus_t{1, -1};
  const IntPolynomial minus_t{0, -1};
  for (int i = 3; i <= m; ++i) {
    IntPolynomial next = one_minus_t * cur + minus_t * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyMatrix b_matrix(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "B matrix size must be positive");
  const auto k = static_cast<std::size_t>(m);
  PolyMatrix b(k, std::vector<IntPolynomial>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        b[i][j] = i + 1 == k ? IntPolynomial{1, -1} : IntPolynomial{2, -1};
      else if (j > i)
        b[i][j] = IntPolynomial{j + 1 == k ? 1 : 2};
      else if (i == j + 1)
        b[i][j] = IntPolynomial{1};
    }
  }
  return b;
}

IntPolynomial poly_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  int sign = 1;
  IntPolynomial previous{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return IntPolynomial{};
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
    previous = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntPolynomial recurrence_charpoly(int n) {
  if (n < 8) throw Error(ErrorCode::invalid_argument, "n must be at least 8");
  return IntPolynomial{0, 1} * b_poly(n + 3) + IntPolynomial{2, -3, 1} * b_poly(n + 2) +
         IntPolynomial{-1, 2} * b_poly(n + 1);
}

bool same_up_to_normalization(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

namespace {

// Uniform on [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % bound;
}

}  // namespace

std::vector<Permutation> sample_permutations(int k, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<int> v = Permutation::identity(k).one_line();
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(engine, i)]);
    out.emplace_back(std::move(v));
  }
  return out;
}

SweepReport sigma_sweep(int n, const SweepOptions& options) {
  if (n < 8) throw Error(ErrorCode::invalid_argument, "n must be at least 8");
  if (!(options.tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  const int k = n + 2;
  std::vector<Permutation> perms;
  if (options.mode == SweepMode::exhaustive) {
    std::size_t total = 1;
    for (int i = 2; i <= k; ++i) {
      if (total > options.exhaustive_bound / static_cast<std::size_t>(i))
        throw Error(ErrorCode::invalid_argument,
                    "exhaustive sweep over " + std::to_string(k) + "! permutations exceeds the bound " +
                        std::to_string(options.exhaustive_bound));
      total *= static_cast<std::size_t>(i);
    }
    std::vector<int> v = Permutation::identity(k).one_line();
    do perms.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  } else {
    if (options.count == 0) throw Error(ErrorCode::invalid_argument, "sample count must be positive");
    perms = sample_permutations(k, options.count, options.seed);
    std::stable_sort(perms.begin(), perms.end());
  }

  const CurveGraph g = e_diagram(k);
  std::vector<IntPolynomial> polys(perms.size());
  parallel_for(perms.size(), options.threads, [&](std::size_t i) { polys[i] = char_poly(q_product(g, perms[i])); });

  // Every product is a nonnegative primitive matrix, so the Perron root is
  // the largest real root; each distinct polynomial is isolated once, tight
  // enough that the 12 printed digits are exact.
  const double root_tol = std::min(options.tol, 1e-13);
  std::map<std::vector<mpz_class>, CertifiedReal> roots;
  SweepReport r;
  r.n = n;
  r.entries.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto it = roots.find(polys[i].coefficients());
    if (it == roots.end()) it = roots.emplace(polys[i].coefficients(), real_root_max(polys[i], root_tol)).first;
    r.entries.push_back({perms[i], it->second});
  }
  r.distinct_char_polys = roots.size();
  r.min = r.max = r.entries.front().stretch.value;
  for (const auto& e : r.entries) {
    r.min = std::min(r.min, e.stretch.value);
    r.max = std::max(r.max, e.stretch.value);
  }
  r.spread = r.max - r.min;
  r.within_tol = r.spread < options.tol;
  return r;
}

PennerSplit multicurve_split(int n) {
  if (n < 8) throw Error(ErrorCode::invalid_argument, "n must be at least 8");
  PennerSplit s;
  s.a.push_back(1);
  s.b.push_back(2);
  for (int i = 3; i <= n + 2; ++i) (i % 2 == 0 ? s.a : s.b).push_back(i);
  std::sort(s.a.begin(), s.a.end());
  std::sort(s.b.begin(), s.b.end());
  const CurveGraph g = e_diagram(n + 2);
  auto in = [](const std::vector<int>& set, int x) { return std::binary_search(set.begin(), set.end(), x); };
  for (auto [u, v] : g.edges) {
    if ((in(s.a, u) && in(s.a, v)) || (in(s.b, u) && in(s.b, v)))
      throw Error(ErrorCode::invalid_argument,
                  "curves " + std::to_string(u) + " and " + std::to_string(v) + " intersect inside one multicurve");
  }
  return s;
}

const std::vector<std::pair<int, double>>& printed_stretch_table() {
  static const std::vector<std::pair<int, double>> table{
      {8, 5.70407},  {9, 5.72752},  {10, 5.74492}, {11, 5.75853}, {12, 5.76853}, {13, 5.77657},
      {14, 5.78339}, {15, 5.78882}, {16, 5.79333}, {17, 5.79712}, {18, 5.80032}, {19, 5.80305},
      {20, 5.80541}, {21, 5.80745}, {22, 5.80923}, {23, 5.8108}};
  return table;
}

}  // namespace salemtwist::penner

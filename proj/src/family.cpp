#include "salemtwist/family.hpp"

#include <cmath>
#include <cstdlib>
#include <initializer_list>

#include "salemtwist/error.hpp"
#include "salemtwist/matrix.hpp"

namespace salemtwist::family {

namespace {

void require_n(int n) {
  if (n < 8) throw Error(ErrorCode::invalid_argument, "n must be at least 8, got " + std::to_string(n));
}

// Letters as signed generator indices, negative for inverses.
Word word(std::size_t rank, std::initializer_list<int> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (int x : letters) out.push_back({std::abs(x), x > 0 ? 1 : -1});
  return reduce(out, rank);
}

// Generator names for rank n + 2.
struct Names {
  int n;
  std::size_t rank;
  int b;
  int c;
  explicit Names(int n_) : n(n_), rank(static_cast<std::size_t>(n_ + 2)), b(n_ + 1), c(n_ + 2) {}
};

}  // namespace

IntPolynomial chi_family(int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "chi exponent must be nonnegative");
  return IntPolynomial::monomial(1, static_cast<std::size_t>(k)) * IntPolynomial{-1, -1, 0, 1} +
         IntPolynomial{-1, 0, 1, 1};
}

IntPolynomial lehmer_polynomial() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

namespace {

ConventionCandidate examine(int k, double tol) {
  ConventionCandidate c;
  c.exponent = k;
  c.chi = chi_family(k);
  c.split = strip_cyclotomic(c.chi);
  if (c.split.core.degree() >= 2) c.salem = salem_certify(c.split.core, tol);
  c.lehmer_match = c.split.core == lehmer_polynomial();
  return c;
}

}  // namespace

int lehmer_anchor_offset(double tol) {
  constexpr int anchor_n = 8;
  std::optional<int> hit;
  for (int k = anchor_n - 2; k <= anchor_n + 1; ++k) {
    if (!examine(k, tol).lehmer_match) continue;
    if (hit) throw Error(ErrorCode::no_convention, "several exponents reproduce the Lehmer polynomial at n = 8");
    hit = k - anchor_n;
  }
  if (!hit) throw Error(ErrorCode::no_convention, "no exponent reproduces the Lehmer polynomial at n = 8");
  return *hit;
}

ConventionReport resolve_convention(int n, double tol, bool throw_on_failure) {
  require_n(n);
  ConventionReport r;
  r.n = n;
  r.literal_exponent = n - 2;
  r.anchor_offset = lehmer_anchor_offset(tol);
  for (int k = n - 2; k <= n + 1; ++k) r.candidates.push_back(examine(k, tol));
  const ConventionCandidate& literal = r.candidates.front();
  r.literal_degree_ok = literal.chi.degree() >= lehmer_polynomial().degree();
  for (const ConventionCandidate& c : r.candidates) {
    if (c.exponent - n != r.anchor_offset) continue;
    if (!c.salem.is_salem) break;
    r.calibrated_exponent = c.exponent;
    r.salem_core_degree = c.split.core.degree();
    r.lehmer_match = c.lehmer_match;
  }
  if (!r.calibrated_exponent) {
    if (throw_on_failure)
      throw Error(ErrorCode::no_convention, "no chi exponent passes calibration at n = " + std::to_string(n));
    return r;
  }
  r.literal_agrees = *r.calibrated_exponent == r.literal_exponent;
  return r;
}

CertifiedReal lambda_n(int n, double tol, Convention convention) {
  require_n(n);
  const int k = convention == Convention::literal ? n - 2 : *resolve_convention(n, tol).calibrated_exponent;
  return real_root_max(chi_family(k), tol);
}

Endomorphism f_star(int n) {
  require_n(n);
  const Names g(n);
  const int b = g.b, c = g.c;
  std::vector<Word> img;
  img.reserve(g.rank);
  img.push_back(word(g.rank, {1, -2, b, -c}));
  img.push_back(word(g.rank, {1, -b, 3, -c}));
  img.push_back(word(g.rank, {1, c, -4, b}));
  img.push_back(word(g.rank, {1, 5, -c, b}));
  for (int i = 5; i <= n - 1; ++i) img.push_back(word(g.rank, {c, -(i + 1), -1, b}));
  img.push_back(word(g.rank, {c}));
  img.push_back(word(g.rank, {1}));
  img.push_back(word(g.rank, {b}));
  return Endomorphism(g.rank, std::move(img));
}

Endomorphism t_star_closed_form(int n) {
  // Transcribed separately from f_star; the two tables coincide as printed.
  require_n(n);
  const Names g(n);
  Endomorphism t = Endomorphism::identity(g.rank);
  t = t.with_image(1, word(g.rank, {1, -2, g.b, -g.c}));
  t = t.with_image(2, word(g.rank, {1, -g.b, 3, -g.c}));
  t = t.with_image(3, word(g.rank, {1, g.c, -4, g.b}));
  t = t.with_image(4, word(g.rank, {1, 5, -g.c, g.b}));
  for (int i = 5; i < n; ++i) t = t.with_image(i, word(g.rank, {g.c, -(i + 1), -1, g.b}));
  t = t.with_image(n, word(g.rank, {g.c}));
  t = t.with_image(g.b, word(g.rank, {1}));
  t = t.with_image(g.c, word(g.rank, {g.b}));
  return t;
}

Endomorphism twist_gen(int n, int i, TwistTable table) {
  require_n(n);
  if (i < 1 || i > n + 2)
    throw Error(ErrorCode::index_out_of_range, "twist index " + std::to_string(i) + " outside [1, " + std::to_string(n + 2) + "]");
  const Names g(n);
  const std::size_t r = g.rank;
  const int b = g.b, c = g.c, an = n;
  Endomorphism t = Endomorphism::identity(r);
  if (i == 1) {
    t = t.with_image(b, word(r, {b, -c, b}));
    t = t.with_image(c, word(r, {b}));
    for (int j : {3, 4}) t = t.with_image(j, word(r, {b, -c, j, -c, b}));
  } else if (i == 2) {
    t = t.with_image(c, word(r, {c, -an, c}));
    t = t.with_image(an, word(r, {c}));
    for (int j = 5; j <= n - 1; ++j) t = t.with_image(j, word(r, {c, -an, j, -an, c}));
  } else if (i == 3) {
    for (int j : {1, 2}) t = t.with_image(j, word(r, {j, -b, c, -an}));
    for (int j : {3, 4}) {
      t = t.with_image(j, table == TwistTable::printed ? word(r, {c, -an, -b, j}) : word(r, {b, an, -c, j}));
    }
    for (int j = 5; j <= n - 1; ++j) t = t.with_image(j, word(r, {j, -an, -b, c}));
  } else if (i == n - 1) {
    t = t.with_image(4, word(r, {4, -c, 5, -c, 4}));
    t = t.with_image(5, word(r, {c, -4, c}));
  } else if (i == n + 1) {
    t = t.with_image(2, word(r, {2, -b, 3, -b, 2}));
    t = t.with_image(3, word(r, {b, -2, b}));
  } else {
    // i in {4, ..., n - 2, n, n + 2}
    const int p = n + 4 - i;
    const int q = n + 3 - i;
    t = t.with_image(p, word(r, {q}));
    t = t.with_image(q, word(r, {q, -p, q}));
  }
  return t;
}

std::vector<Endomorphism> twist_list(int n, TwistTable table) {
  std::vector<Endomorphism> out;
  out.reserve(static_cast<std::size_t>(n + 2));
  for (int i = 1; i <= n + 2; ++i) out.push_back(twist_gen(n, i, table));
  return out;
}

Endomorphism compose_twists(int n, std::span<const Endomorphism> twists) {
  require_n(n);
  Endomorphism t = Endomorphism::identity(static_cast<std::size_t>(n + 2));
  for (const Endomorphism& tau : twists) t = compose(tau, t);
  return t;
}

Endomorphism t_star(int n, TwistTable table) {
  const auto twists = twist_list(n, table);
  return compose_twists(n, twists);
}

EndoDiff diff(const Endomorphism& lhs, const Endomorphism& rhs) {
  if (lhs.rank() != rhs.rank()) throw Error(ErrorCode::rank_mismatch, "diff: endomorphism ranks differ");
  EndoDiff d;
  for (std::size_t g = 1; g <= lhs.rank(); ++g) {
    const Word& a = lhs.image(static_cast<int>(g));
    const Word& b = rhs.image(static_cast<int>(g));
    if (a == b) continue;
    d.equal = false;
    d.mismatches.push_back({static_cast<int>(g), a, b});
  }
  return d;
}

namespace {

IsotopyReport isotopy_with(int n, const Endomorphism& composed, std::string table) {
  IsotopyReport r;
  r.n = n;
  r.table = std::move(table);
  const Endomorphism f = f_star(n);
  const Endomorphism closed = t_star_closed_form(n);
  r.f_vs_t = diff(f, composed);
  r.t_vs_closed = diff(composed, closed);
  r.f_vs_closed = diff(f, closed);
  return r;
}

}  // namespace

IsotopyReport verify_isotopy(int n, TwistTable table) {
  return isotopy_with(n, t_star(n, table), table == TwistTable::printed ? "printed" : "corrected");
}

IsotopyReport verify_isotopy(int n, std::span<const Endomorphism> twists) {
  require_n(n);
  if (twists.size() != static_cast<std::size_t>(n + 2))
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(n + 2) + " twists");
  return isotopy_with(n, compose_twists(n, twists), "custom");
}

MMatrixReport m_matrix_comparison(int n, double tol) {
  require_n(n);
  MMatrixReport r;
  r.n = n;
  r.computed_dimension = n + 2;
  r.printed_dimension = n + 3;
  r.abelianization = abelianization(f_star(n));
  r.char_poly = salemtwist::char_poly(r.abelianization);
  r.split = strip_cyclotomic(r.char_poly);
  r.core_is_lehmer = r.split.core == lehmer_polynomial();
  r.core_is_lehmer_reflected = r.split.core == lehmer_polynomial().reflected();

  const IntPolynomial minus_t{0, -1};
  const IntPolynomial cubic{-1, 1, 0, -1};  // -t^3 + t - 1
  const IntPolynomial tail{-1, 0, 1, -1};   // -t^3 + t^2 - 1
  const IntPolynomial own_core = r.split.core;
  for (int k = n - 2; k <= n + 1; ++k) {
    ClaimCandidate c;
    c.exponent = k;
    IntPolynomial power{1};
    for (int i = 0; i < k; ++i) power *= minus_t;
    c.numerator = power * cubic + tail;
    const Division d = divide(c.numerator, IntPolynomial{1, 1});
    c.divisible = d.exact;
    if (c.divisible) {
      c.quotient = d.quotient;
      c.matches = equal_up_to_sign(r.char_poly, c.quotient);
      if (c.quotient.degree() >= 1) c.matches_up_to_cyclotomic = equal_up_to_sign(strip_cyclotomic(c.quotient).core, own_core);
    }
    r.candidates.push_back(std::move(c));
  }
  r.spectral_radius = salemtwist::spectral_radius(r.abelianization, tol);
  r.lambda = lambda_n(n, tol);
  r.difference = std::abs(r.spectral_radius.value - r.lambda.value);
  return r;
}

SurfaceInfo surface_info(int n) {
  require_n(n);
  SurfaceInfo s;
  s.n = n;
  s.genus = (n + 2) / 2;
  s.punctures = n % 2 == 0 ? 1 : 2;
  s.euler_characteristic = -1 - n;
  s.cubic_sided = n % 2 == 0 ? Sidedness::one_sided : Sidedness::two_sided;
  s.ambient_nonorientable_genus = n + 3;
  return s;
}

}  // namespace salemtwist::family

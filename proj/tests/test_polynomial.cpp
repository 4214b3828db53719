#include <doctest.h>

#include "oracles.hpp"
#include "salemtwist/error.hpp"
#include "salemtwist/polynomial.hpp"

using namespace salemtwist;

namespace {

IntPolynomial lehmer() { return IntPolynomial::parse("t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1"); }

IntPolynomial random_poly(oracle::Rng& rng, int max_degree, long bound) {
  std::vector<mpz_class> c;
  const int d = static_cast<int>(rng.uniform(0, max_degree));
  for (int i = 0; i <= d; ++i) c.emplace_back(rng.uniform(-bound, bound));
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
  CHECK(IntPolynomial::monomial(3, 4).coefficient(4) == 3);
  CHECK(IntPolynomial::monomial(3, 4).coefficient(9) == 0);
  CHECK_THROWS_AS((void)IntPolynomial{}.leading(), Error);
}

TEST_CASE("text format") {
  CHECK(lehmer().degree() == 10);
  CHECK(lehmer().to_string() == "t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{-2, 0, 5}.to_string() == "5*t^2 - 2");
  CHECK(IntPolynomial::parse("5t^2") == IntPolynomial{0, 0, 5});
  CHECK(IntPolynomial::parse("5*t^2") == IntPolynomial{0, 0, 5});
  CHECK(IntPolynomial::parse("-t^3 + 1") == IntPolynomial{1, 0, 0, -1});
  CHECK(IntPolynomial::parse("t") == t_poly());
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK_THROWS_AS(IntPolynomial::parse("t^^2"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("x + 1"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse(""), Error);
}

TEST_CASE("arithmetic and evaluation") {
  const IntPolynomial a{-1, 1};  // t - 1
  const IntPolynomial b{1, 1};   // t + 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK((a - a).is_zero());
  CHECK(lehmer().evaluate(mpz_class(1)) == -1);
  CHECK(IntPolynomial{1, 0, 1}.evaluate(mpq_class(1, 2)) == mpq_class(5, 4));
  CHECK(IntPolynomial{-2, 0, 1}.sign_at(mpq_class(3, 2)) == 1);
  CHECK(IntPolynomial{-2, 0, 1}.sign_at(mpq_class(4, 3)) == -1);
  CHECK(IntPolynomial{-4, 0, 1}.sign_at(mpq_class(2)) == 0);
}

TEST_CASE("transforms") {
  CHECK(lehmer().is_palindromic());
  CHECK_FALSE(IntPolynomial::parse("t^3 - t - 1").is_palindromic());
  CHECK(lehmer().reversed() == lehmer());
  CHECK(IntPolynomial::parse("t^3 - t - 1").reflected() == IntPolynomial::parse("-t^3 + t - 1"));
  CHECK(IntPolynomial::parse("t^3 - t - 1").derivative() == IntPolynomial::parse("3t^2 - 1"));
  CHECK(IntPolynomial{4, 6, -2}.content() == 2);
  CHECK(IntPolynomial{4, 6, -2}.normalized() == IntPolynomial{-2, -3, 1});
}

TEST_CASE("division") {
  const IntPolynomial p = IntPolynomial::parse("t^2 + 1");
  CHECK_THROWS_AS(poly_divide_exact(p, IntPolynomial{-1, 1}), Error);
  const IntPolynomial chi_eight = IntPolynomial::parse("t^11 - t^9 - t^8 + t^3 + t^2 - 1");
  CHECK(poly_divide_exact(chi_eight, IntPolynomial{-1, 1}) == lehmer());
  const Division d = divide(IntPolynomial::parse("t^3 + 2"), IntPolynomial::parse("t - 1"));
  CHECK(d.complete);
  CHECK_FALSE(d.exact);
  CHECK(d.quotient == IntPolynomial::parse("t^2 + t + 1"));
  CHECK(d.remainder == IntPolynomial{3});
  CHECK_FALSE(divide(IntPolynomial::parse("t^2"), IntPolynomial::parse("2t + 1")).exact);
}

TEST_CASE("gcd and square-free part") {
  const IntPolynomial a{-1, 1};
  const IntPolynomial b{1, 1};
  CHECK(gcd(a * a * b, a * b * b) == a * b);
  CHECK(square_free_part(a * a * a * b) == a * b);
  CHECK(square_free_part(lehmer()) == lehmer());
  CHECK(equal_up_to_sign(lehmer(), -lehmer()));
  CHECK_FALSE(equal_up_to_sign(lehmer(), lehmer() * mpz_class(2)));
}

TEST_CASE("property: ring laws and evaluation homomorphism") {
  oracle::Rng rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = random_poly(rng, 8, 20);
    const auto q = random_poly(rng, 8, 20);
    const mpz_class x = rng.uniform(-9, 9);
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    CHECK(p.evaluate(x) == oracle::evaluate_naive(p.coefficients(), x));
    CHECK(IntPolynomial::parse(p.to_string()) == p);
    if (!q.is_zero() && q.leading() == 1) {
      const Division d = divide(p, q);
      REQUIRE(d.complete);
      CHECK(d.exact == d.remainder.is_zero());
      CHECK(d.quotient * q + d.remainder == p);
      CHECK(d.remainder.degree() < q.degree());
    }
    if (!q.is_zero()) CHECK(poly_divide_exact(p * q, q) == p);
  }
}

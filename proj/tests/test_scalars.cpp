#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "nilgeo/parampoly.hpp"
#include "nilgeo/rational.hpp"

using namespace nilgeo;
using nilgeo::testing::Rng;

TEST_CASE("rationals are reduced with positive denominator") {
  Rational q(6, -4);
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("x/3"), Error);
}

TEST_CASE("rationalize: pinned small cases") {
  CHECK(rationalize(0.5, 10) == Rational(1, 2));
  CHECK(rationalize(0.333334, 100) == Rational(1, 3));
  CHECK(rationalize(-0.25, 8) == Rational(-1, 4));
  CHECK(rationalize(3.0, 1) == Rational(3));
  CHECK_THROWS_AS(rationalize(0.5, 0), Error);
}

// Oracle: exhaustive scan over all denominators 1..bound. For each b the
// best numerator is round(x*b); minimal error wins.
static Rational best_error_by_scan(double x, long bound) {
  Rational target = Rational::from_double(x);
  Rational best_err;
  bool first = true;
  for (long b = 1; b <= bound; ++b) {
    // a = floor(target*b + 1/2)
    Rational tb = target * Rational(b) + Rational(1, 2);
    mpz_class a = tb.num() / tb.den();
    if (tb.sign() < 0 && tb.num() % tb.den() != 0) a -= 1;
    Rational err = (Rational(mpq_class(a, b)) - target).abs();
    if (first || err < best_err) {
      best_err = err;
      first = false;
    }
  }
  return best_err;
}

TEST_CASE("rationalize matches the exhaustive-scan oracle") {
  for (double x : {0.7071067, 0.333334, 0.127, 0.9999, 2.718281828, 0.0042}) {
    for (long bound : {7L, 50L, 113L}) {
      Rational r = rationalize(x, bound);
      CHECK(r.den() <= bound);
      CHECK((r - Rational::from_double(x)).abs() == best_error_by_scan(x, bound));
    }
  }
}

TEST_CASE("gaussian rational basics") {
  GaussRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.conj().conj() == z);
  CHECK(z.norm2() == Rational(1, 4) + Rational(9, 16));
  CHECK(GaussRational().norm2() == Rational(0));
  CHECK((z * z.inv()) == GaussRational(1));
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
}

TEST_CASE("gaussian rational literals round-trip") {
  for (const char* lit : {"0", "1", "-3/2", "1*i", "-1*i", "1/2+3/4*i", "-2-1/3*i", "i"}) {
    GaussRational v = GaussRational::parse(lit);
    CHECK(GaussRational::parse(v.str()) == v);
  }
  CHECK(GaussRational::parse("1/2+3/4*i") == GaussRational(Rational(1, 2), Rational(3, 4)));
  CHECK(GaussRational::parse("i") == GaussRational::i());
  CHECK_THROWS_AS(GaussRational::parse("1/2+"), Error);
  CHECK_THROWS_AS(GaussRational::parse(""), Error);
}

TEST_CASE("poly_conj swaps parameters and conjugates coefficients") {
  ParamPoly t11 = ParamPoly::variable("t11");
  CHECK(t11.conj() == ParamPoly::conj_variable("t11"));
  CHECK(t11.conj().str() == "1*conj(t11)");

  // conj(i*t11*s22) = -i*s11*t22
  ParamPoly p = ParamPoly(GaussRational::i()) * t11 * ParamPoly::conj_variable("t22");
  ParamPoly expected =
      ParamPoly(-GaussRational::i()) * ParamPoly::conj_variable("t11") * ParamPoly::variable("t22");
  CHECK(p.conj() == expected);

  // involution on p = (1+2i) t12^2 + s31
  ParamPoly t12 = ParamPoly::variable("t12");
  ParamPoly q = ParamPoly(GaussRational(Rational(1), Rational(2))) * t12 * t12 +
                ParamPoly::conj_variable("t31");
  CHECK(q.conj().conj() == q);
}

TEST_CASE("poly_eval: pinned examples") {
  ParamPoly det = ParamPoly::variable("t11") * ParamPoly::variable("t22") -
                  ParamPoly::variable("t12") * ParamPoly::variable("t21");
  std::map<std::string, GaussRational> point{
      {"t11", GaussRational()},
      {"t12", GaussRational(Rational(1, 10))},
      {"t21", GaussRational()},
      {"t22", GaussRational()},
  };
  CHECK(det.eval(point) == GaussRational());

  ParamPoly tsq = ParamPoly::variable("t12") * ParamPoly::conj_variable("t12");
  CHECK(tsq.eval(point) == GaussRational(Rational(1, 100)));

  CHECK(ParamPoly().eval({}) == GaussRational());
  CHECK_THROWS_WITH_AS(det.eval({}), doctest::Contains("no value for parameter"), Error);
  CHECK_THROWS_WITH_AS(ParamPoly::variable("t11").eval({}), doctest::Contains("t11"), Error);
}

static ParamPoly random_poly(Rng& rng) {
  const char* vars[] = {"t11", "t12", "t21"};
  ParamPoly p(rng.gauss(3, 2));
  long terms = rng.range(0, 3);
  for (long k = 0; k < terms; ++k) {
    ParamPoly m(rng.gauss(3, 2));
    long factors = rng.range(1, 2);
    for (long j = 0; j < factors; ++j) {
      const char* v = vars[rng.range(0, 2)];
      m *= rng.range(0, 1) ? ParamPoly::variable(v) : ParamPoly::conj_variable(v);
    }
    p += m;
  }
  return p;
}

TEST_CASE("ring axioms and conjugation laws on random operands") {
  Rng rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    ParamPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());

    std::map<std::string, GaussRational> point{
        {"t11", rng.gauss(2, 2)}, {"t12", rng.gauss(2, 2)}, {"t21", rng.gauss(2, 2)}};
    CHECK(a.conj().eval(point) == a.eval(point).conj());
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}

TEST_CASE("homogeneous parts partition the polynomial") {
  Rng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    ParamPoly p = random_poly(rng);
    ParamPoly sum;
    for (int d = 0; d <= p.degree(); ++d) sum += p.homogeneous_part(d);
    CHECK(sum == p);
  }
}

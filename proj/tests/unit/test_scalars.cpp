#include "doctest.h"
#include "test_support.hpp"
#include "tropnewton/error.hpp"

using namespace tropnewton;
using namespace tropnewton::testing;

TEST_SUITE("scalars") {
  TEST_CASE("valuations") {
    const Field p2 = Field::padic(2);
    CHECK(p2.val(Scalar(8)) == ExtRat(3));
    CHECK(p2.val(Scalar(q("3/8"))) == ExtRat(-3));
    CHECK(Field::puiseux().val(tp(3) - Scalar(1)) == ExtRat(0));
    CHECK(Field::puiseux().val(Scalar()).is_infinite());
    CHECK(p2.val(Scalar()).is_infinite());
    CHECK(Field::puiseux().val(tp(q("-5/2"), 7)) == ExtRat(q("-5/2")));
  }

  TEST_CASE("arithmetic") {
    CHECK((tp(1) + tp(2)) + (-tp(1)) == tp(2));
    CHECK(tp(q("1/2")) * tp(q("1/2")) == tp(1));
    CHECK((tp(q("1/2")) * tp(q("1/2"))).ramification() == 1);

    Scalar f = Scalar(1) / (Scalar(1) + tp(1));
    auto num = f.numerator_terms();
    auto den = f.denominator_terms();
    REQUIRE(num.size() == 1);
    CHECK(num[0] == std::make_pair(Rat(0), Rat(1)));
    REQUIRE(den.size() == 2);
    CHECK(den[0] == std::make_pair(Rat(0), Rat(1)));
    CHECK(den[1] == std::make_pair(Rat(1), Rat(1)));
    CHECK(f * (Scalar(1) + tp(1)) == Scalar(1));

    CHECK_THROWS_AS(Scalar(1) / Scalar(), Error);
    try {
      (void)(tp(1) / Scalar());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("canonical form makes equal values identical") {
    Scalar a = (tp(2) - Scalar(1)) / (tp(1) - Scalar(1));  // = t + 1
    CHECK(a == tp(1) + Scalar(1));
    CHECK(a.is_polynomial());
    Scalar b = tp(q("2/3")) * tp(q("1/3"));
    CHECK(b == tp(1));
    CHECK(b.ramification() == 1);
    CHECK((tp(q("1/2")) - tp(q("1/2"))).is_zero());
  }

  TEST_CASE("leading residues") {
    CHECK(Field::puiseux().leading_residue(tp(2, 3) - tp(5)) == 3);
    CHECK(Field::padic(2).leading_residue(Scalar(8)) == 1);
    CHECK(Field::padic(3).leading_residue(Scalar(q("-1/9"))) == 2);  // -1 = 2 mod 3
    Scalar quotient = (tp(1, -2) + tp(2)) / tp(1);
    CHECK(Field::puiseux().leading_residue(quotient) == -2);
    CHECK_THROWS_AS(Field::puiseux().leading_residue(Scalar()), Error);
  }

  TEST_CASE("printing") {
    CHECK((tp(3, 2) - Scalar(1)).to_string() == "2*t^3 - 1");
    CHECK(tp(q("1/2")).to_string() == "t^(1/2)");
    CHECK(tp(-2).to_string() == "t^(-2)");
    CHECK(Scalar().to_string() == "0");
    CHECK((Scalar(1) / (Scalar(1) + tp(1))).to_string() == "(1)/(t + 1)");
  }

  TEST_CASE("non-prime modulus") {
    CHECK_THROWS_AS(Field::padic(4), Error);
    CHECK_NOTHROW(Field::padic(3));
  }

  TEST_CASE("valuation is multiplicative and ultrametric (puiseux)") {
    std::mt19937_64 rng(11);
    const Field K = Field::puiseux();
    for (int i = 0; i < 300; ++i) {
      Scalar a = random_puiseux(rng), b = random_puiseux(rng);
      CHECK(K.val(a * b) == K.val(a) + K.val(b));
      CHECK(K.leading_residue(a * b) == K.leading_residue(a) * K.leading_residue(b));
      ExtRat s = K.val(a + b);
      CHECK(s >= min(K.val(a), K.val(b)));
      if (K.val(a) != K.val(b)) CHECK(s == min(K.val(a), K.val(b)));
      CHECK((a / b) * b == a);
      CHECK((a - b) + b == a);
    }
  }

  TEST_CASE("valuation is multiplicative and ultrametric (p-adic)") {
    std::mt19937_64 rng(12);
    for (long p : {2L, 3L, 5L}) {
      const Field K = Field::padic(p);
      for (int i = 0; i < 200; ++i) {
        Scalar a = random_padic(rng, p), b = random_padic(rng, p);
        CHECK(K.val(a * b) == K.val(a) + K.val(b));
        Rat lr = K.leading_residue(a) * K.leading_residue(b);
        Int r = lr.get_num() % p;
        CHECK(K.leading_residue(a * b) == Rat(r));
        if (!(a + b).is_zero()) {
          ExtRat s = K.val(a + b);
          CHECK(s >= min(K.val(a), K.val(b)));
          if (K.val(a) != K.val(b)) CHECK(s == min(K.val(a), K.val(b)));
        }
      }
    }
  }

  TEST_CASE("rational roots") {
    // (2x - 1)(x + 3)(x^2 + 1)
    QPoly f = QPoly(std::vector<Rat>{-1, 2}) * QPoly(std::vector<Rat>{3, 1}) * QPoly(std::vector<Rat>{1, 0, 1});
    auto r = rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -3);
    CHECK(r[1] == q("1/2"));
    CHECK(rational_roots(QPoly(std::vector<Rat>{-2, 0, 1})).empty());
    // roots are nonzero even when x divides f
    CHECK(rational_roots(QPoly(std::vector<Rat>{0, -1, 1})) == std::vector<Rat>{1});
  }

  TEST_CASE("polynomial gcd over Q agrees with the euclidean algorithm") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> deg(0, 6), c(-40, 40), den(1, 7);
    auto random_q = [&] {
      std::vector<Rat> v(static_cast<size_t>(deg(rng)) + 1);
      for (auto& x : v) {
        x = Rat(c(rng), den(rng));
        x.canonicalize();
      }
      v.back() = v.back() == 0 ? Rat(1) : v.back();
      return QPoly(std::move(v));
    };
    for (int i = 0; i < 200; ++i) {
      QPoly a = random_q(), b = random_q(), common = random_q();
      QPoly g = QPoly::gcd(a * common, b * common);
      CHECK(g == QPoly::euclid_gcd(a * common, b * common));
      CHECK(QPoly::divmod(g, common.monic()).second.is_zero_poly());
    }
    CHECK(QPoly::gcd(QPoly(), QPoly(std::vector<Rat>{2, 4})) == QPoly(std::vector<Rat>{q("1/2"), 1}));
    CHECK(QPoly::gcd(QPoly(Rat(3)), QPoly(std::vector<Rat>{2, 4})) == QPoly(Rat(1)));
  }

  TEST_CASE("extended rationals") {
    CHECK(ExtRat::infinity() > ExtRat(1000));
    CHECK((ExtRat::infinity() + ExtRat(1)).is_infinite());
    CHECK(min(ExtRat(2), ExtRat::infinity()) == ExtRat(2));
    CHECK(ExtRat::infinity().to_string() == "inf");
  }
}

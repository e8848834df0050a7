#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uturn/rational.hpp"

using namespace uturn;

TEST_CASE("construction and canonical form") {
    CHECK(Rat{} == Rat{0});
    CHECK(Rat{6, 8} == Rat{3, 4});
    CHECK(Rat{-6, 8} == Rat{3, -4});
    CHECK(Rat{6, 8}.str() == "3/4");
    CHECK(Rat{-6, 8}.str() == "-3/4");
    CHECK(Rat{5}.str() == "5");
    CHECK(Rat{0, 7}.str() == "0");
    CHECK(Rat{-6, 8}.num_str() == "-3");
    CHECK(Rat{-6, 8}.den_str() == "4");
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("parse accepts p, p/q, signs") {
    CHECK(Rat::parse("7") == Rat{7});
    CHECK(Rat::parse("-7") == Rat{-7});
    CHECK(Rat::parse("+7") == Rat{7});
    CHECK(Rat::parse("3/4") == Rat{3, 4});
    CHECK(Rat::parse("-3/4") == Rat{-3, 4});
    CHECK(Rat::parse("6/8") == Rat{3, 4});
    CHECK(Rat::parse("123456789012345678901234567891/7").den_str() == "7");
    CHECK(Rat::parse("123456789012345678901234567891/7").num_str() ==
          "123456789012345678901234567891");
    CHECK_THROWS_AS(Rat::parse(""), DomainError);
    CHECK_THROWS_AS(Rat::parse("a"), DomainError);
    CHECK_THROWS_AS(Rat::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rat::parse("1.5"), DomainError);
    CHECK_THROWS_AS(Rat::parse("1/"), DomainError);
    CHECK_THROWS_AS(Rat::parse("/2"), DomainError);
}

TEST_CASE("field operations") {
    const Rat a{3, 4}, b{-2, 5};
    CHECK(a + b == Rat{7, 20});
    CHECK(a - b == Rat{23, 20});
    CHECK(a * b == Rat{-3, 10});
    CHECK(a / b == Rat{-15, 8});
    CHECK(-a == Rat{-3, 4});
    CHECK(a.inv() == Rat{4, 3});
    CHECK_THROWS_AS(a / Rat{0}, DomainError);
    CHECK_THROWS_AS(Rat{0}.inv(), DomainError);

    CHECK(rat_arith(a, b, RatOp::Add) == a + b);
    CHECK(rat_arith(a, b, RatOp::Sub) == a - b);
    CHECK(rat_arith(a, b, RatOp::Mul) == a * b);
    CHECK(rat_arith(a, b, RatOp::Div) == a / b);
}

TEST_CASE("ordering and signs") {
    CHECK(Rat{1, 3} < Rat{1, 2});
    CHECK(Rat{-1, 2} < Rat{-1, 3});
    CHECK(Rat{1, 2} >= Rat{1, 2});
    CHECK(Rat{-5}.sign() == -1);
    CHECK(Rat{0}.sign() == 0);
    CHECK(Rat{2, 9}.sign() == 1);
    CHECK(Rat{0}.is_zero());
    CHECK_FALSE(Rat{1, 1000000}.is_zero());
}

TEST_CASE("integer powers") {
    const Rat a{-2, 3};
    CHECK(a.pow(0) == Rat{1});
    CHECK(a.pow(1) == a);
    CHECK(a.pow(3) == Rat{-8, 27});
    CHECK(a.pow(-2) == Rat{9, 4});
    CHECK(a.pow(-3) == Rat{-27, 8});
    CHECK(Rat{0}.pow(5) == Rat{0});
    CHECK(Rat{0}.pow(0) == Rat{1});
    CHECK_THROWS_AS(Rat{0}.pow(-1), DomainError);
    CHECK(rat_pow(Rat{2}, 40) == Rat{1099511627776L});
}

TEST_CASE("float embedding") {
    CHECK(float_embed(Rat{1, 2}) == doctest::Approx(0.5));
    CHECK(Rat{-7, 4}.to_double() == doctest::Approx(-1.75));
    const Rat huge = Rat{10}.pow(400);
    CHECK_THROWS_AS(huge.to_double(), DomainError);
}

TEST_CASE("pole error carries its factor") {
    try {
        throw PoleError("1-sx", "weight denominator");
    } catch (const PoleError& e) {
        CHECK(e.factor() == "1-sx");
        CHECK(std::string(e.what()).find("1-sx") != std::string::npos);
    }
}

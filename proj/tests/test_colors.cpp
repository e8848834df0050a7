#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "uturn/colors.hpp"

using namespace uturn;

TEST_CASE("rank order: 1 < ... < n < 0 < bar(n) < ... < bar(1)") {
    const int n = 2;
    CHECK(rank_of(1, n) == 1);
    CHECK(rank_of(2, n) == 2);
    CHECK(rank_of(0, n) == 3);
    CHECK(rank_of(-2, n) == 4);
    CHECK(rank_of(-1, n) == 5);
    CHECK(all_colors(2) == std::vector<Color>{1, 2, 0, -2, -1});
    CHECK(color_lt(2, 0, n));
    CHECK(color_lt(0, -2, n));
    CHECK(color_lt(-2, -1, n));
    CHECK(color_compare(1, 1, n) == Cmp::EQ);
    CHECK(color_compare(-1, 2, n) == Cmp::GT);
    for (int m = 1; m <= 4; ++m) {
        std::set<int> ranks;
        for (Color c : all_colors(m)) ranks.insert(rank_of(c, m));
        CHECK(ranks.size() == 2 * static_cast<std::size_t>(m) + 1);
        CHECK(*ranks.begin() == 1);
        CHECK(*ranks.rbegin() == 2 * m + 1);
    }
}

TEST_CASE("color vectors count signed colors") {
    ColorVec v(2);
    CHECK(v.is_zero());
    v.add(1, 2);
    v.add(-2, 3);
    CHECK(v.count(1) == 2);
    CHECK(v.count(2) == 0);
    CHECK(v.count(-2) == 3);
    CHECK(v.count(-1) == 0);
    CHECK(v.total() == 5);
    CHECK(v.max_entry() == 3);
    CHECK(v.nonneg());
    v.add(1, -2);
    CHECK(v.count(1) == 0);
    v.add(1, -1);
    CHECK_FALSE(v.nonneg());

    CHECK(ColorVec::basis(0, 2).is_zero());
    CHECK(ColorVec::basis(-1, 2).count(-1) == 1);
    // Storage order (I_1, ..., I_n, I_{bar n}, ..., I_{bar 1}).
    ColorVec w(2);
    w.add(1, 10);
    w.add(2, 20);
    w.add(-2, 30);
    w.add(-1, 40);
    CHECK(w.counts() == std::vector<int>{10, 20, 30, 40});
    CHECK(w.str() == "(10,20,30,40)");
    CHECK_THROWS_AS(w.count(3), DomainError);
    CHECK_THROWS_AS(w.count(0), DomainError);
}

TEST_CASE("partial sums over rank ranges") {
    ColorVec I(2);
    I.add(1, 2);
    I.add(2, 1);
    I.add(-2, 3);
    I.add(-1, 4);
    CHECK(partial_sum(I, SumRel::LE, 2) == 3);
    CHECK(partial_sum(I, SumRel::LT, 2) == 2);
    CHECK(partial_sum(I, SumRel::GE, -2) == 7);
    CHECK(partial_sum(I, SumRel::GT, -2) == 4);
    CHECK(partial_sum(I, SumRel::LT, 0) == 3);
    CHECK(partial_sum(I, SumRel::GT, 0) == 7);
    CHECK(partial_sum_interval(I, 1, 2) == 3);
    CHECK(partial_sum_interval(I, -2, -1) == 7);
    CHECK(partial_sum_interval(I, 2, -2) == 4);
    CHECK(partial_sum_interval(I, 1, -1) == I.total());
}

TEST_CASE("signed permutations: construction and action") {
    const SignedPerm s = SignedPerm::parse("2,-1");
    CHECK(s.n() == 2);
    CHECK(s.apply(1) == 2);
    CHECK(s.apply(2) == -1);
    CHECK(s.apply(-1) == -2);
    CHECK(s.apply(-2) == 1);
    CHECK(s.apply(0) == 0);
    CHECK(s.str() == "2,-1");
    CHECK(SignedPerm::identity(3).str() == "1,2,3");

    CHECK_THROWS_AS(SignedPerm::parse("2,2"), DomainError);
    CHECK_THROWS_AS(SignedPerm::parse("1,-1"), DomainError);
    CHECK_THROWS_AS(SignedPerm::parse("0,1"), DomainError);
    CHECK_THROWS_AS(SignedPerm::parse("3,1"), DomainError);
    CHECK_THROWS_AS(SignedPerm::parse("1,x"), DomainError);
    CHECK_THROWS_AS(SignedPerm::parse("1,2", 3), DomainError);
}

TEST_CASE("compose, inverse, simple reflections") {
    const SignedPerm a = SignedPerm::parse("2,-1");
    const SignedPerm b = SignedPerm::parse("-1,2");
    const SignedPerm ab = compose(a, b);
    CHECK(ab.apply(1) == -2);  // a(b(1)) = a(-1)
    CHECK(ab.apply(2) == -1);
    CHECK(compose(a, inverse(a)) == SignedPerm::identity(2));
    CHECK(compose(inverse(a), a) == SignedPerm::identity(2));

    CHECK(simple_reflection(1, 2).str() == "2,1");
    CHECK(simple_reflection(2, 2).str() == "1,-2");
    CHECK(simple_reflection(3, 3).str() == "1,2,-3");
    CHECK_THROWS_AS(simple_reflection(0, 2), DomainError);
    CHECK_THROWS_AS(simple_reflection(3, 2), DomainError);

    // Right multiplication by s_i acts on positions.
    const SignedPerm c = SignedPerm::parse("3,-1,2");
    CHECK(compose(c, simple_reflection(1, 3)).str() == "-1,3,2");
    CHECK(compose(c, simple_reflection(3, 3)).str() == "3,-1,-2");
}

TEST_CASE("length by Cayley-graph distance") {
    CHECK(length(SignedPerm::identity(3)) == 0);
    CHECK(length(simple_reflection(1, 3)) == 1);
    CHECK(length(simple_reflection(3, 3)) == 1);
    // Longest element of the rank-2 group.
    CHECK(length(SignedPerm::parse("-1,-2")) == 4);
    // l(w s_i) = l(w) +- 1 for every generator.
    for (const auto& w : all_signed_perms(2)) {
        for (int i = 1; i <= 2; ++i) {
            const int d = length(compose(w, simple_reflection(i, 2))) - length(w);
            CHECK((d == 1 || d == -1));
        }
    }
    CHECK_THROWS_AS(length(SignedPerm::identity(6)), DomainError);
}

TEST_CASE("enumeration of the whole group") {
    const auto g1 = all_signed_perms(1);
    CHECK(g1.size() == 2);
    const auto g2 = all_signed_perms(2);
    CHECK(g2.size() == 8);
    const auto g3 = all_signed_perms(3);
    CHECK(g3.size() == 48);
    CHECK(std::is_sorted(g2.begin(), g2.end()));
    std::set<std::vector<int>> uniq;
    for (const auto& w : g3) uniq.insert(w.images());
    CHECK(uniq.size() == 48);
}

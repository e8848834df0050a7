#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "uturn/colors.hpp"
#include "uturn/identities.hpp"
#include "uturn/lattice.hpp"
#include "uturn/params.hpp"
#include "uturn/weights.hpp"

using namespace uturn;

namespace {

ParamPoint pinned_point(int n) {
    std::vector<Rat> x;
    for (int i = 0; i < n; ++i) x.emplace_back(3 + 2 * i, 7);
    return ParamPoint(Rat{2}, Rat{3, 5}, Rat{4, 3}, Rat{5, 2}, x);
}

std::vector<ColorVec> small_vecs(int n, int max_entry) {
    std::vector<ColorVec> out{ColorVec(n)};
    for (Color c : all_colors(n)) {
        if (c == 0) continue;
        std::vector<ColorVec> next;
        for (const auto& v : out)
            for (int e = 0; e <= max_entry; ++e) {
                ColorVec w = v;
                w.add(c, e);
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("row and cap stochasticity") {
    const ParamPoint p = pinned_point(1);
    const Rat& x = p.x.front();
    for (int n : {1, 2}) {
        for (const auto& I : small_vecs(n, n == 1 ? 2 : 1)) {
            for (Color j : all_colors(n)) {
                for (VertexKind k : {VertexKind::Gamma, VertexKind::Delta}) {
                    const auto rep = check_vertex_stochastic(k, I, j, x, p);
                    INFO(rep.instance);
                    CHECK(rep.pass());
                    CHECK(rep.right == Rat{1});
                }
            }
        }
    }
    for (Color in : all_colors(2)) {
        const auto rep = check_cap_stochastic(in, x, p);
        INFO(rep.instance);
        CHECK(rep.pass());
    }
}

TEST_CASE("Yang-Baxter identity, all families") {
    const ParamPoint p = pinned_point(1);
    const Rat x{3, 7}, y{5, 7};
    for (RFamily fam : {RFamily::GG, RFamily::DG, RFamily::DD}) {
        int checked = 0;
        for (const auto& f : small_vecs(1, 1)) {
            for (Color a : all_colors(1))
                for (Color b : all_colors(1))
                    for (Color d : all_colors(1))
                        for (Color e : all_colors(1)) {
                            const auto rep = check_ybe(fam, f, a, b, d, e, x, y, p);
                            INFO(rep.instance);
                            CHECK(rep.pass());
                            ++checked;
                        }
        }
        CHECK(checked == 4 * 81);
    }
    // Rank two spot checks, drawn deterministically.
    std::mt19937_64 rng(20260814);
    const auto cols = all_colors(2);
    auto pick = [&](int m) { return static_cast<int>(rng() % m); };
    for (int trial = 0; trial < 120; ++trial) {
        const RFamily fam = std::vector{RFamily::GG, RFamily::DG, RFamily::DD}[pick(3)];
        ColorVec f(2);
        for (Color c : cols)
            if (c != 0) f.add(c, pick(2));
        const auto rep = check_ybe(fam, f, cols[pick(5)], cols[pick(5)], cols[pick(5)],
                                   cols[pick(5)], x, y, pinned_point(2));
        INFO(rep.instance);
        CHECK(rep.pass());
    }
}

TEST_CASE("reflection identity") {
    const Rat x{3, 7}, y{5, 7};
    for (Color e1 : all_colors(1))
        for (Color e2 : all_colors(1))
            for (Color e3 : all_colors(1))
                for (Color e4 : all_colors(1)) {
                    const auto rep = check_reflection(e1, e2, e3, e4, x, y, pinned_point(1), 1);
                    INFO(rep.instance);
                    CHECK(rep.pass());
                }
    std::mt19937_64 rng(7);
    const auto cols = all_colors(2);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = [&] { return cols[rng() % cols.size()]; };
        const auto rep = check_reflection(c(), c(), c(), c(), x, y, pinned_point(2), 2);
        INFO(rep.instance);
        CHECK(rep.pass());
    }
}

TEST_CASE("closed form and its unique state") {
    for (const auto& [n, L, mu] :
         {std::tuple<int, int, std::vector<int>>{1, 1, {-1}},
          {1, 2, {-2}},
          {1, 2, {-1}},
          {2, 2, {-2, -1}},
          {2, 2, {-1, -1}},
          {2, 2, {-2, -2}},
          {2, 3, {-3, -1}}}) {
        ModelSpec spec(n, L, SignedPerm::identity(n), mu, pinned_point(n));
        const auto rep = check_closed_form(spec);
        INFO(rep.instance);
        CHECK(rep.pass());
        CHECK(count_states(spec) == 1);
        CHECK(closed_form_value(spec) == partition_function(spec));
    }
    // Preconditions: identity sigma, negative weakly sorted mu.
    CHECK_THROWS_AS(
        closed_form_value(ModelSpec(2, 2, SignedPerm::identity(2), {1, -2}, pinned_point(2))),
        DomainError);
    CHECK_THROWS_AS(
        closed_form_value(ModelSpec(2, 2, SignedPerm::identity(2), {-1, -2}, pinned_point(2))),
        DomainError);
    CHECK_THROWS_AS(
        closed_form_value(ModelSpec(2, 2, SignedPerm::parse("2,1", 2), {-2, -1}, pinned_point(2))),
        DomainError);
}

TEST_CASE("exchange recursion") {
    const ParamPoint p = pinned_point(2);
    for (const auto& sig : {"1,2", "1,-2", "-2,-1"}) {
        const auto sigma = SignedPerm::parse(sig, 2);
        for (const auto& mu : {std::vector<int>{2, -1}, std::vector<int>{-1, -1}}) {
            ModelSpec spec(2, 2, sigma, mu, p);
            const auto rep = check_exchange(spec, 1);
            INFO(rep.instance);
            CHECK(rep.pass());
        }
    }
    // sigma(1) must precede sigma(2) in color order.
    CHECK_THROWS_AS(
        check_exchange(ModelSpec(2, 2, SignedPerm::parse("2,1", 2), {2, -1}, p), 1),
        DomainError);
    // Colliding spectral parameters hit the coefficient pole.
    const ParamPoint collide(Rat{2}, Rat{3, 5}, Rat{4, 3}, Rat{5, 2}, {Rat{3, 7}, Rat{3, 7}});
    CHECK_THROWS_AS(
        check_exchange(ModelSpec(2, 2, SignedPerm::identity(2), {2, -1}, collide), 1),
        PoleError);
}

TEST_CASE("inversion recursion") {
    for (int n : {1, 2}) {
        const ParamPoint p = pinned_point(n);
        for (const auto& mu : {std::vector<int>(n, -1), std::vector<int>(n, 1)}) {
            ModelSpec spec(n, 2, SignedPerm::identity(n), mu, p);
            const auto rep = check_inversion(spec);
            INFO(rep.instance);
            CHECK(rep.pass());
        }
    }
    const ParamPoint p2 = pinned_point(2);
    CHECK_THROWS_AS(
        check_inversion(ModelSpec(2, 2, SignedPerm::parse("1,-2", 2), {2, -1}, p2)),
        DomainError);
    const ParamPoint at_s(Rat{2}, Rat{3, 5}, Rat{4, 3}, Rat{5, 2}, {Rat{3, 7}, Rat{3, 5}});
    CHECK_THROWS_AS(
        check_inversion(ModelSpec(2, 2, SignedPerm::identity(2), {2, -1}, at_s)),
        PoleError);
    const ParamPoint no_t(Rat{2}, Rat{3, 5}, Rat{4, 3}, Rat{0}, {Rat{3, 7}, Rat{5, 7}});
    CHECK_THROWS_AS(
        check_inversion(ModelSpec(2, 2, SignedPerm::identity(2), {2, -1}, no_t)),
        PoleError);
}

TEST_CASE("cap fusion") {
    for (int n : {1, 2}) {
        const ParamPoint p = pinned_point(n);
        const Rat& x = p.x.front();
        for (int marked = 1; marked <= n; ++marked) {
            for (Color e1 : all_colors(n))
                for (Color e2 : all_colors(n)) {
                    const auto rep = check_cap_fusion(e1, e2, marked, x, p, n);
                    INFO(rep.instance);
                    CHECK(rep.pass());
                }
        }
    }
}

TEST_CASE("Hecke action on the transformed family") {
    // Real regime: 0 < r < 1 and every x_j inside (r, 1/r), distinct, not 1.
    const ParamPoint p(Rat{1, 2}, Rat{2, 7}, Rat{4, 3}, Rat{5, 2}, {Rat{3, 5}, Rat{4, 5}});
    const std::vector<std::pair<const char*, int>> applicable = {
        {"1,2", 1}, {"1,2", 2}, {"2,1", 2}, {"1,-2", 1}, {"-2,1", 2}};
    for (const auto& [sig, i] : applicable) {
        ModelSpec spec(2, 2, SignedPerm::parse(sig, 2), {-2, 1}, p);
        const auto rep = check_hecke(spec, i);
        INFO(rep.instance << " rel_err=" << rep.rel_err());
        CHECK(rep.pass(1e-9));
    }
    CHECK_THROWS_AS(check_hecke(ModelSpec(2, 2, SignedPerm::parse("2,1", 2), {-2, 1}, p), 1),
                    DomainError);
    CHECK_THROWS_AS(check_hecke(ModelSpec(2, 2, SignedPerm::parse("1,-2", 2), {-2, 1}, p), 2),
                    DomainError);
    const ParamPoint collide(Rat{1, 2}, Rat{2, 7}, Rat{4, 3}, Rat{5, 2}, {Rat{3, 5}, Rat{3, 5}});
    CHECK_THROWS_AS(check_hecke(ModelSpec(2, 2, SignedPerm::identity(2), {-2, 1}, collide), 1),
                    PoleError);
}

TEST_CASE("random point generator") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat v = random_rational(rng, 50);
        CHECK(abs(v.raw().get_num()) <= 50);
        CHECK(v.raw().get_den() <= 50);
        CHECK(!random_nonzero_rational(rng, 50).is_zero());
    }
    for (int trial = 0; trial < 50; ++trial) {
        const ParamPoint p = random_param_point(rng, 3);
        CHECK(!p.r.is_zero());
        CHECK(!p.s.is_zero());
        CHECK(!p.nu.is_zero());
        REQUIRE(p.x.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(!p.x[i].is_zero());
            for (std::size_t j = i + 1; j < 3; ++j) CHECK(p.x[i] != p.x[j]);
        }
    }
}

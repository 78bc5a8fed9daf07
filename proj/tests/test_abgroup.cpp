#include "doctest.h"

#include <random>
#include <set>

#include "braidalg/abgroup.hpp"
#include "braidalg/errors.hpp"

using namespace braidalg;

namespace {

Bicharacter beta_lambda(const ScalarRingPtr& ring) {
    // beta_lambda(m, n) = lambda^{-mn} on Z
    FgAbelianGroup z{1, {}};
    return Bicharacter(z, {{Scalar::variable(ring, "lambda", -1)}});
}

} // namespace

TEST_CASE("bichar_eval on Z: beta_lambda(2,-1) = lambda^2") {
    auto ring = make_ring(1, {"lambda"}, {});
    Bicharacter b = beta_lambda(ring);
    Scalar v = b.eval(GroupElement{{2}}, GroupElement{{-1}});
    CHECK(v == Scalar::variable(ring, "lambda", 2));
    CHECK(b.eval(GroupElement{{0}}, GroupElement{{7}}).is_one());
}

TEST_CASE("bichar_eval on Z/3 via bimultiplicativity") {
    auto ring = make_ring(3, {}, {});
    FgAbelianGroup z3{0, {3}};
    Bicharacter b(z3, {{Scalar::zeta_pow(ring, 1)}});
    // eval(2g, 2g) = zeta3^4 = zeta3
    CHECK(b.eval(GroupElement{{2}}, GroupElement{{2}}) == Scalar::zeta_pow(ring, 1));
    CHECK(b.validate().empty());
}

TEST_CASE("bichar_validate catches torsion violations") {
    auto ring = make_ring(6, {}, {});
    FgAbelianGroup z2{0, {2}};
    Bicharacter bad(z2, {{Scalar::zeta_pow(ring, 2)}}); // zeta3 on Z/2
    CHECK(!bad.validate().empty());
    Bicharacter good(z2, {{Scalar::from_int(ring, -1)}});
    CHECK(good.validate().empty());
    auto ring1 = make_ring(1, {"lambda"}, {});
    FgAbelianGroup z{1, {}};
    Bicharacter free_ok(z, {{Scalar::variable(ring1, "lambda")}});
    CHECK(free_ok.validate().empty());
}

TEST_CASE("bimultiplicativity and unitarity on random triples") {
    auto ring = make_ring(4, {"u"}, {});
    FgAbelianGroup g{2, {4}};
    std::vector<std::vector<Scalar>> vals(3, std::vector<Scalar>(3, Scalar::one(ring)));
    vals[0][0] = Scalar::variable(ring, "u");
    vals[0][1] = Scalar::variable(ring, "u", -2);
    vals[1][0] = Scalar::zeta_pow(ring, 1);
    vals[1][1] = Scalar::from_int(ring, -1);
    vals[2][2] = Scalar::zeta_pow(ring, 1); // order-4 entry on Z/4 gen
    vals[0][2] = Scalar::zeta_pow(ring, 3);
    vals[2][0] = Scalar::zeta_pow(ring, 2);
    Bicharacter b(g, vals);
    REQUIRE(b.validate().empty());

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int64_t> d(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        GroupElement a = ge_reduce(g, {d(rng), d(rng), d(rng)});
        GroupElement a2 = ge_reduce(g, {d(rng), d(rng), d(rng)});
        GroupElement c = ge_reduce(g, {d(rng), d(rng), d(rng)});
        CHECK(b.eval(ge_add(g, a, a2), c) == b.eval(a, c) * b.eval(a2, c));
        CHECK(b.eval(c, ge_add(g, a, a2)) == b.eval(c, a) * b.eval(c, a2));
        CHECK((b.eval(a, c) * b.eval(a, c).conj()).is_one());
    }
}

TEST_CASE("cocycles from bicharacter") {
    auto ring = make_ring(1, {"lambda"}, {});
    Bicharacter b = beta_lambda(ring);
    auto [j1, j2] = cocycles_from_bichar(b);
    // J1((0,1),(1,0)) = conj beta(1,1) = lambda
    CHECK(j1.eval(GroupElement{{0}}, GroupElement{{1}}, GroupElement{{1}}, GroupElement{{0}}) ==
          Scalar::variable(ring, "lambda"));
    // J1((a,0),(c,d)) = 1
    CHECK(j1.eval(GroupElement{{5}}, GroupElement{{0}}, GroupElement{{3}}, GroupElement{{-2}})
              .is_one());
    // J2((a,b),(c,c)) = 1
    CHECK(j2.eval(GroupElement{{1}}, GroupElement{{4}}, GroupElement{{6}}, GroupElement{{6}})
              .is_one());

    // Hopf 2-cocycle identity on group-likes:
    // J(x,y) J(xy,z) = J(y,z) J(x,yz)
    FgAbelianGroup g2{2, {}}; // pairs (a,b) in T^ x T^
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int64_t> d(-4, 4);
    auto pair_mul = [&](const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
        return std::vector<int64_t>{x[0] + y[0], x[1] + y[1]};
    };
    for (int i = 0; i < 300; ++i) {
        std::vector<int64_t> x{d(rng), d(rng)}, y{d(rng), d(rng)}, z{d(rng), d(rng)};
        for (const TwistData& J : {j1, j2}) {
            auto ev = [&](const std::vector<int64_t>& p, const std::vector<int64_t>& q) {
                return J.eval(GroupElement{{p[0]}}, GroupElement{{p[1]}}, GroupElement{{q[0]}},
                              GroupElement{{q[1]}});
            };
            Scalar lhs = ev(x, y) * ev(pair_mul(x, y), z);
            Scalar rhs = ev(y, z) * ev(x, pair_mul(y, z));
            CHECK(lhs == rhs);
        }
    }
    (void)g2;
}

TEST_CASE("transpose character") {
    auto ring = make_ring(1, {"lambda", "zetav"}, {});
    Bicharacter b = beta_lambda(ring);
    // t_w(m) = beta(m, w); for w=1: lambda^{-m}
    CHECK(b.transpose_character(GroupElement{{3}}, GroupElement{{1}}) ==
          Scalar::variable(ring, "lambda", -3));
    CHECK(b.transpose_character(GroupElement{{3}}, GroupElement{{0}}).is_one());
    FgAbelianGroup z{1, {}};
    Bicharacter bz(z, {{Scalar::variable(ring, "zetav")}});
    CHECK(bz.transpose_character(GroupElement{{4}}, GroupElement{{2}}) ==
          Scalar::variable(ring, "zetav", 8));
}

TEST_CASE("subgroup membership: 2Z inside Z") {
    FgAbelianGroup z{1, {}};
    SubgroupSpec s(z, {GroupElement{{2}}});
    CHECK(s.member(GroupElement{{2}}));
    CHECK(s.member(GroupElement{{-4}}));
    CHECK(!s.member(GroupElement{{1}}));
    REQUIRE(s.basis().elems.size() == 1);
    CHECK(s.basis().orders[0] == 0);
    auto coords = s.express(GroupElement{{6}});
    REQUIRE(coords.has_value());
    CHECK(coords->at(0) * s.basis().elems[0].e[0] == 6);
}

TEST_CASE("subgroup membership: full group and torsion") {
    FgAbelianGroup g{0, {4}};
    SubgroupSpec full = SubgroupSpec::full(g);
    for (int64_t k = 0; k < 4; ++k) CHECK(full.member(ge_reduce(g, {k})));
    SubgroupSpec even(g, {GroupElement{{2}}});
    CHECK(even.member(ge_reduce(g, {2})));
    CHECK(!even.member(ge_reduce(g, {3})));
    REQUIRE(even.basis().elems.size() == 1);
    CHECK(even.basis().orders[0] == 2);
}

TEST_CASE("subgroup membership agrees with brute force on a finite group") {
    FgAbelianGroup g{0, {4, 6}};
    SubgroupSpec s(g, {GroupElement{{2, 3}}, GroupElement{{0, 2}}});
    // brute force closure
    std::set<std::vector<int64_t>> closure;
    std::vector<GroupElement> frontier = {ge_zero(g)};
    closure.insert(ge_zero(g).e);
    while (!frontier.empty()) {
        GroupElement x = frontier.back();
        frontier.pop_back();
        for (const auto& gen : s.gens()) {
            GroupElement y = ge_add(g, x, gen);
            if (closure.insert(y.e).second) frontier.push_back(y);
        }
    }
    for (int64_t a = 0; a < 4; ++a) {
        for (int64_t b = 0; b < 6; ++b) {
            GroupElement x = ge_reduce(g, {a, b});
            CHECK(s.member(x) == (closure.count(x.e) > 0));
            if (s.member(x)) {
                auto coords = s.express(x);
                REQUIRE(coords.has_value());
                GroupElement rebuilt = ge_zero(g);
                for (size_t i = 0; i < coords->size(); ++i)
                    rebuilt = ge_add(g, rebuilt, ge_smul(g, (*coords)[i], s.basis().elems[i]));
                CHECK(rebuilt == x);
            }
        }
    }
}

TEST_CASE("group algebra arithmetic and star") {
    auto ring = make_ring(4, {"u"}, {});
    FgAbelianGroup z{1, {}};
    GroupAlgElem a = GroupAlgElem::of(z, ring, GroupElement{{1}}, Scalar::zeta_pow(ring, 1));
    GroupAlgElem b = GroupAlgElem::of(z, ring, GroupElement{{-2}}, Scalar::variable(ring, "u"));
    GroupAlgElem p = a * b;
    CHECK(p.terms().size() == 1);
    CHECK(p.terms().begin()->first == GroupElement{{-1}});
    GroupAlgElem s = a.star();
    CHECK(s.terms().begin()->first == GroupElement{{-1}});
    CHECK(s.terms().begin()->second == Scalar::zeta_pow(ring, 3));
    CHECK((a.star().star() == a));
    CHECK(a.counit() == Scalar::zeta_pow(ring, 1));
}

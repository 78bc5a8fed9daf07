#include "doctest.h"

#include <random>

#include "braidalg/errors.hpp"
#include "braidalg/ncalg.hpp"

using namespace braidalg;

namespace {

struct Suq2 {
    ScalarRingPtr ring;
    SigPtr sig;
    RewriteSystem rs;
    Scalar q;
    // generator ids
    int a, as, g, gs;
};

// SU_q(2) free *-algebra over Z with the five defining relations plus their
// stars, completed.
Suq2 make_suq2(std::optional<std::vector<std::string>> precedence = std::nullopt) {
    Suq2 s;
    s.ring = make_ring(1, {"lambda"}, {"q"});
    FgAbelianGroup z{1, {}};
    Scalar one = Scalar::one(s.ring);
    std::vector<GenInfo> gens = {
        {"alpha", GroupElement{{1}}, GroupElement{{1}}, 1, one},
        {"alpha*", GroupElement{{-1}}, GroupElement{{-1}}, 0, one},
        {"gamma", GroupElement{{-1}}, GroupElement{{1}}, 3, one},
        {"gamma*", GroupElement{{1}}, GroupElement{{-1}}, 2, one},
    };
    s.sig = make_signature(s.ring, z, gens, precedence);
    s.a = 0;
    s.as = 1;
    s.g = 2;
    s.gs = 3;
    s.q = Scalar::variable(s.ring, "q");
    s.rs = RewriteSystem(s.sig);

    auto W = [&](std::initializer_list<int> w, const Scalar& c) {
        return NCPoly::word(s.sig, Word(w.begin(), w.end()), c);
    };
    Scalar qq = s.q * s.q;
    std::vector<NCPoly> rels = {
        W({s.a, s.g}, one) - W({s.g, s.a}, s.q),
        W({s.a, s.gs}, one) - W({s.gs, s.a}, s.q),
        W({s.gs, s.g}, one) - W({s.g, s.gs}, one),
        W({s.as, s.a}, one) + W({s.gs, s.g}, one) - NCPoly::one(s.sig),
        W({s.a, s.as}, one) + W({s.g, s.gs}, qq) - NCPoly::one(s.sig),
    };
    for (const auto& r : rels) {
        s.rs.add_relation(r);
        s.rs.add_relation(r.star());
    }
    s.rs.complete();
    return s;
}

} // namespace

TEST_CASE("SU_q(2) completion reaches a confluent system") {
    Suq2 s = make_suq2();
    CHECK(s.rs.status() == CompletionStatus::Complete);

    // alpha* alpha + gamma* gamma - 1 -> 0
    NCPoly p = NCPoly::word(s.sig, {s.as, s.a}, Scalar::one(s.ring)) +
               NCPoly::word(s.sig, {s.gs, s.g}, Scalar::one(s.ring)) - NCPoly::one(s.sig);
    CHECK(s.rs.normal_form(p).is_zero());

    // alpha alpha* vs 1 - q^2 gamma gamma*
    NCPoly lhs = NCPoly::word(s.sig, {s.a, s.as}, Scalar::one(s.ring));
    NCPoly rhs = NCPoly::one(s.sig) -
                 NCPoly::word(s.sig, {s.g, s.gs}, s.q * s.q);
    CHECK(s.rs.equal_mod(lhs, rhs) == EqualStatus::Equal);

    // free-algebra sanity: xy != yx
    CHECK(s.rs.equal_mod(NCPoly::word(s.sig, {s.a, s.g}, Scalar::one(s.ring)),
                         NCPoly::word(s.sig, {s.g, s.a}, Scalar::one(s.ring))) ==
          EqualStatus::Unequal);
}

TEST_CASE("two-step reduction trace alpha alpha gamma -> q^2 gamma alpha alpha") {
    Suq2 s = make_suq2();
    NCPoly p = NCPoly::word(s.sig, {s.a, s.a, s.g}, Scalar::one(s.ring));
    NCPoly expect = NCPoly::word(s.sig, {s.g, s.a, s.a}, s.q * s.q);
    CHECK(s.rs.normal_form(p) == expect);
}

TEST_CASE("empty rule set is the identity and complete") {
    auto ring = make_ring(1, {}, {});
    FgAbelianGroup z{1, {}};
    Scalar one = Scalar::one(ring);
    auto sig = make_signature(ring, z,
                              {{"x", ge_zero(z), ge_zero(z), 0, one},
                               {"y", ge_zero(z), ge_zero(z), 1, one}});
    RewriteSystem rs(sig);
    NCPoly p = NCPoly::word(sig, {0, 1, 0}, Scalar::from_int(ring, 7));
    CHECK(rs.normal_form(p) == p);
    rs.complete();
    CHECK(rs.status() == CompletionStatus::Complete);
}

TEST_CASE("commutative pair on two free generators completes") {
    auto ring = make_ring(1, {}, {});
    FgAbelianGroup z{0, {}};
    Scalar one = Scalar::one(ring);
    auto sig = make_signature(ring, FgAbelianGroup{0, {}},
                              {{"x", GroupElement{{}}, GroupElement{{}}, 0, one},
                               {"y", GroupElement{{}}, GroupElement{{}}, 1, one}});
    RewriteSystem rs(sig);
    // x y -> y x  (x has higher rank)
    rs.add_relation(NCPoly::word(sig, {0, 1}, one) - NCPoly::word(sig, {1, 0}, one));
    rs.complete();
    CHECK(rs.status() == CompletionStatus::Complete);
    CHECK(rs.normal_form(NCPoly::word(sig, {0, 0, 1}, one)) ==
          NCPoly::word(sig, {1, 0, 0}, one));
    (void)z;
}

TEST_CASE("spec's six-rule SU_q(2) orientation with explicit precedence") {
    Suq2 s = make_suq2(std::vector<std::string>{"alpha", "alpha*", "gamma*", "gamma"});
    CHECK(s.rs.status() == CompletionStatus::Complete);
    // gamma* gamma -> gamma gamma* is now a rule direction; both reduce equal
    NCPoly p = NCPoly::word(s.sig, {s.gs, s.g}, Scalar::one(s.ring));
    NCPoly q = NCPoly::word(s.sig, {s.g, s.gs}, Scalar::one(s.ring));
    CHECK(s.rs.equal_mod(p, q) == EqualStatus::Equal);
}

TEST_CASE("star_poly is an involutive anti-homomorphism") {
    Suq2 s = make_suq2();
    Scalar lam = Scalar::variable(s.ring, "lambda");
    NCPoly p = NCPoly::word(s.sig, {s.a, s.g}, s.q) +
               NCPoly::word(s.sig, {s.g}, lam);
    // q alpha gamma -> q gamma* alpha*, lambda gamma -> lambda^{-1} gamma*
    NCPoly expect = NCPoly::word(s.sig, {s.gs, s.as}, s.q) +
                    NCPoly::word(s.sig, {s.gs}, lam.invert());
    CHECK(p.star() == expect);
    CHECK(p.star().star() == p);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 3);
    for (int i = 0; i < 200; ++i) {
        Word w1{d(rng), d(rng)}, w2{d(rng), d(rng), d(rng)};
        NCPoly x = NCPoly::word(s.sig, w1, s.q);
        NCPoly y = NCPoly::word(s.sig, w2, lam);
        CHECK((x * y).star() == y.star() * x.star());
    }
}

TEST_CASE("homogeneous components partition and reduction preserves bidegree") {
    Suq2 s = make_suq2();
    NCPoly p = NCPoly::generator(s.sig, s.a) + NCPoly::generator(s.sig, s.g);
    auto comps = p.homogeneous_components();
    CHECK(comps.size() == 2);
    auto key_a = std::make_pair(GroupElement{{1}}, GroupElement{{1}});
    auto key_g = std::make_pair(GroupElement{{-1}}, GroupElement{{1}});
    CHECK(comps.at(key_a) == NCPoly::generator(s.sig, s.a));
    CHECK(comps.at(key_g) == NCPoly::generator(s.sig, s.g));

    // alpha gamma is homogeneous of bidegree (0, 2)
    NCPoly ag = NCPoly::word(s.sig, {s.a, s.g}, Scalar::one(s.ring));
    CHECK(ag.bidegree() == std::make_pair(GroupElement{{0}}, GroupElement{{2}}));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(0, 3);
    std::uniform_int_distribution<int> len(1, 5);
    for (int i = 0; i < 300; ++i) {
        Word w;
        int n = len(rng);
        for (int k = 0; k < n; ++k) w.push_back(d(rng));
        NCPoly x = NCPoly::word(s.sig, w, Scalar::one(s.ring));
        NCPoly nf = s.rs.normal_form(x);
        NCPoly nf2 = s.rs.normal_form(nf);
        CHECK(nf == nf2); // idempotence
        if (!nf.is_zero()) {
            CHECK(nf.is_homogeneous());
            CHECK(nf.bidegree() == x.bidegree());
        }
    }
}

TEST_CASE("braided slot algebra cross rules") {
    Suq2 s = make_suq2();
    // beta_lambda(m,n) = lambda^{-mn}
    Bicharacter beta(FgAbelianGroup{1, {}},
                     {{Scalar::variable(s.ring, "lambda", -1)}});
    SlotAlgebra sa = build_slot_algebra(s.sig, s.rs, 2, beta);
    CHECK(sa.rs.status() == CompletionStatus::Complete);

    int n = s.sig->base_size;
    // (1 (x) gamma)(gamma (x) 1) -> lambda^-4 gamma (x) gamma
    NCPoly p = NCPoly::word(sa.sig, {s.g + n, s.g}, Scalar::one(s.ring));
    NCPoly expect =
        NCPoly::word(sa.sig, {s.g, s.g + n}, Scalar::variable(s.ring, "lambda", -4));
    CHECK(sa.rs.normal_form(p) == expect);

    // ad-degree of alpha is 0: (1 (x) alpha)(x (x) 1) picks up scalar 1
    for (int x : {s.a, s.as, s.g, s.gs}) {
        NCPoly q = NCPoly::word(sa.sig, {s.a + n, x}, Scalar::one(s.ring));
        CHECK(sa.rs.normal_form(q) ==
              NCPoly::word(sa.sig, {x, s.a + n}, Scalar::one(s.ring)));
    }

    // trivial braiding coincides rule-for-rule with the ordinary product
    SlotAlgebra plain = build_slot_algebra(s.sig, s.rs, 2, std::nullopt);
    SlotAlgebra triv = build_slot_algebra(
        s.sig, s.rs, 2, Bicharacter::trivial(FgAbelianGroup{1, {}}, s.ring));
    REQUIRE(plain.rs.rules().size() == triv.rs.rules().size());
    for (size_t i = 0; i < plain.rs.rules().size(); ++i) {
        CHECK(plain.rs.rules()[i].lhs == triv.rs.rules()[i].lhs);
        CHECK(plain.rs.rules()[i].rhs == triv.rs.rules()[i].rhs);
    }

    // braided slot system of a complete base resolves its critical pairs
    RewriteSystem probe = sa.rs;
    probe.complete();
    CHECK(probe.status() == CompletionStatus::Complete);
    CHECK(probe.active_rule_count() == sa.rs.active_rule_count());
}

TEST_CASE("divergence guard fires on expanding systems") {
    auto ring = make_ring(1, {}, {});
    Scalar one = Scalar::one(ring);
    FgAbelianGroup triv{0, {}};
    auto sig = make_signature(ring, triv,
                              {{"x", GroupElement{{}}, GroupElement{{}}, 0, one}});
    CompletionCaps caps;
    caps.step_budget = 50;
    RewriteSystem rs(sig, caps);
    // x -> x x is not order-compatible; build it manually through a legal
    // orientation is impossible, so emulate runaway growth with x x -> x x x
    // being rejected by ordering; instead test budget via deep reduction:
    // x x -> x gives linear chains that terminate, so use many applications.
    rs.add_relation(NCPoly::word(sig, {0, 0}, one) - NCPoly::word(sig, {0}, one));
    Word w(200, 0);
    CHECK_THROWS_AS(rs.normal_form(NCPoly::word(sig, w, one)), DivergenceGuard);
}

TEST_CASE("inhomogeneous relations are rejected") {
    Suq2 s = make_suq2();
    RewriteSystem rs(s.sig);
    NCPoly bad = NCPoly::generator(s.sig, s.a) + NCPoly::generator(s.sig, s.g);
    CHECK_THROWS_AS(rs.add_relation(bad), InhomogeneousRelation);
}

TEST_CASE("equal_mod transitivity sample in completed system") {
    Suq2 s = make_suq2();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(0, 3);
    std::uniform_int_distribution<int> len(0, 4);
    auto random_poly = [&]() {
        NCPoly p(s.sig);
        for (int t = 0; t < 3; ++t) {
            Word w;
            int n = len(rng);
            for (int k = 0; k < n; ++k) w.push_back(d(rng));
            p.add_term(w, Scalar::from_int(s.ring, d(rng) - 1));
        }
        return p;
    };
    for (int i = 0; i < 100; ++i) {
        NCPoly a = random_poly(), b = random_poly(), c = random_poly();
        auto ab = s.rs.equal_mod(a, b), bc = s.rs.equal_mod(b, c), ac = s.rs.equal_mod(a, c);
        if (ab == EqualStatus::Equal && bc == EqualStatus::Equal) CHECK(ac == EqualStatus::Equal);
    }
}

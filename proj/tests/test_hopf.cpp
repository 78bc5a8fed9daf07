#include "doctest.h"

#include "braidalg/errors.hpp"
#include "braidalg/examples.hpp"
#include "braidalg/expr.hpp"
#include "braidalg/hopf.hpp"

using namespace braidalg;

namespace {

bool all_pass(const Report& r) {
    return r.overall() == CheckStatus::Pass;
}

// group algebra C[Z] as a presentation: a single group-like z
Presentation group_algebra_cz() {
    auto ring = make_ring(1, {}, {});
    FgAbelianGroup z{1, {}};
    Scalar one = Scalar::one(ring);
    std::vector<GenInfo> gens = {
        {"z", GroupElement{{1}}, GroupElement{{1}}, 1, one},
        {"z_inv", GroupElement{{-1}}, GroupElement{{-1}}, 0, one},
    };
    PresentationData d;
    d.ring = ring;
    d.group = z;
    d.sig = make_signature(ring, z, gens);
    auto P = [&](const std::string& t) { return parse_poly(d.sig, t); };
    d.relations = {P("z z_inv - 1"), P("z_inv z - 1")};
    SigPtr slot2 = make_slot_signature(d.sig, 2);
    d.coproduct = {parse_poly(slot2, "z@1 z@2"), parse_poly(slot2, "z_inv@1 z_inv@2")};
    d.counit = {one, one};
    d.antipode = {P("z_inv"), P("z")};
    d.pi = {GroupAlgElem::of(z, ring, GroupElement{{1}}, one),
            GroupAlgElem::of(z, ring, GroupElement{{-1}}, one)};
    return build_presentation(std::move(d));
}

} // namespace

TEST_CASE("verify_hopf passes for SU_q(2)") {
    Suq2 s = build_suq2();
    Report r = verify_hopf(s.h);
    CHECK(all_pass(r));
    CHECK(r.count(CheckStatus::Inconclusive) == 0);
}

TEST_CASE("verify_hopf passes for a group algebra") {
    Report r = verify_hopf(group_algebra_cz());
    CHECK(all_pass(r));
}

TEST_CASE("mutation q -> q^2 produces a definite failure with certificate") {
    Presentation m = build_suq2_mutated();
    CHECK(m.rs.status() == CompletionStatus::Capped);
    REQUIRE(m.rs.obstruction().has_value());
    Report r = verify_hopf(m);
    CHECK(r.overall() == CheckStatus::Fail);
    bool fail_with_cert = false;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Fail && !c.certificate.empty()) fail_with_cert = true;
    CHECK(fail_with_cert);
}

TEST_CASE("counit and pi kill every relation of loaded presentations") {
    Suq2 s = build_suq2();
    for (const auto& rel : s.h.relations) {
        CHECK(s.h.counit_of_poly(rel).is_zero());
        CHECK(s.h.pi_of_poly(rel).is_zero());
    }
}

TEST_CASE("is_cocentral on SU_q(2)") {
    Suq2 s = build_suq2();
    CHECK(is_cocentral(s.h, s.s2));
    SubgroupSpec trivial(s.h.group, {});
    CHECK(!is_cocentral(s.h, trivial)); // gamma has ad-degree 2
    CHECK(is_cocentral(s.h, SubgroupSpec::full(s.h.group)));
}

TEST_CASE("inhomogeneous relations are rejected at load") {
    Suq2 s = build_suq2();
    PresentationData d;
    d.ring = s.h.ring;
    d.group = s.h.group;
    d.sig = s.h.sig;
    d.relations = {parse_poly(s.h.sig, "alpha + gamma")};
    d.coproduct = s.h.coproduct;
    d.counit = s.h.counit;
    d.antipode = s.h.antipode;
    d.pi = s.h.pi;
    CHECK_THROWS_AS(build_presentation(std::move(d)), InhomogeneousRelation);
}

TEST_CASE("pi supported off the diagonal is rejected") {
    Suq2 s = build_suq2();
    PresentationData d;
    d.ring = s.h.ring;
    d.group = s.h.group;
    d.sig = s.h.sig;
    d.relations = s.h.relations;
    d.coproduct = s.h.coproduct;
    d.counit = s.h.counit;
    d.antipode = s.h.antipode;
    d.pi = s.h.pi;
    // gamma sits in H_{-1,1}; any nonzero pi must be rejected
    d.pi[2] = GroupAlgElem::of(s.h.group, s.h.ring, GroupElement{{1}}, Scalar::one(s.h.ring));
    CHECK_THROWS_AS(build_presentation(std::move(d)), GradingMismatch);
}

TEST_CASE("antipode degree flip is enforced") {
    Suq2 s = build_suq2();
    PresentationData d;
    d.ring = s.h.ring;
    d.group = s.h.group;
    d.sig = s.h.sig;
    d.relations = s.h.relations;
    d.coproduct = s.h.coproduct;
    d.counit = s.h.counit;
    d.antipode = s.h.antipode;
    d.antipode[0] = parse_poly(s.h.sig, "gamma"); // wrong bidegree
    d.pi = s.h.pi;
    CHECK_THROWS_AS(build_presentation(std::move(d)), GradingMismatch);
}

TEST_CASE("verify_braided_hopf rejects ordinary presentations and vice versa") {
    Suq2 s = build_suq2();
    CHECK_THROWS_AS(verify_braided_hopf(s.h), Error);
    Presentation a = transmute(s.h, s.beta_lambda);
    CHECK_THROWS_AS(verify_hopf(a), Error);
}

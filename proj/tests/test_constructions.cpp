#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotgauss/constructions.hpp"
#include "knotgauss/oracles.hpp"

using namespace kg;

namespace {

KnotDiagram diagram(const char* text) { return build_diagram(parse_gauss_code(text)); }

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";

std::int64_t gv2(const KnotDiagram& d) { return v2(to_gauss_diagram(d)); }
std::int64_t gv3(const KnotDiagram& d) { return v3(to_gauss_diagram(d)); }

}  // namespace

TEST_CASE("twist knots: alternating family") {
    // (1,2) twist knot is the trefoil
    auto t3 = twist_knot_diagram(3, TwistVariant::Alternating);
    CHECK(t3.crossings() == 3);
    auto key3 = canonical_signed_key(t3.code);
    bool is_trefoil = key3 == canonical_signed_key(diagram(kTrefoil).code) ||
                      key3 == canonical_signed_key(mirror(diagram(kTrefoil)).code);
    CHECK(is_trefoil);

    // figure-eight: v2 = -1, det 5
    auto t4 = twist_knot_diagram(4, TwistVariant::Alternating);
    CHECK(gv2(t4) == -1);
    CHECK(signature_and_det(t4).det_abs == 5);

    // 5_2: v2 = 2, det 7; 6_1: v2 = -2, det 9; 7_2: v2 = 3, det 11
    CHECK(gv2(twist_knot_diagram(5, TwistVariant::Alternating)) == 2);
    CHECK(signature_and_det(twist_knot_diagram(5, TwistVariant::Alternating)).det_abs == 7);
    CHECK(gv2(twist_knot_diagram(6, TwistVariant::Alternating)) == -2);
    CHECK(signature_and_det(twist_knot_diagram(6, TwistVariant::Alternating)).det_abs == 9);
    CHECK(gv2(twist_knot_diagram(7, TwistVariant::Alternating)) == 3);
    CHECK(signature_and_det(twist_knot_diagram(7, TwistVariant::Alternating)).det_abs == 11);
}

TEST_CASE("long twist regions admit the twist-collapse move") {
    // a 4-crossing twist region holds a non-digon parallel pair with equal
    // interlacement, so the diagram is reduced but not bireduced
    auto d6 = twist_knot_diagram(6, TwistVariant::Alternating);
    CHECK(reduce(d6).crossings() == 6);
    CHECK(!is_bireduced(d6));
    // the figure-eight's twist region is a single clasp: bireduced
    CHECK(is_bireduced(twist_knot_diagram(4, TwistVariant::Alternating)));
}

TEST_CASE("twist knots: almost positive unknot diagrams") {
    for (int n = 1; n <= 9; ++n) {
        CAPTURE(n);
        auto d = twist_knot_diagram(n, TwistVariant::AlmostPositiveUnknot);
        CHECK(d.crossings() == n);
        CHECK(positivity_status(d).kind == Positivity::AlmostPositive);
        CHECK(gv2(d) == 0);
        CHECK(gv3(d) == 0);
        CHECK(jones(d) == LaurentPoly(1));
    }
    CHECK_THROWS_AS(twist_knot_diagram(0, TwistVariant::AlmostPositiveUnknot),
                    std::invalid_argument);
}

TEST_CASE("pretzel diagrams and the v2 formula") {
    auto p111 = pretzel_diagram(1, 1, 1);
    CHECK(p111.crossings() == 3);
    CHECK(gv2(p111) == 1);
    CHECK(positivity_status(p111).kind == Positivity::Positive);

    for (int p = 1; p <= 7; p += 2)
        for (int q = 1; q <= 7; q += 2)
            for (int r = 1; r <= 7; r += 2) {
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(r);
                auto d = pretzel_diagram(p, q, r);
                CHECK(d.crossings() == p + q + r);
                CHECK(gv2(d) == (p * q + p * r + q * r + 1) / 4);
            }

    // the unknotting family P(p,q,-1)
    for (int p = 1; p <= 5; p += 2)
        for (int q = 1; q <= 5; q += 2) {
            auto d = pretzel_diagram(p, q, -1);
            std::int64_t expect = (std::int64_t)(p - 1) * (q - 1) / 4;
            CHECK(gv2(d) == expect);
            CHECK((gv2(d) == 0) == (p == 1 || q == 1));
        }

    CHECK(genus(pretzel_diagram(3, 3, 3)).g == 1);
    CHECK_THROWS_AS(pretzel_diagram(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(pretzel_diagram(0, 1, 1), std::invalid_argument);
}

TEST_CASE("torus braid closures") {
    auto t23 = torus_braid_diagram(2, 3);
    CHECK(t23.crossings() == 3);
    CHECK(canonical_signed_key(t23.code) == canonical_signed_key(diagram(kTrefoil).code));

    auto t25 = torus_braid_diagram(2, 5);
    CHECK(t25.crossings() == 5);
    CHECK(gv2(t25) == 3);
    CHECK(conway(t25).z2_coefficient() == 3);

    auto t34 = torus_braid_diagram(3, 4);
    CHECK(t34.crossings() == 8);
    CHECK(positivity_status(t34).kind == Positivity::Positive);
    // V(T(3,4)) = t^3 + t^5 - t^8
    LaurentPoly expect;
    expect += LaurentPoly::monomial(1, 3);
    expect += LaurentPoly::monomial(1, 5);
    expect += LaurentPoly::monomial(-1, 8);
    CHECK(jones(t34) == expect);
    CHECK(gv2(t34) == 5);
    CHECK(signature_and_det(t34).sigma_paper == 6);
    CHECK(signature_and_det(t34).det_abs == 3);

    CHECK_THROWS_AS(torus_braid_diagram(2, 4), std::invalid_argument);
}

TEST_CASE("torus braid linked pairs lower bound") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 4}}) {
        auto d = torus_braid_diagram(p, q);
        auto g = to_gauss_diagram(d);
        int c = d.crossings();
        CHECK(lk(g) >= 3 * ((c - 1) / 2));
    }
}

TEST_CASE("whitehead double of the unknot") {
    auto w0 = whitehead_double(diagram(""), 1);
    CHECK(w0.crossings() == 2);
    CHECK(jones(w0) == LaurentPoly(1));
    CHECK(gv3(w0) == 0);
    auto wm = whitehead_double(diagram(""), -1);
    CHECK(jones(wm) == LaurentPoly(1));

    // untwisted framing: a kinked unknot companion still doubles to the unknot
    for (const char* text : {"O1+U1+", "O1-U1-", "O1+U1+O2+U2+"}) {
        CAPTURE(text);
        auto d = whitehead_double(diagram(text), 1);
        CHECK(jones(d) == LaurentPoly(1));
        CHECK(gv2(d) == 0);
        CHECK(gv3(d) == 0);
    }
}

TEST_CASE("whitehead doubles satisfy v3 = +-8 v2 on the trefoil") {
    auto tre = diagram(kTrefoil);
    auto wp = whitehead_double(tre, 1);
    CHECK(wp.crossings() == 20);
    CHECK(gv3(wp) == 8);
    auto wn = whitehead_double(tre, -1);
    CHECK(gv3(wn) == -8);
}

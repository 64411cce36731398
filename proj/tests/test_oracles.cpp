#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotgauss/constructions.hpp"
#include "knotgauss/oracles.hpp"

using namespace kg;

namespace {

KnotDiagram diagram(const char* text) { return build_diagram(parse_gauss_code(text)); }

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
const char* kFigEight = "O1+U2+O3-U4-O2+U1+O4-U3-";

LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
    return p;
}

}  // namespace

TEST_CASE("jones on the standard fixtures") {
    CHECK(jones(diagram("")) == LaurentPoly(1));
    CHECK(jones(diagram("O1+U1+")) == LaurentPoly(1));

    // positive trefoil: -t^4 + t^3 + t
    CHECK(jones(diagram(kTrefoil)) == poly({{4, -1}, {3, 1}, {1, 1}}));
    // mirror: t -> 1/t
    CHECK(jones(mirror(diagram(kTrefoil))) == poly({{-4, -1}, {-3, 1}, {-1, 1}}));
    // figure-eight: t^2 - t + 1 - 1/t + 1/t^2
    CHECK(jones(diagram(kFigEight)) ==
          poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
}

TEST_CASE("jones sanity: V(1) = 1 and mirror symmetry") {
    for (const char* text : {kTrefoil, kFigEight, "O1+U1+", "O1+U1+O2-U2-"}) {
        auto d = diagram(text);
        auto V = jones(d);
        CHECK(V.eval_at_one() == 1);
        auto Vm = jones(mirror(d));
        CHECK(Vm == V.substitute_power(-1));
    }
}

TEST_CASE("vassiliev invariants from jones derivatives") {
    auto [v2t, v3t] = vassiliev_from_jones(jones(diagram(kTrefoil)));
    CHECK(v2t == 1);
    CHECK(v3t == 4);
    auto [v2u, v3u] = vassiliev_from_jones(jones(diagram("")));
    CHECK(v2u == 0);
    CHECK(v3u == 0);
    auto [v2f, v3f] = vassiliev_from_jones(jones(diagram(kFigEight)));
    CHECK(v2f == -1);
    CHECK(v3f == 0);
}

TEST_CASE("conway on the standard fixtures") {
    CHECK(conway(diagram("")).coeffs == std::vector<std::int64_t>{1});
    CHECK(conway(diagram("O1+U1+")).coeffs == std::vector<std::int64_t>{1});
    CHECK(conway(diagram(kTrefoil)).coeffs == std::vector<std::int64_t>{1, 1});
    CHECK(conway(diagram(kFigEight)).coeffs == std::vector<std::int64_t>{1, -1});
    CHECK(conway(diagram(kTrefoil)).det_signed() == -3);
    CHECK(conway(diagram(kFigEight)).det_signed() == 5);
    CHECK(conway(mirror(diagram(kTrefoil))).coeffs == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("alexander from conway") {
    auto alex = conway(diagram(kTrefoil)).alexander();
    // t - 1 + 1/t
    CHECK(alex == poly({{1, 1}, {0, -1}, {-1, 1}}));
    // -3 Delta''(1) = V''(1)
    auto V = jones(diagram(kTrefoil));
    CHECK(-3 * alex.derivative_at_one(2) == V.derivative_at_one(2));
}

TEST_CASE("signature and determinant anchors") {
    auto unknot = signature_and_det(diagram(""));
    CHECK(unknot.sigma_paper == 0);
    CHECK(unknot.det_signed == 1);

    auto tre = signature_and_det(diagram(kTrefoil));
    CHECK(tre.sigma_paper == 2);
    CHECK(tre.det_signed == -3);
    CHECK(tre.det_abs == 3);

    auto mtre = signature_and_det(mirror(diagram(kTrefoil)));
    CHECK(mtre.sigma_paper == -2);
    CHECK(mtre.det_signed == -3);

    auto fig8 = signature_and_det(diagram(kFigEight));
    CHECK(fig8.sigma_paper == 0);
    CHECK(fig8.det_signed == 5);

    auto kinked = signature_and_det(diagram("O1+U1+"));
    CHECK(kinked.sigma_paper == 0);
    CHECK(kinked.det_signed == 1);

    // (2,5) torus knot, all positive
    auto t25 = signature_and_det(diagram("O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+"));
    CHECK(t25.sigma_paper == 4);
    CHECK(t25.det_signed == 5);
    CHECK(t25.det_abs == 5);
}

TEST_CASE("torus (2,5) cross-checks") {
    auto d = diagram("O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+");
    auto V = jones(d);
    auto [a, b] = vassiliev_from_jones(V);
    CHECK(a == 3);
    CHECK(b == 20);
    CHECK(conway(d).coeffs == std::vector<std::int64_t>{1, 3, 1});
}

TEST_CASE("crossing budgets are enforced") {
    // a 26-crossing diagram: chain of curls, trivially realizable
    SignedGaussCode big;
    for (int k = 1; k <= 26; ++k) {
        big.entries.push_back({Passage::Over, k, 1});
        big.entries.push_back({Passage::Under, k, 1});
    }
    auto d = build_diagram(big);
    CHECK_THROWS_AS(jones(d), BudgetError);
    CHECK_THROWS_AS(conway(d), BudgetError);
    CHECK_THROWS_AS(whitehead_double(d, 1), BudgetError);
}

TEST_CASE("sigma mod 4 tracks the sign of the determinant") {
    for (const char* text : {kTrefoil, kFigEight, "O1+U1+", ""}) {
        auto rep = signature_and_det(diagram(text));
        bool det_pos = rep.det_signed > 0;
        CHECK(((rep.sigma_paper % 4 + 4) % 4 == 0) == det_pos);
    }
}

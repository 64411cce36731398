#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotgauss/invariants.hpp"
#include "knotgauss/planar.hpp"

using namespace kg;

namespace {

KnotDiagram diagram(const char* text) { return build_diagram(parse_gauss_code(text)); }

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
// standard figure-eight traversal (two positive, two negative crossings)
const char* kFigEight = "O1+U2+O3-U4-O2+U1+O4-U3-";

}  // namespace

TEST_CASE("trefoil gauss diagram") {
    auto g = to_gauss_diagram(diagram(kTrefoil));
    CHECK(g.chords() == 3);
    for (auto& a : g.arrows) CHECK(a.sign == 1);
    CHECK(g.interleaved(0, 1));
    CHECK(g.interleaved(0, 2));
    CHECK(g.interleaved(1, 2));
    CHECK(lk(g) == 3);
}

TEST_CASE("pair relations match the drawn patterns") {
    // h,t,t,h around the circle: parallel
    GaussDiagram par{{{1, 0, 1}, {2, 3, 1}}};
    CHECK(pair_relation(par, 0, 1).kind == PairKind::Parallel);
    // t,h,t,h: not parallel
    GaussDiagram npar{{{0, 1, 1}, {2, 3, 1}}};
    CHECK(pair_relation(npar, 0, 1).kind == PairKind::NonParallel);

    auto g = to_gauss_diagram(diagram(kTrefoil));
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            auto rel = pair_relation(g, a, b);
            CHECK(rel.kind == PairKind::Linked);
            CHECK((rel.distinguished == a || rel.distinguished == b));
        }
    CHECK_THROWS_AS(pair_relation(g, 0, 7), std::out_of_range);
}

TEST_CASE("frozen small values: v2") {
    CHECK(v2(to_gauss_diagram(diagram(kTrefoil))) == 1);
    CHECK(v2(to_gauss_diagram(diagram(kFigEight))) == -1);
    CHECK(v2(to_gauss_diagram(diagram("O1+U1+"))) == 0);
    CHECK(v2(to_gauss_diagram(diagram("")))  == 0);
}

TEST_CASE("frozen small values: v3 and census") {
    auto g = to_gauss_diagram(diagram(kTrefoil));
    auto cen = config_census(g);
    CHECK(cen.n33 == 1);
    CHECK(cen.n420 == 0);
    CHECK(cen.lk() == 3);
    CHECK(v3(g) == 4);

    CHECK(v3(to_gauss_diagram(diagram(kFigEight))) == 0);
    CHECK(v3(to_gauss_diagram(diagram("O1+U1+O2+U2+"))) == 0);
}

TEST_CASE("v2 basepoint independence on fixtures") {
    for (const char* text : {kTrefoil, kFigEight}) {
        auto g = to_gauss_diagram(diagram(text));
        auto base0 = v2(g);
        for (int b = 0; b < g.points(); ++b) {
            CHECK(v2(g, b) == base0);
            CHECK(v2_companion_pattern(g, b) == base0);
        }
    }
}

TEST_CASE("lemma checks on the trefoil") {
    auto rep = lemma_checks(to_gauss_diagram(diagram(kTrefoil)), true);
    CHECK(rep.ev_ok);
    CHECK(rep.two_c_ok);
    CHECK(rep.eev_checked);
    CHECK(rep.eev_ok);
}

TEST_CASE("primeness and connected sums") {
    CHECK(is_prime(to_gauss_diagram(diagram(kTrefoil))));
    CHECK(is_prime(to_gauss_diagram(diagram("O1+U1+"))));
    CHECK(!is_prime(to_gauss_diagram(diagram("O1+U1+O2+U2+"))));

    auto tre = diagram(kTrefoil);
    auto sum = connected_sum(tre, tre);
    CHECK(sum.crossings() == 6);
    auto split = split_composite(sum);
    REQUIRE(split.has_value());
    CHECK(split->part_a.crossings() == 3);
    CHECK(split->part_b.crossings() == 3);
    CHECK(!is_prime(to_gauss_diagram(sum)));
    auto g = to_gauss_diagram(sum);
    CHECK(v2(g) == 2);
    CHECK(v3(g) == 8);
    CHECK(config_census(g).n33 == 2);
    CHECK(lk(g) == 6);
}

TEST_CASE("mirror and reverse") {
    auto tre = diagram(kTrefoil);
    auto mir = mirror(tre);
    CHECK(mir.writhe() == -3);
    auto g = to_gauss_diagram(mir);
    CHECK(v3(g) == -4);
    CHECK(v2(g) == 1);
    auto rev = reverse(tre);
    CHECK(rev.writhe() == 3);
    CHECK(v3(to_gauss_diagram(rev)) == 4);

    // v3(trefoil # mirror trefoil) = 0 by additivity and antisymmetry
    auto sum = connected_sum(tre, mir);
    CHECK(v3(to_gauss_diagram(sum)) == 0);
    CHECK(v2(to_gauss_diagram(sum)) == 2);
}

TEST_CASE("planar structure of small diagrams") {
    auto tre = diagram(kTrefoil);
    CHECK(faces(tre).size() == 5);
    CHECK(faces(diagram("O1+U1+")).size() == 3);
    CHECK(faces(diagram("")).size() == 2);

    auto gr = genus(tre);
    CHECK(gr.c == 3);
    CHECK(gr.s == 2);
    CHECK(gr.g == 1);
    CHECK(genus(diagram("")).g == 0);
    CHECK(genus(diagram("O1+U1+")).g == 0);

    CHECK(positivity_status(tre).kind == Positivity::Positive);
    CHECK(positivity_status(diagram("O1-U1-")).kind == Positivity::AlmostPositive);
    CHECK(positivity_status(mirror(diagram(kFigEight))).kind == Positivity::KNegative);
}

TEST_CASE("reduce removes nugatory crossings") {
    auto kink = diagram("O1+U1+");
    CHECK(reduce(kink).crossings() == 0);
    auto tre = diagram(kTrefoil);
    CHECK(reduce(tre).crossings() == 3);
    // trefoil with two extra curls spliced at the base edge
    auto kinked = connected_sum(connected_sum(tre, kink), diagram("U2-O2-"));
    CHECK(kinked.crossings() == 5);
    auto red = reduce(kinked);
    CHECK(red.crossings() == 3);
    CHECK(serialize_gauss_code(red.code) == serialize_gauss_code(tre.code));
    // idempotent
    CHECK(reduce(red).crossings() == 3);
}

TEST_CASE("clasps of the trefoil standard diagram") {
    auto cl = find_clasps(diagram(kTrefoil));
    CHECK(!cl.empty());
    for (auto& rec : cl) CHECK(rec.kind != ClaspKind::Resolved);
}

TEST_CASE("t2bar on a kink gives a 3-crossing unknot diagram") {
    auto kink = diagram("O1+U1+");
    auto d = apply_t2bar(kink, 1);
    CHECK(d.crossings() == 3);
    CHECK(reduce(d).crossings() == 0);
    auto g = to_gauss_diagram(d);
    CHECK(lk(g) == 0);
    CHECK(v2(g) == 0);
    // all three crossings keep the original sign
    CHECK(d.writhe() == 3);
}

TEST_CASE("t2bar identities on the trefoil") {
    auto tre = diagram(kTrefoil);
    auto g0 = to_gauss_diagram(tre);
    for (int at = 1; at <= 3; ++at) {
        auto d = apply_t2bar(tre, at);
        CHECK(d.crossings() == 5);
        auto g = to_gauss_diagram(d);
        auto gr0 = genus(tre);
        auto gr = genus(d);
        CHECK(gr.s == gr0.s + 2);
        CHECK(gr.g == gr0.g);
        std::int64_t dlk = lk(g) - lk(g0);
        CHECK(dlk == 4);  // 2 * |interlacement|
        CHECK(dlk == 4 * (v2(g) - v2(g0)));
        // the new crossings form a reverse clasp
        bool has_reverse = false;
        for (auto& rec : find_clasps(d)) has_reverse |= rec.kind == ClaspKind::Reverse;
        CHECK(has_reverse);
    }
}

TEST_CASE("loop move retracts the trefoil to the unknot") {
    auto tre = diagram(kTrefoil);
    for (int k = 1; k <= 3; ++k) {
        CHECK(loop_move(tre, k, LoopSide::Left).crossings() == 0);
        CHECK(loop_move(tre, k, LoopSide::Right).crossings() == 0);
    }
    auto kink = diagram("O1+U1+");
    CHECK(loop_move(kink, 1, LoopSide::Left).crossings() == 0);
}

TEST_CASE("bireducedness") {
    CHECK(is_bireduced(diagram(kTrefoil)));
    CHECK(is_bireduced(diagram("")));
    CHECK(is_bireduced(diagram(kFigEight)));
    CHECK(!is_bireduced(diagram("O1+U1+")));  // not even reduced
}

TEST_CASE("pair relation classification is symmetric") {
    for (const char* text : {kTrefoil, kFigEight}) {
        auto g = to_gauss_diagram(diagram(text));
        for (int a = 0; a < g.chords(); ++a)
            for (int b = 0; b < g.chords(); ++b) {
                if (a == b) continue;
                auto r1 = pair_relation(g, a, b);
                auto r2 = pair_relation(g, b, a);
                CHECK(r1.kind == r2.kind);
                if (r1.kind == PairKind::Linked) CHECK(r1.distinguished == r2.distinguished);
            }
    }
}

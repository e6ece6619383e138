#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "dporders/classify.hpp"
#include "dporders/fixtures.hpp"
#include "dporders/json_io.hpp"
#include "dporders/report.hpp"

using namespace dporders;

namespace {

OrderData load(const std::string& name) {
    std::ifstream in("fixtures/" + name + ".json");
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return parse_order(out.str());
}

std::set<std::pair<std::string, std::string>> keyed(
    const std::vector<ClassificationRecord>& records) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& r : records) {
        std::string cls;
        for (const auto& v : r.witness.d_class) cls += rat_to_string(v) + " ";
        out.insert({r.theorem + "#" + std::to_string(r.witness.e), cls});
    }
    return out;
}

} // namespace

TEST_CASE("plane enumeration reproduces the degree table") {
    const auto recs = enumerate_minimal_tdpo_p2(5);
    REQUIRE(recs.size() == 7); // d=3 for e=2..5, d=4 for e=2,3, d=5 for e=2
    int deg3 = 0, deg4 = 0, deg5 = 0;
    for (const auto& r : recs) {
        CHECK(r.witness.del_pezzo);
        CHECK(r.witness.minimal);
        if (r.theorem == tags::t1_p2_deg3) ++deg3;
        if (r.theorem == tags::t1_p2_deg4) ++deg4;
        if (r.theorem == tags::t1_p2_deg5) ++deg5;
    }
    CHECK(deg3 == 4);
    CHECK(deg4 == 2);
    CHECK(deg5 == 1);
    // spot K^2 values: 9/e^2 and the quartic formula at e = 3
    for (const auto& r : recs) {
        if (r.theorem == tags::t1_p2_deg3 && r.witness.e == 4)
            CHECK(r.witness.k2 == rat(9, 16));
        if (r.theorem == tags::t1_p2_deg4 && r.witness.e == 3)
            CHECK(r.witness.k2 == rat(1, 9));
    }
}

TEST_CASE("ruled enumeration on F1 finds exactly two classes") {
    const auto recs = enumerate_minimal_tadpo_ruled(1);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
        CHECK(r.theorem == tags::minimal_tadpo_f1);
        CHECK(r.witness.e == 2);
        REQUIRE(r.k_zero.size() == 1);
        CHECK(r.k_zero[0].cls == DivisorClass::ruled(1, rat(1), rat(0)));
        CHECK(r.witness.almost_del_pezzo);
        CHECK_FALSE(r.witness.del_pezzo);
    }
    std::set<std::vector<Rat>> classes;
    for (const auto& r : recs) classes.insert(r.witness.d_class);
    CHECK(classes == std::set<std::vector<Rat>>{{rat(2), rat(4)}, {rat(3), rat(5)}});
}

TEST_CASE("ruled enumeration on F2 keeps (2,4) at every degree") {
    const auto recs = enumerate_minimal_tadpo_ruled(2, 4);
    REQUIRE(recs.size() == 4); // (2,4) at e=2,3,4 and (3,6) at e=2
    int any_e = 0;
    for (const auto& r : recs) {
        CHECK(r.theorem == tags::minimal_tadpo_f2);
        if (r.witness.d_class == std::vector<Rat>{rat(2), rat(4)}) ++any_e;
        else CHECK(r.witness.d_class == std::vector<Rat>{rat(3), rat(6)});
    }
    CHECK(any_e == 3);
}

TEST_CASE("ruled enumeration on the quadric") {
    const auto recs = enumerate_minimal_tadpo_ruled(0, 3);
    // (2,2) at e=2,3 plus (2,3), (3,2), (3,3) at e=2
    CHECK(recs.size() == 5);
    CHECK(keyed(recs).count({std::string(tags::t1_p1p1) + "#3", "2/1 2/1 "}) == 1);
    CHECK(keyed(recs).count({std::string(tags::t1_p1p1) + "#2", "3/1 2/1 "}) == 1);
    CHECK(keyed(recs).count({std::string(tags::t1_p1p1) + "#2", "2/1 3/1 "}) == 1);
}

TEST_CASE("classification of blown-up orders") {
    // still del Pezzo: a single centre on the cubic keeps the T1 tag
    auto o = FixtureCatalog::get("p2-cubic-e2");
    BlowupPoint p;
    p.id = "p";
    p.on_d = true;
    p.incidences["c"] = 1;
    const auto t1 = classify_blowup(blowup_order(o, p));
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].theorem == tags::t1_p2_deg3);
    CHECK(t1[0].k_zero.empty());

    const auto pq = classify_blowup(load("p2-cubic-e2-pq"));
    REQUIRE(pq.size() == 1);
    CHECK(pq[0].theorem == tags::t3_p2_deg3);
    CHECK(pq[0].clause == 2);
    REQUIRE(pq[0].k_zero.size() == 1);
    CHECK(pq[0].k_zero[0].witness == "l");

    const auto line3 = classify_blowup(load("p2-cubic-e2-3line"));
    REQUIRE(line3.size() == 1);
    CHECK(line3[0].clause == 3);

    const auto conic6 = classify_blowup(load("p2-cubic-e2-conic6"));
    REQUIRE(conic6.size() == 1);
    CHECK(conic6[0].clause == 4);
    CHECK(conic6[0].witness.note == "centres: 6 smooth on D");

    const auto fibre = classify_blowup(load("f2-24-e2-fibre"));
    REQUIRE(fibre.size() == 2);
    CHECK(fibre[0].theorem == tags::t3_f2);
    CHECK(fibre[0].clause == 1);
    CHECK(fibre[1].clause == 2);
}

TEST_CASE("a crushed canonical square reports not-almost") {
    auto o = FixtureCatalog::get("p2-cubic-e2");
    for (int i = 0; i < 9; ++i) {
        BlowupPoint p;
        p.id = "p" + std::to_string(i);
        p.on_d = true;
        p.incidences["c"] = 1;
        o = blowup_order(o, p);
    }
    const auto recs = classify_blowup(o);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].theorem == tags::not_almost);
}

TEST_CASE("minimal ruled inputs get the minimal tags") {
    const auto f1 = classify_blowup(FixtureCatalog::get("f1-35-e2"));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].theorem == tags::minimal_tadpo_f1);
    REQUIRE(f1[0].k_zero.size() == 1);
    CHECK(f1[0].k_zero[0].cls == DivisorClass::ruled(1, rat(1), rat(0)));

    const auto f2 = classify_blowup(FixtureCatalog::get("f2-24-e7"));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].theorem == tags::minimal_tadpo_f2);
}

TEST_CASE("an almost del Pezzo order outside the catalog is unclassified") {
    // conic through four centres on the cubic and one off it: K-zero but
    // of a shape no clause for the cubic family names
    auto o = FixtureCatalog::get("p2-cubic-e2");
    o = OrderData(o.surface().with_curve({"k", DivisorClass::p2(rat(2)), {}, true}),
                  o.base_components());
    for (int i = 0; i < 4; ++i) {
        BlowupPoint p;
        p.id = "p" + std::to_string(i);
        p.on_d = true;
        p.incidences["c"] = 1;
        p.incidences["k"] = 1;
        o = blowup_order(o, p);
    }
    BlowupPoint q;
    q.id = "q";
    q.incidences["k"] = 1;
    o = blowup_order(o, q);
    CHECK(k_squared(o) == rat(1, 4));
    const auto recs = classify_blowup(o);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].theorem == tags::unclassified);
    REQUIRE(recs[0].k_zero.size() == 1);
    CHECK(recs[0].k_zero[0].witness == "k");
}

TEST_CASE("blowup budgets by underlying family") {
    const auto cubic = blowup_budget(FixtureCatalog::get("p2-cubic-e2"));
    CHECK(cubic.max_in_d == 8);
    CHECK(cubic.max_out_d == 1);
    CHECK(cubic.out_requires_e2);
    CHECK_FALSE(cubic.no_shared_fibre);
    // a blown-up order reports the budget of its minimal model
    CHECK(blowup_budget(load("p2-cubic-e2-pq")) == cubic);

    CHECK(blowup_budget(FixtureCatalog::get("p2-quartic-node1-e3")).max_in_d == 0);
    CHECK(blowup_budget(FixtureCatalog::get("f1-24-e2")).max_in_d == 3);
    const auto f2 = blowup_budget(FixtureCatalog::get("f2-24-e2"));
    CHECK(f2.max_in_d == 7);
    CHECK(f2.no_shared_fibre);

    OrderData odd(SurfaceModel(BasisTag::hirzebruch(0)),
                  {{"d", {"d", DivisorClass::ruled(0, rat(1), rat(1)), {}, true},
                    2, {}, false, ""}});
    CHECK_THROWS_AS(blowup_budget(odd), NotApplicableError);
}

TEST_CASE("expectation tags cover predicates and records") {
    const auto tags_min = expectation_tags(FixtureCatalog::get("p2-cubic-e2"));
    CHECK(std::count(tags_min.begin(), tags_min.end(), "del-pezzo") == 1);
    CHECK(std::count(tags_min.begin(), tags_min.end(), "T1-P2-deg3") == 1);
    CHECK(std::count(tags_min.begin(), tags_min.end(), "T1-P2-deg3:1") == 1);
    CHECK(std::is_sorted(tags_min.begin(), tags_min.end()));

    const auto tags_pq = expectation_tags(load("p2-cubic-e2-pq"));
    CHECK(std::count(tags_pq.begin(), tags_pq.end(), "T3-P2-deg3:2") == 1);
    CHECK(std::count(tags_pq.begin(), tags_pq.end(), "del-pezzo") == 0);
    CHECK(std::count(tags_pq.begin(), tags_pq.end(), "almost-del-pezzo") == 1);
}

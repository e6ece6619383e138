#include "doctest.h"
#include "dporders/surface.hpp"

using namespace dporders;

namespace {

BlowupPoint pt(std::string id, std::string parent = kBaseParent) {
    BlowupPoint p;
    p.id = std::move(id);
    p.parent = std::move(parent);
    return p;
}

} // namespace

TEST_CASE("forest validation rejects bad structure") {
    CHECK_THROWS_AS(SurfaceModel(BasisTag::p2(), {pt("p", "ghost")}),
                    InvalidConfigurationError);
    CHECK_THROWS_AS(SurfaceModel(BasisTag::p2(), {pt("p"), pt("p")}),
                    InvalidConfigurationError);
    // children must come after their parent
    CHECK_THROWS_AS(SurfaceModel(BasisTag::p2(), {pt("q", "p"), pt("p")}),
                    InvalidConfigurationError);
}

TEST_CASE("curve records must reference known points") {
    CurveRecord c{"l", DivisorClass::p2(rat(1)), {{"nowhere", 1}}, true};
    CHECK_THROWS_AS(SurfaceModel(BasisTag::p2(), {}, {c}), IncidenceError);
}

TEST_CASE("strict transform subtracts multiplicities") {
    CurveRecord l{"l", DivisorClass::p2(rat(1)), {{"p", 1}}, true};
    SurfaceModel s(BasisTag::p2(), {pt("p"), pt("q")}, {l});
    const auto lt = strict_transform(l, s);
    CHECK(lt == DivisorClass(BasisTag::p2(), {rat(1)}, {rat(-1), rat(0)}));
    CHECK(intersect(lt, lt) == rat(0));
}

TEST_CASE("proximity: a child cannot exceed its parent multiplicity") {
    // mult 2 at q infinitely near a mult-1 point p violates proximity
    CurveRecord c{"c", DivisorClass::p2(rat(3)), {{"p", 1}, {"q", 2}}, true};
    SurfaceModel s(BasisTag::p2(), {pt("p"), pt("q", "p")});
    CHECK_THROWS_AS(strict_transform(c, s), InvalidConfigurationError);
    c.mults["q"] = 1;
    CHECK_NOTHROW(strict_transform(c, s));
}

TEST_CASE("total transform pads, pushforward truncates") {
    SurfaceModel small(BasisTag::hirzebruch(2), {pt("p")});
    SurfaceModel big(BasisTag::hirzebruch(2), {pt("p"), pt("q")});
    const auto d = DivisorClass::ruled(2, rat(2), rat(4), 1);
    const auto up = total_transform(d, big);
    CHECK(up.blowup_count() == 2);
    CHECK(pushforward(up, small) == d);
    CHECK(pushforward_to_base(up) == DivisorClass::ruled(2, rat(2), rat(4)));
    CHECK_THROWS_AS(total_transform(up, small), LineageError);
    CHECK_THROWS_AS(pushforward(d, big), LineageError);
}

TEST_CASE("exceptional classes subtract first-order children") {
    SurfaceModel s(BasisTag::p2(), {pt("p"), pt("q", "p"), pt("r", "q")});
    const auto tag = BasisTag::p2();
    CHECK(exceptional_class(s, "p") ==
          DivisorClass::exceptional(tag, 3, 0) - DivisorClass::exceptional(tag, 3, 1));
    CHECK(exceptional_class(s, "r") == DivisorClass::exceptional(tag, 3, 2));
    CHECK(intersect(exceptional_class(s, "p"), exceptional_class(s, "p")) == rat(-2));
    CHECK(s.children_of("p") == std::vector<std::string>{"q"});
}

TEST_CASE("extends and point append/remove round trip") {
    SurfaceModel s(BasisTag::p2(), {pt("p")});
    const auto s2 = s.with_point(pt("q"));
    CHECK(s2.extends(s));
    CHECK_FALSE(s.extends(s2));
    CHECK(s2.without_last_point() == s);
}

TEST_CASE("with_point folds incidences into curve records") {
    CurveRecord l{"l", DivisorClass::p2(rat(1)), {}, true};
    SurfaceModel s(BasisTag::p2(), {}, {l});
    BlowupPoint p = pt("p");
    p.incidences["l"] = 1;
    const auto s2 = s.with_point(p);
    CHECK(s2.curve("l").mults.at("p") == 1);
    CHECK(s2.point("p").incidences.empty());
    BlowupPoint bad = pt("q");
    bad.incidences["ghost"] = 1;
    CHECK_THROWS_AS(s2.with_point(bad), IncidenceError);
}

TEST_CASE("multiplicity sums") {
    CurveRecord k{"k", DivisorClass::p2(rat(2)), {{"p", 1}, {"q", 2}}, true};
    SurfaceModel s(BasisTag::p2(), {pt("p"), pt("q")}, {k});
    CHECK(multiplicity_at(s, k) == 3);
    CHECK(multiplicity_at(k, {"p"}) == 1);
    CHECK(multiplicity_at(k, {"p", "q"}) == 3);
    CHECK(multiplicity_at(k, {"r"}) == 0);
}

TEST_CASE("position flavors bound declared line and conic multiplicities") {
    // a line through three centres breaks general position but not almost
    CurveRecord l{"l", DivisorClass::p2(rat(1)), {{"a", 1}, {"b", 1}, {"c", 1}}, true};
    SurfaceModel s(BasisTag::p2(), {pt("a"), pt("b"), pt("c")}, {l});
    CHECK_FALSE(position_predicate(s, PositionFlavor::GeneralP2));
    CHECK(position_predicate(s, PositionFlavor::AlmostGeneralP2));
    // cubics carry no bound at all
    CurveRecord c{"k", DivisorClass::p2(rat(3)),
                  {{"a", 1}, {"b", 1}, {"c", 2}}, true};
    SurfaceModel s2(BasisTag::p2(), {pt("a"), pt("b"), pt("c")}, {c});
    CHECK(position_predicate(s2, PositionFlavor::GeneralP2));
    CHECK_THROWS_AS(position_predicate(s2, PositionFlavor::GeneralP1P1), PredicateError);
}

TEST_CASE("almost flavors reject a centre with two infinitely-near points") {
    SurfaceModel s(BasisTag::p2(), {pt("p"), pt("q", "p"), pt("r", "p")});
    CHECK_FALSE(position_predicate(s, PositionFlavor::AlmostGeneralP2));
    CHECK(position_predicate(s, PositionFlavor::GeneralP2));
    SurfaceModel chain(BasisTag::p2(), {pt("p"), pt("q", "p"), pt("r", "q")});
    CHECK(position_predicate(chain, PositionFlavor::AlmostGeneralP2));
}

TEST_CASE("sigma-almost-general curves on the quadric") {
    // class (1,1) with total multiplicity 4 = 2(a+b) qualifies
    CurveRecord c{"c", DivisorClass::ruled(0, rat(1), rat(1)),
                  {{"a", 1}, {"b", 1}, {"d", 2}}, true};
    CurveRecord low{"low", DivisorClass::ruled(0, rat(1), rat(1)), {{"a", 1}}, true};
    SurfaceModel s(BasisTag::hirzebruch(0), {pt("a"), pt("b"), pt("d")}, {c, low});
    const auto hits = sigma_almost_general_curves(s);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].id == "c");
    SurfaceModel p2(BasisTag::p2());
    CHECK_THROWS_AS(sigma_almost_general_curves(p2), PredicateError);
}

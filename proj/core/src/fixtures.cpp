#include "dporders/fixtures.hpp"

#include <algorithm>

#include "dporders/errors.hpp"
#include "dporders/positivity.hpp"

namespace dporders {

namespace {

RamificationComponent p2_comp(const std::string& id, int d, int e,
                              std::vector<std::string> ann = {}) {
    return {id, CurveRecord{id, DivisorClass::p2(rat(d)), {}, true}, e, std::move(ann),
            false, ""};
}

RamificationComponent f_comp(int n, const std::string& id, int a, int b, int e,
                             std::vector<std::string> ann = {}) {
    return {id, CurveRecord{id, DivisorClass::ruled(n, rat(a), rat(b)), {}, true}, e,
            std::move(ann), false, ""};
}

// The catalog declares C0 as a plain curve on the F1/F2 entries so blowups
// of them keep a witness for the section.
CurveRecord c0_curve(int n) {
    return {"c0", DivisorClass::ruled(n, rat(1), rat(0)), {}, true};
}

OrderData p2_order(std::vector<RamificationComponent> comps) {
    return OrderData(SurfaceModel(BasisTag::p2()), std::move(comps));
}

OrderData ruled_order(int n, std::vector<RamificationComponent> comps,
                      std::vector<CurveRecord> curves = {}) {
    return OrderData(SurfaceModel(BasisTag::hirzebruch(n), {}, std::move(curves)),
                     std::move(comps));
}

FixtureExpectation dp(Rat k2) { return {true, true, true, k2}; }
FixtureExpectation adp(Rat k2) { return {false, true, true, k2}; }

std::vector<FixtureFamily> build_families() {
    std::vector<FixtureFamily> fams;

    // Degree-3 ramification over P2, any e, all del Pezzo with K^2 = 9/e^2.
    auto cubic_k2 = [](int e) { return dp(Rat(9, std::int64_t(e) * e)); };
    fams.push_back({"p2-line-conic", "cubic", {}, {"transverse line and conic"},
                    [](int e) { return p2_order({p2_comp("l", 1, e), p2_comp("q", 2, e)}); },
                    cubic_k2});
    fams.push_back({"p2-three-lines", "cubic", {}, {"three transverse lines"},
                    [](int e) { return p2_order({p2_comp("l1", 1, e), p2_comp("l2", 1, e), p2_comp("l3", 1, e)}); },
                    cubic_k2});
    fams.push_back({"p2-cubic", "cubic", {}, {"smooth cubic"},
                    [](int e) { return p2_order({p2_comp("c", 3, e)}); },
                    cubic_k2});
    fams.push_back({"p2-cubic-nodal", "cubic", {}, {"nodal cubic"},
                    [](int e) { return p2_order({p2_comp("c", 3, e, {"one node"})}); },
                    cubic_k2});

    // Degree-4 ramification over P2, e in {2,3}, K^2 = ((e-4)/e)^2.
    auto quartic_k2 = [](int e) {
        const Rat k = Rat(e - 4, e);
        return dp(k * k);
    };
    fams.push_back({"p2-quartic-node1", "quartic", {2, 3}, {"irreducible quartic with one node"},
                    [](int e) { return p2_order({p2_comp("q", 4, e, {"one node"})}); },
                    quartic_k2});
    fams.push_back({"p2-quartic-node2", "quartic", {2, 3}, {"irreducible quartic with two nodes"},
                    [](int e) { return p2_order({p2_comp("q", 4, e, {"two nodes"})}); },
                    quartic_k2});
    fams.push_back({"p2-quartic-node3", "quartic", {2, 3}, {"irreducible quartic with three nodes"},
                    [](int e) { return p2_order({p2_comp("q", 4, e, {"three nodes"})}); },
                    quartic_k2});
    fams.push_back({"p2-two-conics", "quartic", {2, 3}, {"two conics crossing at 4 points"},
                    [](int e) { return p2_order({p2_comp("q1", 2, e), p2_comp("q2", 2, e)}); },
                    quartic_k2});
    fams.push_back({"p2-cubic-nodal-line-a", "quartic", {3},
                    {"transverse nodal cubic and line", "branch exponents (1, 2)"},
                    [](int e) {
                        return p2_order({p2_comp("c", 3, e, {"one node"}),
                                         p2_comp("l", 1, e, {"branch exponents (1, 2)"})});
                    },
                    quartic_k2});
    fams.push_back({"p2-cubic-nodal-line-b", "quartic", {3},
                    {"transverse nodal cubic and line", "branch exponents (2, 1)"},
                    [](int e) {
                        return p2_order({p2_comp("c", 3, e, {"one node"}),
                                         p2_comp("l", 1, e, {"branch exponents (2, 1)"})});
                    },
                    quartic_k2});
    fams.push_back({"p2-cubic-line-a", "quartic", {3},
                    {"transverse smooth cubic and line", "branch exponents (1, 2)"},
                    [](int e) {
                        return p2_order({p2_comp("c", 3, e),
                                         p2_comp("l", 1, e, {"branch exponents (1, 2)"})});
                    },
                    quartic_k2});
    fams.push_back({"p2-cubic-line-b", "quartic", {3},
                    {"transverse smooth cubic and line", "branch exponents (2, 1)"},
                    [](int e) {
                        return p2_order({p2_comp("c", 3, e),
                                         p2_comp("l", 1, e, {"branch exponents (2, 1)"})});
                    },
                    quartic_k2});

    // [D] = 2C0+2F over P1xP1, any e, K^2 = 8/e^2.
    auto f0_22_k2 = [](int e) { return dp(Rat(8, std::int64_t(e) * e)); };
    fams.push_back({"f0-4lines", "f0-22", {}, {"2x(1,0) + 2x(0,1)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "l1", 1, 0, e), f_comp(0, "l2", 1, 0, e),
                                               f_comp(0, "m1", 0, 1, e), f_comp(0, "m2", 0, 1, e)});
                    },
                    f0_22_k2});
    fams.push_back({"f0-cross-11", "f0-22", {}, {"(1,0) + (0,1) + (1,1)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "l", 1, 0, e), f_comp(0, "m", 0, 1, e),
                                               f_comp(0, "c", 1, 1, e)});
                    },
                    f0_22_k2});
    fams.push_back({"f0-10-12", "f0-22", {}, {"(1,0) + (1,2)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "l", 1, 0, e), f_comp(0, "s", 1, 2, e)});
                    },
                    f0_22_k2});
    fams.push_back({"f0-22", "f0-22", {}, {"(2,2) smooth"},
                    [](int e) { return ruled_order(0, {f_comp(0, "q", 2, 2, e)}); },
                    f0_22_k2});
    fams.push_back({"f0-22-nodal", "f0-22", {}, {"(2,2) with one node"},
                    [](int e) { return ruled_order(0, {f_comp(0, "q", 2, 2, e, {"one node"})}); },
                    f0_22_k2});

    // 2C0+2F < [D] <= 3C0+3F over P1xP1, e = 2 only.
    fams.push_back({"f0-2f-12", "f0-large", {2}, {"2x(1,0) + (1,2)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "l1", 1, 0, e), f_comp(0, "l2", 1, 0, e),
                                               f_comp(0, "s", 1, 2, e)});
                    },
                    [](int) { return dp(Rat(1)); }});
    fams.push_back({"f0-22-01", "f0-large", {2}, {"(2,2) + (0,1)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "q", 2, 2, e), f_comp(0, "m", 0, 1, e)});
                    },
                    [](int) { return dp(Rat(1)); }});
    fams.push_back({"f0-22-nodal-01", "f0-large", {2}, {"(2,2) with one node + (0,1)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "q", 2, 2, e, {"one node"}),
                                               f_comp(0, "m", 0, 1, e)});
                    },
                    [](int) { return dp(Rat(1)); }});
    fams.push_back({"f0-3x11", "f0-large", {2}, {"3x(1,1)"},
                    [](int e) {
                        return ruled_order(0, {f_comp(0, "c1", 1, 1, e), f_comp(0, "c2", 1, 1, e),
                                               f_comp(0, "c3", 1, 1, e)});
                    },
                    [](int) { return dp(Rat(1, 2)); }});

    // Minimal terminal almost del Pezzo entries over F1 and F2: the section
    // C0 is K-zero, so these are almost del Pezzo but not del Pezzo.
    fams.push_back({"f1-24", "f1", {2}, {"(2,4), C0 is K-zero"},
                    [](int e) { return ruled_order(1, {f_comp(1, "d", 2, 4, e)}, {c0_curve(1)}); },
                    [](int) { return adp(Rat(1)); }});
    fams.push_back({"f1-35", "f1", {2}, {"(3,5), C0 is K-zero"},
                    [](int e) { return ruled_order(1, {f_comp(1, "d", 3, 5, e)}, {c0_curve(1)}); },
                    [](int) { return adp(Rat(1, 4)); }});
    fams.push_back({"f2-24", "f2", {}, {"(2,4), C0 is K-zero"},
                    [](int e) { return ruled_order(2, {f_comp(2, "d", 2, 4, e)}, {c0_curve(2)}); },
                    [](int e) { return adp(Rat(8, std::int64_t(e) * e)); }});
    fams.push_back({"f2-24-split", "f2", {}, {"(1,2) + (1,2), C0 is K-zero"},
                    [](int e) {
                        return ruled_order(2, {f_comp(2, "s1", 1, 2, e), f_comp(2, "s2", 1, 2, e)},
                                           {c0_curve(2)});
                    },
                    [](int e) { return adp(Rat(8, std::int64_t(e) * e)); }});
    fams.push_back({"f2-36", "f2", {2}, {"(3,6), C0 is K-zero"},
                    [](int e) { return ruled_order(2, {f_comp(2, "d", 3, 6, e)}, {c0_curve(2)}); },
                    [](int) { return adp(Rat(1, 2)); }});

    fams.push_back({"p2-quintic", "p2-extra", {2}, {"smooth quintic"},
                    [](int e) { return p2_order({p2_comp("q", 5, e)}); },
                    [](int) { return dp(Rat(1, 4)); }});

    return fams;
}

struct ParsedId {
    std::string family;
    int e = 0;
};

ParsedId split_id(const std::string& id) {
    const auto pos = id.rfind("-e");
    if (pos == std::string::npos || pos + 2 >= id.size())
        throw ParseError("fixture id '" + id + "' is not of the form <family>-e<degree>");
    int e = 0;
    for (std::size_t i = pos + 2; i < id.size(); ++i) {
        if (id[i] < '0' || id[i] > '9')
            throw ParseError("fixture id '" + id + "' is not of the form <family>-e<degree>");
        e = e * 10 + (id[i] - '0');
    }
    return {id.substr(0, pos), e};
}

} // namespace

const std::vector<FixtureFamily>& FixtureCatalog::families() {
    static const std::vector<FixtureFamily> fams = build_families();
    return fams;
}

const std::vector<FixtureCrossRef>& FixtureCatalog::cross_refs() {
    static const std::vector<FixtureCrossRef> refs = {
        {"f1-35-e2", "p2-quintic-e2",
         "contracting C0 relabels (3,5) over F1 as a degree-5 ramification over P2; "
         "the image quintic acquires a double point at the image of C0"},
        {"f1-24-e2", "p2-quartic-node1-e2",
         "contracting C0 relabels (2,4) over F1 as a one-node quartic over P2"},
    };
    return refs;
}

std::vector<std::string> FixtureCatalog::ids() {
    std::vector<std::string> out;
    for (const auto& fam : families()) {
        const std::vector<int> degrees = fam.valid_e.empty() ? std::vector<int>{2, 3} : fam.valid_e;
        for (int e : degrees) out.push_back(fam.family + "-e" + std::to_string(e));
    }
    return out;
}

const FixtureFamily& FixtureCatalog::family_of(const std::string& id) {
    const ParsedId parsed = split_id(id);
    for (const auto& fam : families()) {
        if (fam.family != parsed.family) continue;
        if (!fam.valid_e.empty() &&
            std::find(fam.valid_e.begin(), fam.valid_e.end(), parsed.e) == fam.valid_e.end())
            throw ParseError("fixture '" + parsed.family + "' is not catalogued at e = " +
                             std::to_string(parsed.e));
        if (fam.valid_e.empty() && parsed.e < 2)
            throw ParseError("fixture degree must be at least 2");
        return fam;
    }
    throw ParseError("unknown fixture family '" + parsed.family + "'");
}

OrderData FixtureCatalog::get(const std::string& id) {
    return family_of(id).builder(split_id(id).e);
}

FixtureExpectation FixtureCatalog::expectation(const std::string& id) {
    return family_of(id).expect(split_id(id).e);
}

std::vector<const FixtureFamily*> FixtureCatalog::group(const std::string& group) {
    std::vector<const FixtureFamily*> out;
    for (const auto& fam : families())
        if (fam.group == group) out.push_back(&fam);
    return out;
}

} // namespace dporders

#include "dporders/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dporders/errors.hpp"

namespace dporders {

namespace {

enum class Family {
    P2d3,
    P2d4,
    P2d5,
    F0_22,
    F0_32,
    F0_23,
    F0_33,
    F1_24,
    F1_35,
    F2_24,
    F2_36,
    Unknown,
};

struct FamilyInfo {
    Family id = Family::Unknown;
    int e = 0; // common ramification degree of the minimal model, 0 if mixed
};

// The minimal model is classified by base and the base class of D.
FamilyInfo identify_family(const OrderData& minimal) {
    FamilyInfo info;
    const auto comps = minimal.base_components();
    if (comps.empty() || minimal.surface().blowup_count() != 0) return info;
    info.e = comps.front().e;
    for (const auto& c : comps)
        if (c.e != info.e) info.e = 0;
    DivisorClass total = DivisorClass::zero(minimal.surface().base());
    for (const auto& c : comps) total += c.curve.cls;

    const BasisTag& base = minimal.surface().base();
    if (base.is_p2()) {
        const Rat d = total.base_coeff(0);
        if (d == Rat(3)) info.id = Family::P2d3;
        if (d == Rat(4)) info.id = Family::P2d4;
        if (d == Rat(5)) info.id = Family::P2d5;
        return info;
    }
    const Rat a = total.base_coeff(0);
    const Rat b = total.base_coeff(1);
    switch (base.n) {
    case 0:
        if (a == Rat(2) && b == Rat(2)) info.id = Family::F0_22;
        if (a == Rat(3) && b == Rat(2)) info.id = Family::F0_32;
        if (a == Rat(2) && b == Rat(3)) info.id = Family::F0_23;
        if (a == Rat(3) && b == Rat(3)) info.id = Family::F0_33;
        break;
    case 1:
        if (a == Rat(2) && b == Rat(4)) info.id = Family::F1_24;
        if (a == Rat(3) && b == Rat(5)) info.id = Family::F1_35;
        break;
    case 2:
        if (a == Rat(2) && b == Rat(4)) info.id = Family::F2_24;
        if (a == Rat(3) && b == Rat(6)) info.id = Family::F2_36;
        break;
    default: break;
    }
    return info;
}

WitnessSummary summarize(const OrderData& o, const std::string& note) {
    WitnessSummary w;
    const SurfaceModel& s = o.surface();
    w.base = s.base();
    DivisorClass total = DivisorClass::zero(s.base());
    for (const auto& comp : o.base_components()) total += comp.curve.cls;
    w.d_class = total.base_coeffs();
    int uniform = 0;
    bool first = true;
    for (const auto& comp : o.components()) {
        w.degrees.push_back(comp.e);
        if (first) uniform = comp.e;
        if (comp.e != uniform) uniform = -1;
        first = false;
    }
    w.e = uniform > 0 ? uniform : 0;
    w.blowups = s.blowup_count();
    w.k2 = k_squared(o);
    w.del_pezzo = is_del_pezzo(o);
    w.almost_del_pezzo = is_almost_del_pezzo(o);
    try {
        w.minimal = is_minimal(o);
    } catch (const BudgetError&) {
        // past the enumeration budget a K-negative exceptional still
        // certifies non-minimality, and that is all the summary reports
        w.minimal = true;
        const DivisorClass kx = order_canonical(o);
        for (const auto& p : s.points())
            if (intersect(kx, exceptional_class(s, p.id)) < Rat(0)) w.minimal = false;
    }
    w.note = note;
    return w;
}

std::string centre_note(const OrderData& o) {
    int off = 0, smooth = 0, node = 0;
    for (const auto& p : o.surface().points()) {
        switch (o.centre_kind(p.id)) {
        case CentreKind::OffD: ++off; break;
        case CentreKind::SmoothOnD: ++smooth; break;
        case CentreKind::Node: ++node; break;
        }
    }
    if (off + smooth + node == 0) return "no blowups";
    std::string note = "centres:";
    if (smooth > 0) note += " " + std::to_string(smooth) + " smooth on D,";
    if (node > 0) note += " " + std::to_string(node) + " at nodes of D,";
    if (off > 0) note += " " + std::to_string(off) + " off D,";
    note.pop_back();
    return note;
}

// One K-zero clause of the classification catalog: a shape pattern over
// generators of the blown-up order.
struct Clause {
    int index;
    std::function<bool(const OrderData&, const ConeGenerator&)> match;
};

bool point_witnessed(const OrderData& o, const ConeGenerator& g) {
    return o.surface().has_point(g.witness);
}

bool curve_witnessed(const OrderData& o, const ConeGenerator& g) {
    return g.witness != kBaseParent && !point_witnessed(o, g);
}

bool base_part_is(const ConeGenerator& g, std::initializer_list<int> coeffs) {
    const DivisorClass bc = pushforward_to_base(g.cls);
    std::size_t i = 0;
    for (int c : coeffs) {
        if (bc.base_coeff(i) != Rat(c)) return false;
        ++i;
    }
    return true;
}

// The full strict transform of the section C0, no blown points on it.
bool is_pure_c0(const OrderData& o, const ConeGenerator& g) {
    return g.cls ==
           DivisorClass::ruled(o.surface().base().n, rat(1), rat(0)).padded(
               o.surface().blowup_count());
}

std::vector<Clause> clause_catalog(Family fam) {
    using G = const ConeGenerator&;
    using O = const OrderData&;
    auto fibre_part = [](G g) { return base_part_is(g, {1, 0}) || base_part_is(g, {0, 1}); };
    switch (fam) {
    case Family::P2d3:
        return {
            {1, [](O o, G g) { return point_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo; }},
            {2, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && base_part_is(g, {1}); }},
            {3, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo && base_part_is(g, {1}); }},
            {4, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo && base_part_is(g, {2}); }},
            {5, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo && base_part_is(g, {3}); }},
        };
    case Family::P2d4:
        return {
            {1, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && base_part_is(g, {1}); }},
        };
    case Family::F0_22:
        return {
            {1, [fibre_part](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && fibre_part(g); }},
            {4, [](O, G g) { return g.kind == GeneratorKind::MinusTwo; }},
        };
    case Family::F0_32:
    case Family::F0_23:
        return {
            {2, [fibre_part](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && fibre_part(g); }},
        };
    case Family::F0_33:
        return {
            {3, [fibre_part](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && fibre_part(g); }},
        };
    case Family::F1_24:
        return {
            {1, [](O o, G g) { return is_pure_c0(o, g); }},
            {2, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo && base_part_is(g, {0, 1}); }},
            {3, [](O o, G g) { return point_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo; }},
        };
    case Family::F2_24:
        return {
            {1, [](O o, G g) { return is_pure_c0(o, g); }},
            {2, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && base_part_is(g, {0, 1}); }},
            {3, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo && base_part_is(g, {0, 1}); }},
            {4, [](O o, G g) { return point_witnessed(o, g) && g.kind == GeneratorKind::MinusTwo; }},
        };
    case Family::F2_36:
        return {
            {1, [](O o, G g) { return is_pure_c0(o, g); }},
            {2, [](O o, G g) { return curve_witnessed(o, g) && g.kind == GeneratorKind::MinusOne && base_part_is(g, {0, 1}); }},
        };
    default: return {};
    }
}

const char* t3_tag(Family fam) {
    switch (fam) {
    case Family::P2d3: return tags::t3_p2_deg3;
    case Family::P2d4: return tags::t3_p2_deg4;
    case Family::F0_22:
    case Family::F0_32:
    case Family::F0_23:
    case Family::F0_33: return tags::t3_p1p1;
    case Family::F1_24: return tags::t3_f1;
    case Family::F2_24: return tags::t3_f2;
    case Family::F2_36: return tags::t3_f2_36;
    default: return nullptr;
    }
}

const char* t1_tag(Family fam) {
    switch (fam) {
    case Family::P2d3: return tags::t1_p2_deg3;
    case Family::P2d4: return tags::t1_p2_deg4;
    case Family::P2d5: return tags::t1_p2_deg5;
    case Family::F0_22:
    case Family::F0_32:
    case Family::F0_23:
    case Family::F0_33: return tags::t1_p1p1;
    default: return nullptr;
    }
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool passes_genus_at_every_prime(const OrderData& o, int e_max) {
    for (int p = 2; p <= e_max; ++p) {
        if (!is_prime(p)) continue;
        bool divides = false;
        for (const auto& comp : o.components())
            if (comp.e % p == 0) divides = true;
        if (!divides) continue;
        if (!genus_constraint(o, p)) return false;
    }
    return true;
}

} // namespace

std::vector<ClassificationRecord> enumerate_minimal_tdpo_p2(int e_max) {
    std::vector<ClassificationRecord> out;
    for (int d = 3; d <= 5; ++d) {
        for (int e = 2; e <= e_max; ++e) {
            CurveRecord curve{"d", DivisorClass::p2(rat(d)), {}, true};
            OrderData o(SurfaceModel(BasisTag::p2()), {{"d", curve, e, {}, false, ""}});
            if (!is_del_pezzo(o)) continue;
            const char* tag = d == 3   ? tags::t1_p2_deg3
                              : d == 4 ? tags::t1_p2_deg4
                                       : tags::t1_p2_deg5;
            out.push_back({tag, 1,
                           summarize(o, "D = " + std::to_string(d) + "H irreducible"),
                           {}});
        }
    }
    return out;
}

std::vector<ClassificationRecord> enumerate_minimal_tadpo_ruled(int n, int e_max, int b_max) {
    if (n < 0 || n > 2) throw InvalidConfigurationError("ruled enumeration needs n in {0,1,2}");
    if (e_max < 2 || b_max < 1) throw InvalidConfigurationError("empty enumeration range");

    struct Piece {
        int a;
        int b;
    };
    // C0 first: on F1/F2 it contributes the only negative term of the
    // C0-equation sum, so once past it that sum only grows and can be pruned.
    std::vector<Piece> pieces;
    pieces.push_back({1, 0});
    for (int a = 3; a >= 1; --a)
        for (int b = b_max; b >= std::max(n * a, 1); --b) pieces.push_back({a, b});
    pieces.push_back({0, 1});

    const Rat c0_limit = Rat(2 - n); // K_X . C0 <= 0
    const Rat c0_target = n == 1 ? Rat(1) : Rat(0);

    struct Entry {
        std::size_t piece;
        int e;
    };
    // Keyed by (total class, uniform e); the witness kept is the splitting
    // with the fewest components.
    std::map<std::tuple<std::int64_t, std::int64_t, int>,
             std::pair<std::size_t, ClassificationRecord>>
        found;
    std::vector<Entry> chosen;

    auto try_emit = [&]() {
        if (chosen.empty()) return;
        std::vector<RamificationComponent> comps;
        std::string note;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const Piece& pc = pieces[chosen[i].piece];
            std::string id = "c" + std::to_string(i + 1);
            comps.push_back({id,
                             CurveRecord{id, DivisorClass::ruled(n, rat(pc.a), rat(pc.b)), {}, true},
                             chosen[i].e,
                             {},
                             false,
                             ""});
            if (!note.empty()) note += " + ";
            note += "(" + std::to_string(pc.a) + "," + std::to_string(pc.b) + ") e=" +
                    std::to_string(chosen[i].e);
        }
        OrderData o(SurfaceModel(BasisTag::hirzebruch(n)), std::move(comps));
        if (n >= 1) {
            Rat sum(0);
            for (const auto& en : chosen) {
                const Piece& pc = pieces[en.piece];
                sum += Rat(en.e - 1, en.e) * Rat(pc.b - n * pc.a);
            }
            if (sum != c0_target) return; // base divisor equation on F1/F2
        }
        if (!is_almost_del_pezzo(o) || !is_minimal(o)) return;
        if (!passes_genus_at_every_prime(o, e_max)) return;

        std::int64_t ta = 0, tb = 0;
        int e_key = chosen.front().e;
        for (const auto& en : chosen) {
            ta += pieces[en.piece].a;
            tb += pieces[en.piece].b;
            if (en.e != e_key) e_key = 0;
        }
        auto key = std::make_tuple(ta, tb, e_key);
        const auto it = found.find(key);
        if (it != found.end() && it->second.first <= chosen.size()) return;
        const char* tag = n == 0   ? tags::t1_p1p1
                          : n == 1 ? tags::minimal_tadpo_f1
                                   : tags::minimal_tadpo_f2;
        ClassificationRecord rec{tag, 1, summarize(o, note), {}};
        if (!rec.witness.del_pezzo) rec.k_zero = k_zero_curves(o);
        found[key] = {chosen.size(), std::move(rec)};
    };

    // Non-decreasing (piece, e) multisets with partial-sum pruning.
    auto extend = [&](auto&& self, std::size_t min_piece, int min_e, int sum_a, int sum_b,
                      Rat kf, Rat kc0) -> void {
        try_emit();
        for (std::size_t pi = min_piece; pi < pieces.size(); ++pi) {
            // The section C0 is rigid on F1/F2: at most one component in (1,0).
            if (n >= 1 && pi == 0 && !chosen.empty() && chosen.back().piece == 0) continue;
            const int e_from = pi == min_piece ? min_e : 2;
            for (int e = e_from; e <= e_max; ++e) {
                const int a = sum_a + pieces[pi].a;
                const int b = sum_b + pieces[pi].b;
                if (a > 3 || b > b_max) continue;
                const Rat frac(e - 1, e);
                const Rat nkf = kf + frac * Rat(pieces[pi].a);
                if (nkf > Rat(2)) continue; // K_X . F <= 0 fails and can only worsen
                const Rat nkc0 = kc0 + frac * Rat(pieces[pi].b - n * pieces[pi].a);
                if ((n == 0 || pi > 0) && nkc0 > c0_limit) continue;
                chosen.push_back({pi, e});
                self(self, pi, e, a, b, nkf, nkc0);
                chosen.pop_back();
            }
        }
    };
    extend(extend, 0, 2, 0, 0, Rat(0), Rat(0));

    std::vector<ClassificationRecord> out;
    for (auto& [key, rec] : found) out.push_back(std::move(rec.second));
    return out;
}

std::vector<ClassificationRecord> classify_blowup(const OrderData& o) {
    std::vector<ClassificationRecord> out;
    WitnessSummary w = summarize(o, centre_note(o));
    if (!w.almost_del_pezzo) {
        out.push_back({tags::not_almost, 1, w, {}});
        return out;
    }
    MmpResult mmp = run_mmp(o);
    const FamilyInfo fam = mmp.complete ? identify_family(mmp.final)
                                        : FamilyInfo{Family::Unknown, 0};
    if (w.del_pezzo) {
        const char* tag = t1_tag(fam.id);
        out.push_back({tag != nullptr ? tag : tags::unclassified, 1, w, {}});
        return out;
    }
    std::vector<ConeGenerator> kz = k_zero_curves(o);
    if (o.surface().blowup_count() == 0 &&
        (fam.id == Family::F1_24 || fam.id == Family::F1_35)) {
        out.push_back({tags::minimal_tadpo_f1, 1, w, kz});
        return out;
    }
    if (o.surface().blowup_count() == 0 &&
        (fam.id == Family::F2_24 || fam.id == Family::F2_36)) {
        out.push_back({tags::minimal_tadpo_f2, 1, w, kz});
        return out;
    }
    const char* tag = t3_tag(fam.id);
    if (tag != nullptr) {
        for (const Clause& clause : clause_catalog(fam.id)) {
            std::vector<ConeGenerator> matched;
            for (const auto& g : kz)
                if (clause.match(o, g)) matched.push_back(g);
            if (!matched.empty()) out.push_back({tag, clause.index, w, std::move(matched)});
        }
    }
    if (out.empty()) out.push_back({tags::unclassified, 1, w, kz});
    return out;
}

BlowupBudget blowup_budget(const OrderData& o) {
    MmpResult mmp = run_mmp(o);
    const FamilyInfo fam = mmp.complete ? identify_family(mmp.final)
                                        : FamilyInfo{Family::Unknown, 0};
    switch (fam.id) {
    case Family::P2d3:
        return {8, 1, true, false,
                "at most 8 centres in D (a 9th kills K^2); one centre off D, only when e = 2"};
    case Family::P2d4:
        if (fam.e == 2)
            return {3, 0, false, false, "at most 3 centres in D, no 3 on a line; none off D"};
        if (fam.e == 3)
            return {0, 0, false, false, "no blowup keeps the order almost del Pezzo"};
        break;
    case Family::P2d5:
        return {0, 0, false, false, "no blowup keeps the order almost del Pezzo"};
    case Family::F0_22:
        return {7, 1, true, false,
                "at most 7 centres in D (an 8th kills K^2); one centre off D, only when e = 2"};
    case Family::F0_32:
    case Family::F0_23:
    case Family::F0_33:
        return {1, 0, false, false, "a single centre, in D"};
    case Family::F1_24:
        return {3, 0, false, false, "at most 3 centres in D, none on C0"};
    case Family::F1_35:
        return {0, 0, false, false, "no blowup keeps the order almost del Pezzo"};
    case Family::F2_24:
        return {7, 1, true, true,
                "at most 7 centres in D; with an off-D centre (e = 2) at most 3 more, "
                "in D and off that centre's fibre"};
    case Family::F2_36:
        return {1, 0, false, false, "a single centre, in D and off C0"};
    default: break;
    }
    throw NotApplicableError("no blowup budget catalogued for this ramification class");
}

} // namespace dporders

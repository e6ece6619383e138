#include "dporders/positivity.hpp"

#include <algorithm>
#include <set>

#include "dporders/errors.hpp"

namespace dporders {

std::string to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::MinusOne: return "minus-one";
    case GeneratorKind::MinusTwo: return "minus-two";
    case GeneratorKind::ZeroFibre: return "zero-fibre";
    case GeneratorKind::PlaneLine: return "plane-line";
    }
    return "?";
}

namespace {

std::size_t blowup_budget_for(const BasisTag& base) { return base.is_p2() ? 8 : 7; }

std::string pair_string(const Rat& self, const Rat& kdot) {
    return "(" + rat_to_string(self) + ", " + rat_to_string(kdot) + ")";
}

// Numeric (-1)/(-2)-candidates of bounded base degree, used only to report
// which classes lack a declared witness. Integer arithmetic: for
// f*C - sum m_i E_i the self-intersection is C^2 - sum m_i^2 and K.g is
// K.C + sum m_i.
std::vector<DivisorClass> numeric_candidates(const SurfaceModel& s) {
    const std::size_t k = s.blowup_count();
    std::vector<DivisorClass> out;
    std::vector<int> mults(k, 0);

    auto scan_base_class = [&](std::int64_t self_base, std::int64_t k_base,
                               const DivisorClass& base_cls) {
        std::fill(mults.begin(), mults.end(), 0);
        while (true) {
            std::int64_t self = self_base;
            std::int64_t kdot = k_base;
            for (std::size_t i = 0; i < k; ++i) {
                self -= static_cast<std::int64_t>(mults[i]) * mults[i];
                kdot += mults[i];
            }
            if ((self == -1 && kdot == -1) || (self == -2 && kdot == 0)) {
                DivisorClass cls = base_cls.padded(k);
                for (std::size_t i = 0; i < k; ++i)
                    cls -= rat(mults[i]) * DivisorClass::exceptional(s.base(), k, i);
                out.push_back(std::move(cls));
            }
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (mults[i] < 3) {
                    ++mults[i];
                    break;
                }
                mults[i] = 0;
            }
            if (i == k) break;
        }
    };

    if (s.base().is_p2()) {
        for (std::int64_t d = 1; d <= 3; ++d)
            scan_base_class(d * d, -3 * d, DivisorClass::p2(rat(d)));
    } else {
        const std::int64_t n = s.base().n;
        for (std::int64_t a = 0; a <= 4; ++a)
            for (std::int64_t b = 0; a + b <= 4; ++b) {
                if (a + b == 0) continue;
                // (aC0 + bF)^2 = -n a^2 + 2ab; K.(aC0 + bF) = (n-2)a - 2b
                const std::int64_t self = -n * a * a + 2 * a * b;
                const std::int64_t kb = (n - 2) * a - 2 * b;
                scan_base_class(self, kb, DivisorClass::ruled(s.base().n, rat(a), rat(b)));
            }
    }
    return out;
}

ConeResult cone_impl(const OrderData& o, bool with_numeric_scan) {
    const SurfaceModel& s = o.surface();
    const std::size_t k = s.blowup_count();
    if (k > blowup_budget_for(s.base()))
        throw BudgetError("generator enumeration supports at most " +
                          std::to_string(blowup_budget_for(s.base())) + " blowups of " +
                          to_string(s.base()));

    ConeResult res;
    if (k == 0) {
        if (s.base().is_p2()) {
            res.generators.push_back({DivisorClass::p2(rat(1)), GeneratorKind::PlaneLine,
                                      kBaseParent});
        } else {
            const int n = s.base().n;
            GeneratorKind c0 = n == 0   ? GeneratorKind::ZeroFibre
                               : n == 1 ? GeneratorKind::MinusOne
                                        : GeneratorKind::MinusTwo;
            res.generators.push_back({DivisorClass::ruled(n, rat(0), rat(1)),
                                      GeneratorKind::ZeroFibre, kBaseParent});
            res.generators.push_back({DivisorClass::ruled(n, rat(1), rat(0)), c0, kBaseParent});
        }
        std::sort(res.generators.begin(), res.generators.end(),
                  [](const ConeGenerator& a, const ConeGenerator& b) {
                      return DivisorClass::lex_less(a.cls, b.cls);
                  });
        return res;
    }

    const DivisorClass kz = canonical_class(s);
    std::vector<ConeGenerator> gens;

    for (const auto& p : s.points()) {
        DivisorClass cls = exceptional_class(s, p.id);
        const std::size_t children = s.children_of(p.id).size();
        if (children == 0) {
            gens.push_back({std::move(cls), GeneratorKind::MinusOne, p.id});
        } else if (children == 1) {
            gens.push_back({std::move(cls), GeneratorKind::MinusTwo, p.id});
        } else {
            res.diagnostics.push_back({std::move(cls), false,
                                       "exceptional of '" + p.id + "' has " +
                                           std::to_string(children) +
                                           " infinitely-near points; no catalogued kind"});
        }
    }

    auto consider = [&](const CurveRecord& curve) {
        DivisorClass cls = strict_transform(curve, s);
        const Rat self = intersect(cls, cls);
        const Rat kdot = intersect(kz, cls);
        if (self == rat(-1) && kdot == rat(-1)) {
            gens.push_back({std::move(cls), GeneratorKind::MinusOne, curve.id});
        } else if (self == rat(-2) && kdot == rat(0)) {
            gens.push_back({std::move(cls), GeneratorKind::MinusTwo, curve.id});
        } else {
            res.diagnostics.push_back({std::move(cls), false,
                                       "'" + curve.id + "' has (g^2, K.g) = " +
                                           pair_string(self, kdot) +
                                           "; not a negative generator"});
        }
    };
    for (const auto& c : s.curves())
        if (c.irreducible) consider(c);
    for (const auto& comp : o.components())
        if (!comp.exceptional) consider(comp.curve);

    std::sort(gens.begin(), gens.end(), [](const ConeGenerator& a, const ConeGenerator& b) {
        if (a.cls != b.cls) return DivisorClass::lex_less(a.cls, b.cls);
        return a.witness < b.witness;
    });
    for (const auto& g : gens) {
        if (!res.generators.empty() && res.generators.back().cls == g.cls) {
            res.diagnostics.push_back({g.cls, true,
                                       "'" + g.witness + "' duplicates the class of '" +
                                           res.generators.back().witness + "'"});
            continue;
        }
        res.generators.push_back(g);
    }

    if (with_numeric_scan) {
        for (DivisorClass& cls : numeric_candidates(s)) {
            const auto it = std::find_if(res.generators.begin(), res.generators.end(),
                                         [&](const ConeGenerator& g) { return g.cls == cls; });
            if (it != res.generators.end()) {
                res.diagnostics.push_back({std::move(cls), true,
                                           "witnessed by '" + it->witness + "'"});
            } else {
                res.diagnostics.push_back({std::move(cls), false, "no declared witness"});
            }
        }
    }
    std::sort(res.diagnostics.begin(), res.diagnostics.end(),
              [](const ConeDiagnostic& a, const ConeDiagnostic& b) {
                  if (a.cls != b.cls) return DivisorClass::lex_less(a.cls, b.cls);
                  return a.reason < b.reason;
              });
    return res;
}

} // namespace

ConeResult effective_cone(const OrderData& o) { return cone_impl(o, true); }

std::vector<ConeGenerator> effective_cone_generators(const OrderData& o) {
    return cone_impl(o, false).generators;
}

bool is_del_pezzo(const OrderData& o) {
    if (k_squared(o) <= Rat(0)) return false;
    const DivisorClass kx = order_canonical(o);
    for (const auto& g : effective_cone_generators(o))
        if (intersect(kx, g.cls) >= Rat(0)) return false;
    return true;
}

bool is_almost_del_pezzo(const OrderData& o) {
    if (k_squared(o) <= Rat(0)) return false;
    const DivisorClass kx = order_canonical(o);
    for (const auto& g : effective_cone_generators(o))
        if (intersect(kx, g.cls) > Rat(0)) return false;
    return true;
}

bool is_minimal(const OrderData& o) {
    const DivisorClass kx = order_canonical(o);
    for (const auto& g : effective_cone_generators(o))
        if (intersect(g.cls, g.cls) < Rat(0) && intersect(kx, g.cls) < Rat(0)) return false;
    return true;
}

std::vector<ConeGenerator> k_zero_curves(const OrderData& o) {
    if (!is_almost_del_pezzo(o))
        throw PredicateError("K-zero curves are defined for almost del Pezzo orders only");
    const DivisorClass kx = order_canonical(o);
    std::vector<ConeGenerator> zero;
    std::vector<ConeGenerator> minus_two;
    for (const auto& g : effective_cone_generators(o)) {
        if (intersect(kx, g.cls) == Rat(0)) zero.push_back(g);
        if (g.kind == GeneratorKind::MinusTwo) minus_two.push_back(g);
    }
    // Anti-canonical ramification blown up inside D: the K-zero curves must
    // be exactly the (-2)-curves of the surface.
    bool sigma_in_d = true;
    for (const auto& p : o.surface().points())
        if (o.centre_kind(p.id) == CentreKind::OffD) sigma_in_d = false;
    const auto md = [&]() -> std::optional<MDecomposition> {
        try {
            return m_decomposition(o);
        } catch (const NotApplicableError&) {
            return std::nullopt;
        }
    }();
    if (sigma_in_d && md && md->m.is_zero() && zero != minus_two)
        throw Error("internal: K-zero curves disagree with the minus-two generators "
                    "under M = 0");
    return zero;
}

bool mult_criterion(const OrderData& o, const CurveRecord& curve, bool strict) {
    std::optional<MDecomposition> md;
    try {
        md = m_decomposition(o);
    } catch (const NotApplicableError&) {
        md = std::nullopt;
    }
    if (!md)
        throw NotApplicableError("the multiplicity criterion needs an M-decomposition");
    const SurfaceModel& s = o.surface();
    const DivisorClass k_base = s.base().is_p2()
                                    ? DivisorClass::p2(rat(-3))
                                    : DivisorClass::ruled(s.base().n, rat(-2),
                                                          rat(-(s.base().n + 2)));
    const Rat c2 = intersect(curve.cls, curve.cls);
    const Rat pa = (intersect(k_base, curve.cls) + c2 + Rat(2)) / Rat(2);
    const Rat mdot = intersect(md->m, strict_transform(curve, s));
    const Rat bound = Rat(2) - Rat(2) * pa - Rat(md->e - 1) * mdot + c2;
    const Rat m = rat(multiplicity_at(s, curve));
    return strict ? m < bound : m <= bound;
}

OrderData contract(const OrderData& o, const ConeGenerator& g) {
    const SurfaceModel& s = o.surface();
    if (s.blowup_count() == 0) throw ContractionError("no blowup to contract");
    const std::string last = s.points().back().id;
    const DivisorClass expected = exceptional_class(s, last);
    if (g.kind != GeneratorKind::MinusOne || g.cls != expected)
        throw ContractionError("only the strict exceptional of the last-created point '" +
                               last + "' can be contracted");
    std::vector<RamificationComponent> comps = o.base_components();
    for (auto& comp : comps) comp.curve.mults.erase(last);
    return OrderData(s.without_last_point(), std::move(comps));
}

MmpResult run_mmp(const OrderData& o) {
    MmpResult res{o, {}, true, ""};
    while (true) {
        const DivisorClass kx = order_canonical(res.final);
        std::vector<ConeGenerator> negative;
        for (const auto& g : effective_cone_generators(res.final))
            if (intersect(g.cls, g.cls) < Rat(0) && intersect(kx, g.cls) < Rat(0))
                negative.push_back(g);
        if (negative.empty()) break;
        std::sort(negative.begin(), negative.end(),
                  [](const ConeGenerator& a, const ConeGenerator& b) {
                      return DivisorClass::lex_less(a.cls, b.cls);
                  });
        const ConeGenerator* pick = nullptr;
        if (res.final.surface().blowup_count() > 0) {
            const DivisorClass expected =
                exceptional_class(res.final.surface(), res.final.surface().points().back().id);
            for (const auto& g : negative)
                if (g.kind == GeneratorKind::MinusOne && g.cls == expected) {
                    pick = &g;
                    break;
                }
        }
        if (pick == nullptr) {
            res.complete = false;
            res.diagnostic = "K-negative curve " + negative.front().cls.to_string() +
                             " is not a contractible forest exceptional";
            break;
        }
        const Rat a = -intersect(kx, pick->cls);
        OrderData next = contract(res.final, *pick);
        res.steps.push_back({*pick, a, k_squared(next)});
        res.final = next;
    }
    return res;
}

} // namespace dporders

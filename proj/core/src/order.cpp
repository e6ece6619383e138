#include "dporders/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dporders/errors.hpp"

namespace dporders {

namespace {

std::string exc_component_id(const std::string& point_id) { return "exc(" + point_id + ")"; }

// Irreducible base classes: d >= 1 on P2; C0, a fibre, or a >= 1 with
// b >= n a on F_n (b >= 1 when n = 0).
void check_component_shape(const BasisTag& base, const std::string& id,
                           const DivisorClass& cls) {
    if (base.is_p2()) {
        if (cls.base_coeff(0) < Rat(1))
            throw InvalidConfigurationError("component '" + id + "' has degree < 1");
        return;
    }
    const Rat a = cls.base_coeff(0);
    const Rat b = cls.base_coeff(1);
    if ((a == Rat(1) && b == Rat(0)) || (a == Rat(0) && b == Rat(1))) return;
    // On F0 any a, b >= 1 class has irreducible members; on F_n (n >= 1)
    // sections additionally need b >= n a to meet C0 non-negatively.
    if (a < Rat(1) || b < Rat(1) || b < Rat(base.n) * a)
        throw InvalidConfigurationError("component '" + id + "' has class " + cls.to_string() +
                                        ", not an irreducible class on " + to_string(base));
}

struct IncidentEntry {
    const RamificationComponent* comp;
    int mult;
};

// Components through a point, base components first (declaration order),
// then derived exceptionals. Safe with the full component list: a point can
// only be incident to exceptionals of earlier points.
std::vector<IncidentEntry> incident_components(const std::vector<RamificationComponent>& comps,
                                               const BlowupPoint& p) {
    std::vector<IncidentEntry> out;
    for (const auto& c : comps) {
        if (c.exceptional) {
            if (p.parent == c.exc_point) out.push_back({&c, 1});
        } else {
            auto it = c.curve.mults.find(p.id);
            if (it != c.curve.mults.end()) out.push_back({&c, it->second});
        }
    }
    return out;
}

struct CentreShape {
    CentreKind kind;
    std::vector<std::string> ids;
    int e_small;
    int e_large;
};

CentreShape classify_centre(const BlowupPoint& p, const std::vector<IncidentEntry>& entries) {
    if (!p.on_d) {
        if (!entries.empty())
            throw InvalidConfigurationError("point '" + p.id +
                                            "' is flagged off D but component '" +
                                            entries.front().comp->id + "' passes through it");
        return {CentreKind::OffD, {}, 0, 0};
    }
    if (entries.empty())
        throw InvalidConfigurationError("point '" + p.id +
                                        "' is flagged on D but no component passes through it");
    std::vector<std::string> ids;
    int total = 0;
    for (const auto& en : entries) {
        ids.push_back(en.comp->id);
        total += en.mult;
    }
    if (!p.node_of_d) {
        if (entries.size() != 1 || total != 1)
            throw InvalidConfigurationError("point '" + p.id +
                                            "' is not flagged as a node but D has "
                                            "multiplicity " + std::to_string(total) +
                                            " there");
        return {CentreKind::SmoothOnD, std::move(ids), entries[0].comp->e, entries[0].comp->e};
    }
    int ea = 0;
    int eb = 0;
    if (entries.size() == 2 && entries[0].mult == 1 && entries[1].mult == 1) {
        ea = entries[0].comp->e;
        eb = entries[1].comp->e;
    } else if (entries.size() == 1 && entries[0].mult == 2) {
        ea = eb = entries[0].comp->e; // self-node of one component
    } else {
        throw InvalidConfigurationError("node '" + p.id +
                                        "' must be two transverse branches or one "
                                        "double branch of D");
    }
    int e_small = std::min(ea, eb);
    int e_large = std::max(ea, eb);
    if (e_large % e_small != 0)
        throw InvalidConfigurationError("branch degrees " + std::to_string(ea) + ", " +
                                        std::to_string(eb) + " at node '" + p.id +
                                        "' do not divide");
    return {CentreKind::Node, std::move(ids), e_small, e_large};
}

} // namespace

OrderData::OrderData(SurfaceModel surface, std::vector<RamificationComponent> components)
    : surface_(std::move(surface)), components_(std::move(components)) {
    replay();
}

void OrderData::replay() {
    std::set<std::string> ids;
    for (const auto& comp : components_) {
        if (comp.exceptional)
            throw InvalidConfigurationError("component '" + comp.id +
                                            "' is flagged exceptional; exceptional "
                                            "components are derived from the point forest");
        if (comp.id.empty() || comp.id == kBaseParent)
            throw InvalidConfigurationError("invalid component id '" + comp.id + "'");
        if (!ids.insert(comp.id).second)
            throw InvalidConfigurationError("duplicate component id '" + comp.id + "'");
        if (surface_.has_curve(comp.id) || surface_.has_point(comp.id))
            throw InvalidConfigurationError("component id '" + comp.id +
                                            "' collides with a curve or point id");
        if (comp.e < 2)
            throw InvalidConfigurationError("component '" + comp.id +
                                            "' has ramification degree " +
                                            std::to_string(comp.e) + " < 2");
        if (comp.curve.id != comp.id)
            throw InvalidConfigurationError("component '" + comp.id +
                                            "' declares a curve with mismatched id '" +
                                            comp.curve.id + "'");
        if (!comp.curve.irreducible)
            throw InvalidConfigurationError("component '" + comp.id +
                                            "' must be an irreducible curve");
        check_component_shape(surface_.base(), comp.id, comp.curve.cls);
        strict_transform(comp.curve, surface_); // reference + proximity validation
    }

    nodes_.clear();
    for (const auto& p : surface_.points()) {
        CentreShape shape = classify_centre(p, incident_components(components_, p));
        if (shape.kind != CentreKind::Node) continue;
        nodes_.push_back({p.id, shape.ids.front(), shape.ids.back(), shape.e_small,
                          shape.e_large});
        const std::string eid = exc_component_id(p.id);
        if (!ids.insert(eid).second || surface_.has_curve(eid) || surface_.has_point(eid))
            throw InvalidConfigurationError("derived component id '" + eid +
                                            "' collides with a declared id");
        RamificationComponent exc{eid,
                                  CurveRecord{eid, DivisorClass::zero(surface_.base()), {}, true},
                                  shape.e_small,
                                  {},
                                  true,
                                  p.id};
        components_.push_back(std::move(exc));
    }
}

std::vector<RamificationComponent> OrderData::base_components() const {
    std::vector<RamificationComponent> out;
    for (const auto& c : components_)
        if (!c.exceptional) out.push_back(c);
    return out;
}

bool OrderData::has_component(const std::string& id) const {
    return std::any_of(components_.begin(), components_.end(),
                       [&](const RamificationComponent& c) { return c.id == id; });
}

const RamificationComponent& OrderData::component(const std::string& id) const {
    for (const auto& c : components_)
        if (c.id == id) return c;
    throw IncidenceError("unknown component '" + id + "'");
}

int OrderData::component_multiplicity(const RamificationComponent& comp,
                                      const std::string& point_id) const {
    if (comp.exceptional) return surface_.point(point_id).parent == comp.exc_point ? 1 : 0;
    auto it = comp.curve.mults.find(point_id);
    return it == comp.curve.mults.end() ? 0 : it->second;
}

DivisorClass OrderData::component_class(const RamificationComponent& comp) const {
    if (comp.exceptional) return exceptional_class(surface_, comp.exc_point);
    return strict_transform(comp.curve, surface_);
}

CentreKind OrderData::centre_kind(const std::string& point_id) const {
    const BlowupPoint& p = surface_.point(point_id);
    return classify_centre(p, incident_components(components_, p)).kind;
}

OrderData OrderData::with_trivial_ramification() const {
    std::vector<BlowupPoint> points = surface_.points();
    for (auto& p : points) {
        p.on_d = false;
        p.node_of_d = false;
    }
    std::vector<CurveRecord> curves = surface_.curves();
    for (const auto& comp : components_)
        if (!comp.exceptional) curves.push_back(comp.curve);
    return OrderData(SurfaceModel(surface_.base(), std::move(points), std::move(curves)), {});
}

DivisorClass discriminant(const OrderData& o) {
    DivisorClass out = DivisorClass::zero(o.surface().base(), o.surface().blowup_count());
    for (const auto& comp : o.components())
        out += Rat(comp.e - 1, comp.e) * o.component_class(comp);
    return out;
}

DivisorClass order_canonical(const OrderData& o) {
    return canonical_class(o.surface()) + discriminant(o);
}

Rat k_squared(const OrderData& o) {
    DivisorClass k = order_canonical(o);
    return intersect(k, k);
}

CentreInfo resolve_centre(const OrderData& o, const BlowupPoint& p) {
    const SurfaceModel& s = o.surface();
    if (p.id.empty() || p.id == kBaseParent || s.has_point(p.id) || s.has_curve(p.id) ||
        o.has_component(p.id))
        throw InvalidConfigurationError("blowup centre id '" + p.id + "' is not fresh");
    if (p.parent != kBaseParent) s.point_index(p.parent);

    std::vector<IncidentEntry> entries;
    for (const auto& [target, m] : p.incidences) {
        if (m < 1)
            throw InvalidConfigurationError("centre '" + p.id +
                                            "' declares non-positive multiplicity on '" +
                                            target + "'");
        if (!o.has_component(target)) {
            if (!s.has_curve(target))
                throw IncidenceError("centre '" + p.id + "' touches unknown id '" + target + "'");
            continue; // plain curve, folded by the surface layer
        }
        const RamificationComponent& comp = o.component(target);
        if (comp.exceptional)
            throw InvalidConfigurationError("incidence on exceptional component '" + target +
                                            "' is derived from the parent; do not declare it");
        entries.push_back({&comp, m});
    }
    // A point infinitely near a node centre automatically lies on that
    // node's exceptional ramification component.
    for (const auto& comp : o.components())
        if (comp.exceptional && comp.exc_point == p.parent) entries.push_back({&comp, 1});

    CentreShape shape = classify_centre(p, entries);
    return {shape.kind, std::move(shape.ids), shape.e_small, shape.e_large};
}

Rat blowup_coefficient(const OrderData& o, const BlowupPoint& p) {
    CentreInfo info = resolve_centre(o, p);
    switch (info.kind) {
    case CentreKind::OffD: return Rat(1);
    case CentreKind::SmoothOnD: return Rat(1, info.e_small);
    case CentreKind::Node: return Rat(1, info.e_large);
    }
    return Rat(1);
}

OrderData blowup_order(const OrderData& o, const BlowupPoint& p) {
    resolve_centre(o, p); // full validation before any mutation
    std::vector<RamificationComponent> comps = o.base_components();
    BlowupPoint stripped = p;
    for (const auto& [target, m] : p.incidences) {
        auto it = std::find_if(comps.begin(), comps.end(),
                               [&](const RamificationComponent& c) { return c.id == target; });
        if (it == comps.end()) continue;
        it->curve.mults[p.id] = m;
        stripped.incidences.erase(target);
    }
    return OrderData(o.surface().with_point(std::move(stripped)), std::move(comps));
}

Rat k_squared_after_blowup(const OrderData& o, const BlowupPoint& p) {
    Rat a = blowup_coefficient(o, p);
    return k_squared(o) - a * a;
}

std::optional<MDecomposition> m_decomposition(const OrderData& o) {
    const auto& comps = o.components();
    if (comps.empty()) return std::nullopt;
    int e = comps.front().e;
    for (const auto& c : comps)
        if (c.e != e)
            throw NotApplicableError("mixed ramification degrees admit no M-decomposition");
    DivisorClass m = canonical_class(o.surface());
    for (const auto& c : comps) m += o.component_class(c);
    for (const Rat& c : m.base_coeffs())
        if (c < Rat(0)) return std::nullopt;
    for (const Rat& c : m.exc_coeffs())
        if (c < Rat(0)) return std::nullopt;
    return MDecomposition{std::move(m), e};
}

bool genus_constraint(const OrderData& o, int p) {
    if (!o.surface().base().is_hirzebruch())
        throw PredicateError("the genus constraint applies over a Hirzebruch base");
    if (p < 2) throw InvalidConfigurationError("prime must be >= 2");
    std::int64_t pk = 0; // largest power of p dividing any degree
    for (const auto& comp : o.components()) {
        std::int64_t q = 1;
        while (comp.e % (q * p) == 0) q *= p;
        pk = std::max(pk, q);
    }
    if (pk < p) throw NotApplicableError(std::to_string(p) + " divides no ramification degree");
    DivisorClass dp = DivisorClass::ruled(o.surface().base().n, rat(0), rat(0));
    for (const auto& comp : o.components())
        if (comp.e % pk == 0) dp += pushforward_to_base(o.component_class(comp));
    const Rat a = dp.base_coeff(0);
    const Rat b = dp.base_coeff(1);
    const Rat n = rat(o.surface().base().n);
    return (a - Rat(1)) * (Rat(2) * b - n * a - Rat(2)) >= Rat(2);
}

std::vector<std::string> terminal_violations(const OrderData& o) {
    std::vector<std::string> notes;
    DivisorClass total = DivisorClass::zero(o.surface().base());
    std::set<int> degrees;
    for (const auto& comp : o.components()) {
        total += pushforward_to_base(o.component_class(comp));
        degrees.insert(comp.e);
    }
    if (o.surface().base().is_hirzebruch()) {
        if (total.base_coeff(0) == Rat(3) && degrees != std::set<int>{2})
            notes.push_back("a section part of degree 3 requires every ramification "
                            "degree to be 2");
        return notes;
    }
    if (o.surface().blowup_count() != 0) return notes;
    const Rat d = total.base_coeff(0);
    if (d < Rat(3) || d > Rat(5))
        notes.push_back("ramification of degree " + rat_to_string(d) +
                        " on the plane is outside [3, 5]");
    if (degrees.size() > 1)
        notes.push_back("ramification degrees on the plane must all be equal");
    if (d == Rat(4) && !degrees.empty() && degrees != std::set<int>{2} &&
        degrees != std::set<int>{3})
        notes.push_back("degree 4 ramification requires e = 2 or 3");
    if (d == Rat(5) && !degrees.empty() && degrees != std::set<int>{2})
        notes.push_back("degree 5 ramification requires e = 2");
    return notes;
}

} // namespace dporders

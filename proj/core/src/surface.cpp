#include "dporders/surface.hpp"

#include <algorithm>

#include "dporders/errors.hpp"

namespace dporders {

namespace {

// Proximity: at every point the multiplicity is at least the sum over its
// first-order infinitely-near points. Entries absent from the map count 0.
void check_proximity(const SurfaceModel& surface, const std::string& owner,
                     const std::map<std::string, int>& mults) {
    auto mult_of = [&](const std::string& id) {
        auto it = mults.find(id);
        return it == mults.end() ? 0 : it->second;
    };
    for (const auto& p : surface.points()) {
        int sum = 0;
        for (const auto& q : surface.points())
            if (q.parent == p.id) sum += mult_of(q.id);
        if (mult_of(p.id) < sum)
            throw InvalidConfigurationError("proximity violated for '" + owner +
                                            "' at point '" + p.id + "'");
    }
}

void check_mult_refs(const SurfaceModel& surface, const std::string& owner,
                     const std::map<std::string, int>& mults) {
    for (const auto& [pt, m] : mults) {
        if (!surface.has_point(pt))
            throw IncidenceError("'" + owner + "' references unknown point '" + pt + "'");
        if (m < 1)
            throw InvalidConfigurationError("'" + owner + "' has non-positive multiplicity at '" +
                                            pt + "'");
    }
}

void check_base_curve_class(const BasisTag& base, const std::string& owner,
                            const DivisorClass& cls) {
    if (cls.base() != base)
        throw DimensionError("curve '" + owner + "' lives on " + to_string(cls.base()) +
                             ", surface base is " + to_string(base));
    if (cls.blowup_count() != 0)
        throw InvalidConfigurationError("curve '" + owner +
                                        "' must be declared by its base class");
    if (!cls.integral())
        throw InvalidConfigurationError("curve '" + owner + "' has a non-integral class");
    bool nonzero = false;
    for (const Rat& c : cls.base_coeffs()) {
        if (c < Rat(0))
            throw InvalidConfigurationError("curve '" + owner +
                                            "' has a negative base coefficient");
        if (c != Rat(0)) nonzero = true;
    }
    if (!nonzero)
        throw InvalidConfigurationError("curve '" + owner + "' has zero class");
}

} // namespace

SurfaceModel::SurfaceModel(BasisTag base, std::vector<BlowupPoint> points,
                           std::vector<CurveRecord> curves)
    : base_(base), points_(std::move(points)), curves_(std::move(curves)) {
    validate();
}

void SurfaceModel::validate() const {
    std::set<std::string> ids;
    for (const auto& p : points_) {
        if (p.id.empty() || p.id == kBaseParent)
            throw InvalidConfigurationError("invalid point id '" + p.id + "'");
        if (p.parent != kBaseParent && !ids.count(p.parent))
            throw InvalidConfigurationError("point '" + p.id + "' has parent '" + p.parent +
                                            "' that is not an earlier point");
        if (!ids.insert(p.id).second)
            throw InvalidConfigurationError("duplicate point id '" + p.id + "'");
        if (p.node_of_d && !p.on_d)
            throw InvalidConfigurationError("point '" + p.id + "' is a node of D but not on D");
        if (!p.incidences.empty())
            throw InvalidConfigurationError("point '" + p.id +
                                            "' carries unfolded incidences; multiplicities "
                                            "belong on curve records");
    }
    std::set<std::string> curve_ids;
    for (const auto& c : curves_) {
        if (c.id.empty() || c.id == kBaseParent)
            throw InvalidConfigurationError("invalid curve id '" + c.id + "'");
        if (ids.count(c.id))
            throw InvalidConfigurationError("curve id '" + c.id + "' collides with a point id");
        if (!curve_ids.insert(c.id).second)
            throw InvalidConfigurationError("duplicate curve id '" + c.id + "'");
        check_base_curve_class(base_, c.id, c.cls);
        check_mult_refs(*this, c.id, c.mults);
        check_proximity(*this, c.id, c.mults);
    }
}

bool SurfaceModel::has_point(const std::string& id) const {
    return std::any_of(points_.begin(), points_.end(),
                       [&](const BlowupPoint& p) { return p.id == id; });
}

std::size_t SurfaceModel::point_index(const std::string& id) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].id == id) return i;
    throw IncidenceError("unknown point '" + id + "'");
}

const BlowupPoint& SurfaceModel::point(const std::string& id) const {
    return points_[point_index(id)];
}

bool SurfaceModel::has_curve(const std::string& id) const {
    return std::any_of(curves_.begin(), curves_.end(),
                       [&](const CurveRecord& c) { return c.id == id; });
}

const CurveRecord& SurfaceModel::curve(const std::string& id) const {
    for (const auto& c : curves_)
        if (c.id == id) return c;
    throw IncidenceError("unknown curve '" + id + "'");
}

std::vector<std::string> SurfaceModel::children_of(const std::string& id) const {
    if (id != kBaseParent) point_index(id); // existence check
    std::vector<std::string> out;
    for (const auto& p : points_)
        if (p.parent == id) out.push_back(p.id);
    return out;
}

std::vector<std::pair<std::string, int>>
SurfaceModel::incidences_at(const std::string& point_id) const {
    point_index(point_id);
    std::vector<std::pair<std::string, int>> out;
    for (const auto& c : curves_) {
        auto it = c.mults.find(point_id);
        if (it != c.mults.end()) out.emplace_back(c.id, it->second);
    }
    return out;
}

bool SurfaceModel::extends(const SurfaceModel& ancestor) const {
    if (base_ != ancestor.base_ || points_.size() < ancestor.points_.size() ||
        curves_.size() != ancestor.curves_.size())
        return false;
    for (std::size_t i = 0; i < ancestor.points_.size(); ++i)
        if (points_[i] != ancestor.points_[i]) return false;
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        const auto& ours = curves_[i];
        const auto& theirs = ancestor.curves_[i];
        if (ours.id != theirs.id || ours.cls != theirs.cls ||
            ours.irreducible != theirs.irreducible)
            return false;
        // Our extra multiplicities may only sit at the new points.
        for (const auto& [pt, m] : ours.mults) {
            auto it = theirs.mults.find(pt);
            if (it != theirs.mults.end()) {
                if (it->second != m) return false;
            } else if (ancestor.has_point(pt)) {
                return false;
            }
        }
        for (const auto& [pt, m] : theirs.mults) {
            auto it = ours.mults.find(pt);
            if (it == ours.mults.end() || it->second != m) return false;
        }
    }
    return true;
}

SurfaceModel SurfaceModel::with_point(BlowupPoint p,
                                      const std::set<std::string>& external_ids) const {
    std::vector<CurveRecord> curves = curves_;
    for (const auto& [target, m] : p.incidences) {
        if (m < 1)
            throw InvalidConfigurationError("point '" + p.id +
                                            "' declares non-positive multiplicity on '" +
                                            target + "'");
        if (external_ids.count(target)) continue; // folded by the order layer
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const CurveRecord& c) { return c.id == target; });
        if (it == curves.end())
            throw IncidenceError("point '" + p.id + "' touches unknown curve '" + target + "'");
        it->mults[p.id] = m;
    }
    p.incidences.clear();
    std::vector<BlowupPoint> points = points_;
    points.push_back(std::move(p));
    return SurfaceModel(base_, std::move(points), std::move(curves));
}

SurfaceModel SurfaceModel::with_curve(CurveRecord c) const {
    std::vector<CurveRecord> curves = curves_;
    curves.push_back(std::move(c));
    return SurfaceModel(base_, points_, std::move(curves));
}

SurfaceModel SurfaceModel::without_last_point() const {
    if (points_.empty()) throw LineageError("no point to remove");
    const std::string last = points_.back().id;
    std::vector<BlowupPoint> points(points_.begin(), points_.end() - 1);
    std::vector<CurveRecord> curves = curves_;
    for (auto& c : curves) c.mults.erase(last);
    return SurfaceModel(base_, std::move(points), std::move(curves));
}

DivisorClass canonical_class(const SurfaceModel& surface) {
    const std::size_t k = surface.blowup_count();
    DivisorClass base = surface.base().is_p2()
                            ? DivisorClass::p2(rat(-3), k)
                            : DivisorClass::ruled(surface.base().n, rat(-2),
                                                  rat(-(surface.base().n + 2)), k);
    for (std::size_t i = 0; i < k; ++i)
        base += DivisorClass::exceptional(surface.base(), k, i);
    return base;
}

DivisorClass total_transform(const DivisorClass& c, const SurfaceModel& target) {
    if (c.base() != target.base())
        throw LineageError("class on " + to_string(c.base()) + " pulled back to " +
                           to_string(target.base()));
    if (c.blowup_count() > target.blowup_count())
        throw LineageError("total transform onto a surface with fewer points");
    return c.padded(target.blowup_count());
}

DivisorClass strict_transform(const CurveRecord& curve, const SurfaceModel& target) {
    if (curve.cls.blowup_count() != 0)
        throw InvalidConfigurationError("curve '" + curve.id +
                                        "' must be declared by its base class");
    check_mult_refs(target, curve.id, curve.mults);
    check_proximity(target, curve.id, curve.mults);
    DivisorClass out = total_transform(curve.cls, target);
    for (const auto& [pt, m] : curve.mults)
        out -= rat(m) * DivisorClass::exceptional(target.base(), target.blowup_count(),
                                                  target.point_index(pt));
    return out;
}

DivisorClass pushforward(const DivisorClass& c, const SurfaceModel& target) {
    if (c.base() != target.base())
        throw LineageError("class on " + to_string(c.base()) + " pushed to " +
                           to_string(target.base()));
    if (c.blowup_count() < target.blowup_count())
        throw LineageError("pushforward onto a surface with more points");
    return c.truncated(target.blowup_count());
}

DivisorClass pushforward_to_base(const DivisorClass& c) { return c.truncated(0); }

DivisorClass exceptional_class(const SurfaceModel& surface, const std::string& point_id) {
    const std::size_t k = surface.blowup_count();
    DivisorClass out = DivisorClass::exceptional(surface.base(), k, surface.point_index(point_id));
    for (const auto& child : surface.children_of(point_id))
        out -= DivisorClass::exceptional(surface.base(), k, surface.point_index(child));
    return out;
}

int multiplicity_at(const CurveRecord& curve, const std::set<std::string>& sigma) {
    int total = 0;
    for (const auto& [pt, m] : curve.mults)
        if (sigma.count(pt)) total += m;
    return total;
}

int multiplicity_at(const SurfaceModel& surface, const CurveRecord& curve) {
    int total = 0;
    for (const auto& [pt, m] : curve.mults)
        if (surface.has_point(pt)) total += m;
    return total;
}

std::string to_string(PositionFlavor flavor) {
    switch (flavor) {
    case PositionFlavor::GeneralP2: return "general-P2";
    case PositionFlavor::AlmostGeneralP2: return "almost-general-P2";
    case PositionFlavor::GeneralP1P1: return "general-P1P1";
    case PositionFlavor::AlmostGeneralP1P1: return "almost-general-P1P1";
    case PositionFlavor::AlmostGeneralF1: return "almost-general-F1";
    case PositionFlavor::AlmostGeneralF2: return "almost-general-F2";
    }
    return "?";
}

namespace {

bool flavor_is_almost(PositionFlavor flavor) {
    return flavor != PositionFlavor::GeneralP2 && flavor != PositionFlavor::GeneralP1P1;
}

void check_flavor_base(const SurfaceModel& surface, PositionFlavor flavor) {
    const BasisTag& b = surface.base();
    bool ok = false;
    switch (flavor) {
    case PositionFlavor::GeneralP2:
    case PositionFlavor::AlmostGeneralP2: ok = b.is_p2(); break;
    case PositionFlavor::GeneralP1P1:
    case PositionFlavor::AlmostGeneralP1P1: ok = b.is_hirzebruch() && b.n == 0; break;
    case PositionFlavor::AlmostGeneralF1: ok = b.is_hirzebruch() && b.n == 1; break;
    case PositionFlavor::AlmostGeneralF2: ok = b.is_hirzebruch() && b.n == 2; break;
    }
    if (!ok)
        throw PredicateError(to_string(flavor) + " does not apply to a " +
                             to_string(b) + " surface");
}

std::int64_t int_coeff(const DivisorClass& cls, std::size_t i) {
    return cls.base_coeff(i).numerator();
}

// Bounded multiplicity for one declared curve, or no bound (-1).
std::int64_t flavor_bound(PositionFlavor flavor, const DivisorClass& cls) {
    if (flavor == PositionFlavor::GeneralP2 || flavor == PositionFlavor::AlmostGeneralP2) {
        std::int64_t d = int_coeff(cls, 0);
        if (d == 1) return flavor == PositionFlavor::GeneralP2 ? 2 : 3;
        if (d == 2) return flavor == PositionFlavor::GeneralP2 ? 5 : 6;
        return -1;
    }
    std::int64_t a = int_coeff(cls, 0);
    std::int64_t b = int_coeff(cls, 1);
    switch (flavor) {
    case PositionFlavor::GeneralP1P1: return 2 * (a + b) - 1;
    case PositionFlavor::AlmostGeneralP1P1: return 2 * (a + b);
    case PositionFlavor::AlmostGeneralF1: return 2 + a * (2 * b - a - 1);
    case PositionFlavor::AlmostGeneralF2: return 2 + a * (2 * b - 2 * a);
    default: return -1;
    }
}

} // namespace

bool position_predicate(const SurfaceModel& surface, PositionFlavor flavor) {
    check_flavor_base(surface, flavor);
    if (flavor_is_almost(flavor)) {
        // A point with two infinitely-near points has a (-2)-or-worse strict
        // exceptional; the second child sat on it when it was blown up.
        for (const auto& p : surface.points())
            if (surface.children_of(p.id).size() >= 2) return false;
    }
    for (const auto& c : surface.curves()) {
        if (!c.irreducible) continue;
        std::int64_t bound = flavor_bound(flavor, c.cls);
        if (bound < 0) continue;
        if (multiplicity_at(surface, c) > bound) return false;
    }
    return true;
}

std::vector<CurveRecord> sigma_almost_general_curves(const SurfaceModel& surface) {
    if (!surface.base().is_hirzebruch() || surface.base().n != 0)
        throw PredicateError("sigma-almost-general curves live on P1 x P1");
    std::vector<CurveRecord> out;
    for (const auto& c : surface.curves()) {
        if (!c.irreducible) continue;
        std::int64_t a = c.cls.base_coeff(0).numerator();
        std::int64_t b = c.cls.base_coeff(1).numerator();
        if (multiplicity_at(surface, c) == 2 * (a + b)) out.push_back(c);
    }
    return out;
}

} // namespace dporders

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dporders/divisor.hpp"

namespace dporders {

inline constexpr const char* kBaseParent = "base";

/// One blowup centre. `parent` is "base" for a point of the base surface or
/// the id of an earlier point when this point is infinitely near to it (it
/// lies on that point's exceptional curve). The incidence map (curve or
/// component id -> multiplicity) is an input carrier for blowup operations;
/// inside a validated model the multiplicities live on the curve records.
struct BlowupPoint {
    std::string id;
    std::string parent = kBaseParent;
    bool on_d = false;
    bool node_of_d = false;
    std::map<std::string, int> incidences;

    bool operator==(const BlowupPoint&) const = default;
};

/// A declared curve: an integral class on the base surface together with its
/// multiplicities at blowup points (absent entry = 0). Strict transforms are
/// always derived, never stored.
struct CurveRecord {
    std::string id;
    DivisorClass cls; // base class, zero exceptional coordinates
    std::map<std::string, int> mults;
    bool irreducible = true;

    bool operator==(const CurveRecord&) const = default;
};

/// An immutable iterated blowup of P2 or F_n: the base tag, the ordered
/// forest of blowup points and the declared curves. Construction validates
/// the forest order, flag consistency, incidence references and the
/// proximity rule; violations are rejected, not repaired.
class SurfaceModel {
public:
    SurfaceModel(BasisTag base, std::vector<BlowupPoint> points = {},
                 std::vector<CurveRecord> curves = {});

    const BasisTag& base() const { return base_; }
    const std::vector<BlowupPoint>& points() const { return points_; }
    const std::vector<CurveRecord>& curves() const { return curves_; }
    std::size_t blowup_count() const { return points_.size(); }

    bool has_point(const std::string& id) const;
    std::size_t point_index(const std::string& id) const; // throws IncidenceError
    const BlowupPoint& point(const std::string& id) const;

    bool has_curve(const std::string& id) const;
    const CurveRecord& curve(const std::string& id) const;

    /// Ids of the first-order infinitely-near points of `id`, in creation
    /// order.
    std::vector<std::string> children_of(const std::string& id) const;

    /// Derived view of (curve id, multiplicity) pairs at a point.
    std::vector<std::pair<std::string, int>> incidences_at(const std::string& point_id) const;

    /// True if this surface is obtained from `ancestor` by further blowups:
    /// same base and the ancestor's point list is a prefix of ours.
    bool extends(const SurfaceModel& ancestor) const;

    /// Value-semantics extension: returns a new surface with the point
    /// appended; the point's incidence entries are folded into the matching
    /// curve records. Unknown curve ids in the incidence map are an error
    /// unless listed in `external_ids` (ramification components are resolved
    /// by the order layer).
    SurfaceModel with_point(BlowupPoint p,
                            const std::set<std::string>& external_ids = {}) const;
    SurfaceModel with_curve(CurveRecord c) const;
    /// Inverse of with_point for the last-created point.
    SurfaceModel without_last_point() const;

    bool operator==(const SurfaceModel&) const = default;

private:
    void validate() const;

    BasisTag base_;
    std::vector<BlowupPoint> points_; // creation order; incidences kept empty
    std::vector<CurveRecord> curves_;
};

/// K of the blown-up surface: -3H or -2C0-(n+2)F plus every exceptional with
/// coefficient exactly +1 (total-transform basis).
DivisorClass canonical_class(const SurfaceModel& surface);

/// Zero-pads `c` to the target surface. Throws LineageError unless the
/// target has the same base and at least as many points.
DivisorClass total_transform(const DivisorClass& c, const SurfaceModel& target);

/// f*C - sum m_i E_i for a declared curve. Checks that every multiplicity
/// entry names a point of the target and that the proximity rule holds.
DivisorClass strict_transform(const CurveRecord& curve, const SurfaceModel& target);

/// Drops the coordinates of forgotten exceptionals; left inverse of
/// total_transform. Throws LineageError if the target has more points.
DivisorClass pushforward(const DivisorClass& c, const SurfaceModel& target);
/// Pushforward all the way to the bare base surface.
DivisorClass pushforward_to_base(const DivisorClass& c);

/// Class of the strict transform of the exceptional curve of `point_id`:
/// E_p minus the exceptionals of its first-order infinitely-near points.
DivisorClass exceptional_class(const SurfaceModel& surface, const std::string& point_id);

/// Sum of declared multiplicities of `curve` over the points in sigma.
int multiplicity_at(const CurveRecord& curve, const std::set<std::string>& sigma);
/// Same over all points of the surface.
int multiplicity_at(const SurfaceModel& surface, const CurveRecord& curve);

enum class PositionFlavor {
    GeneralP2,
    AlmostGeneralP2,
    GeneralP1P1,
    AlmostGeneralP1P1,
    AlmostGeneralF1,
    AlmostGeneralF2,
};

std::string to_string(PositionFlavor flavor);

/// Declared-witness position test. Every declared irreducible curve must
/// respect the flavor's multiplicity bound over all points, and for the
/// almost-general flavors no blowup point may sit on a (-2)-exceptional
/// curve (equivalently: no point of the forest has two or more first-order
/// infinitely-near points). Curves the flavor assigns no bound (e.g. cubics
/// on P2) are unconstrained.
bool position_predicate(const SurfaceModel& surface, PositionFlavor flavor);

/// Irreducible declared curves of class a*C0+b*F on P1 x P1 whose total
/// multiplicity over the blowup points is exactly 2(a+b).
std::vector<CurveRecord> sigma_almost_general_curves(const SurfaceModel& surface);

} // namespace dporders

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dporders/surface.hpp"

namespace dporders {

/// One component D_i of the ramification divisor, with its ramification
/// degree e_i >= 2. Base components carry a declared curve; exceptional
/// components are created by node blowups and derive their geometry from the
/// point forest (their multiplicity at a point q is 1 exactly when q is a
/// first-order infinitely-near point of `exc_point`).
struct RamificationComponent {
    std::string id;
    CurveRecord curve; // meaningful for base components only
    int e = 2;
    std::vector<std::string> annotations; // opaque labels, never interpreted
    bool exceptional = false;
    std::string exc_point; // set when exceptional

    bool operator==(const RamificationComponent&) const = default;
};

/// A blown-up node of D: the centre, the two incident components (equal ids
/// for a self-node) and the branch degrees (small, large) with small | large.
struct NodeRecord {
    std::string point;
    std::string comp_a;
    std::string comp_b;
    int e_small = 2;
    int e_large = 2;

    bool operator==(const NodeRecord&) const = default;
};

/// How a blowup centre sits relative to D.
enum class CentreKind { OffD, SmoothOnD, Node };

/// An order on a blown-up surface, encoded by its ramification data
/// Delta = sum (1 - 1/e_i) D_i. Construction replays the point forest in
/// creation order, validating every point against the component incidences
/// (off D / smooth point of one component / node) and appending the derived
/// exceptional components for node centres. All values are immutable.
class OrderData {
public:
    OrderData(SurfaceModel surface, std::vector<RamificationComponent> components);

    const SurfaceModel& surface() const { return surface_; }
    /// Base components followed by derived exceptional components in point
    /// creation order.
    const std::vector<RamificationComponent>& components() const { return components_; }
    std::vector<RamificationComponent> base_components() const;
    const std::vector<NodeRecord>& nodes() const { return nodes_; }

    bool has_component(const std::string& id) const;
    const RamificationComponent& component(const std::string& id) const;

    /// Multiplicity of a component at a point (declared for base components,
    /// derived from the forest for exceptional ones).
    int component_multiplicity(const RamificationComponent& comp,
                               const std::string& point_id) const;
    /// Strict transform class of a component on the current surface.
    DivisorClass component_class(const RamificationComponent& comp) const;

    CentreKind centre_kind(const std::string& point_id) const;

    /// The same surface and declared curves with the ramification erased:
    /// component curves become plain declared curves, point flags reset.
    OrderData with_trivial_ramification() const;

    bool operator==(const OrderData&) const = default;

private:
    void replay();

    SurfaceModel surface_;
    std::vector<RamificationComponent> components_;
    std::vector<NodeRecord> nodes_;
};

/// Delta = sum (1 - 1/e_i) class(D_i) on the current surface.
DivisorClass discriminant(const OrderData& o);

/// K_X = K_Z + Delta.
DivisorClass order_canonical(const OrderData& o);

Rat k_squared(const OrderData& o);

/// Validated description of a prospective blowup centre, resolved against an
/// order: which components pass through it and how.
struct CentreInfo {
    CentreKind kind = CentreKind::OffD;
    std::vector<std::string> component_ids; // incident components
    int e_small = 0;
    int e_large = 0; // node branch degrees; e_small == e_large off nodes
};

/// Resolves and validates a prospective centre. Throws
/// InvalidConfigurationError when the declared flags or node shape are
/// inconsistent with the incidence data.
CentreInfo resolve_centre(const OrderData& o, const BlowupPoint& p);

/// Coefficient a of the exceptional in K_X' = f*K_X + a E:
/// 1 off D, 1/e at a smooth point of a degree-e component, 1/(ne) at a node
/// with branch degrees (e, ne).
Rat blowup_coefficient(const OrderData& o, const BlowupPoint& p);

/// The order after blowing up `p`. Components pick up their declared
/// multiplicity at p; a node centre appends the exceptional curve as a new
/// ramification component with the smaller branch degree.
OrderData blowup_order(const OrderData& o, const BlowupPoint& p);

/// K^2 drop: k_squared(o) - a^2, computed directly.
Rat k_squared_after_blowup(const OrderData& o, const BlowupPoint& p);

struct MDecomposition {
    DivisorClass m; // effective part: D ~ -K_Z + M
    int e = 2;      // the common ramification degree
};

/// D + K_Z when all degrees agree and every coefficient of the result is
/// >= 0; std::nullopt when the declared decomposition is not effective.
/// Throws NotApplicableError when the degrees differ.
std::optional<MDecomposition> m_decomposition(const OrderData& o);

/// Exact check of (a_p - 1)(2 b_p - n a_p - 2) >= 2 on F_n, where
/// a_p C0 + b_p F is the base class of the union of components whose degree
/// is divisible by the largest power of `p` dividing any degree. Throws
/// NotApplicableError when p divides no degree, PredicateError off F_n.
bool genus_constraint(const OrderData& o, int p);

/// Shallow terminality screen: the numeric constraints only. Returns
/// human-readable violation notes; empty means no violation visible to the
/// engine. Checks: node branch degrees divide (validated structurally
/// already), total section degree a = 3 on a ruled base forces all e = 2,
/// and on bare P2 the degree/e table (d in [3,5], equal degrees, d=4 ->
/// e in {2,3}, d=5 -> e = 2).
std::vector<std::string> terminal_violations(const OrderData& o);

} // namespace dporders

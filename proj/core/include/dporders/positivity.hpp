#pragma once

#include <string>
#include <vector>

#include "dporders/order.hpp"

namespace dporders {

enum class GeneratorKind { MinusOne, MinusTwo, ZeroFibre, PlaneLine };

std::string to_string(GeneratorKind kind);

/// A generator of the effective cone with its witness: the id of the
/// declared curve or blowup point that realizes the class ("base" for the
/// intrinsic generators of an unblown surface).
struct ConeGenerator {
    DivisorClass cls;
    GeneratorKind kind = GeneratorKind::MinusOne;
    std::string witness;

    bool operator==(const ConeGenerator&) const = default;
};

/// Why a numeric candidate was kept or dropped.
struct ConeDiagnostic {
    DivisorClass cls;
    bool kept = false;
    std::string reason;
};

struct ConeResult {
    std::vector<ConeGenerator> generators; // sorted by lex class order
    std::vector<ConeDiagnostic> diagnostics;
};

/// Enumerates effective-cone generators: the intrinsic base generators when
/// there are no blowups, strict exceptionals, and witnessed negative classes
/// of bounded base degree (d <= 3 on P2, a+b <= 4 on F_n). Purely numeric
/// candidates without a declared witness are reported in the diagnostics
/// and dropped. Throws BudgetError past 8 blowups on P2 / 7 on F_n.
ConeResult effective_cone(const OrderData& o);
std::vector<ConeGenerator> effective_cone_generators(const OrderData& o);

/// K_X^2 > 0 and K_X . g < 0 for every generator.
bool is_del_pezzo(const OrderData& o);
/// K_X^2 > 0 and K_X . g <= 0 for every generator.
bool is_almost_del_pezzo(const OrderData& o);
/// No generator with g^2 < 0 and K_X . g < 0.
bool is_minimal(const OrderData& o);

/// Generators with K_X . g = 0. Requires is_almost_del_pezzo (throws
/// PredicateError otherwise). When the order has an M-decomposition with
/// M = 0 the result is cross-checked against the minus-two generators.
std::vector<ConeGenerator> k_zero_curves(const OrderData& o);

/// Exact multiplicity criterion for a declared base curve C against the
/// bound 2 - 2 p_a(C) - (e-1) (M . strict(C)) + C^2, where p_a is the
/// arithmetic genus of the base class and M the effective part of the
/// current surface's decomposition. With `strict` the comparison is <,
/// otherwise <=. Requires an M-decomposition (throws NotApplicableError).
bool mult_criterion(const OrderData& o, const CurveRecord& curve, bool strict);

/// Contracts the strict exceptional of the last-created point. The generator
/// must be minus-one and equal to that exceptional class; anything else
/// throws ContractionError. Exact inverse of blowup_order.
OrderData contract(const OrderData& o, const ConeGenerator& g);

struct ContractionStep {
    ConeGenerator contracted;
    Rat coefficient; // blowup coefficient a of the removed centre
    Rat k_squared_after;
};

struct MmpResult {
    OrderData final;
    std::vector<ContractionStep> steps;
    bool complete = true;       // false when a K-negative curve was stuck
    std::string diagnostic;     // set when complete == false
};

/// Repeatedly contracts a generator with g^2 < 0 and K_X . g < 0, choosing
/// the lexicographically smallest contractible class, until the order is
/// minimal. Reports a partial result when a K-negative negative curve exists
/// that the model cannot contract.
MmpResult run_mmp(const OrderData& o);

} // namespace dporders

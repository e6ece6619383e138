#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dporders/positivity.hpp"

namespace dporders {

inline constexpr int kDefaultEMax = 12;
inline constexpr int kDefaultBMax = 8;

/// Summary of the order a classification record talks about.
struct WitnessSummary {
    BasisTag base;
    std::vector<Rat> d_class;  // base class of D (1 or 2 coordinates)
    std::vector<int> degrees;  // ramification degrees, component order
    int e = 0;                 // common degree when uniform, else 0
    std::size_t blowups = 0;
    Rat k2 = Rat(0);
    bool del_pezzo = false;
    bool almost_del_pezzo = false;
    bool minimal = false;
    std::string note; // splitting or centre description

    bool operator==(const WitnessSummary&) const = default;
};

/// One classification result: a rule-family tag (stable strings, part of the
/// CLI contract), a 1-based clause index within the family, the witness
/// summary and the K-zero curves found.
struct ClassificationRecord {
    std::string theorem;
    int clause = 1;
    WitnessSummary witness;
    std::vector<ConeGenerator> k_zero;

    bool operator==(const ClassificationRecord&) const = default;
};

/// Rule-family tags emitted by the engine.
namespace tags {
inline constexpr const char* t1_p2_deg3 = "T1-P2-deg3";
inline constexpr const char* t1_p2_deg4 = "T1-P2-deg4";
inline constexpr const char* t1_p2_deg5 = "T1-P2-deg5";
inline constexpr const char* t1_p1p1 = "T1-P1P1";
inline constexpr const char* minimal_tadpo_f1 = "minimal-TAdPO-F1";
inline constexpr const char* minimal_tadpo_f2 = "minimal-TAdPO-F2";
inline constexpr const char* t3_p2_deg3 = "T3-P2-deg3";
inline constexpr const char* t3_p2_deg4 = "T3-P2-deg4";
inline constexpr const char* t3_p1p1 = "T3-P1P1";
inline constexpr const char* t3_f1 = "T3-F1";
inline constexpr const char* t3_f2 = "T3-F2";
inline constexpr const char* t3_f2_36 = "T3-F2-36";
inline constexpr const char* unclassified = "unclassified";
inline constexpr const char* not_almost = "not-almost-del-pezzo";
} // namespace tags

/// Minimal terminal del Pezzo orders over P2: one record per (d, e) with
/// 3 <= d <= 5, 2 <= e <= e_max that passes is_del_pezzo on a catalog
/// witness. The output is exactly (3, any e), (4, e in {2,3}), (5, 2).
std::vector<ClassificationRecord> enumerate_minimal_tdpo_p2(int e_max = kDefaultEMax);

/// Minimal terminal (almost) del Pezzo orders over F_n, n in {0,1,2}:
/// brute force over total class a <= 3, b <= b_max, degrees e <= e_max and
/// component splittings, filtered by minimality, the (almost) del Pezzo
/// predicate, the genus constraint at every relevant prime and the base
/// divisor equation on F1/F2. Records are keyed by (class, e).
std::vector<ClassificationRecord> enumerate_minimal_tadpo_ruled(int n,
                                                                int e_max = kDefaultEMax,
                                                                int b_max = kDefaultBMax);

/// Classifies a blown-up order against the K-zero clause catalog for its
/// minimal model. Emits one record per matched clause; inputs that pass the
/// predicates but match no clause get the "unclassified" tag, inputs that
/// are not almost del Pezzo a single "not-almost-del-pezzo" record.
std::vector<ClassificationRecord> classify_blowup(const OrderData& o);

/// Enumeration budget for blowups of a minimal order.
struct BlowupBudget {
    int max_in_d = 0;
    int max_out_d = 0;
    bool out_requires_e2 = false;  // out-of-D point only when e = 2
    bool no_shared_fibre = false;  // F2: further centres avoid p's fibre
    std::string note;

    bool operator==(const BlowupBudget&) const = default;
};

/// Budget for the minimal model underlying `o` (by base and base class of D).
BlowupBudget blowup_budget(const OrderData& o);

} // namespace dporders

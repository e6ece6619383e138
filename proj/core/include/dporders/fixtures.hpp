#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dporders/order.hpp"

namespace dporders {

/// Expected predicate values for a catalog entry at a given degree.
struct FixtureExpectation {
    bool del_pezzo = false;
    bool almost_del_pezzo = false;
    bool minimal = true;
    Rat k2 = Rat(0);
};

/// A configuration family from the catalog. `builder(e)` instantiates the
/// ramification data at degree e; `valid_e` lists the degrees the family is
/// catalogued at (empty = any e >= 2). Concrete ids are "<family>-e<e>".
struct FixtureFamily {
    std::string family;    // e.g. "p2-cubic"
    std::string group;     // "cubic", "quartic", "f0-22", "f0-large", "f1", "f2", "p2-extra"
    std::vector<int> valid_e;
    std::vector<std::string> annotations;
    std::function<OrderData(int e)> builder;
    std::function<FixtureExpectation(int e)> expect;
};

/// Numeric cross-reference for an intrinsic contraction between catalog
/// entries (source fixture's K-zero section contracted away).
struct FixtureCrossRef {
    std::string source; // concrete id
    std::string target; // concrete id
    std::string note;
};

class FixtureCatalog {
public:
    static const std::vector<FixtureFamily>& families();
    static const std::vector<FixtureCrossRef>& cross_refs();

    /// Concrete default instantiations, e.g. "p2-cubic-e2".
    static std::vector<std::string> ids();

    /// Instantiates a concrete id of the form "<family>-e<e>". Throws
    /// ParseError for unknown families or degrees outside valid_e.
    static OrderData get(const std::string& id);
    static FixtureExpectation expectation(const std::string& id);
    static const FixtureFamily& family_of(const std::string& id);

    static std::vector<const FixtureFamily*> group(const std::string& group);
};

} // namespace dporders

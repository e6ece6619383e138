#pragma once

#include <string>
#include <vector>

#include "dporders/classify.hpp"
#include "dporders/fixtures.hpp"

namespace dporders {

enum class ReportFormat { Json, Md };

/// Full validation report: predicates, K^2, M-decomposition, position
/// flags, generators with diagnostics, K-zero curves and classification
/// records. Content is path-free and deterministic, so the markdown form is
/// golden-testable byte for byte.
std::string render_check(const OrderData& o, ReportFormat format);

std::string render_records(const std::vector<ClassificationRecord>& records,
                           ReportFormat format);

std::string render_kzero(const OrderData& o, ReportFormat format);

std::string render_mmp(const MmpResult& result, ReportFormat format);

std::string render_fixture_list(ReportFormat format);

/// Tags asserted by --expect: the classification tags for the order plus
/// shorthand predicate tags ("del-pezzo", "almost-del-pezzo", "minimal").
std::vector<std::string> expectation_tags(const OrderData& o);

} // namespace dporders

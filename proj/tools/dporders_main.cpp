#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dporders/classify.hpp"
#include "dporders/errors.hpp"
#include "dporders/fixtures.hpp"
#include "dporders/json_io.hpp"
#include "dporders/report.hpp"

namespace {

using dporders::ReportFormat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dporders::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ReportFormat parse_format(const std::string& format) {
    if (format == "json") return ReportFormat::Json;
    if (format == "md") return ReportFormat::Md;
    throw dporders::ParseError("unknown format '" + format + "' (expected json or md)");
}

int env_e_max() {
    const char* raw = std::getenv("DPORDERS_E_MAX");
    if (raw == nullptr) return dporders::kDefaultEMax;
    try {
        const int e = std::stoi(raw);
        if (e < 2) throw dporders::ParseError("DPORDERS_E_MAX must be at least 2");
        return e;
    } catch (const dporders::Error&) {
        throw;
    } catch (const std::exception&) {
        throw dporders::ParseError("DPORDERS_E_MAX is not an integer");
    }
}

// --at takes inline JSON or @file.
std::string point_spec_text(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') return read_file(spec.substr(1));
    return spec;
}

void emit_error(const std::string& kind, const std::string& what) {
    nlohmann::json err;
    err["error"] = kind;
    err["message"] = what;
    std::cerr << err.dump(2) << "\n";
}

int check_expectation(const dporders::OrderData& order, const std::string& expect) {
    const auto tags = dporders::expectation_tags(order);
    if (std::find(tags.begin(), tags.end(), expect) != tags.end()) return 0;
    nlohmann::json err;
    err["error"] = "expectation-mismatch";
    err["expected"] = expect;
    err["actual"] = tags;
    std::cerr << err.dump(2) << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection-theory engine for orders over rational surfaces"};
    app.require_subcommand(1);

    std::string format = "md";
    app.add_option("--format", format, "Output format: json or md")->capture_default_str();

    std::string check_file, expect_tag;
    CLI::App* check = app.add_subcommand("check", "Validate an order document and report");
    check->fallthrough();
    check->add_option("file", check_file, "Order document")->required();
    check->add_option("--expect", expect_tag, "Assert a classification tag (exit 2 on mismatch)");

    std::string blowup_file, at_spec;
    CLI::App* blowup = app.add_subcommand("blowup", "Blow up an order at a centre");
    blowup->fallthrough();
    blowup->add_option("file", blowup_file, "Order document")->required();
    blowup->add_option("--at", at_spec, "Centre spec (inline JSON or @file)")->required();

    std::string mmp_file;
    CLI::App* mmp = app.add_subcommand("mmp", "Contract K-negative curves to a minimal model");
    mmp->fallthrough();
    mmp->add_option("file", mmp_file, "Order document")->required();

    std::string kzero_file;
    CLI::App* kzero = app.add_subcommand("kzero", "List K-zero generators");
    kzero->fallthrough();
    kzero->add_option("file", kzero_file, "Order document")->required();

    std::string base = "p2";
    CLI::App* enumerate = app.add_subcommand("enumerate", "Reproduce a minimal-order catalog");
    enumerate->fallthrough();
    enumerate->add_option("--base", base, "Base surface: p2, f0, f1 or f2")->required();

    CLI::App* fixtures = app.add_subcommand("fixtures", "Fixture catalog");
    fixtures->fallthrough();
    CLI::App* fixtures_list = fixtures->add_subcommand("list", "List catalog entries");
    fixtures_list->fallthrough();
    std::string dump_id;
    CLI::App* fixtures_dump = fixtures->add_subcommand("dump", "Emit a fixture as JSON");
    fixtures_dump->fallthrough();
    fixtures_dump->add_option("id", dump_id, "Concrete id, e.g. p2-cubic-e2")->required();
    fixtures->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        const ReportFormat report_format = parse_format(format);
        if (*check) {
            const dporders::OrderData order = dporders::parse_order(read_file(check_file));
            std::cout << dporders::render_check(order, report_format);
            if (!expect_tag.empty()) return check_expectation(order, expect_tag);
            return 0;
        }
        if (*blowup) {
            const dporders::OrderData order = dporders::parse_order(read_file(blowup_file));
            const dporders::BlowupPoint centre =
                dporders::parse_blowup_point(point_spec_text(at_spec));
            std::cout << dporders::serialize_order(dporders::blowup_order(order, centre));
            return 0;
        }
        if (*mmp) {
            const dporders::OrderData order = dporders::parse_order(read_file(mmp_file));
            std::cout << dporders::render_mmp(dporders::run_mmp(order), report_format);
            return 0;
        }
        if (*kzero) {
            const dporders::OrderData order = dporders::parse_order(read_file(kzero_file));
            std::cout << dporders::render_kzero(order, report_format);
            return 0;
        }
        if (*enumerate) {
            const int e_max = env_e_max();
            std::vector<dporders::ClassificationRecord> records;
            if (base == "p2") {
                records = dporders::enumerate_minimal_tdpo_p2(e_max);
            } else if (base == "f0" || base == "f1" || base == "f2") {
                records = dporders::enumerate_minimal_tadpo_ruled(base[1] - '0', e_max);
            } else {
                throw dporders::ParseError("unknown base '" + base +
                                           "' (expected p2, f0, f1 or f2)");
            }
            std::cout << dporders::render_records(records, report_format);
            return 0;
        }
        if (*fixtures_list) {
            std::cout << dporders::render_fixture_list(report_format);
            return 0;
        }
        if (*fixtures_dump) {
            std::cout << dporders::serialize_order(dporders::FixtureCatalog::get(dump_id));
            return 0;
        }
    } catch (const dporders::ParseError& e) {
        emit_error("parse-error", e.what());
        return 1;
    } catch (const dporders::Error& e) {
        emit_error("engine-error", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal-error", e.what());
        return 1;
    }
    return 0;
}

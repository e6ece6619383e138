#include "dporders/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dporders/errors.hpp"
#include "dporders/json_io.hpp"

namespace dporders {

namespace {

using json = nlohmann::json;

std::string base_name(BasisTag base) {
    return to_string(base);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string int_list(const std::vector<int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

std::string class_list(const std::vector<Rat>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(xs[i].numerator() / xs[i].denominator());
    }
    return out + ")";
}

std::vector<PositionFlavor> flavors_for(BasisTag base) {
    if (base.is_p2()) return {PositionFlavor::GeneralP2, PositionFlavor::AlmostGeneralP2};
    switch (base.n) {
    case 0: return {PositionFlavor::GeneralP1P1, PositionFlavor::AlmostGeneralP1P1};
    case 1: return {PositionFlavor::AlmostGeneralF1};
    default: return {PositionFlavor::AlmostGeneralF2};
    }
}

struct MStatus {
    std::string status; // "ok", "none", "mixed-degrees"
    std::optional<MDecomposition> m;
};

MStatus m_status(const OrderData& o) {
    try {
        auto m = m_decomposition(o);
        if (!m) return {"none", std::nullopt};
        return {"ok", std::move(m)};
    } catch (const NotApplicableError&) {
        return {"mixed-degrees", std::nullopt};
    }
}

json generator_json(const ConeGenerator& g) {
    return {{"class", g.cls.to_string()}, {"kind", to_string(g.kind)}, {"witness", g.witness}};
}

json witness_json(const WitnessSummary& w) {
    json jw;
    jw["base"] = base_name(w.base);
    json d = json::array();
    for (const Rat& c : w.d_class) d.push_back(c.numerator() / c.denominator());
    jw["d_class"] = d;
    jw["degrees"] = w.degrees;
    jw["e"] = w.e;
    jw["blowups"] = w.blowups;
    jw["k2"] = rat_to_string(w.k2);
    jw["del_pezzo"] = w.del_pezzo;
    jw["almost_del_pezzo"] = w.almost_del_pezzo;
    jw["minimal"] = w.minimal;
    jw["note"] = w.note;
    return jw;
}

json record_json(const ClassificationRecord& rec) {
    json jr;
    jr["tag"] = rec.theorem;
    jr["clause"] = rec.clause;
    jr["witness"] = witness_json(rec.witness);
    json kz = json::array();
    for (const auto& g : rec.k_zero) kz.push_back(generator_json(g));
    jr["k_zero"] = kz;
    return jr;
}

void record_md(std::ostringstream& md, const ClassificationRecord& rec) {
    md << "- " << rec.theorem << " clause " << rec.clause << "\n";
    const WitnessSummary& w = rec.witness;
    md << "  - base " << base_name(w.base) << ", D " << class_list(w.d_class) << ", degrees "
       << int_list(w.degrees) << ", blowups " << w.blowups << ", K^2 " << rat_to_string(w.k2)
       << "\n";
    md << "  - del-pezzo " << yesno(w.del_pezzo) << ", almost-del-pezzo "
       << yesno(w.almost_del_pezzo) << ", minimal " << yesno(w.minimal) << "\n";
    if (!w.note.empty()) md << "  - note: " << w.note << "\n";
    for (const auto& g : rec.k_zero)
        md << "  - K-zero " << g.cls.to_string() << ": " << to_string(g.kind) << ", witness "
           << g.witness << "\n";
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace

std::string render_check(const OrderData& o, ReportFormat format) {
    const SurfaceModel& s = o.surface();
    const Rat k2 = k_squared(o);
    const bool dp = is_del_pezzo(o);
    const bool adp = is_almost_del_pezzo(o);
    const bool minimal = is_minimal(o);
    const MStatus m = m_status(o);
    const ConeResult cone = effective_cone(o);
    std::optional<std::vector<ConeGenerator>> kzero;
    if (adp) kzero = k_zero_curves(o);
    const std::vector<ClassificationRecord> records = classify_blowup(o);

    if (format == ReportFormat::Json) {
        json doc;
        doc["base"] = base_name(s.base());
        doc["blowups"] = s.blowup_count();
        doc["k2"] = rat_to_string(k2);
        json comps = json::array();
        for (const auto& c : o.components()) {
            json jc;
            jc["id"] = c.id;
            jc["class"] = o.component_class(c).to_string();
            jc["e"] = c.e;
            jc["exceptional"] = c.exceptional;
            if (!c.annotations.empty()) jc["annotations"] = c.annotations;
            comps.push_back(std::move(jc));
        }
        doc["components"] = comps;
        json curves = json::array();
        for (const auto& c : s.curves()) {
            json jc;
            jc["id"] = c.id;
            jc["class"] = strict_transform(c, s).to_string();
            jc["irreducible"] = c.irreducible;
            curves.push_back(std::move(jc));
        }
        doc["curves"] = curves;
        doc["predicates"] = {{"del_pezzo", dp}, {"almost_del_pezzo", adp}, {"minimal", minimal}};
        doc["m_status"] = m.status;
        doc["m"] = m.m ? json{{"class", m.m->m.to_string()}, {"e", m.m->e}} : json(nullptr);
        json pos = json::object();
        for (PositionFlavor flavor : flavors_for(s.base()))
            pos[to_string(flavor)] = position_predicate(s, flavor);
        doc["position"] = pos;
        json gens = json::array();
        for (const auto& g : cone.generators) gens.push_back(generator_json(g));
        json diags = json::array();
        for (const auto& d : cone.diagnostics)
            diags.push_back(
                {{"class", d.cls.to_string()}, {"kept", d.kept}, {"reason", d.reason}});
        doc["cone"] = {{"generators", gens}, {"diagnostics", diags}};
        if (kzero) {
            json kz = json::array();
            for (const auto& g : *kzero) kz.push_back(generator_json(g));
            doc["k_zero"] = kz;
        } else {
            doc["k_zero"] = nullptr;
        }
        json recs = json::array();
        for (const auto& rec : records) recs.push_back(record_json(rec));
        doc["records"] = recs;
        return dump(doc);
    }

    std::ostringstream md;
    md << "# Order check\n\n";
    md << "- base: " << base_name(s.base()) << "\n";
    md << "- blowups: " << s.blowup_count() << "\n";
    md << "- K^2: " << rat_to_string(k2) << "\n\n";
    md << "## Components\n\n";
    for (const auto& c : o.components()) {
        md << "- " << c.id << ": class " << o.component_class(c).to_string() << ", e = "
           << c.e;
        if (c.exceptional) md << ", exceptional";
        for (const auto& a : c.annotations) md << ", " << a;
        md << "\n";
    }
    if (o.components().empty()) md << "- none\n";
    md << "\n## Curves\n\n";
    for (const auto& c : s.curves()) {
        md << "- " << c.id << ": class " << strict_transform(c, s).to_string()
           << (c.irreducible ? ", irreducible" : ", reducible") << "\n";
    }
    if (s.curves().empty()) md << "- none\n";
    md << "\n## Predicates\n\n";
    md << "- del-pezzo: " << yesno(dp) << "\n";
    md << "- almost-del-pezzo: " << yesno(adp) << "\n";
    md << "- minimal: " << yesno(minimal) << "\n";
    if (m.m)
        md << "- M: " << m.m->m.to_string() << " with e = " << m.m->e << "\n";
    else
        md << "- M: " << m.status << "\n";
    for (PositionFlavor flavor : flavors_for(s.base()))
        md << "- position " << to_string(flavor) << ": " << yesno(position_predicate(s, flavor))
           << "\n";
    md << "\n## Effective cone\n\n";
    for (const auto& g : cone.generators)
        md << "- " << g.cls.to_string() << ": " << to_string(g.kind) << ", witness " << g.witness
           << "\n";
    if (cone.generators.empty()) md << "- none\n";
    if (!cone.diagnostics.empty()) {
        md << "\nDiagnostics:\n\n";
        for (const auto& d : cone.diagnostics)
            md << "- " << d.cls.to_string() << (d.kept ? " kept: " : " dropped: ") << d.reason
               << "\n";
    }
    md << "\n## K-zero curves\n\n";
    if (!kzero) {
        md << "- not applicable (not almost del Pezzo)\n";
    } else if (kzero->empty()) {
        md << "- none\n";
    } else {
        for (const auto& g : *kzero)
            md << "- " << g.cls.to_string() << ": " << to_string(g.kind) << ", witness "
               << g.witness << "\n";
    }
    md << "\n## Classification\n\n";
    for (const auto& rec : records) record_md(md, rec);
    return md.str();
}

std::string render_records(const std::vector<ClassificationRecord>& records,
                           ReportFormat format) {
    if (format == ReportFormat::Json) {
        json recs = json::array();
        for (const auto& rec : records) recs.push_back(record_json(rec));
        return dump(json{{"records", recs}});
    }
    std::ostringstream md;
    md << "# Classification records\n\n";
    if (records.empty()) md << "- none\n";
    for (const auto& rec : records) record_md(md, rec);
    return md.str();
}

std::string render_kzero(const OrderData& o, ReportFormat format) {
    const std::vector<ConeGenerator> kzero = k_zero_curves(o);
    if (format == ReportFormat::Json) {
        json kz = json::array();
        for (const auto& g : kzero) kz.push_back(generator_json(g));
        return dump(json{{"k_zero", kz}});
    }
    std::ostringstream md;
    md << "# K-zero curves\n\n";
    if (kzero.empty()) md << "- none\n";
    for (const auto& g : kzero)
        md << "- " << g.cls.to_string() << ": " << to_string(g.kind) << ", witness " << g.witness
           << "\n";
    return md.str();
}

std::string render_mmp(const MmpResult& result, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json steps = json::array();
        for (const auto& step : result.steps)
            steps.push_back({{"contracted", step.contracted.cls.to_string()},
                             {"witness", step.contracted.witness},
                             {"coefficient", rat_to_string(step.coefficient)},
                             {"k2_after", rat_to_string(step.k_squared_after)}});
        json doc;
        doc["steps"] = steps;
        doc["complete"] = result.complete;
        doc["diagnostic"] = result.diagnostic;
        doc["final"] = {{"base", base_name(result.final.surface().base())},
                        {"blowups", result.final.surface().blowup_count()},
                        {"k2", rat_to_string(k_squared(result.final))},
                        {"document", json::parse(serialize_order(result.final))}};
        return dump(doc);
    }
    std::ostringstream md;
    md << "# MMP log\n\n";
    if (result.steps.empty()) md << "- already minimal\n";
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const auto& step = result.steps[i];
        md << "- step " << (i + 1) << ": contract " << step.contracted.cls.to_string()
           << " (witness " << step.contracted.witness << ", coefficient "
           << rat_to_string(step.coefficient) << "), K^2 -> "
           << rat_to_string(step.k_squared_after) << "\n";
    }
    md << "\n- final: base " << base_name(result.final.surface().base()) << ", blowups "
       << result.final.surface().blowup_count() << ", K^2 "
       << rat_to_string(k_squared(result.final)) << "\n";
    md << "- complete: " << yesno(result.complete) << "\n";
    if (!result.diagnostic.empty()) md << "- diagnostic: " << result.diagnostic << "\n";
    return md.str();
}

std::string render_fixture_list(ReportFormat format) {
    const auto& families = FixtureCatalog::families();
    if (format == ReportFormat::Json) {
        json fams = json::array();
        for (const auto& fam : families) {
            json jf;
            jf["family"] = fam.family;
            jf["group"] = fam.group;
            jf["valid_e"] = fam.valid_e; // empty = any e >= 2
            jf["annotations"] = fam.annotations;
            json ids = json::array();
            const std::vector<int> degrees =
                fam.valid_e.empty() ? std::vector<int>{2, 3} : fam.valid_e;
            for (int e : degrees) ids.push_back(fam.family + "-e" + std::to_string(e));
            jf["ids"] = ids;
            fams.push_back(std::move(jf));
        }
        json refs = json::array();
        for (const auto& ref : FixtureCatalog::cross_refs())
            refs.push_back({{"source", ref.source}, {"target", ref.target}, {"note", ref.note}});
        return dump(json{{"families", fams}, {"cross_refs", refs}});
    }
    std::ostringstream md;
    md << "# Fixture catalog\n";
    std::string group;
    for (const auto& fam : families) {
        if (fam.group != group) {
            group = fam.group;
            md << "\n## " << group << "\n\n";
        }
        md << "- " << fam.family << " (e: ";
        if (fam.valid_e.empty()) {
            md << "any >= 2";
        } else {
            for (std::size_t i = 0; i < fam.valid_e.size(); ++i)
                md << (i > 0 ? ", " : "") << fam.valid_e[i];
        }
        md << ")";
        for (const auto& a : fam.annotations) md << ": " << a;
        md << "\n";
    }
    md << "\n## Cross references\n\n";
    for (const auto& ref : FixtureCatalog::cross_refs())
        md << "- " << ref.source << " -> " << ref.target << ": " << ref.note << "\n";
    return md.str();
}

std::vector<std::string> expectation_tags(const OrderData& o) {
    std::vector<std::string> tags;
    for (const auto& rec : classify_blowup(o)) {
        tags.push_back(rec.theorem);
        tags.push_back(rec.theorem + ":" + std::to_string(rec.clause));
    }
    if (is_del_pezzo(o)) tags.push_back("del-pezzo");
    if (is_almost_del_pezzo(o)) tags.push_back("almost-del-pezzo");
    if (is_minimal(o)) tags.push_back("minimal");
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    return tags;
}

} // namespace dporders

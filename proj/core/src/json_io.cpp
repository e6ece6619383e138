#include "dporders/json_io.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "dporders/errors.hpp"

namespace dporders {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) known = true;
        if (!known) fail(path, "unknown key '" + it.key() + "'");
    }
}

const json& require(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key '" + std::string(key) + "'");
    return *it;
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

std::int64_t get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

bool get_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected a boolean");
    return v.get<bool>();
}

BasisTag parse_base(const json& v, const std::string& path) {
    check_keys(v, path, {"type", "n"});
    const std::string type = get_string(require(v, path, "type"), path + ".type");
    if (type == "P2") {
        if (v.contains("n")) fail(path, "\"P2\" takes no 'n'");
        return BasisTag::p2();
    }
    if (type != "F") fail(path + ".type", "expected \"P2\" or \"F\"");
    const std::int64_t n = get_int(require(v, path, "n"), path + ".n");
    if (n < 0 || n > 2) fail(path + ".n", "n must be 0, 1 or 2");
    return BasisTag::hirzebruch(static_cast<int>(n));
}

DivisorClass parse_class(const json& v, BasisTag base, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of integers");
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i)
        coeffs.emplace_back(get_int(v[i], path + "[" + std::to_string(i) + "]"));
    if (coeffs.size() != base.rank())
        fail(path, "expected " + std::to_string(base.rank()) + " coordinates for this base");
    return DivisorClass(base, std::move(coeffs));
}

std::map<std::string, int> parse_mults(const json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object mapping point ids to multiplicities");
    std::map<std::string, int> mults;
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::int64_t m = get_int(it.value(), path + "." + it.key());
        if (m < 1) fail(path + "." + it.key(), "multiplicity must be at least 1");
        mults[it.key()] = static_cast<int>(m);
    }
    return mults;
}

std::vector<std::string> parse_string_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(get_string(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

json class_to_json(const DivisorClass& cls) {
    json arr = json::array();
    for (const Rat& c : cls.base_coeffs()) arr.push_back(c.numerator() / c.denominator());
    return arr;
}

json mults_to_json(const std::map<std::string, int>& mults) {
    json obj = json::object();
    for (const auto& [pt, m] : mults) obj[pt] = m;
    return obj;
}

// Node points incident to a component, in point creation order.
std::vector<std::string> nodes_of(const OrderData& o, const std::string& comp_id) {
    std::vector<std::string> out;
    for (const auto& rec : o.nodes())
        if (rec.comp_a == comp_id || rec.comp_b == comp_id) out.push_back(rec.point);
    return out;
}

} // namespace

OrderData parse_order(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    check_keys(doc, "$", {"base", "components", "points", "curves"});
    const BasisTag base = parse_base(require(doc, "$", "base"), "$.base");

    std::vector<BlowupPoint> points;
    if (doc.contains("points")) {
        const json& arr = doc["points"];
        if (!arr.is_array()) fail("$.points", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.points[" + std::to_string(i) + "]";
            const json& jp = arr[i];
            check_keys(jp, path, {"id", "parent", "on_D", "node"});
            BlowupPoint p;
            p.id = get_string(require(jp, path, "id"), path + ".id");
            if (jp.contains("parent")) p.parent = get_string(jp["parent"], path + ".parent");
            if (jp.contains("on_D")) p.on_d = get_bool(jp["on_D"], path + ".on_D");
            if (jp.contains("node")) p.node_of_d = get_bool(jp["node"], path + ".node");
            points.push_back(std::move(p));
        }
    }

    std::vector<CurveRecord> curves;
    if (doc.contains("curves")) {
        const json& arr = doc["curves"];
        if (!arr.is_array()) fail("$.curves", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.curves[" + std::to_string(i) + "]";
            const json& jc = arr[i];
            check_keys(jc, path, {"id", "class", "mults", "irreducible"});
            const std::string id = get_string(require(jc, path, "id"), path + ".id");
            DivisorClass cls = parse_class(require(jc, path, "class"), base, path + ".class");
            std::map<std::string, int> mults;
            if (jc.contains("mults")) mults = parse_mults(jc["mults"], path + ".mults");
            bool irreducible = true;
            if (jc.contains("irreducible"))
                irreducible = get_bool(jc["irreducible"], path + ".irreducible");
            curves.push_back({id, std::move(cls), std::move(mults), irreducible});
        }
    }

    std::vector<RamificationComponent> comps;
    std::vector<std::set<std::string>> declared_nodes;
    if (doc.contains("components")) {
        const json& arr = doc["components"];
        if (!arr.is_array()) fail("$.components", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "$.components[" + std::to_string(i) + "]";
            const json& jc = arr[i];
            check_keys(jc, path, {"id", "class", "e", "mults", "nodes_at", "annotations"});
            const std::string id = get_string(require(jc, path, "id"), path + ".id");
            DivisorClass cls = parse_class(require(jc, path, "class"), base, path + ".class");
            const std::int64_t e = get_int(require(jc, path, "e"), path + ".e");
            if (e < 2 || e > 1 << 20) fail(path + ".e", "ramification degree must be at least 2");
            std::map<std::string, int> mults;
            if (jc.contains("mults")) mults = parse_mults(jc["mults"], path + ".mults");
            std::vector<std::string> annotations;
            if (jc.contains("annotations"))
                annotations = parse_string_list(jc["annotations"], path + ".annotations");
            std::set<std::string> at;
            if (jc.contains("nodes_at")) {
                for (const std::string& pt :
                     parse_string_list(jc["nodes_at"], path + ".nodes_at"))
                    if (!at.insert(pt).second)
                        fail(path + ".nodes_at", "duplicate point '" + pt + "'");
            }
            declared_nodes.push_back(std::move(at));
            comps.push_back({id,
                             CurveRecord{id, std::move(cls), std::move(mults), true},
                             static_cast<int>(e),
                             std::move(annotations),
                             false,
                             ""});
        }
    }

    try {
        SurfaceModel surface(base, std::move(points), std::move(curves));
        OrderData o(std::move(surface), comps);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::vector<std::string> derived = nodes_of(o, comps[i].id);
            const std::set<std::string> derived_set(derived.begin(), derived.end());
            if (derived_set != declared_nodes[i])
                fail("$.components[" + std::to_string(i) + "].nodes_at",
                     "does not match the nodes derived from the point forest");
        }
        return o;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid order document: ") + e.what());
    }
}

std::string serialize_order(const OrderData& o) {
    const SurfaceModel& s = o.surface();
    json doc;
    json base;
    if (s.base().is_p2()) {
        base["type"] = "P2";
    } else {
        base["type"] = "F";
        base["n"] = s.base().n;
    }
    doc["base"] = base;

    json comps = json::array();
    for (const auto& c : o.base_components()) {
        json jc;
        jc["id"] = c.id;
        jc["class"] = class_to_json(c.curve.cls);
        jc["e"] = c.e;
        jc["mults"] = mults_to_json(c.curve.mults);
        jc["nodes_at"] = nodes_of(o, c.id);
        if (!c.annotations.empty()) jc["annotations"] = c.annotations;
        comps.push_back(std::move(jc));
    }
    doc["components"] = comps;

    json pts = json::array();
    for (const auto& p : s.points()) {
        json jp;
        jp["id"] = p.id;
        jp["parent"] = p.parent;
        jp["on_D"] = p.on_d;
        jp["node"] = p.node_of_d;
        pts.push_back(std::move(jp));
    }
    doc["points"] = pts;

    json curves = json::array();
    for (const auto& c : s.curves()) {
        json jc;
        jc["id"] = c.id;
        jc["class"] = class_to_json(c.cls);
        jc["mults"] = mults_to_json(c.mults);
        jc["irreducible"] = c.irreducible;
        curves.push_back(std::move(jc));
    }
    doc["curves"] = curves;

    return doc.dump(2) + "\n";
}

BlowupPoint parse_blowup_point(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    check_keys(doc, "$", {"id", "parent", "on_D", "node", "incidences"});
    BlowupPoint p;
    p.id = get_string(require(doc, "$", "id"), "$.id");
    if (doc.contains("parent")) p.parent = get_string(doc["parent"], "$.parent");
    if (doc.contains("on_D")) p.on_d = get_bool(doc["on_D"], "$.on_D");
    if (doc.contains("node")) p.node_of_d = get_bool(doc["node"], "$.node");
    if (doc.contains("incidences")) p.incidences = parse_mults(doc["incidences"], "$.incidences");
    return p;
}

} // namespace dporders

#include "ybme/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ybme {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mat_to_json(const Mat2& M) {
    return ordered_json::array({ordered_json::array({M.x11, M.x12}),
                                ordered_json::array({M.x21, M.x22})});
}

Mat2 mat_from_json(const FieldCtx& F, const ordered_json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument(std::string(what) + " is not a 2x2 array");
    Mat2 M;
    Fq* slot[4] = {&M.x11, &M.x12, &M.x21, &M.x22};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const ordered_json& cell = j[r][c];
            if (!cell.is_number_integer())
                throw std::invalid_argument(std::string(what) +
                                            " has a non-integer entry");
            long long v = cell.get<long long>();
            if (v < 0 || v >= static_cast<long long>(F.q()))
                throw std::invalid_argument(
                    std::string(what) + " entry " + std::to_string(v) +
                    " is out of range for F_" + std::to_string(F.q()));
            *slot[r * 2 + c] = static_cast<Fq>(v);
        }
    return M;
}

Provenance provenance_from_name(const std::string& name) {
    for (Provenance p : {Provenance::closed_form, Provenance::oracle,
                         Provenance::conjectural})
        if (name == provenance_name(p)) return p;
    throw std::invalid_argument("unknown provenance \"" + name + "\"");
}

ComponentKind component_kind_from_name(const std::string& name) {
    for (ComponentKind k : {ComponentKind::isolated, ComponentKind::family_1d,
                            ComponentKind::family_2d, ComponentKind::oracle_bulk})
        if (name == component_kind_name(k)) return k;
    throw std::invalid_argument("unknown component kind \"" + name + "\"");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

ordered_json record_to_json(const CaseRecord& r) {
    ordered_json j;
    j["q"] = r.q;
    j["class"] = r.cls;
    j["params"] = r.params;
    j["claim"] = r.claim;
    if (r.has_predicted)
        j["predicted"] = r.predicted;
    else
        j["predicted"] = nullptr;
    j["observed"] = r.observed;
    j["set_equal"] = r.set_equal;
    j["pass"] = r.pass;
    j["provenance"] = r.provenance;
    j["notes"] = r.notes;
    return j;
}

ordered_json report_to_json(const VerdictReport& rep) {
    ordered_json j;
    j["campaign"] = rep.campaign;
    j["kind"] = campaign_kind_name(rep.kind);
    j["overall_pass"] = rep.overall_pass;
    ordered_json records = ordered_json::array();
    for (const CaseRecord& r : rep.records) records.push_back(record_to_json(r));
    j["records"] = std::move(records);
    return j;
}

void table_block(std::ostream& os, const VerdictReport& rep) {
    os << "== " << rep.campaign << "  [" << campaign_kind_name(rep.kind)
       << "]  " << (rep.overall_pass ? "PASS" : "FAIL") << "\n";
    os << "   " << std::left << std::setw(24) << "claim" << std::right
       << std::setw(4) << "q" << "  " << std::left << std::setw(6) << "class"
       << std::setw(26) << "params" << std::right << std::setw(9) << "predicted"
       << std::setw(9) << "observed" << "  " << std::left << std::setw(6)
       << "set" << std::setw(6) << "check" << "notes\n";
    for (const CaseRecord& r : rep.records) {
        os << "   " << std::left << std::setw(24) << r.claim << std::right
           << std::setw(4) << r.q << "  " << std::left << std::setw(6) << r.cls
           << std::setw(26) << r.params << std::right << std::setw(9)
           << (r.has_predicted ? std::to_string(r.predicted) : std::string("-"))
           << std::setw(9) << r.observed << "  " << std::left << std::setw(6)
           << (r.set_equal ? "equal" : "DIFF") << std::setw(6)
           << (r.pass ? "pass" : "FAIL") << r.notes << "\n";
    }
    os << "\n";
}

}  // namespace

std::string solution_set_json(const SolutionSet& S) {
    ordered_json j;
    j["field"] = S.field;
    j["A"] = mat_to_json(S.A);
    j["cardinality"] = S.cardinality();
    j["provenance"] = provenance_name(S.provenance);
    ordered_json comps = ordered_json::array();
    for (const Component& c : S.components) {
        ordered_json jc;
        jc["label"] = c.label;
        jc["kind"] = component_kind_name(c.kind);
        jc["dimension"] = c.dimension;
        ordered_json members = ordered_json::array();
        for (const Mat2& M : c.members) members.push_back(mat_to_json(M));
        jc["members"] = std::move(members);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    ordered_json pts = ordered_json::array();
    for (const Mat2& M : S.points) pts.push_back(mat_to_json(M));
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

std::string solution_set_plain(const SolutionSet& S) {
    std::ostringstream os;
    os << "field: " << S.field << "\n";
    os << "A: " << format_mat2(S.A) << "\n";
    os << "provenance: " << provenance_name(S.provenance) << "\n";
    os << "cardinality: " << S.cardinality() << "\n";
    if (S.components.empty()) {
        os << "components: none\n";
    } else {
        os << "components:\n";
        for (const Component& c : S.components) {
            os << "  " << std::left << std::setw(8) << c.label << std::setw(12)
               << component_kind_name(c.kind);
            if (c.dimension >= 0)
                os << "dim " << c.dimension;
            else
                os << "dim -";
            os << "  " << c.members.size() << " members\n";
        }
    }
    os << "points:\n";
    for (const Mat2& M : S.points) os << "  " << format_mat2(M) << "\n";
    return os.str();
}

std::string solution_set_csv(const SolutionSet& S) {
    std::ostringstream os;
    os << "x11,x12,x21,x22\n";
    for (const Mat2& M : S.points)
        os << M.x11 << "," << M.x12 << "," << M.x21 << "," << M.x22 << "\n";
    return os.str();
}

SolutionSet parse_solution_set_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(
            std::string("solution set JSON does not parse: ") + e.what());
    }
    try {
        if (!j.is_object())
            throw std::invalid_argument("solution set JSON is not an object");
        for (const char* key : {"field", "A", "cardinality", "provenance", "points"})
            if (!j.contains(key))
                throw std::invalid_argument(
                    std::string("solution set JSON lacks \"") + key + "\"");
        SolutionSet S;
        S.field = j["field"].get<std::string>();
        FieldPtr F = parse_field_spec(S.field);
        S.A = mat_from_json(*F, j["A"], "A");
        S.provenance = provenance_from_name(j["provenance"].get<std::string>());
        if (j.contains("components"))
            for (const ordered_json& jc : j["components"]) {
                Component c;
                c.label = jc.at("label").get<std::string>();
                c.kind = component_kind_from_name(jc.at("kind").get<std::string>());
                c.dimension = jc.value("dimension", -1);
                for (const ordered_json& jm : jc.at("members"))
                    c.members.push_back(mat_from_json(*F, jm, "component member"));
                S.components.push_back(std::move(c));
            }
        for (const ordered_json& jm : j["points"])
            S.points.push_back(mat_from_json(*F, jm, "point"));
        std::uint64_t declared = j["cardinality"].get<std::uint64_t>();
        if (declared != S.points.size())
            throw std::invalid_argument(
                "declared cardinality " + std::to_string(declared) +
                " disagrees with " + std::to_string(S.points.size()) +
                " listed points");
        return S;
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(
            std::string("solution set JSON has the wrong shape: ") + e.what());
    }
}

std::string verdict_json(const VerdictReport& rep) {
    return report_to_json(rep).dump(2) + "\n";
}

std::string verdicts_json(const std::vector<VerdictReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const VerdictReport& rep : reports) arr.push_back(report_to_json(rep));
    return arr.dump(2) + "\n";
}

std::string traceability_table(const std::vector<VerdictReport>& reports) {
    std::ostringstream os;
    std::size_t campaigns_pass = 0, records_total = 0, records_pass = 0;
    for (const VerdictReport& rep : reports) {
        table_block(os, rep);
        if (rep.overall_pass) ++campaigns_pass;
        records_total += rep.records.size();
        for (const CaseRecord& r : rep.records)
            if (r.pass) ++records_pass;
    }
    os << "campaigns: " << campaigns_pass << " of " << reports.size()
       << " passing\n";
    os << "records:   " << records_pass << " of " << records_total
       << " passing\n";
    bool all = campaigns_pass == reports.size();
    os << "VERDICT: " << (all ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string verdicts_csv(const std::vector<VerdictReport>& reports) {
    std::ostringstream os;
    os << "q,class,params,predicted,observed,match\n";
    for (const VerdictReport& rep : reports)
        for (const CaseRecord& r : rep.records) {
            os << r.q << "," << csv_field(r.cls) << "," << csv_field(r.params)
               << ",";
            if (r.has_predicted) os << r.predicted;
            os << "," << r.observed << "," << (r.pass ? "yes" : "no") << "\n";
        }
    return os.str();
}

}  // namespace ybme

#include <sstream>

#include "bcast/harness.hpp"
#include "json.hpp"

namespace bcast {

namespace {

using nlohmann::ordered_json;

ordered_json strip_json(const StripSpec& s) {
    ordered_json j;
    j["layer_sizes"] = s.layer_sizes;
    ordered_json odd = ordered_json::object();
    for (const auto& [i, edges] : s.odd_layer_edges) {
        ordered_json list = ordered_json::array();
        for (auto [a, b] : edges) {
            list.push_back({a, b});
        }
        odd[std::to_string(i)] = list;
    }
    j["odd_layer_edges"] = odd;
    return j;
}

ordered_json family_json(const FamilyParams& p) {
    ordered_json j;
    j["family"] = to_string(p.family);
    j["k"] = p.k;
    if (p.family == Family::G0) {
        j["l"] = p.l;
        j["r_size"] = p.r_size;
    }
    ordered_json strips = ordered_json::array();
    for (const auto& s : p.strips) {
        strips.push_back(strip_json(s));
    }
    j["strips"] = strips;
    if (p.family == Family::G2) {
        ordered_json cross = ordered_json::array();
        for (auto [a, b] : p.cross_edges) {
            cross.push_back({a, b});
        }
        j["cross_edges"] = cross;
    }
    return j;
}

std::string join(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out.push_back(sep);
        }
        out += std::to_string(v[i]);
    }
    return out;
}

std::string verdict(const VerificationRecord& r) {
    if (!r.recognized) {
        return "none";
    }
    const auto& f = *r.recognized;
    if (f.family == Family::G0) {
        return "G0(" + std::to_string(f.k) + "," + std::to_string(f.l) + ")";
    }
    return "G2(" + std::to_string(f.k) + ")";
}

}  // namespace

std::string record_to_json(const VerificationRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["graph6"] = r.graph6;
    if (r.error) {
        j["error"] = *r.error;
        return j.dump();
    }
    j["n"] = r.n;
    j["diameter"] = r.diameter;
    j["alpha"] = r.alpha;
    j["alpha_b"] = r.alpha_b;
    j["optimal_fmax"] = r.optimal_fmax;
    j["optimal_support_count"] = r.optimal_support_count;
    j["degenerate"] = r.degenerate;
    j["trivial_case"] = r.trivial_case;
    ordered_json bounds = ordered_json::array();
    for (const auto& b : r.bounds) {
        bounds.push_back({{"f_max", b.f_max},
                          {"bound", b.check.bound.str()},
                          {"holds", b.check.holds},
                          {"equal", b.check.equal}});
    }
    j["bounds"] = bounds;
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    if (r.recognized) {
        ordered_json f;
        f["family"] = to_string(r.recognized->family);
        f["k"] = r.recognized->k;
        if (r.recognized->family == Family::G0) {
            f["l"] = r.recognized->l;
            f["r_size"] = r.recognized->r_size;
        }
        j["recognized"] = f;
    } else {
        j["recognized"] = nullptr;
    }
    if (r.extraction) {
        const auto& e = *r.extraction;
        j["extraction"] = {{"case", e.which},
                           {"set_size", e.set_size},
                           {"weight", e.weight},
                           {"independent", e.independent},
                           {"case_bound", e.case_bound},
                           {"quarter_bound", e.quarter_bound}};
    } else {
        j["extraction"] = nullptr;
    }
    j["k0_anomaly"] = r.k0_anomaly;
    j["violation"] = r.violation;
    j["mismatch"] = r.mismatch;
    j["notes"] = r.notes;
    return j.dump();
}

std::string summary_to_json(const CampaignSummary& s) {
    ordered_json j;
    j["graphs"] = s.graphs;
    j["holds"] = s.holds;
    j["equal"] = s.equal;
    j["trivial"] = s.trivial;
    j["degenerate"] = s.degenerate;
    j["k0_anomalies"] = s.k0_anomalies;
    j["violations"] = s.violations;
    j["mismatches"] = s.mismatches;
    j["errors"] = s.errors;
    j["ok"] = s.ok();
    return ordered_json{{"summary", j}}.dump();
}

std::string csv_header() {
    return "id,graph6,n,diameter,alpha,alpha_b,optimal_fmax,trivial_case,bounds,holds,equality,recognized,"
           "extraction_case,extraction_size,k0_anomaly,violation,mismatch,error";
}

std::string record_to_csv(const VerificationRecord& r) {
    std::ostringstream os;
    // graph6 bytes lie in 63..126 and never include a comma or quote.
    os << r.id << ',' << r.graph6 << ',';
    if (r.error) {
        std::string msg;
        for (char c : *r.error) {
            msg += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        os << ",,,,,,,,,,,,,,,\"" << msg << '"';
        return os.str();
    }
    std::string bounds;
    for (std::size_t i = 0; i < r.bounds.size(); ++i) {
        bounds += (i > 0 ? ";" : "") + r.bounds[i].check.bound.str();
    }
    os << r.n << ',' << r.diameter << ',' << r.alpha << ',' << r.alpha_b << ',' << join(r.optimal_fmax, ';') << ','
       << int(r.trivial_case) << ',' << bounds << ',' << int(r.holds) << ',' << int(r.equality) << ",\"" << verdict(r)
       << "\"," << (r.extraction ? r.extraction->which : "") << ','
       << (r.extraction ? std::to_string(r.extraction->set_size) : "") << ',' << int(r.k0_anomaly) << ','
       << int(r.violation) << ',' << int(r.mismatch) << ',';
    return os.str();
}

std::string certificate_to_json(const ExtractionCertificate& c) {
    ordered_json j;
    j["case"] = to_string(c.which);
    ordered_json classes = ordered_json::object();
    for (int i = 0; i < 4; ++i) {
        classes["X" + std::to_string(i)] = c.classes[i];
    }
    j["classes"] = classes;
    ordered_json anchors = ordered_json::array();
    for (const auto& a : c.anchors) {
        anchors.push_back({{"x", a.center},
                           {"f", a.value},
                           {"p", a.anchor.anchor},
                           {"path", a.anchor.path},
                           {"I_x", a.path_set}});
    }
    j["anchors"] = anchors;
    j["pivot"] = c.pivot ? ordered_json(*c.pivot) : ordered_json(nullptr);
    j["outside_vertex"] = c.outside_vertex ? ordered_json(*c.outside_vertex) : ordered_json(nullptr);
    j["independent_set"] = c.independent_set;
    j["size"] = c.independent_set.size();
    j["weight"] = c.weight;
    j["support_size"] = c.support_size;
    j["required_times_four"] = c.required_times_four();
    j["meets_case_bound"] = c.meets_case_bound();
    j["meets_quarter_bound"] = c.meets_quarter_bound();
    return j.dump();
}

std::string family_params_to_json(const FamilyParams& p) {
    return family_json(p).dump();
}

}  // namespace bcast

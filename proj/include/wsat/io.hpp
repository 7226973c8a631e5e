#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wsat/classify.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"

namespace wsat {

using ordered_json = nlohmann::ordered_json;

inline ordered_json edge_json(Edge e) { return ordered_json::array({e.first, e.second}); }

inline ordered_json cert_to_json(const Certificate& c) {
    ordered_json j;
    j["pattern"] = c.pattern_g6;
    j["n"] = c.n;
    ordered_json init = ordered_json::array();
    for (auto e : c.initial) init.push_back(edge_json(e));
    j["initial"] = std::move(init);
    ordered_json steps = ordered_json::array();
    for (const auto& st : c.steps) {
        ordered_json s;
        s["edge"] = edge_json(st.edge);
        s["map"] = st.map;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

inline Certificate cert_from_json(const ordered_json& j) {
    Certificate c;
    c.pattern_g6 = j.at("pattern").get<std::string>();
    c.n = j.at("n").get<int>();
    for (const auto& e : j.at("initial"))
        c.initial.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (const auto& s : j.at("steps")) {
        CertStep st;
        st.edge = {s.at("edge").at(0).get<int>(), s.at("edge").at(1).get<int>()};
        st.map = s.at("map").get<std::vector<int>>();
        c.steps.push_back(std::move(st));
    }
    return c;
}

inline ordered_json verify_to_json(const VerifyResult& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["failed_step"] = r.failed_step;
    j["reason"] = r.reason;
    j["final_complete"] = r.final_complete;
    return j;
}

inline ordered_json bound_to_json(const BoundEntry& b) {
    ordered_json j;
    j["value"] = b.value;
    j["rule"] = b.rule;
    j["holds_all_n"] = b.holds_all_n;
    if (b.threshold_n)
        j["threshold_n"] = *b.threshold_n;
    else
        j["threshold_n"] = nullptr;
    return j;
}

inline ordered_json record_to_json(const WsatRecord& r) {
    ordered_json j;
    auto arr = [](const std::vector<BoundEntry>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& b : v) a.push_back(bound_to_json(b));
        return a;
    };
    j["lowers"] = arr(r.lowers);
    j["uppers"] = arr(r.uppers);
    j["exacts"] = arr(r.exacts);
    j["lower"] = r.lower ? bound_to_json(*r.lower) : ordered_json(nullptr);
    j["upper"] = r.upper ? bound_to_json(*r.upper) : ordered_json(nullptr);
    j["exact"] = r.exact ? bound_to_json(*r.exact) : ordered_json(nullptr);
    j["clique_k"] = r.clique_k ? ordered_json(*r.clique_k) : ordered_json(nullptr);
    return j;
}

inline ordered_json exact_to_json(const ExactOutcome& o, const Pattern& F) {
    ordered_json j;
    j["n"] = o.n;
    j["pattern"] = to_graph6(F.graph());
    j["found"] = o.found;
    j["value"] = o.found ? ordered_json(o.value) : ordered_json(nullptr);
    j["certified_lower"] = o.found ? ordered_json(nullptr) : ordered_json(o.certified_lower);
    j["witness"] = o.found ? ordered_json(to_graph6(o.witness)) : ordered_json(nullptr);
    j["search_from"] = o.search_from;
    j["cap"] = o.cap;
    j["minimality_tested"] = o.minimality_tested;
    j["minimality_skipped"] = o.minimality_skipped;
    return j;
}

inline ordered_json limit_to_json(const LimitEstimate& e) {
    ordered_json j;
    j["found"] = e.found;
    j["value"] = e.found ? ordered_json(e.value) : ordered_json(nullptr);
    j["stabilized"] = e.stabilized;
    j["certified"] = e.certified;
    j["matches_formula"] = e.matches_formula;
    j["n_used"] = e.n_used;
    ordered_json h = ordered_json::array();
    for (auto& [n, v] : e.history)
        h.push_back(ordered_json::array({n, v ? ordered_json(*v) : ordered_json(nullptr)}));
    j["history"] = std::move(h);
    return j;
}

inline ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["status"] = to_string(v.status);
    j["rule"] = v.rule;
    j["detail"] = v.detail;
    return j;
}

inline ordered_json construction_to_json(const ConstructionOutput& c) {
    ordered_json j;
    j["rule"] = c.rule;
    j["n"] = c.n;
    j["n_threshold"] = c.n_threshold;
    j["claimed_edges"] = c.claimed_edges;
    j["start"] = to_graph6(c.start);
    j["detail"] = c.detail;
    j["certificate"] = cert_to_json(c.certificate);
    return j;
}

inline ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json x;
        x["instance"] = row.instance;
        x["predicted"] = row.predicted;
        x["computed"] = row.computed;
        x["agree"] = row.agree;
        x["note"] = row.note;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["ok"] = r.ok;
    return j;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline std::string report_to_csv(const Report& r) {
    std::string out;
    if (!r.table_header.empty()) {
        for (size_t i = 0; i < r.table_header.size(); ++i)
            out += (i ? "," : "") + detail::csv_escape(r.table_header[i]);
        out += "\n";
        for (const auto& row : r.table) {
            for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_escape(row[i]);
            out += "\n";
        }
        return out;
    }
    out = "instance,predicted,computed,agree,note\n";
    for (const auto& row : r.rows) {
        out += detail::csv_escape(row.instance) + "," + detail::csv_escape(row.predicted) + "," +
               detail::csv_escape(row.computed) + "," + (row.agree ? "true" : "false") + "," +
               detail::csv_escape(row.note) + "\n";
    }
    return out;
}

inline std::string values_to_csv(const std::vector<std::string>& header,
                                 const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + detail::csv_escape(header[i]);
    out += "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_escape(row[i]);
        out += "\n";
    }
    return out;
}

}  // namespace wsat

#include "spdisj/export.hpp"

#include "spdisj/errors.hpp"

#include <sstream>

namespace spdisj {

Json catalog_to_json(const GraphCatalog& catalog) {
    const bool weighted = catalog.n >= 2;
    Json graphs = Json::array();
    for (const auto& bucket : catalog.buckets) {
        for (const auto& e : bucket) {
            Json g;
            g["n"] = catalog.n;
            g["k"] = e.edges;
            g["code"] = e.code.hex();
            g["psi"] = e.profile.psi;
            g["class_multiset"] = e.profile.class_multiset;
            if (weighted) g["omega"] = to_fraction_string(omega(e.profile, catalog.n));
            g["labeled_count"] = std::to_string(e.labeled_count);
            if (weighted) {
                g["automorphisms"] = automorphism_count(e, catalog.n);
                g["omega_automorphism"] = to_fraction_string(omega_automorphism(e, catalog.n));
            }
            graphs.push_back(std::move(g));
        }
    }
    Json totals = Json::array();
    for (std::size_t k = 0; k < catalog.buckets.size(); ++k) {
        Json t;
        t["k"] = static_cast<int>(k);
        t["graphs"] = catalog.buckets[k].size();
        if (weighted && k >= 1) {
            t["theta"] = to_fraction_string(theta(catalog.n, static_cast<int>(k), catalog));
            t["theta_automorphism"] =
                to_fraction_string(theta(catalog.n, static_cast<int>(k), catalog, Weighting::Automorphisms));
        }
        totals.push_back(std::move(t));
    }
    Json out;
    out["n"] = catalog.n;
    out["total"] = catalog.total();
    out["graphs"] = std::move(graphs);
    out["buckets"] = std::move(totals);
    return out;
}

std::string catalog_to_dot(const GraphCatalog& catalog) {
    std::ostringstream os;
    for (const auto& bucket : catalog.buckets)
        for (const auto& e : bucket)
            os << to_dot(e.code.graph(), "g_" + std::to_string(e.edges) + "_" + e.code.hex());
    return os.str();
}

Json theta_table_to_json(const ThetaTable& table) {
    Json values = Json::array();
    for (const auto& [k, value] : table.values) {
        Json v;
        v["k"] = k;
        v["theta"] = to_fraction_string(value);
        values.push_back(std::move(v));
    }
    Json out;
    out["n"] = table.n;
    out["weighting"] = weighting_name(table.weighting);
    out["theta"] = std::move(values);
    return out;
}

Json census_to_json(const CensusResult& r, bool include_elapsed) {
    Json out;
    out["n"] = r.n;
    out["ordered_pairs"] = std::to_string(r.ordered_pairs);
    out["unordered_pairs"] = std::to_string(r.unordered_pairs);
    out["matrices_scanned"] = std::to_string(r.matrices_scanned);
    if (include_elapsed)
        out["elapsed_ms"] =
            std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count());
    return out;
}

Json degree_histogram_to_json(const DegreeHistogram& h) {
    Json out = Json::array();
    for (const auto& [degree, frequency] : h) {
        Json row;
        row["disjoint_partners"] = std::to_string(degree);
        row["matrices"] = std::to_string(frequency);
        out.push_back(std::move(row));
    }
    return out;
}

Json family_to_json(const DisjointFamily& f) {
    Json members = Json::array();
    for (const auto& a : f.members) {
        Json m;
        m["row_perms"] = a.row_perms();
        m["col_perms"] = a.col_perms();
        members.push_back(std::move(m));
    }
    Json out;
    out["n"] = f.n;
    out["members"] = std::move(members);
    return out;
}

DisjointFamily family_from_json(const Json& j) {
    try {
        DisjointFamily f;
        f.n = j.at("n").get<int>();
        for (const auto& m : j.at("members"))
            f.members.push_back(build_matrix(f.n, m.at("row_perms").get<std::vector<Permutation>>(),
                                             m.at("col_perms").get<std::vector<Permutation>>()));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("family JSON: ") + e.what());
    }
}

Json grid_to_json(const SudokuGrid& p) {
    Json rows = Json::array();
    for (int r = 1; r <= p.size(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= p.size(); ++c) row.push_back(p.at(r, c));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = p.order();
    out["rows"] = std::move(rows);
    return out;
}

}  // namespace spdisj

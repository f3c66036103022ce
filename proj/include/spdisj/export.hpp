#pragma once

// JSON views of the library's results. Every exact number that can outgrow
// 53 bits is written as a decimal string; rationals as "num/den".

#include "spdisj/bigraph.hpp"
#include "spdisj/census.hpp"
#include "spdisj/count_formula.hpp"
#include "spdisj/sudoku.hpp"

#include <json.hpp>

namespace spdisj {

using Json = nlohmann::ordered_json;

// One object per graph: n, k, code (hex), psi, class_multiset, omega,
// labeled_count.
Json catalog_to_json(const GraphCatalog& catalog);

// Concatenated DOT documents, one graph each, named g_<k>_<code>.
std::string catalog_to_dot(const GraphCatalog& catalog);

Json theta_table_to_json(const ThetaTable& table);

// elapsed is omitted unless asked for, so repeated runs serialize identically.
Json census_to_json(const CensusResult& r, bool include_elapsed = false);

Json degree_histogram_to_json(const DegreeHistogram& h);

// {"n": n, "members": [{"row_perms": [[...]...], "col_perms": [[...]...]}, ...]}
Json family_to_json(const DisjointFamily& f);
DisjointFamily family_from_json(const Json& j);

Json grid_to_json(const SudokuGrid& p);

}  // namespace spdisj

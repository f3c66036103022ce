// spdisj: disjoint S-permutation matrix pairs, graph catalogs and the
// Sudoku-matrix layer from the command line.
//
// Exit codes: 0 ok, 2 scale cap, 3 oracle mismatch or internal
// inconsistency, 4 invalid input, 1 anything else.

#include "spdisj/census.hpp"
#include "spdisj/count_formula.hpp"
#include "spdisj/errors.hpp"
#include "spdisj/export.hpp"
#include "spdisj/sudoku.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace spdisj;

namespace {

constexpr int kExitScale = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInvalid = 4;

class MismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    int n = 2;
    std::string format = "table";
    std::string out_file;
};

struct Output {
    Json params = Json::object();
    Json result = Json::object();
    std::ostringstream text;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
    sub->add_option("--n", c.n, "Block order n (matrices are n^2 x n^2)")->capture_default_str();
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
    sub->add_option("--out", c.out_file, "Write the output to FILE instead of stdout");
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void emit(const Common& c, const std::string& command, const Output& o, int status) {
    std::string payload;
    if (c.format == "json") {
        Json j;
        j["command"] = command;
        j["params"] = o.params;
        j["result"] = o.result;
        j["status"] = status;
        payload = j.dump(2) + "\n";
    } else {
        payload = o.text.str();
    }
    if (c.out_file.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(c.out_file);
        if (!f) throw InvalidInputError("cannot open output file " + c.out_file);
        f << payload;
    }
}

void emit_error(const Common& c, const std::string& command, const Json& params, const std::string& message,
                int status) {
    std::cerr << "spdisj " << command << ": " << message << "\n";
    if (c.format == "json") {
        Json j;
        j["command"] = command;
        j["params"] = params;
        j["error"] = message;
        j["status"] = status;
        std::cout << j.dump(2) << "\n";
    }
}

// ---- graphs ----

void run_graphs(const Common& c, Output& o) {
    o.params["n"] = c.n;
    const auto catalog = enumerate_catalog(c.n);
    o.result = catalog_to_json(catalog);
    if (c.format == "dot") {
        o.text << catalog_to_dot(catalog);
        return;
    }
    o.text << "n=" << c.n << "  graphs=" << catalog.total() << "\n";
    o.text << std::left << std::setw(4) << "k" << std::setw(8) << "code" << std::setw(14) << "psi"
           << std::setw(16) << "[g]" << std::setw(10) << "omega" << std::setw(6) << "|Aut|"
           << "omega_aut\n";
    for (std::size_t k = 0; k < catalog.buckets.size(); ++k) {
        for (const auto& e : catalog.buckets[k]) {
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                return s;
            };
            o.text << std::setw(4) << k << std::setw(8) << e.code.hex() << std::setw(14)
                   << ("<" + join(e.profile.psi) + ">") << std::setw(16) << ("{" + join(e.profile.class_multiset) + "}")
                   << std::setw(10) << (c.n >= 2 ? to_fraction_string(omega(e.profile, c.n)) : "-");
            if (c.n >= 2)
                o.text << std::setw(6) << automorphism_count(e, c.n) << to_fraction_string(omega_automorphism(e, c.n));
            o.text << "\n";
        }
        if (c.n >= 2 && k >= 1)
            o.text << "    theta(" << c.n << "," << k << ") = "
                   << to_fraction_string(theta(c.n, static_cast<int>(k), catalog)) << "  automorphism-weighted "
                   << to_fraction_string(theta(c.n, static_cast<int>(k), catalog, Weighting::Automorphisms)) << "  ("
                   << catalog.buckets[k].size() << " graphs)\n";
    }
}

// ---- count ----

Weighting parse_weighting(const std::string& s) {
    return s == "automorphism" ? Weighting::Automorphisms : Weighting::TwinClasses;
}

struct CountArgs {
    std::string mode = "formula";
    std::string weights = "class";
    unsigned workers = 0;
};

void run_count(const Common& c, const CountArgs& a, Output& o) {
    const unsigned workers = a.workers ? a.workers : default_workers();
    o.params["n"] = c.n;
    o.params["mode"] = a.mode;
    if (a.mode != "census") o.params["weights"] = a.weights;
    if (a.mode != "formula") o.params["workers"] = workers;
    const Weighting w = parse_weighting(a.weights);

    const bool use_formula = a.mode != "census";
    const bool use_census = a.mode != "formula";
    if (use_census && c.n > 3)
        throw ScaleLimitError("census is limited to n <= 3; use --mode formula for n=" + std::to_string(c.n));

    BigInt formula_d, census_d;
    if (use_formula) {
        const auto catalog = enumerate_catalog(c.n);
        formula_d = count_ordered(catalog, w);
        o.result["theta"] = theta_table_to_json(theta_table(catalog, w))["theta"];
        const BigInt half = formula_d / 2;
        o.result["formula"]["ordered"] = formula_d.str();
        o.result["formula"]["unordered"] = half.str();
        o.text << "formula: D=" << formula_d << " d=" << formula_d / 2 << "\n";
    }
    if (use_census) {
        const auto r = run_census(c.n, workers);
        census_d = r.ordered_pairs;
        o.result["census"] = census_to_json(r);
        o.text << "census:  D=" << r.ordered_pairs << " d=" << r.unordered_pairs << " ("
               << r.matrices_scanned << " matrices)\n";
        std::cerr << "census finished in "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << " ms\n";
    }
    if (use_formula && use_census) {
        const bool match = formula_d == census_d;
        o.result["verification"] = match ? "matches census" : "MISMATCH";
        o.text << (match ? "formula matches census\n" : "MISMATCH between formula and census\n");
        if (!match)
            throw MismatchError("formula D=" + formula_d.str() + " but census D=" + census_d.str());
    } else if (use_formula) {
        o.result["verification"] = "unverified by census";
        o.text << "(unverified by census)\n";
    }
}

// ---- census ----

struct CensusArgs {
    std::string mode = "unordered";
    unsigned workers = 0;
    bool histogram = false;
    double progress_seconds = 0;
};

void run_census_cmd(const Common& c, const CensusArgs& a, Output& o) {
    CensusOptions opts;
    opts.workers = a.workers ? a.workers : default_workers();
    opts.mode = a.mode == "ordered" ? CensusMode::Ordered : CensusMode::Unordered;
    o.params["n"] = c.n;
    o.params["mode"] = a.mode;
    o.params["workers"] = opts.workers;
    if (a.progress_seconds > 0) {
        opts.progress_interval = std::chrono::milliseconds(static_cast<long>(a.progress_seconds * 1000));
        opts.on_progress = [](const CensusProgress& p) {
            std::cerr << "progress: " << p.rows_done << "/" << p.rows_total << " rows\n";
        };
    }
    const auto r = run_census(c.n, opts);
    std::cerr << "census finished in " << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count()
              << " ms\n";
    o.result = census_to_json(r);
    o.text << "n=" << r.n << " matrices=" << r.matrices_scanned << " ordered=" << r.ordered_pairs
           << " unordered=" << r.unordered_pairs << "\n";
    if (a.histogram) {
        const auto h = degree_histogram(c.n, opts.workers);
        o.result["degree_histogram"] = degree_histogram_to_json(h);
        for (auto [degree, freq] : h) o.text << "  " << freq << " matrices with " << degree << " disjoint partners\n";
    }
}

// ---- sigma ----

void run_sigma(const Common& c, int enum_cap, Output& o) {
    o.params["n"] = c.n;
    o.result["sigma_size"] = sigma_size(c.n).str();
    o.text << "|Sigma| = " << sigma_size(c.n) << "\n";
    if (enum_cap < 0) return;
    o.params["enum_cap"] = enum_cap;
    if (c.n > 3 && enum_cap >= c.n) {
        std::cerr << "enumerating n=" << c.n << " needs about " << projected_enumeration_bytes(c.n)
                  << " bytes. Type 'yes' to continue: " << std::flush;
        std::string answer;
        std::getline(std::cin, answer);
        if (answer != "yes") throw ScaleLimitError("enumeration not confirmed");
    }
    const auto all = enumerate_sigma(c.n, EnumerationCap{enum_cap});
    std::set<OnesMask> masks;
    bool valid = true;
    for (const auto& m : all) {
        const auto mask = ones_mask(m);
        valid = valid && is_valid_s_permutation(mask);
        masks.insert(mask);
    }
    o.result["enumerated"] = std::to_string(all.size());
    o.result["distinct_masks"] = std::to_string(masks.size());
    o.result["all_valid"] = valid;
    o.text << "enumerated " << all.size() << " matrices, " << masks.size() << " distinct, "
           << (valid ? "all valid" : "INVALID MATRIX FOUND") << "\n";
    if (!valid || masks.size() != all.size() || BigInt(all.size()) != sigma_size(c.n))
        throw MismatchError("enumeration does not reproduce Sigma");
}

// ---- sudoku ----

struct SudokuArgs {
    std::string grid_file;
    std::uint64_t seed = 1;
    int max_restarts = 1000;
    std::string sigma;
};

void run_sudoku(const std::string& action, const Common& c, const SudokuArgs& a, Output& o) {
    if (action == "count") {
        o.params["n"] = c.n;
        const auto sigma = count_sudoku(c.n);
        o.result["sudoku_matrices"] = sigma.str();
        o.text << "sigma_" << c.n << " = " << sigma << "\n";
    } else if (action == "cliques") {
        o.params["n"] = c.n;
        const BigInt z = count_cliques(c.n);
        const BigInt product = z * factorial(c.n * c.n);
        o.result["cliques"] = z.str();
        o.result["cliques_times_factorial"] = product.str();
        o.text << "z_" << c.n << " = " << z << "   z * (n^2)! = " << product << "\n";
    } else if (action == "decompose") {
        o.params["grid"] = a.grid_file;
        std::ifstream in(a.grid_file);
        if (!in) throw InvalidInputError("cannot open grid file " + a.grid_file);
        const auto grid = read_grid(in);
        const auto family = decompose(grid);
        o.result = family_to_json(family);
        for (std::size_t s = 0; s < family.members.size(); ++s) {
            o.text << "A_" << s + 1 << ":";
            for (const auto cell : family.members[s].ones()) o.text << " (" << cell.row << "," << cell.col << ")";
            o.text << "\n";
        }
    } else if (action == "sample") {
        o.params["n"] = c.n;
        o.params["seed"] = std::to_string(a.seed);
        o.params["max_restarts"] = a.max_restarts;
        if (c.n > 3) throw ScaleLimitError("family sampling is limited to n <= 3");
        const auto s = sample_family(c.n, a.seed, a.max_restarts);
        o.result["family"] = family_to_json(s.family);
        o.result["size"] = s.family.members.size();
        o.result["complete"] = s.complete();
        o.result["attempts"] = s.attempts;
        if (s.complete()) {
            const auto grid = recompose(s.family);
            o.result["grid"] = grid_to_json(grid);
            o.result["grid_valid"] = validate(grid);
            write_grid(o.text, grid);
        } else {
            o.text << "partial family of size " << s.family.members.size() << " after " << s.attempts
                   << " attempts\n";
        }
    } else if (action == "zsigma") {
        o.params["n"] = c.n;
        BigInt sigma;
        if (!a.sigma.empty()) {
            try {
                sigma = BigInt(a.sigma);
            } catch (const std::runtime_error&) {
                throw InvalidInputError("--sigma is not an integer: " + a.sigma);
            }
        } else if (c.n == 2) {
            sigma = count_sudoku(2);
        } else if (c.n == 3) {
            sigma = sudoku_count_order3();
        } else {
            throw InvalidInputError("no known Sudoku count for n=" + std::to_string(c.n) + "; pass --sigma");
        }
        o.params["sigma"] = sigma.str();
        const auto z = z_from_sigma(sigma, c.n);
        o.result["z"] = z.str();
        o.text << "z_" << c.n << " = " << sigma << " / (" << c.n * c.n << ")! = " << z << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disjoint S-permutation matrix pairs and related Sudoku counts"};
    app.require_subcommand(1);

    Common common;
    std::string command;
    std::string sudoku_action;
    CountArgs count_args;
    CensusArgs census_args;
    SudokuArgs sudoku_args;
    int enum_cap = -1;

    auto* graphs = app.add_subcommand("graphs", "List the bipartite graph catalog with omega and theta");
    add_common(graphs, common, {"table", "json", "dot"});

    auto* count = app.add_subcommand("count", "Count disjoint pairs by formula, census or both");
    add_common(count, common, {"table", "json"});
    count->add_option("--mode", count_args.mode)->check(CLI::IsMember({"formula", "census", "both"}))->capture_default_str();
    count->add_option("--workers", count_args.workers, "Census threads (0 = all cores)");
    count->add_option("--weights", count_args.weights,
                      "Graph weight denominator: twin-class factorials or automorphism group order")
        ->check(CLI::IsMember({"class", "automorphism"}))
        ->capture_default_str();

    auto* census = app.add_subcommand("census", "Brute-force pair census over all of Sigma");
    add_common(census, common, {"table", "json"});
    census->add_option("--mode", census_args.mode)->check(CLI::IsMember({"unordered", "ordered"}))->capture_default_str();
    census->add_option("--workers", census_args.workers, "Threads (0 = all cores)");
    census->add_flag("--histogram", census_args.histogram, "Also report disjoint-partner counts per matrix");
    census->add_option("--progress", census_args.progress_seconds, "Report progress on stderr every SECONDS");

    auto* sigma = app.add_subcommand("sigma", "Size of Sigma and optional enumeration check");
    add_common(sigma, common, {"table", "json"});
    sigma->add_option("--enum-cap", enum_cap, "Enumerate and verify, allowing n up to this cap");

    auto* sudoku = app.add_subcommand("sudoku", "Sudoku matrices: count, cliques, decompose, sample, zsigma");
    add_common(sudoku, common, {"table", "json"});
    sudoku->add_option("action", sudoku_action, "count | cliques | decompose | sample | zsigma")
        ->required()
        ->check(CLI::IsMember({"count", "cliques", "decompose", "sample", "zsigma"}));
    sudoku->add_option("--grid", sudoku_args.grid_file, "Grid file for decompose");
    sudoku->add_option("--seed", sudoku_args.seed, "Seed for sample")->capture_default_str();
    sudoku->add_option("--max-restarts", sudoku_args.max_restarts, "Restarts for sample")->capture_default_str();
    sudoku->add_option("--sigma", sudoku_args.sigma, "Sudoku count for zsigma (default: known value)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    Output out;
    int status = 0;
    command = app.get_subcommands().front()->get_name();
    try {
        if (command == "graphs") run_graphs(common, out);
        else if (command == "count") run_count(common, count_args, out);
        else if (command == "census") run_census_cmd(common, census_args, out);
        else if (command == "sigma") run_sigma(common, enum_cap, out);
        else if (command == "sudoku") {
            if (sudoku_action == "decompose" && sudoku_args.grid_file.empty())
                throw InvalidInputError("decompose needs --grid FILE");
            command += " " + sudoku_action;
            run_sudoku(sudoku_action, common, sudoku_args, out);
        }
        emit(common, command, out, status);
        return 0;
    } catch (const ScaleLimitError& e) {
        status = kExitScale;
        emit_error(common, command, out.params, e.what(), status);
    } catch (const MismatchError& e) {
        status = kExitMismatch;
        emit_error(common, command, out.params, e.what(), status);
    } catch (const ConsistencyError& e) {
        status = kExitMismatch;
        emit_error(common, command, out.params, e.what(), status);
    } catch (const InvalidInputError& e) {
        status = kExitInvalid;
        emit_error(common, command, out.params, e.what(), status);
    } catch (const std::invalid_argument& e) {
        status = kExitInvalid;
        emit_error(common, command, out.params, e.what(), status);
    } catch (const std::exception& e) {
        status = 1;
        emit_error(common, command, out.params, e.what(), status);
    }
    return status;
}

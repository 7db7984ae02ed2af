// Command-line driver: color Matrix Market files, verify the results with
// the model oracles, and benchmark ordering + coloring times.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sparsecolor/sparsecolor.hpp"

namespace sc = sparsecolor;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ns_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

const std::map<std::string, sc::OrderKind> kOrderNames = {
    {"natural", sc::OrderKind::natural},
    {"random", sc::OrderKind::random_order},
    {"largest-first", sc::OrderKind::largest_first},
    {"smallest-last", sc::OrderKind::smallest_last},
    {"incidence-degree", sc::OrderKind::incidence_degree},
    {"dynamic-largest-first", sc::OrderKind::dynamic_largest_first},
};

const std::vector<std::string> kModes = {"column",
                                         "row",
                                         "star",
                                         "acyclic",
                                         "star-bicoloring",
                                         "acyclic-bicoloring"};

const std::map<std::string, sc::NeutralPreference> kPreferences = {
    {"first", sc::NeutralPreference::first_available},
    {"rows", sc::NeutralPreference::neutralize_rows},
    {"columns", sc::NeutralPreference::neutralize_columns},
};

// Deterministic integer-valued entries; symmetric patterns get symmetric
// values so that round-trip checks exercise real decompression.
std::vector<double> test_values(const sc::SparsityPattern& p, bool symmetric) {
    std::vector<double> values(p.nnz());
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int i = p.row_idx[pos - 1];
            int a = symmetric ? std::min(i, j) : i;
            int b = symmetric ? std::max(i, j) : j;
            values[pos - 1] =
                static_cast<double>((a * 1009 + b * 9176) % 997 + 1);
        }
    }
    return values;
}

void set_verdict(sc::ColorReport& rep, const sc::CheckResult& check) {
    if (check.ok) {
        if (rep.verified != "ok" && rep.verified.rfind("failed", 0) != 0)
            rep.verified = "ok";
    } else {
        rep.verified = "failed: " + check.message;
    }
}

sc::ColorReport run_one(const sc::SparsityPattern& p, const std::string& name,
                        const std::string& mode, const std::string& order_name,
                        std::uint64_t seed, int repeat, bool do_verify,
                        sc::NeutralPreference pref) {
    sc::ColorReport rep;
    rep.matrix = name;
    rep.m = p.n_rows;
    rep.n = p.n_cols;
    rep.nnz = p.nnz();
    rep.mode = mode;
    rep.order = order_name;
    rep.seed = seed;
    rep.verified = "skipped";
    sc::OrderingCriterion crit{kOrderNames.at(order_name), seed};
    repeat = std::max(repeat, 1);
    std::int64_t best_order = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_color = best_order;

    if (mode == "column" || mode == "row") {
        sc::Side side = mode == "column" ? sc::Side::columns : sc::Side::rows;
        sc::BipartiteGraph bg = sc::build_bipartite_graph(p);
        sc::Coloring col;
        for (int r = 0; r < repeat; ++r) {
            auto t0 = Clock::now();
            std::vector<int> order = sc::order_vertices(bg, side, crit);
            auto t1 = Clock::now();
            col = sc::partial_distance2_coloring(bg, side, order);
            auto t2 = Clock::now();
            best_order = std::min(best_order, ns_between(t0, t1));
            best_color = std::min(best_color, ns_between(t1, t2));
        }
        rep.num_colors = col.num_colors;
        (mode == "column" ? rep.num_col_colors : rep.num_row_colors) =
            col.num_colors;
        if (do_verify) set_verdict(rep, sc::check_distance2(p, side, col.color));
    } else if (mode == "star") {
        sc::AdjacencyGraph g = sc::build_adjacency_graph(p);
        sc::StarColoringResult result;
        for (int r = 0; r < repeat; ++r) {
            auto t0 = Clock::now();
            std::vector<int> order = sc::order_vertices(g, crit);
            auto t1 = Clock::now();
            result = sc::star_coloring(g, order);
            auto t2 = Clock::now();
            best_order = std::min(best_order, ns_between(t0, t1));
            best_color = std::min(best_color, ns_between(t1, t2));
        }
        sc::StructureSets sets = sc::classify_structures(g, result.stars);
        sc::PostProcessResult pp =
            sc::post_process(g, result.coloring, sets, pref, p.n_cols);
        sc::apply_trivial_hubs(result.stars, pp.trivial_hubs);
        rep.num_colors = result.coloring.num_colors;
        rep.num_row_colors = rep.num_col_colors = rep.num_colors;
        if (do_verify)
            set_verdict(rep, sc::check_nsop(p, result.coloring.color));
    } else if (mode == "acyclic") {
        sc::AdjacencyGraph g = sc::build_adjacency_graph(p);
        sc::AcyclicColoringResult result;
        for (int r = 0; r < repeat; ++r) {
            auto t0 = Clock::now();
            std::vector<int> order = sc::order_vertices(g, crit);
            auto t1 = Clock::now();
            result = sc::acyclic_coloring(g, order);
            auto t2 = Clock::now();
            best_order = std::min(best_order, ns_between(t0, t1));
            best_color = std::min(best_color, ns_between(t1, t2));
        }
        sc::TreeSet trees = sc::build_trees(g, result.forest);
        sc::ReverseBfsPlan plan = sc::reverse_bfs(trees, g.num_vertices());
        sc::StructureSets sets = sc::classify_structures(trees, plan);
        sc::PostProcessResult pp =
            sc::post_process(g, result.coloring, sets, pref, p.n_cols);
        sc::apply_trivial_hubs(plan, trees, pp.trivial_hubs);
        rep.num_colors = result.coloring.num_colors;
        rep.num_row_colors = rep.num_col_colors = rep.num_colors;
        if (do_verify) {
            std::vector<double> values = test_values(p, true);
            sc::SubstitutionPlan splan =
                sc::plan_substitution(g, result.coloring, plan);
            sc::DenseMatrix<double> b = sc::compress_columns<double>(
                p, values, result.coloring.color, result.coloring.num_colors);
            std::vector<double> rec = sc::decompress_substitution(b, splan);
            sc::CheckResult check;
            if (rec != values) {
                check.ok = false;
                check.message = "substitution round-trip mismatch";
            }
            set_verdict(rep, check);
        }
    } else {
        sc::BicolorMode bm = mode == "star-bicoloring" ? sc::BicolorMode::star
                                                       : sc::BicolorMode::acyclic;
        sc::BicoloringResult bc;
        for (int r = 0; r < repeat; ++r) {
            sc::PhaseTimes times;
            bc = sc::bicolor(p, bm, crit, pref, sc::BucketBackend::stack, &times);
            best_order = std::min(best_order, times.order_ns);
            best_color = std::min(best_color, times.color_ns);
        }
        rep.num_colors = bc.total_colors();
        rep.num_row_colors = bc.remap.num_row_colors;
        rep.num_col_colors = bc.remap.num_col_colors;
        if (do_verify) {
            std::vector<double> values = test_values(p, false);
            std::vector<double> rec;
            if (bm == sc::BicolorMode::star) {
                set_verdict(rep,
                            sc::check_no_zigzag(bc.augmented, bc.sym.color));
                sc::DirectPlan dplan = sc::plan_direct_star_bicoloring(p, bc);
                auto b_c = sc::compress_columns<double>(
                    p, values, bc.remap.col_colors, bc.remap.num_col_colors);
                auto b_r = sc::compress_rows<double>(
                    p, values, bc.remap.row_colors, bc.remap.num_row_colors);
                rec = sc::decompress_direct(b_c, b_r, dplan);
            } else {
                sc::SubstitutionPlan splan =
                    sc::plan_substitution_bicoloring(p, bc);
                auto b_c = sc::compress_columns<double>(
                    p, values, bc.remap.col_colors, bc.remap.num_col_colors);
                auto b_r = sc::compress_rows<double>(
                    p, values, bc.remap.row_colors, bc.remap.num_row_colors);
                rec = sc::decompress_substitution(b_c, b_r, splan);
            }
            sc::CheckResult check;
            if (rec != values) {
                check.ok = false;
                check.message = "bicoloring round-trip mismatch";
            }
            set_verdict(rep, check);
        }
    }
    rep.t_order_ns = best_order;
    rep.t_color_ns = best_color;
    return rep;
}

void print_human(const sc::ColorReport& rep) {
    std::cout << "matrix: " << rep.matrix << "\n"
              << "size: " << rep.m << " x " << rep.n << ", nnz " << rep.nnz
              << "\n"
              << "mode: " << rep.mode << ", order: " << rep.order
              << ", seed: " << rep.seed << "\n"
              << "colors: " << rep.num_colors << " (rows " << rep.num_row_colors
              << ", columns " << rep.num_col_colors << ")\n"
              << "t_order: " << rep.t_order_ns << " ns, t_color: "
              << rep.t_color_ns << " ns\n"
              << "verified: " << rep.verified << "\n";
}

std::string matrix_name(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse matrix coloring, bicoloring, and decompression"};
    app.require_subcommand(1);

    std::string path, mode = "column", order = "natural", prefer = "first";
    std::uint64_t seed = 0;
    bool verify_flag = false, json_flag = false;
    int repeat = 5;
    std::vector<std::string> paths, modes, orders;

    auto add_common = [&](CLI::App* cmd, bool single_path) {
        if (single_path)
            cmd->add_option("path", path, "Matrix Market file")->required();
        else
            cmd->add_option("paths", paths, "Matrix Market files")->required();
        cmd->add_option("--seed", seed, "Seed for the random ordering")
            ->default_val(0);
        cmd->add_flag("--json", json_flag, "Emit JSON instead of text");
        cmd->add_option("--prefer-neutral", prefer,
                        "Neutralization tie preference")
            ->check(CLI::IsMember({"rows", "columns", "first"}));
    };

    CLI::App* color_cmd = app.add_subcommand("color", "Color one matrix");
    add_common(color_cmd, true);
    color_cmd->add_option("--mode", mode, "Coloring mode")
        ->required()
        ->check(CLI::IsMember(kModes));
    color_cmd->add_option("--order", order, "Vertex ordering")
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [k, v] : kOrderNames) names.push_back(k);
            return names;
        }()));
    color_cmd->add_flag("--verify", verify_flag,
                        "Run the model oracle on the result");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Color one matrix and check the oracle");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--mode", mode, "Coloring mode")
        ->required()
        ->check(CLI::IsMember(kModes));
    verify_cmd->add_option("--order", order, "Vertex ordering")
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [k, v] : kOrderNames) names.push_back(k);
            return names;
        }()));

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Time ordering and coloring");
    add_common(bench_cmd, false);
    // One value per occurrence (repeat the flag or comma-separate); without
    // this the vector options would swallow the trailing file arguments.
    bench_cmd->add_option("--mode", modes, "Coloring modes")
        ->delimiter(',')
        ->type_size(1)
        ->allow_extra_args(false)
        ->check(CLI::IsMember(kModes));
    bench_cmd->add_option("--order", orders, "Vertex orderings")
        ->delimiter(',')
        ->type_size(1)
        ->allow_extra_args(false)
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [k, v] : kOrderNames) names.push_back(k);
            return names;
        }()));
    bench_cmd->add_option("--repeat", repeat,
                          "Repetitions; reported time is the minimum")
        ->default_val(5);

    CLI11_PARSE(app, argc, argv);

    try {
        sc::NeutralPreference pref = kPreferences.at(prefer);
        if (color_cmd->parsed() || verify_cmd->parsed()) {
            bool do_verify = verify_flag || verify_cmd->parsed();
            sc::SparsityPattern p = sc::read_matrix_market_file(path);
            sc::ColorReport rep = run_one(p, matrix_name(path), mode, order,
                                          seed, 1, do_verify, pref);
            if (json_flag)
                std::cout << nlohmann::json(rep).dump(2) << "\n";
            else
                print_human(rep);
            return rep.verified.rfind("failed", 0) == 0 ? 1 : 0;
        }
        // bench
        if (modes.empty()) modes = kModes;
        if (orders.empty()) orders.push_back("natural");
        std::vector<sc::ColorReport> rows;
        for (const std::string& mpath : paths) {
            sc::SparsityPattern p = sc::read_matrix_market_file(mpath);
            bool symmetric = sc::is_structurally_symmetric(p);
            for (const std::string& md : modes) {
                if ((md == "star" || md == "acyclic") && !symmetric) continue;
                for (const std::string& od : orders)
                    rows.push_back(run_one(p, matrix_name(mpath), md, od, seed,
                                           repeat, false, pref));
            }
        }
        if (json_flag) {
            std::cout << nlohmann::json(rows).dump(2) << "\n";
        } else {
            std::cout << "matrix,m,n,nnz,mode,order,seed,num_colors,"
                         "num_row_colors,num_col_colors,t_order_ns,t_color_ns\n";
            for (const auto& r : rows)
                std::cout << r.matrix << ',' << r.m << ',' << r.n << ',' << r.nnz
                          << ',' << r.mode << ',' << r.order << ',' << r.seed
                          << ',' << r.num_colors << ',' << r.num_row_colors
                          << ',' << r.num_col_colors << ',' << r.t_order_ns
                          << ',' << r.t_color_ns << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

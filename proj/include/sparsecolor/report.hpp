#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace sparsecolor {

// Result row for one (matrix, mode, order) run. Serializes to a fixed JSON
// schema; parsing the emitted JSON yields identical fields.
struct ColorReport {
    std::string matrix;
    int m = 0;
    int n = 0;
    int nnz = 0;
    std::string mode;
    std::string order;
    std::uint64_t seed = 0;
    int num_colors = 0;
    int num_row_colors = 0;
    int num_col_colors = 0;
    std::int64_t t_order_ns = 0;
    std::int64_t t_color_ns = 0;
    std::string verified;  // "ok", "failed: <reason>", or "skipped"

    bool operator==(const ColorReport&) const = default;
};

inline void to_json(nlohmann::json& j, const ColorReport& r) {
    j = nlohmann::json{{"matrix", r.matrix},
                       {"m", r.m},
                       {"n", r.n},
                       {"nnz", r.nnz},
                       {"mode", r.mode},
                       {"order", r.order},
                       {"seed", r.seed},
                       {"num_colors", r.num_colors},
                       {"num_row_colors", r.num_row_colors},
                       {"num_col_colors", r.num_col_colors},
                       {"t_order_ns", r.t_order_ns},
                       {"t_color_ns", r.t_color_ns},
                       {"verified", r.verified}};
}

inline void from_json(const nlohmann::json& j, ColorReport& r) {
    j.at("matrix").get_to(r.matrix);
    j.at("m").get_to(r.m);
    j.at("n").get_to(r.n);
    j.at("nnz").get_to(r.nnz);
    j.at("mode").get_to(r.mode);
    j.at("order").get_to(r.order);
    j.at("seed").get_to(r.seed);
    j.at("num_colors").get_to(r.num_colors);
    j.at("num_row_colors").get_to(r.num_row_colors);
    j.at("num_col_colors").get_to(r.num_col_colors);
    j.at("t_order_ns").get_to(r.t_order_ns);
    j.at("t_color_ns").get_to(r.t_color_ns);
    j.at("verified").get_to(r.verified);
}

}  // namespace sparsecolor

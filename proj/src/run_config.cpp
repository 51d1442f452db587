// SPDX-License-Identifier: Apache-2.0
#include "nomopt/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nomopt {

void RunConfig::validate() const {
    sys.validate();
    chan.validate();
    geom.validate();
    solver.validate();
    if (p_max_mw <= 0.0) throw std::invalid_argument("p_max_mw must be > 0");
    if (w1 < 0.0 || w1 > 1.0) throw std::invalid_argument("w1 must lie in [0, 1]");
    if (drops < 1) throw std::invalid_argument("drops must be >= 1");
}

RunConfig run_config_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "phi") cfg.sys.phi = value.get<double>();
        else if (key == "circuit_power_mw") cfg.sys.circuit_power_mw = value.get<double>();
        else if (key == "k_s") cfg.sys.k_s = value.get<double>();
        else if (key == "k_e") cfg.sys.k_e = value.get<double>();
        else if (key == "bandwidth_hz") {
            cfg.sys.bandwidth_hz = value.get<double>();
            cfg.chan.bandwidth_hz = value.get<double>();
        }
        else if (key == "p_max_mw") cfg.p_max_mw = value.get<double>();
        else if (key == "g0_db") cfg.chan.g0_db = value.get<double>();
        else if (key == "path_loss_exponent") cfg.chan.n_exp = value.get<double>();
        else if (key == "noise_psd_dbm_hz") cfg.chan.n0_dbm_hz = value.get<double>();
        else if (key == "noise_figure_db") cfg.chan.nf_db = value.get<double>();
        else if (key == "r_inner_m") cfg.geom.r_inner_m = value.get<double>();
        else if (key == "r_outer_m") cfg.geom.r_outer_m = value.get<double>();
        else if (key == "tol_objective") cfg.solver.tol_objective = value.get<double>();
        else if (key == "tol_x_mw") cfg.solver.tol_x_mw = value.get<double>();
        else if (key == "max_outer_iters") cfg.solver.max_outer_iters = value.get<int>();
        else if (key == "max_inner_iters") cfg.solver.max_inner_iters = value.get<int>();
        else if (key == "multistart_fractions")
            cfg.solver.multistart_fractions = value.get<std::vector<double>>();
        else if (key == "w1") cfg.w1 = value.get<double>();
        else if (key == "drops") cfg.drops = value.get<int>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_config_from_json(buf.str());
}

std::string run_config_to_json(const RunConfig& cfg) {
    nlohmann::json doc{
        {"phi", cfg.sys.phi},
        {"circuit_power_mw", cfg.sys.circuit_power_mw},
        {"k_s", cfg.sys.k_s},
        {"k_e", cfg.sys.k_e},
        {"bandwidth_hz", cfg.sys.bandwidth_hz},
        {"p_max_mw", cfg.p_max_mw},
        {"g0_db", cfg.chan.g0_db},
        {"path_loss_exponent", cfg.chan.n_exp},
        {"noise_psd_dbm_hz", cfg.chan.n0_dbm_hz},
        {"noise_figure_db", cfg.chan.nf_db},
        {"r_inner_m", cfg.geom.r_inner_m},
        {"r_outer_m", cfg.geom.r_outer_m},
        {"tol_objective", cfg.solver.tol_objective},
        {"tol_x_mw", cfg.solver.tol_x_mw},
        {"max_outer_iters", cfg.solver.max_outer_iters},
        {"max_inner_iters", cfg.solver.max_inner_iters},
        {"multistart_fractions", cfg.solver.multistart_fractions},
        {"w1", cfg.w1},
        {"drops", cfg.drops},
        {"seed", cfg.seed},
    };
    return doc.dump(2);
}

}  // namespace nomopt

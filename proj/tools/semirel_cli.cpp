// Copyright 2026 The semirel Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semirel/config.hpp"
#include "semirel/errors.hpp"
#include "semirel/format.hpp"
#include "semirel/gaussian_bound.hpp"
#include "semirel/kleingordon.hpp"
#include "semirel/report.hpp"
#include "semirel/salpeter.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_violation = 2;

struct Common
{
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("config", c.config_path, "key = value configuration file");
    cmd->add_option("-s,--set", c.overrides, "override a key, e.g. --set v=2.5")->take_all();
    cmd->add_option("-o,--out", c.out, "output path (file or directory)");
    cmd->add_option("-j,--threads", c.threads, "worker threads")->check(CLI::Range(1, 1024));
}

semirel::SweepConfig resolve(const Common& c)
{
    semirel::SweepConfig cfg = c.config_path.empty()
                                   ? semirel::parse_config("", c.overrides)
                                   : semirel::load_config(c.config_path, c.overrides);
    if (!c.out.empty()) {
        cfg.out = c.out;
    }
    if (c.threads > 0) {
        cfg.threads = c.threads;
    }
    semirel::apply_environment(cfg);
    return cfg;
}

void require_single_point(const semirel::SweepConfig& cfg)
{
    if (cfg.couplings.size() != 1 || cfg.masses.size() != 1) {
        throw semirel::ConfigError("single-point commands need exactly one v and one m");
    }
}

void print(const char* key, double value)
{
    std::cout << key << ": " << semirel::format_number(value) << '\n';
}

int run_kg(const semirel::SweepConfig& cfg)
{
    require_single_point(cfg);
    const auto spec = cfg.spec(cfg.couplings[0]);
    const auto sol = semirel::solve(spec, cfg.masses[0], cfg.spectral_options());
    std::cout << "status: " << semirel::to_string(sol.status) << '\n';
    if (sol.status == semirel::KgStatus::Bound) {
        print("e", sol.e);
        print("delta", sol.delta_at_e);
    }
    if (sol.e0) {
        print("e0", *sol.e0);
    }
    if (sol.second_root) {
        print("second_root", *sol.second_root);
    }
    return exit_ok;
}

int run_salpeter(const semirel::SweepConfig& cfg)
{
    require_single_point(cfg);
    const auto spec = cfg.spec(cfg.couplings[0]);
    const auto sol = semirel::ground_energy(spec, cfg.masses[0], cfg.basis_config(),
                                            cfg.convergence_control());
    print("E", sol.E);
    print("basis_tail", sol.basis_tail);
    std::cout << "converged: " << (sol.converged ? "yes" : "no") << '\n';
    if (sol.coulomb_drift) {
        std::cout << "warning: E keeps falling with the basis size (coupling near 2/pi)\n";
    }
    if (!sol.convergence_history.empty()) {
        const auto& last = sol.convergence_history.back();
        std::cout << "basis: N = " << last.N << ", R = " << semirel::format_number(last.R) << '\n';
    }
    return exit_ok;
}

int run_gaussian(const semirel::SweepConfig& cfg)
{
    require_single_point(cfg);
    if (cfg.potential != semirel::PotentialKind::WoodsSaxon) {
        throw semirel::ConfigError("the Gaussian bound is defined for the Woods-Saxon potential");
    }
    const double m = cfg.masses[0];
    const double v = cfg.couplings[0];
    const double s = semirel::eg_optimal_scale(m, cfg.a, cfg.b, v);
    print("s", s);
    print("E_g", semirel::eg_at(m, cfg.a, cfg.b, v, s));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy bounds for the spinless Salpeter equation"};
    app.require_subcommand(1);

    Common common;
    auto* fcurves = app.add_subcommand("fcurves", "F(e) curves, parabolas and intersections");
    auto* bounds = app.add_subcommand("bounds", "e_kg <= E_srs <= E_gauss table");
    auto* critical = app.add_subcommand("critical", "binding and supercritical couplings");
    auto* kg = app.add_subcommand("kg", "Klein-Gordon energy at one point");
    auto* salpeter = app.add_subcommand("salpeter", "semirelativistic energy at one point");
    auto* gaussian = app.add_subcommand("gaussian", "Gaussian upper bound at one point");
    for (auto* cmd : {fcurves, bounds, critical, kg, salpeter, gaussian}) {
        add_common(cmd, common);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        const semirel::SweepConfig cfg = resolve(common);
        if (fcurves->parsed()) {
            for (const auto& path : semirel::run_fcurves(cfg)) {
                std::cerr << "wrote " << path << '\n';
            }
            return exit_ok;
        }
        if (bounds->parsed()) {
            const auto report = semirel::run_bounds(cfg, std::cout);
            return report.violations == 0 ? exit_ok : exit_violation;
        }
        if (critical->parsed()) {
            semirel::run_critical(cfg, std::cout);
            return exit_ok;
        }
        if (kg->parsed()) {
            return run_kg(cfg);
        }
        if (salpeter->parsed()) {
            return run_salpeter(cfg);
        }
        return run_gaussian(cfg);
    } catch (const semirel::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
}

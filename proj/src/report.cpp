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

#include "semirel/report.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <ostream>
#include <thread>

#include "semirel/errors.hpp"
#include "semirel/format.hpp"
#include "semirel/gaussian_bound.hpp"
#include "semirel/kleingordon.hpp"
#include "semirel/salpeter.hpp"

namespace semirel {
namespace {

std::string field(const std::optional<double>& x)
{
    return x ? format_number(*x) : std::string();
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
    return out;
}

template <typename Write>
void write_to(const std::string& path, std::ostream& fallback, Write&& write)
{
    if (path.empty()) {
        write(fallback);
        return;
    }
    auto out = open_output(path);
    write(out);
}

}  // namespace

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

BoundsRow bounds_row(const SweepConfig& cfg, double v, double m)
{
    BoundsRow row;
    row.v = v;
    row.m = m;
    const PotentialSpec spec = cfg.spec(v);
    try {
        const KgSolution kg = solve(spec, m, cfg.spectral_options());
        row.e0 = kg.e0;
        if (kg.status != KgStatus::Bound) {
            row.status = std::string(to_string(kg.status));
            return row;
        }
        row.e_kg = kg.e;
        row.delta = kg.delta_at_e;
        const SalpeterSolution srs =
            ground_energy(spec, m, cfg.basis_config(), cfg.convergence_control());
        row.E_srs = srs.E;
        if (!srs.converged) {
            row.status = "error";
            row.message = "semirelativistic energy did not converge";
            return row;
        }
        if (cfg.potential == PotentialKind::WoodsSaxon) {
            try {
                row.E_gauss = eg_optimized(m, cfg.a, cfg.b, v);
            } catch (const CouplingOutOfRange&) {
            }
        }
        row.status = "bound";
        row.violation = *row.e_kg > *row.E_srs + ordering_tolerance ||
                        (row.E_gauss && *row.E_srs > *row.E_gauss + ordering_tolerance);
    } catch (const std::exception& e) {
        row.status = "error";
        row.message = e.what();
    }
    return row;
}

BoundsReport compute_bounds(const SweepConfig& cfg)
{
    if (cfg.couplings.empty()) {
        throw ConfigError("bounds needs couplings (v or v_min/v_max/v_steps)");
    }
    const std::size_t nv = cfg.couplings.size();
    BoundsReport report;
    report.rows.resize(cfg.masses.size() * nv);
    parallel_for(report.rows.size(), cfg.threads, [&](std::size_t i) {
        report.rows[i] = bounds_row(cfg, cfg.couplings[i % nv], cfg.masses[i / nv]);
    });
    for (const auto& row : report.rows) {
        report.violations += row.violation ? 1 : 0;
    }
    return report;
}

void write_bounds_csv(std::ostream& out, const BoundsReport& report)
{
    out << "v,m,e_kg,E_srs,E_gauss,e0,delta,status\n";
    for (const auto& r : report.rows) {
        out << format_number(r.v) << ',' << format_number(r.m) << ',' << field(r.e_kg) << ','
            << field(r.E_srs) << ',' << field(r.E_gauss) << ',' << field(r.e0) << ','
            << field(r.delta) << ',' << r.status << '\n';
    }
    out << "# violations: " << report.violations << '\n';
}

BoundsReport run_bounds(const SweepConfig& cfg, std::ostream& fallback)
{
    BoundsReport report = compute_bounds(cfg);
    write_to(cfg.out, fallback, [&](std::ostream& out) { write_bounds_csv(out, report); });
    return report;
}

std::vector<std::string> run_fcurves(const SweepConfig& cfg)
{
    if (cfg.couplings.empty()) {
        throw ConfigError("fcurves needs couplings (v or v_min/v_max/v_steps)");
    }
    const std::filesystem::path dir = std::filesystem::path(cfg.out.empty() ? "." : cfg.out);
    std::filesystem::create_directories(dir);
    const std::vector<double> es = cfg.e_grid();
    const SpectralOptions options = cfg.spectral_options();

    struct Curve
    {
        std::vector<SpectralCurvePoint> points;
        std::string status;
    };
    std::vector<Curve> curves(cfg.couplings.size());
    parallel_for(curves.size(), cfg.threads, [&](std::size_t i) {
        Curve& c = curves[i];
        try {
            for (const auto& p : sample_curve(cfg.spec(cfg.couplings[i]), es, options)) {
                if (p) {
                    c.points.push_back(*p);
                }
            }
            c.status = c.points.empty() ? "no-binding" : "bound";
        } catch (const std::exception& e) {
            c.points.clear();
            c.status = std::string("error: ") + e.what();
        }
    });

    const std::size_t nv = cfg.couplings.size();
    std::vector<BoundsRow> hits(cfg.masses.size() * nv);
    parallel_for(hits.size(), cfg.threads, [&](std::size_t i) {
        BoundsRow& row = hits[i];
        row.v = cfg.couplings[i % nv];
        row.m = cfg.masses[i / nv];
        try {
            const KgSolution kg = solve(cfg.spec(row.v), row.m, options);
            row.status = std::string(to_string(kg.status));
            if (kg.status == KgStatus::Bound) {
                row.e_kg = kg.e;
                row.delta = kg.delta_at_e;
            }
        } catch (const std::exception&) {
            row.status = "error";
        }
    });

    std::vector<std::string> written;
    const std::string kind(to_string(cfg.potential));
    for (std::size_t i = 0; i < nv; ++i) {
        const auto path = dir / ("fcurve_v" + format_number(cfg.couplings[i]) + ".csv");
        auto out = open_output(path);
        out << "# potential: " << kind << ", v: " << format_number(cfg.couplings[i])
            << ", status: " << curves[i].status << '\n';
        write_curve_csv(out, std::span<const SpectralCurvePoint>(curves[i].points));
        written.push_back(path.string());
    }
    {
        const auto path = dir / "parabolas.csv";
        auto out = open_output(path);
        out << "m,e,g\n";
        for (double m : cfg.masses) {
            for (double e : es) {
                out << format_number(m) << ',' << format_number(e) << ','
                    << format_number(e * e - m * m) << '\n';
            }
        }
        written.push_back(path.string());
    }
    {
        const auto path = dir / "intersections.csv";
        auto out = open_output(path);
        out << "v,m,e,delta,status\n";
        for (const auto& r : hits) {
            out << format_number(r.v) << ',' << format_number(r.m) << ',' << field(r.e_kg) << ','
                << field(r.delta) << ',' << r.status << '\n';
        }
        written.push_back(path.string());
    }
    return written;
}

std::vector<CriticalRow> compute_critical(const SweepConfig& cfg)
{
    if (cfg.potential == PotentialKind::Coulomb) {
        throw ConfigError(
            "critical couplings are not defined for the Coulomb potential (its window is v < 1/2)");
    }
    const PotentialSpec shape = cfg.spec(1.0);
    const SpectralOptions options = cfg.spectral_options();
    std::vector<CriticalRow> rows(cfg.masses.size());
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
        CriticalRow& row = rows[i];
        row.m = cfg.masses[i];
        try {
            row.v_lower = critical_coupling_lower(shape, row.m, options);
            row.v_upper = critical_coupling_upper(shape, row.m, options);
        } catch (const std::exception& e) {
            row.message = e.what();
        }
    });
    return rows;
}

std::vector<CriticalRow> run_critical(const SweepConfig& cfg, std::ostream& fallback)
{
    auto rows = compute_critical(cfg);
    write_to(cfg.out, fallback, [&](std::ostream& out) {
        out << "m,v_lower,v_upper,tolerance\n";
        for (const auto& r : rows) {
            out << format_number(r.m) << ',' << field(r.v_lower) << ',' << field(r.v_upper) << ','
                << format_number(critical_coupling_tolerance) << '\n';
        }
    });
    return rows;
}

}  // namespace semirel

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

#include "semirel/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "semirel/errors.hpp"

namespace semirel {
namespace {

struct Entry
{
    std::string value;
    int line = 0;
};

using Entries = std::map<std::string, Entry, std::less<>>;

const char* const known_keys[] = {
    "potential", "a",     "b",   "m",           "m_min",      "m_max", "m_step", "v",
    "v_min",     "v_max", "v_steps", "e_min",   "e_max",      "e_steps", "r_max", "grid_points",
    "basis_size", "tol",  "out", "threads",
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits "key = value"; returns false for blank or comment-only lines.
bool split_assignment(std::string_view raw, int line, std::string& key, std::string& value)
{
    const auto hash = raw.find('#');
    const std::string_view text = trim(raw.substr(0, hash));
    if (text.empty()) {
        return false;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("expected 'key = value'", line);
    }
    key = std::string(trim(text.substr(0, eq)));
    value = std::string(trim(text.substr(eq + 1)));
    if (key.empty()) {
        throw ConfigError("missing key before '='", line);
    }
    if (std::find(std::begin(known_keys), std::end(known_keys), key) == std::end(known_keys)) {
        throw ConfigError("unknown key '" + key + "'", line);
    }
    if (value.empty()) {
        throw ConfigError("missing value for '" + key + "'", line);
    }
    return true;
}

class Reader
{
  public:
    explicit Reader(const Entries& entries) : entries_(entries) {}

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    int line(std::string_view key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    double real(std::string_view key, double fallback) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        const std::string& s = it->second.value;
        double x = 0.0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(x)) {
            throw ConfigError("'" + std::string(key) + "' expects a number, got '" + s + "'",
                              it->second.line);
        }
        return x;
    }

    double positive(std::string_view key, double fallback) const
    {
        const double x = real(key, fallback);
        if (!(x > 0.0)) {
            throw ConfigError("'" + std::string(key) + "' must be positive", line(key));
        }
        return x;
    }

    std::size_t count(std::string_view key, std::size_t fallback) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        const std::string& s = it->second.value;
        std::size_t n = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc{} || end != s.data() + s.size()) {
            throw ConfigError("'" + std::string(key) + "' expects a nonnegative integer, got '" +
                                  s + "'",
                              it->second.line);
        }
        return n;
    }

    std::string text(std::string_view key, std::string fallback) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? fallback : it->second.value;
    }

  private:
    const Entries& entries_;
};

SweepConfig build(const Entries& entries)
{
    const Reader r(entries);
    SweepConfig cfg;
    if (r.has("potential")) {
        try {
            cfg.potential = parse_kind(r.text("potential", {}));
        } catch (const ConfigError& e) {
            throw ConfigError(e.what(), r.line("potential"));
        }
    }
    cfg.a = r.positive("a", cfg.a);
    cfg.b = r.positive("b", cfg.b);

    const bool mass_grid = r.has("m_min") || r.has("m_max") || r.has("m_step");
    if (mass_grid && r.has("m")) {
        throw ConfigError("'m' cannot be combined with a mass grid", r.line("m"));
    }
    if (mass_grid) {
        for (const char* key : {"m_min", "m_max", "m_step"}) {
            if (!r.has(key)) {
                throw ConfigError(std::string("mass grid needs '") + key + "'");
            }
        }
        const double lo = r.positive("m_min", 0.0);
        const double hi = r.positive("m_max", 0.0);
        const double step = r.positive("m_step", 0.0);
        if (!(hi >= lo)) {
            throw ConfigError("m_max must not be below m_min", r.line("m_max"));
        }
        const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
        cfg.masses = linear_grid(lo, lo + static_cast<double>(n) * step, n);
    } else {
        cfg.masses = {r.positive("m", 1.0)};
    }

    const bool coupling_grid = r.has("v_min") || r.has("v_max") || r.has("v_steps");
    if (coupling_grid && r.has("v")) {
        throw ConfigError("'v' cannot be combined with a coupling grid", r.line("v"));
    }
    if (coupling_grid) {
        for (const char* key : {"v_min", "v_max", "v_steps"}) {
            if (!r.has(key)) {
                throw ConfigError(std::string("coupling grid needs '") + key + "'");
            }
        }
        const double lo = r.positive("v_min", 0.0);
        const double hi = r.positive("v_max", 0.0);
        const std::size_t steps = r.count("v_steps", 0);
        if (!(lo < hi)) {
            throw ConfigError("v_min must be below v_max", r.line("v_max"));
        }
        if (steps < 1) {
            throw ConfigError("v_steps must be at least 1", r.line("v_steps"));
        }
        cfg.couplings = linear_grid(lo, hi, steps);
    } else if (r.has("v")) {
        cfg.couplings = {r.positive("v", 0.0)};
    }

    if (r.has("e_min")) {
        cfg.e_min = r.real("e_min", 0.0);
    }
    if (r.has("e_max")) {
        cfg.e_max = r.real("e_max", 0.0);
    }
    if (cfg.e_min && cfg.e_max && !(*cfg.e_min < *cfg.e_max)) {
        throw ConfigError("e_min must be below e_max", r.line("e_max"));
    }
    cfg.e_steps = r.count("e_steps", cfg.e_steps);
    if (cfg.e_steps < 2) {
        throw ConfigError("e_steps must be at least 2", r.line("e_steps"));
    }

    cfg.r_max = r.real("r_max", cfg.r_max);
    if (cfg.r_max < 0.0) {
        throw ConfigError("r_max must be nonnegative", r.line("r_max"));
    }
    cfg.grid_points = r.count("grid_points", cfg.grid_points);
    if (cfg.grid_points < 64) {
        throw ConfigError("grid_points must be at least 64", r.line("grid_points"));
    }
    cfg.basis_size = r.count("basis_size", cfg.basis_size);
    if (cfg.basis_size < 32) {
        throw ConfigError("basis_size must be at least 32", r.line("basis_size"));
    }
    cfg.tol = r.positive("tol", cfg.tol);
    cfg.out = r.text("out", cfg.out);
    const std::size_t threads = r.count("threads", cfg.threads);
    if (threads < 1 || threads > 1024) {
        throw ConfigError("threads must be in [1, 1024]", r.line("threads"));
    }
    cfg.threads = static_cast<unsigned>(threads);
    return cfg;
}

}  // namespace

PotentialSpec SweepConfig::spec(double v) const
{
    switch (potential) {
        case PotentialKind::Exponential:
            return PotentialSpec::exponential(v);
        case PotentialKind::WoodsSaxon:
            return PotentialSpec::woods_saxon(v, a, b);
        case PotentialKind::Coulomb:
            return PotentialSpec::coulomb(v);
    }
    return {};
}

SpectralOptions SweepConfig::spectral_options() const
{
    SpectralOptions options;
    options.grid.r_max = r_max;
    options.grid.n_points = grid_points;
    return options;
}

BasisConfig SweepConfig::basis_config() const
{
    BasisConfig cfg;
    cfg.box_radius = r_max;
    cfg.basis_size = basis_size;
    return cfg;
}

ConvergenceControl SweepConfig::convergence_control() const
{
    ConvergenceControl control;
    control.tolerance = tol;
    return control;
}

std::vector<double> SweepConfig::e_grid() const
{
    const double m_top = *std::max_element(masses.begin(), masses.end());
    const double lo = e_min.value_or(-m_top);
    const double hi = e_max.value_or(m_top);
    if (!(lo < hi)) {
        throw ConfigError("empty e window");
    }
    return linear_grid(lo, hi, e_steps);
}

SweepConfig parse_config(std::string_view text, std::span<const std::string> overrides)
{
    Entries entries;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line;
        std::string key;
        std::string value;
        if (split_assignment(raw, line, key, value)) {
            if (entries.count(key) != 0) {
                throw ConfigError("duplicate key '" + key + "'", line);
            }
            entries[key] = {value, line};
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    for (const auto& assignment : overrides) {
        std::string key;
        std::string value;
        if (split_assignment(assignment, 0, key, value)) {
            entries[key] = {value, 0};
        }
    }
    return build(entries);
}

SweepConfig load_config(const std::string& path, std::span<const std::string> overrides)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), overrides);
}

void apply_environment(SweepConfig& cfg)
{
    const char* env = std::getenv("SALPETER_THREADS");
    if (env == nullptr || *env == '\0') {
        return;
    }
    const std::string_view s(env);
    unsigned n = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || end != s.data() + s.size() || n < 1 || n > 1024) {
        throw ConfigError("SALPETER_THREADS must be an integer in [1, 1024]");
    }
    cfg.threads = n;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t intervals)
{
    if (intervals == 0) {
        return {lo};
    }
    std::vector<double> out(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
    }
    out.back() = hi;
    return out;
}

}  // namespace semirel

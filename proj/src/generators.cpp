#include "mcde/generators.hpp"

#include "mcde/error.hpp"
#include "mcde/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mcde {

namespace {

struct KindName {
    DependencyKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 13> kNames = {{
    {DependencyKind::cross, "cross"},
    {DependencyKind::double_linear, "double_linear"},
    {DependencyKind::hourglass, "hourglass"},
    {DependencyKind::hypercube, "hypercube"},
    {DependencyKind::hypercube_graph, "hypercube_graph"},
    {DependencyKind::hypersphere, "hypersphere"},
    {DependencyKind::linear, "linear"},
    {DependencyKind::parabolic, "parabolic"},
    {DependencyKind::sine_p1, "sine_p1"},
    {DependencyKind::sine_p5, "sine_p5"},
    {DependencyKind::star, "star"},
    {DependencyKind::z_inversed, "z_inversed"},
    {DependencyKind::independent, "independent"},
}};

void fill_row(DependencyKind kind, CounterRng& rng, std::vector<double>& x) {
    const std::size_t d = x.size();
    const double t = rng.uniform();
    switch (kind) {
    case DependencyKind::linear:
        std::fill(x.begin(), x.end(), t);
        break;
    case DependencyKind::double_linear: {
        const double y = rng.uniform() < 0.5 ? t : t / 2.0;
        x[0] = t;
        std::fill(x.begin() + 1, x.end(), y);
        break;
    }
    case DependencyKind::parabolic:
        x[0] = t;
        std::fill(x.begin() + 1, x.end(), (2.0 * t - 1.0) * (2.0 * t - 1.0));
        break;
    case DependencyKind::sine_p1:
    case DependencyKind::sine_p5: {
        const double period = kind == DependencyKind::sine_p1 ? 1.0 : 5.0;
        x[0] = t;
        std::fill(x.begin() + 1, x.end(),
                  (1.0 + std::sin(2.0 * std::numbers::pi * period * t)) / 2.0);
        break;
    }
    case DependencyKind::z_inversed: {
        const auto segment = rng.uniform_int(0, 2);
        const double y = segment == 0 ? 0.0 : segment == 1 ? 1.0 : 1.0 - t;
        x[0] = t;
        std::fill(x.begin() + 1, x.end(), y);
        break;
    }
    case DependencyKind::cross:
        x[0] = t;
        for (std::size_t j = 1; j < d; ++j) x[j] = rng.sign() > 0 ? t : 1.0 - t;
        break;
    case DependencyKind::star: {
        const auto axis = static_cast<std::size_t>(rng.uniform_int(0, d - 1));
        const double direction = rng.sign();
        std::fill(x.begin(), x.end(), 0.5);
        x[axis] = 0.5 + direction * 0.5 * t;
        break;
    }
    case DependencyKind::hypercube: {
        const auto axis = static_cast<std::size_t>(rng.uniform_int(0, d - 1));
        const double face = rng.sign() > 0 ? 1.0 : 0.0;
        x[0] = t;
        for (std::size_t j = 1; j < d; ++j) x[j] = rng.uniform();
        x[axis] = face;
        break;
    }
    case DependencyKind::hypercube_graph: {
        const auto axis = static_cast<std::size_t>(rng.uniform_int(0, d - 1));
        for (std::size_t j = 0; j < d; ++j) x[j] = rng.sign() > 0 ? 1.0 : 0.0;
        x[axis] = t;
        break;
    }
    case DependencyKind::hypersphere: {
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& v : x) {
                v = rng.normal();
                norm += v * v;
            }
        } while (norm == 0.0);
        norm = std::sqrt(norm);
        for (auto& v : x) v = 0.5 + 0.5 * v / norm;
        break;
    }
    case DependencyKind::hourglass:
        x[0] = t;
        for (std::size_t j = 1; j < d; ++j) {
            x[j] = 0.5 + rng.sign() * std::abs(t - 0.5) * rng.uniform();
        }
        break;
    case DependencyKind::independent:
        x[0] = t;
        for (std::size_t j = 1; j < d; ++j) x[j] = rng.uniform();
        break;
    }
}

}  // namespace

std::string_view to_string(DependencyKind kind) noexcept {
    for (const auto& entry : kNames) {
        if (entry.kind == kind) return entry.name;
    }
    return "unknown";
}

DependencyKind parse_dependency_kind(std::string_view name) {
    for (const auto& entry : kNames) {
        if (entry.name == name) return entry.kind;
    }
    throw ArgumentError("unknown dependency kind '" + std::string(name) + "'");
}

Dataset generate(const DependencySpec& spec) {
    const std::size_t min_d = spec.kind == DependencyKind::independent ? 1 : 2;
    if (spec.d < min_d) {
        throw ArgumentError(std::string(to_string(spec.kind)) + " needs at least " +
                            std::to_string(min_d) + " dimensions");
    }
    if (spec.n < 1) throw ArgumentError("n must be at least 1");
    if (!(spec.noise_level >= 0.0) || !std::isfinite(spec.noise_level)) {
        throw ArgumentError("noise level must be a finite value >= 0");
    }

    CounterRng shape_rng(spec.seed, 0);
    CounterRng noise_rng(spec.seed, 1);
    std::vector<std::vector<double>> columns(spec.d, std::vector<double>(spec.n));
    std::vector<double> row(spec.d);
    for (std::size_t i = 0; i < spec.n; ++i) {
        fill_row(spec.kind, shape_rng, row);
        for (std::size_t j = 0; j < spec.d; ++j) {
            double v = row[j];
            if (spec.noise_level > 0.0) v += spec.noise_level * noise_rng.normal();
            columns[j][i] = v;
        }
    }
    return Dataset(std::move(columns));
}

Dataset discretise(const Dataset& ds, std::size_t omega) {
    if (omega < 1) throw ArgumentError("discretisation level must be at least 1");
    std::vector<std::vector<double>> columns(ds.cols());
    const double steps = static_cast<double>(omega - 1);
    for (std::size_t j = 0; j < ds.cols(); ++j) {
        const auto col = ds.column(j);
        columns[j].reserve(ds.rows());
        for (double v : col) {
            if (omega == 1) {
                columns[j].push_back(0.0);
            } else {
                columns[j].push_back(std::round(std::clamp(v, 0.0, 1.0) * steps) / steps);
            }
        }
    }
    return Dataset(std::move(columns), ds.column_names());
}

std::vector<double> noise_grid(std::size_t levels) {
    if (levels < 2) throw ArgumentError("noise grid needs at least 2 levels");
    std::vector<double> grid(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(levels - 1);
    }
    return grid;
}

}  // namespace mcde

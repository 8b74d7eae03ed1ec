#pragma once

#include "mcde/dataset.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcde {

enum class DependencyKind {
    cross,
    double_linear,
    hourglass,
    hypercube,
    hypercube_graph,
    hypersphere,
    linear,
    parabolic,
    sine_p1,
    sine_p5,
    star,
    z_inversed,
    independent,
};

/// The twelve benchmark dependencies, excluding `independent`.
inline constexpr std::array<DependencyKind, 12> kDependencies = {
    DependencyKind::cross,      DependencyKind::double_linear, DependencyKind::hourglass,
    DependencyKind::hypercube,  DependencyKind::hypercube_graph, DependencyKind::hypersphere,
    DependencyKind::linear,     DependencyKind::parabolic,     DependencyKind::sine_p1,
    DependencyKind::sine_p5,    DependencyKind::star,          DependencyKind::z_inversed,
};

std::string_view to_string(DependencyKind kind) noexcept;
/// Throws ArgumentError for an unknown name.
DependencyKind parse_dependency_kind(std::string_view name);

struct DependencySpec {
    DependencyKind kind = DependencyKind::independent;
    std::size_t n = 1000;
    std::size_t d = 3;
    double noise_level = 0.0;
    std::uint64_t seed = 0;
};

/// Draws n rows of the dependency on [0,1]^d and adds N(0, noise_level^2)
/// to every coordinate. Noise is not clipped.
///
/// Noiseless shapes, with t, u ~ U[0,1] and e a uniform sign:
///   linear          x_j = t
///   double_linear   x_0 = t, x_j = t or t/2 (one branch per row)
///   parabolic       x_0 = t, x_j = (2t - 1)^2
///   sine_p1/p5      x_0 = t, x_j = (1 + sin(2 pi P t)) / 2
///   z_inversed      x_0 = t, x_j = 0, 1 or 1 - t (one segment per row)
///   cross           x_0 = t, x_j = t or 1 - t (per coordinate)
///   star            centre + u * (facet midpoint - centre), one of 2d rays
///   hypercube       one coordinate pinned to 0 or 1, the rest uniform
///   hypercube_graph one coordinate uniform, the rest in {0, 1}
///   hypersphere     radius 0.5 around the centre, uniform direction
///   hourglass       x_0 = t, x_j = 0.5 + e |t - 0.5| u
///   independent     x_j ~ U[0,1] i.i.d.
Dataset generate(const DependencySpec& spec);

/// Rounds every value (clamped to [0,1]) to the nearest of omega evenly
/// spaced levels; omega = 1 maps everything to 0.
Dataset discretise(const Dataset& ds, std::size_t omega);

/// `levels` noise levels spaced linearly over [0, 1] (30 in the benchmark).
std::vector<double> noise_grid(std::size_t levels = 30);

}  // namespace mcde

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holoinv/invariants.hpp"

namespace holoinv {

struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct topology_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rectangular cell grid over [xmin,xmax] x [ymin,ymax], nx-by-ny
/// cells, at least 16 per axis. Cells are addressed (ix, iy) with
/// ix along x and iy along y (iy = 0 is the ymin row); sampling happens
/// at cell centers.
struct GridSpec {
    double xmin = -1.05, xmax = 1.05;
    double ymin = -1.05, ymax = 1.05;
    int nx = 1024, ny = 1024;

    double dx() const noexcept { return (xmax - xmin) / nx; }
    double dy() const noexcept { return (ymax - ymin) / ny; }
    double cell_diagonal() const noexcept;

    // Centers are taken relative to the grid midpoint, so a grid that
    // is symmetric about an axis mirrors its centers exactly in
    // floating point.
    Complex cell_center(int ix, int iy) const noexcept;

    void validate() const;  // throws std::domain_error

    /// Bounding box of the base domain, inflated 5% per side.
    static GridSpec cover(const BaseDomain& base, int nx = 1024, int ny = 1024);
};

/// Row-major boolean mask over a GridSpec.
class GridMask {
public:
    explicit GridMask(const GridSpec& spec);

    const GridSpec& spec() const noexcept { return spec_; }
    bool at(int ix, int iy) const { return cells_[index(ix, iy)] != 0; }
    void set(int ix, int iy, bool v) { cells_[index(ix, iy)] = v ? 1 : 0; }
    std::size_t count() const noexcept;  // number of true cells

private:
    std::size_t index(int ix, int iy) const;
    GridSpec spec_;
    std::vector<unsigned char> cells_;
};

/// Rasterize { q : dist(center, q) < radius } over the punctured
/// domain. A cell is true iff its center lies in the metric-valid
/// interior of the base, at least half a cell diagonal away from every
/// puncture, and at hyperbolic distance < radius from `center`.
/// Throws resolution_error unless every pairwise puncture distance and
/// every puncture-to-boundary distance exceeds 4 cell diagonals.
GridMask sample_metric_ball(const PuncturedDomain& domain, const Complex& center,
                            double radius, const GridSpec& grid);

/// Number of 4-connected components of the true cells.
int connected_component_count(const GridMask& mask);

struct TopologySummary {
    int components = 0;
    int holes = 0;  // false regions (8-connected) not touching the border
    bool simply_connected = false;
};

/// Components of the set under 4-connectivity, holes of its complement
/// under 8-connectivity — the Jordan-consistent pairing.
TopologySummary classify_topology(const GridMask& mask);

/// True iff the single component has no holes. Throws topology_error
/// when the mask does not have exactly one component.
bool is_simply_connected(const GridMask& mask);

/// Bisects for the radius at which the ball stops being simply
/// connected. Requires the ball simply connected at radius_lo and not
/// at radius_hi (else std::domain_error); `steps` bisection rounds.
double simple_connectivity_threshold(const PuncturedDomain& domain, const Complex& center,
                                     const GridSpec& grid, double radius_lo,
                                     double radius_hi, int steps = 20);

/// Text serialization: header lines (format tag, bounds, cell counts)
/// followed by run-length-encoded booleans in row-major order, runs
/// alternating false/true starting with false. LF line endings.
std::string encode_mask(const GridMask& mask);
GridMask decode_mask(std::string_view text);  // throws std::runtime_error on malformed input

/// SVG rendering, one unit per cell, y up. Mask cells are drawn dark
/// on white; heatmap cells on a 256-step grayscale ramp (dark = high),
/// NaN cells left as background.
std::string write_mask_svg(const GridMask& mask);
std::string write_value_svg(const GridSpec& spec, const std::vector<double>& values,
                            double vmin, double vmax);

}  // namespace holoinv

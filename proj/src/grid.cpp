#include "holoinv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace holoinv {

namespace {

constexpr double kMetricSlack = 1e-9;  // same slack as the annulus metric

double boundary_distance(const BaseDomain& base, const Complex& p) {
    const double m = std::abs(p);
    if (std::holds_alternative<UnitDisc>(base)) return 1.0 - m;
    const double r = std::get<Annulus>(base).r();
    return std::min(1.0 - m, m - r);
}

void append_rect(std::string& out, int x, int y, int w, int h, const char* fill) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\"/>\n",
                  x, y, w, h, fill);
    out += buf;
}

}  // namespace

double GridSpec::cell_diagonal() const noexcept {
    return std::hypot(dx(), dy());
}

Complex GridSpec::cell_center(int ix, int iy) const noexcept {
    // Offsets from the grid midpoint negate exactly under mirroring,
    // so symmetric grids get exactly symmetric sample points.
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    return {cx + (ix - 0.5 * (nx - 1)) * dx(), cy + (iy - 0.5 * (ny - 1)) * dy()};
}

void GridSpec::validate() const {
    if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) ||
        !std::isfinite(ymax) || !(xmax > xmin) || !(ymax > ymin))
        throw std::domain_error("GridSpec: bounds must be finite with positive extent");
    if (nx < 16 || ny < 16)
        throw std::domain_error("GridSpec: need at least 16 cells per axis");
}

GridSpec GridSpec::cover(const BaseDomain& base, int nx, int ny) {
    (void)base;  // both base domains have the closed unit disc as hull
    GridSpec spec;
    spec.xmin = spec.ymin = -1.05;
    spec.xmax = spec.ymax = 1.05;
    spec.nx = nx;
    spec.ny = ny;
    spec.validate();
    return spec;
}

GridMask::GridMask(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    cells_.assign(static_cast<std::size_t>(spec_.nx) * spec_.ny, 0);
}

std::size_t GridMask::index(int ix, int iy) const {
    if (ix < 0 || ix >= spec_.nx || iy < 0 || iy >= spec_.ny)
        throw std::out_of_range("GridMask: cell index out of range");
    return static_cast<std::size_t>(iy) * spec_.nx + ix;
}

std::size_t GridMask::count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

GridMask sample_metric_ball(const PuncturedDomain& domain, const Complex& center,
                            double radius, const GridSpec& grid) {
    grid.validate();
    if (!std::isfinite(radius) || !(radius > 0.0))
        throw std::domain_error("sample_metric_ball: radius must be finite and positive");
    if (!domain.contains(center))
        throw std::domain_error("sample_metric_ball: center must lie in the domain");

    const double diag = grid.cell_diagonal();
    const auto punctures = domain.punctures();
    for (std::size_t i = 0; i < punctures.size(); ++i) {
        if (!(boundary_distance(domain.base(), punctures[i]) > 4.0 * diag))
            throw resolution_error("sample_metric_ball: puncture closer than 4 cell "
                                   "diagonals to the domain boundary");
        for (std::size_t j = i + 1; j < punctures.size(); ++j)
            if (!(std::abs(punctures[i] - punctures[j]) > 4.0 * diag))
                throw resolution_error("sample_metric_ball: punctures closer than 4 cell "
                                       "diagonals apart");
    }

    GridMask mask(grid);
    const double half_diag = 0.5 * diag;
    // Compare on the tanh scale: tanh is strictly monotone, so
    // {c < radius} and {tanh c < tanh radius} are the same ball, and
    // the per-cell atanh is saved.
    const double t_radius = std::tanh(radius);

    auto paint = [&](auto&& in_interior, auto&& tanh_dist) {
        for (int iy = 0; iy < grid.ny; ++iy) {
            for (int ix = 0; ix < grid.nx; ++ix) {
                const Complex q = grid.cell_center(ix, iy);
                if (!in_interior(q)) continue;
                bool near_puncture = false;
                for (const Complex& p : punctures) {
                    if (std::abs(q - p) < half_diag) {
                        near_puncture = true;
                        break;
                    }
                }
                if (near_puncture) continue;
                if (tanh_dist(q) < t_radius) mask.set(ix, iy, true);
            }
        }
    };

    if (std::holds_alternative<UnitDisc>(domain.base())) {
        const DiscPoint c{center};
        paint([](const Complex& q) { return std::abs(q) < 1.0; },
              [&](const Complex& q) { return pseudo_hyperbolic(c, DiscPoint{q}); });
    } else {
        const Annulus dom = std::get<Annulus>(domain.base());
        paint(
            [&](const Complex& q) {
                const double m = std::abs(q);
                return m > dom.r() + kMetricSlack && m < 1.0 - kMetricSlack;
            },
            [&](const Complex& q) { return caratheodory_annulus(dom, center, q).tanh_scale; });
    }
    return mask;
}

namespace {

// 4-connected component labelling of the true cells; fills `label`
// with -1 for false cells, component ids 0.. otherwise.
int label_components(const GridMask& mask, std::vector<int>& label) {
    const int nx = mask.spec().nx, ny = mask.spec().ny;
    label.assign(static_cast<std::size_t>(nx) * ny, -1);
    int next = 0;
    std::vector<std::pair<int, int>> stack;
    for (int sy = 0; sy < ny; ++sy) {
        for (int sx = 0; sx < nx; ++sx) {
            if (!mask.at(sx, sy) || label[static_cast<std::size_t>(sy) * nx + sx] >= 0) continue;
            stack.push_back({sx, sy});
            label[static_cast<std::size_t>(sy) * nx + sx] = next;
            while (!stack.empty()) {
                const auto [x, y] = stack.back();
                stack.pop_back();
                constexpr int dx4[] = {1, -1, 0, 0};
                constexpr int dy4[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ux = x + dx4[k], uy = y + dy4[k];
                    if (ux < 0 || ux >= nx || uy < 0 || uy >= ny) continue;
                    auto& l = label[static_cast<std::size_t>(uy) * nx + ux];
                    if (l < 0 && mask.at(ux, uy)) {
                        l = next;
                        stack.push_back({ux, uy});
                    }
                }
            }
            ++next;
        }
    }
    return next;
}

// Flood the false cells 8-connectedly from the seeds already marked
// true in `seen`.
void flood_false_8(const GridMask& mask, std::vector<char>& seen,
                   std::vector<std::pair<int, int>>& stack) {
    const int nx = mask.spec().nx, ny = mask.spec().ny;
    while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        for (int ddy = -1; ddy <= 1; ++ddy) {
            for (int ddx = -1; ddx <= 1; ++ddx) {
                if (ddx == 0 && ddy == 0) continue;
                const int ux = x + ddx, uy = y + ddy;
                if (ux < 0 || ux >= nx || uy < 0 || uy >= ny) continue;
                auto& s = seen[static_cast<std::size_t>(uy) * nx + ux];
                if (!s && !mask.at(ux, uy)) {
                    s = 1;
                    stack.push_back({ux, uy});
                }
            }
        }
    }
}

}  // namespace

int connected_component_count(const GridMask& mask) {
    std::vector<int> label;
    return label_components(mask, label);
}

TopologySummary classify_topology(const GridMask& mask) {
    TopologySummary out;
    {
        std::vector<int> label;
        out.components = label_components(mask, label);
    }
    const int nx = mask.spec().nx, ny = mask.spec().ny;
    std::vector<char> seen(static_cast<std::size_t>(nx) * ny, 0);
    std::vector<std::pair<int, int>> stack;
    auto seed = [&](int x, int y) {
        auto& s = seen[static_cast<std::size_t>(y) * nx + x];
        if (!s && !mask.at(x, y)) {
            s = 1;
            stack.push_back({x, y});
        }
    };
    for (int x = 0; x < nx; ++x) {
        seed(x, 0);
        seed(x, ny - 1);
    }
    for (int y = 0; y < ny; ++y) {
        seed(0, y);
        seed(nx - 1, y);
    }
    flood_false_8(mask, seen, stack);
    // Any false region the border flood missed is a hole.
    out.holes = 0;
    for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
            if (mask.at(x, y) || seen[static_cast<std::size_t>(y) * nx + x]) continue;
            ++out.holes;
            seen[static_cast<std::size_t>(y) * nx + x] = 1;
            stack.push_back({x, y});
            flood_false_8(mask, seen, stack);
        }
    }
    out.simply_connected = out.components == 1 && out.holes == 0;
    return out;
}

bool is_simply_connected(const GridMask& mask) {
    const TopologySummary t = classify_topology(mask);
    if (t.components != 1)
        throw topology_error("is_simply_connected: mask has " + std::to_string(t.components) +
                             " components, need exactly 1");
    return t.holes == 0;
}

double simple_connectivity_threshold(const PuncturedDomain& domain, const Complex& center,
                                     const GridSpec& grid, double radius_lo, double radius_hi,
                                     int steps) {
    if (!(radius_lo > 0.0) || !(radius_hi > radius_lo) || !std::isfinite(radius_hi))
        throw std::domain_error("simple_connectivity_threshold: need 0 < radius_lo < radius_hi");
    if (steps < 1 || steps > 60)
        throw std::domain_error("simple_connectivity_threshold: steps must lie in [1, 60]");
    // An empty raster counts as simply connected (the true ball is a
    // tiny disc); more than one component counts as not.
    const auto sc = [&](double radius) {
        const TopologySummary t = classify_topology(sample_metric_ball(domain, center, radius, grid));
        if (t.components == 0) return true;
        return t.components == 1 && t.holes == 0;
    };
    if (!sc(radius_lo))
        throw std::domain_error("simple_connectivity_threshold: ball not simply connected "
                                "at radius_lo");
    if (sc(radius_hi))
        throw std::domain_error("simple_connectivity_threshold: ball still simply connected "
                                "at radius_hi");
    double lo = radius_lo, hi = radius_hi;
    for (int k = 0; k < steps; ++k) {
        const double mid = 0.5 * (lo + hi);
        (sc(mid) ? lo : hi) = mid;
    }
    return hi;
}

std::string encode_mask(const GridMask& mask) {
    const GridSpec& s = mask.spec();
    char head[256];
    std::snprintf(head, sizeof head, "gridmask v1\nbounds %.17g %.17g %.17g %.17g\ncells %d %d\n",
                  s.xmin, s.xmax, s.ymin, s.ymax, s.nx, s.ny);
    std::string out = head;
    out += "rle";
    // Runs alternate false/true starting with false; a leading true
    // cell yields an initial zero-length run.
    bool runval = false;
    long runlen = 0;
    const auto flush = [&] {
        out += ' ';
        out += std::to_string(runlen);
    };
    for (int iy = 0; iy < s.ny; ++iy) {
        for (int ix = 0; ix < s.nx; ++ix) {
            const bool v = mask.at(ix, iy);
            if (v == runval) {
                ++runlen;
            } else {
                flush();
                runval = !runval;
                runlen = 1;
            }
        }
    }
    flush();
    out += '\n';
    return out;
}

GridMask decode_mask(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag, version;
    in >> tag >> version;
    if (!in || tag != "gridmask" || version != "v1")
        throw std::runtime_error("decode_mask: not a gridmask v1 stream");
    GridSpec spec;
    in >> tag >> spec.xmin >> spec.xmax >> spec.ymin >> spec.ymax;
    if (!in || tag != "bounds") throw std::runtime_error("decode_mask: bad bounds line");
    in >> tag >> spec.nx >> spec.ny;
    if (!in || tag != "cells") throw std::runtime_error("decode_mask: bad cells line");
    try {
        spec.validate();
    } catch (const std::domain_error& e) {
        throw std::runtime_error(std::string("decode_mask: ") + e.what());
    }
    in >> tag;
    if (!in || tag != "rle") throw std::runtime_error("decode_mask: bad rle line");
    GridMask mask(spec);
    const long total = static_cast<long>(spec.nx) * spec.ny;
    long at = 0;
    bool runval = false;
    long runlen = 0;
    while (in >> runlen) {
        if (runlen < 0 || at + runlen > total)
            throw std::runtime_error("decode_mask: run lengths exceed the grid");
        if (runval)
            for (long k = at; k < at + runlen; ++k)
                mask.set(static_cast<int>(k % spec.nx), static_cast<int>(k / spec.nx), true);
        at += runlen;
        runval = !runval;
    }
    if (at != total)
        throw std::runtime_error("decode_mask: run lengths do not cover the grid");
    return mask;
}

std::string write_mask_svg(const GridMask& mask) {
    const GridSpec& s = mask.spec();
    char head[160];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %d %d\" "
                  "width=\"%d\" height=\"%d\" shape-rendering=\"crispEdges\">\n",
                  s.nx, s.ny, s.nx, s.ny);
    std::string out = head;
    append_rect(out, 0, 0, s.nx, s.ny, "#ffffff");
    for (int iy = 0; iy < s.ny; ++iy) {
        const int svg_y = s.ny - 1 - iy;  // mathematical y points up
        int run_start = -1;
        for (int ix = 0; ix <= s.nx; ++ix) {
            const bool v = ix < s.nx && mask.at(ix, iy);
            if (v && run_start < 0) run_start = ix;
            if (!v && run_start >= 0) {
                append_rect(out, run_start, svg_y, ix - run_start, 1, "#202020");
                run_start = -1;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::string write_value_svg(const GridSpec& spec, const std::vector<double>& values,
                            double vmin, double vmax) {
    spec.validate();
    if (values.size() != static_cast<std::size_t>(spec.nx) * spec.ny)
        throw std::domain_error("write_value_svg: value count must match the grid");
    if (!(vmax > vmin))
        throw std::domain_error("write_value_svg: need vmax > vmin");
    char head[160];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %d %d\" "
                  "width=\"%d\" height=\"%d\" shape-rendering=\"crispEdges\">\n",
                  spec.nx, spec.ny, spec.nx, spec.ny);
    std::string out = head;
    append_rect(out, 0, 0, spec.nx, spec.ny, "#ffffff");
    const auto level = [&](double v) -> int {  // -1 = background
        if (std::isnan(v)) return -1;
        const double u = (v - vmin) / (vmax - vmin);
        return std::clamp(static_cast<int>(std::lround(255.0 * u)), 0, 255);
    };
    char fill[8];
    for (int iy = 0; iy < spec.ny; ++iy) {
        const int svg_y = spec.ny - 1 - iy;
        int run_start = -1, run_level = -1;
        const auto flush = [&](int end) {
            if (run_start < 0) return;
            const int g = 255 - run_level;  // dark = high value
            std::snprintf(fill, sizeof fill, "#%02x%02x%02x", g, g, g);
            append_rect(out, run_start, svg_y, end - run_start, 1, fill);
            run_start = -1;
        };
        for (int ix = 0; ix <= spec.nx; ++ix) {
            const int lv =
                ix < spec.nx ? level(values[static_cast<std::size_t>(iy) * spec.nx + ix]) : -1;
            if (lv != run_level) {
                flush(ix);
                run_level = lv;
                if (lv >= 0) run_start = ix;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace holoinv

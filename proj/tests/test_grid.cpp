#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "holoinv/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

using namespace holoinv;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.nx = g.ny = 16;
    return g;
}

GridMask blob(const std::vector<std::pair<int, int>>& cells) {
    GridMask m{small_grid()};
    for (const auto& [x, y] : cells) m.set(x, y, true);
    return m;
}

}  // namespace

TEST_CASE("grid spec validates bounds and cell counts") {
    CHECK_NOTHROW(GridSpec{}.validate());
    GridSpec bad = small_grid();
    bad.nx = 15;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = small_grid();
    bad.xmax = bad.xmin;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = small_grid();
    bad.ymin = std::nan("");
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    const GridSpec cov = GridSpec::cover(BaseDomain{UnitDisc{}});
    CHECK(cov.xmin == -1.05);
    CHECK(cov.xmax == 1.05);
    CHECK(cov.nx == 1024);
    CHECK_THROWS_AS(GridSpec::cover(BaseDomain{UnitDisc{}}, 8, 8), std::domain_error);
}

TEST_CASE("cell centers mirror exactly across both axes") {
    const GridSpec g = GridSpec::cover(BaseDomain{UnitDisc{}}, 64, 64);
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            const Complex a = g.cell_center(ix, iy);
            const Complex ym = g.cell_center(ix, g.ny - 1 - iy);
            CHECK(a.imag() == -ym.imag());
            CHECK(a.real() == ym.real());
            const Complex xm = g.cell_center(g.nx - 1 - ix, iy);
            CHECK(a.real() == -xm.real());
        }
    }
    // center spacing is exactly dx along rows
    const Complex c0 = g.cell_center(10, 7), c1 = g.cell_center(11, 7);
    CHECK(c1.real() - c0.real() == doctest::Approx(g.dx()).epsilon(1e-12));
}

TEST_CASE("mask indexing is bounds checked") {
    GridMask m{small_grid()};
    CHECK(m.count() == 0);
    m.set(3, 5, true);
    CHECK(m.at(3, 5));
    CHECK(m.count() == 1);
    m.set(3, 5, false);
    CHECK(m.count() == 0);
    CHECK_THROWS_AS(m.at(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 16), std::out_of_range);
    CHECK_THROWS_AS(m.set(16, 0, true), std::out_of_range);
}

TEST_CASE("hand-built masks classify as expected") {
    SUBCASE("solid square") {
        GridMask m{small_grid()};
        for (int y = 3; y <= 6; ++y)
            for (int x = 3; x <= 6; ++x) m.set(x, y, true);
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 1);
        CHECK(t.holes == 0);
        CHECK(t.simply_connected);
        CHECK(is_simply_connected(m));
    }
    SUBCASE("square ring encloses one hole") {
        GridMask m{small_grid()};
        for (int y = 2; y <= 8; ++y)
            for (int x = 2; x <= 8; ++x)
                if (x == 2 || x == 8 || y == 2 || y == 8) m.set(x, y, true);
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 1);
        CHECK(t.holes == 1);
        CHECK_FALSE(t.simply_connected);
        CHECK_FALSE(is_simply_connected(m));
    }
    SUBCASE("two separated squares") {
        GridMask m{small_grid()};
        for (int y = 2; y <= 4; ++y)
            for (int x = 2; x <= 4; ++x) m.set(x, y, true);
        for (int y = 10; y <= 12; ++y)
            for (int x = 10; x <= 12; ++x) m.set(x, y, true);
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 2);
        CHECK(t.holes == 0);
        CHECK_FALSE(t.simply_connected);
        CHECK_THROWS_AS(is_simply_connected(m), topology_error);
    }
    SUBCASE("corner-touching cells are separate components") {
        const GridMask m = blob({{5, 5}, {6, 6}});
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 2);
        CHECK(t.holes == 0);
    }
    SUBCASE("a diagonal false line separates but never encloses") {
        // complement connectivity is 8-way, so the diagonal keeps the
        // outside connected (no hole) while splitting the set in two
        GridMask m{small_grid()};
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x)
                if (x != y) m.set(x, y, true);
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 2);
        CHECK(t.holes == 0);
    }
    SUBCASE("single cell") {
        const GridMask m = blob({{8, 8}});
        CHECK(is_simply_connected(m));
    }
    SUBCASE("empty mask") {
        GridMask m{small_grid()};
        const TopologySummary t = classify_topology(m);
        CHECK(t.components == 0);
        CHECK(t.holes == 0);
        CHECK_FALSE(t.simply_connected);
        CHECK_THROWS_AS(is_simply_connected(m), topology_error);
        CHECK(connected_component_count(m) == 0);
    }
}

TEST_CASE("metric balls grow monotonically") {
    const PuncturedDomain dom{UnitDisc{}, {}};
    const GridSpec g = GridSpec::cover(dom.base(), 64, 64);
    const Complex center{0.3, 0.0};
    const GridMask small = sample_metric_ball(dom, center, 0.5, g);
    const GridMask big = sample_metric_ball(dom, center, 0.9, g);
    CHECK(small.count() > 0);
    CHECK(big.count() > small.count());
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            if (small.at(ix, iy)) CHECK(big.at(ix, iy));
    // a plain disc ball is simply connected
    CHECK(is_simply_connected(big));
}

TEST_CASE("metric ball sampling validates its input") {
    const PuncturedDomain dom{UnitDisc{}, {{0.5, 0.0}}};
    const GridSpec g = GridSpec::cover(dom.base(), 64, 64);
    CHECK_THROWS_AS(sample_metric_ball(dom, {0.3, 0.0}, 0.0, g), std::domain_error);
    CHECK_THROWS_AS(sample_metric_ball(dom, {0.3, 0.0}, -1.0, g), std::domain_error);
    CHECK_THROWS_AS(sample_metric_ball(dom, {1.5, 0.0}, 0.5, g), std::domain_error);
    CHECK_THROWS_AS(sample_metric_ball(dom, {0.5, 0.0}, 0.5, g), std::domain_error);
}

TEST_CASE("under-resolved punctures are refused") {
    const GridSpec g = GridSpec::cover(BaseDomain{UnitDisc{}}, 64, 64);
    // 4 cell diagonals at 64x64 is about 0.186
    const PuncturedDomain close_pair{UnitDisc{},
                                     {{-0.5, 0.0}, {-0.5, 0.1}}};
    CHECK_THROWS_AS(sample_metric_ball(close_pair, {0.3, 0.0}, 0.5, g), resolution_error);
    const PuncturedDomain near_edge{UnitDisc{}, {{0.95, 0.0}}};
    CHECK_THROWS_AS(sample_metric_ball(near_edge, {0.3, 0.0}, 0.5, g), resolution_error);
    // the same pair resolves fine on a 512 grid
    const GridSpec fine = GridSpec::cover(BaseDomain{UnitDisc{}}, 512, 512);
    CHECK_NOTHROW(sample_metric_ball(close_pair, {0.3, 0.0}, 0.5, fine));
}

TEST_CASE("real centers and punctures give mirror-symmetric masks") {
    const PuncturedDomain dom{UnitDisc{}, {{0.5, 0.0}}};
    const GridSpec g = GridSpec::cover(dom.base(), 64, 64);
    const GridMask m = sample_metric_ball(dom, {0.3, 0.0}, 1.0, g);
    CHECK(m.count() > 0);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            CHECK(m.at(ix, iy) == m.at(ix, g.ny - 1 - iy));
}

TEST_CASE("disc threshold recovers the distance to the puncture") {
    const PuncturedDomain dom{UnitDisc{}, {{0.5, 0.0}}};
    const GridSpec g = GridSpec::cover(dom.base(), 256, 256);
    const double thr = simple_connectivity_threshold(dom, {0.0, 0.0}, g, 0.2, 1.3);
    CHECK(std::abs(thr - mu(0.5)) < 0.05);
}

TEST_CASE("disc threshold tracks the nearest of several punctures") {
    const PuncturedDomain dom{UnitDisc{}, {{0.5, 0.0}, {-0.4, 0.2}}};
    const GridSpec g = GridSpec::cover(dom.base(), 256, 256);
    const double rho = std::abs(Complex{-0.4, 0.2});
    const double thr = simple_connectivity_threshold(dom, {0.0, 0.0}, g, 0.2, 1.3);
    CHECK(std::abs(thr - mu(rho)) < 0.05);
}

TEST_CASE("annulus threshold sits at the wrap distance, not the puncture") {
    // around the hole the ball pinches shut at the far side of the
    // slit circle first; the puncture at -0.6 lies strictly beyond it
    const Annulus base{0.25};
    const PuncturedDomain dom{base, {{-0.6, 0.0}}};
    const GridSpec g = GridSpec::cover(dom.base(), 256, 256);
    const Complex z{0.5, 0.0};
    const double wrap = caratheodory_annulus(base, z, {-0.5, 0.0}).hyperbolic;
    const double to_puncture = caratheodory_annulus(base, z, {-0.6, 0.0}).hyperbolic;
    const double thr = simple_connectivity_threshold(dom, z, g, 2.0, 3.1);
    CHECK(std::abs(thr - wrap) < 0.01);
    CHECK(thr + 0.01 < to_puncture);
}

TEST_CASE("threshold bisection validates its bracket") {
    const PuncturedDomain punctured{UnitDisc{}, {{0.1, 0.0}}};
    const PuncturedDomain plain{UnitDisc{}, {}};
    const GridSpec g = GridSpec::cover(BaseDomain{UnitDisc{}}, 64, 64);
    CHECK_THROWS_AS(simple_connectivity_threshold(plain, {0.0, 0.0}, g, 0.5, 0.4),
                    std::domain_error);
    CHECK_THROWS_AS(simple_connectivity_threshold(plain, {0.0, 0.0}, g, 0.3, 0.8, 0),
                    std::domain_error);
    CHECK_THROWS_AS(simple_connectivity_threshold(plain, {0.0, 0.0}, g, 0.3, 0.8, 61),
                    std::domain_error);
    // an unpunctured ball never stops being simply connected
    CHECK_THROWS_AS(simple_connectivity_threshold(plain, {0.0, 0.0}, g, 0.3, 0.8),
                    std::domain_error);
    // lo already past the puncture
    CHECK_THROWS_AS(simple_connectivity_threshold(punctured, {0.0, 0.0}, g, 1.0, 2.0),
                    std::domain_error);
}

TEST_CASE("mask round trips through its text encoding") {
    GridMask m{small_grid()};
    for (int iy = 0; iy < 16; ++iy)
        for (int ix = 0; ix < 16; ++ix)
            if ((ix * 7 + iy * 3) % 5 < 2) m.set(ix, iy, true);
    const std::string text = encode_mask(m);
    CHECK(text.substr(0, 11) == "gridmask v1");
    CHECK(text.back() == '\n');
    CHECK(text.find('\r') == std::string::npos);
    const GridMask back = decode_mask(text);
    CHECK(back.spec().nx == 16);
    CHECK(back.spec().xmin == m.spec().xmin);
    for (int iy = 0; iy < 16; ++iy)
        for (int ix = 0; ix < 16; ++ix) CHECK(back.at(ix, iy) == m.at(ix, iy));
    // encoding is stable
    CHECK(encode_mask(back) == text);
}

TEST_CASE("malformed mask text is rejected") {
    const std::string good = encode_mask(GridMask{small_grid()});
    CHECK_THROWS_AS(decode_mask("gridmask v2\n"), std::runtime_error);
    CHECK_THROWS_AS(decode_mask("nonsense"), std::runtime_error);
    CHECK_THROWS_AS(decode_mask(good.substr(0, good.size() / 2)), std::runtime_error);
    CHECK_THROWS_AS(decode_mask(good + " 5"), std::runtime_error);
    std::string tampered = good;
    tampered.replace(tampered.find("cells 16 16"), 11, "cells 16 15");
    CHECK_THROWS_AS(decode_mask(tampered), std::runtime_error);
}

TEST_CASE("svg renderings are well formed") {
    GridMask m{small_grid()};
    for (int x = 4; x <= 9; ++x) m.set(x, 7, true);
    const std::string svg = write_mask_svg(m);
    CHECK(svg.rfind("<svg xmlns=", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 16 16\"") != std::string::npos);
    CHECK(svg.find("#202020") != std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

    std::vector<double> values(16 * 16, std::nan(""));
    values[3 * 16 + 4] = 0.0;
    values[3 * 16 + 5] = 0.5;
    values[3 * 16 + 6] = 1.0;
    const std::string heat = write_value_svg(small_grid(), values, 0.0, 1.0);
    CHECK(heat.find("#000000") != std::string::npos);  // high value, dark cell
    CHECK(heat.find("#7f7f7f") != std::string::npos);
    CHECK(heat.substr(heat.size() - 7) == "</svg>\n");
    CHECK_THROWS_AS(write_value_svg(small_grid(), values, 1.0, 1.0), std::domain_error);
    values.pop_back();
    CHECK_THROWS_AS(write_value_svg(small_grid(), values, 0.0, 1.0), std::domain_error);
}

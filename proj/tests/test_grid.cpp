#include <doctest.h>

#include <map>

#include "coflow/grid.hpp"
#include "coflow/state.hpp"

using namespace coflow;

TEST_CASE("baseline grid spacings") {
    const Grid g = make_grid(200, 30, 20, 3);
    CHECK(g.dz == doctest::Approx(0.1));
    CHECK(g.dr == doctest::Approx(0.1));
    CHECK(g.cells() == 6000);
    CHECK(g.rc(0) == doctest::Approx(0.05));
}

TEST_CASE("grid rejects bad domains") {
    CHECK_THROWS_AS(make_grid(0, 10, 20, 3), ConfigError);
    CHECK_THROWS_AS(make_grid(10, 10, -1, 3), ConfigError);
    CHECK_THROWS_AS(make_grid(10, 10, 20, 1.0), ConfigError);
    CHECK_THROWS_AS(make_grid(10, 10, 20, 0.5), ConfigError);
}

TEST_CASE("corner tie-breaks") {
    const Grid g = make_grid(1, 1, 1, 2);
    CHECK(classify_boundary(g, 0, 0) == Segment::inlet_inner);
    CHECK(classify_boundary(g, 0, 2) == Segment::inlet_outer);
    CHECK(classify_boundary(g, 1, 0) == Segment::outlet);
    CHECK(classify_boundary(g, 1, 2) == Segment::wall);
}

TEST_CASE("segment membership along the inlet") {
    const Grid g = make_grid(10, 10, 20, 3);
    CHECK(classify_boundary(g, 0, 1.5) == Segment::inlet_outer);
    CHECK(classify_boundary(g, 0, 0.3) == Segment::inlet_inner);
    CHECK(classify_boundary(g, 20, 0.3) == Segment::outlet);
    CHECK(classify_boundary(g, 5 * g.dz, 3.0) == Segment::wall);
    CHECK(classify_boundary(g, 5 * g.dz, 0.0) == Segment::axis);
    CHECK_THROWS(classify_boundary(g, 10, 1.5));
}

TEST_CASE("boundary classification partitions the perimeter") {
    const Grid g = make_grid(7, 5, 20, 3);
    const auto verts = boundary_vertices(g);
    CHECK((int)verts.size() == 2 * (g.nz + 1) + 2 * (g.nr + 1) - 4);
    std::map<std::pair<Real, Real>, int> seen;
    for (const auto& v : verts) seen[{v.z, v.r}]++;
    for (const auto& [pos, count] : seen) CHECK(count == 1);
}

TEST_CASE("material interpolation") {
    CHECK(interpolate_material(1.0, 10.0) == doctest::Approx(10.0));
    CHECK(interpolate_material(-2.0, 10.0) == doctest::Approx(1.0));
    CHECK(interpolate_material(0.0, 0.5) == doctest::Approx(0.75));
    // monotone on [-1,1], constant outside
    Real prev = interpolate_material(-1.0, 4.0);
    for (Real phi = -0.9; phi <= 1.0; phi += 0.1) {
        const Real v = interpolate_material(phi, 4.0);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(interpolate_material(1.5, 4.0) == interpolate_material(1.0, 4.0));
    CHECK(interpolate_material(-1.5, 0.3) == interpolate_material(-1.0, 0.3));
    for (Real phi : {-3.0, -0.4, 0.9, 5.0}) {
        const Real v = interpolate_material(phi, 7.0);
        CHECK(v >= 1.0);
        CHECK(v <= 7.0);
    }
}

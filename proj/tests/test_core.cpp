#include <doctest.h>

#include <random>

#include "stdcx/core.hpp"

using namespace stdcx;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng, int labels, int generators) {
    FaceSet gens;
    for (int g = 0; g < generators; ++g) {
        std::vector<int> face;
        for (int v = 1; v <= labels; ++v)
            if (rng() & 1) face.push_back(v);
        gens.insert(FiniteSet(face));
    }
    return make_complex(gens);
}

}  // namespace

TEST_CASE("FiniteSet basics") {
    FiniteSet s{4, 2};
    CHECK(s.elements() == std::vector<int>{2, 4});
    CHECK(s.to_string() == "{2,4}");
    CHECK(s.contains(2));
    CHECK(!s.contains(3));
    CHECK(s.with(3).to_string() == "{2,3,4}");
    CHECK(s.without(2).to_string() == "{4}");
    CHECK(FiniteSet{}.to_string() == "{}");
    CHECK(set_union(FiniteSet{1, 2}, FiniteSet{2, 5}) == FiniteSet{1, 2, 5});
    CHECK(set_intersection(FiniteSet{1, 2}, FiniteSet{2, 5}) == FiniteSet{2});
    CHECK(set_difference(FiniteSet{1, 2}, FiniteSet{2, 5}) == FiniteSet{1});
    CHECK(FiniteSet{2}.subset_of(FiniteSet{1, 2, 3}));
    CHECK_THROWS_AS(FiniteSet{0}, std::invalid_argument);
    CHECK_THROWS_AS(FiniteSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSet{}.max(), std::domain_error);
}

TEST_CASE("make_complex closure") {
    CHECK(make_complex({}) == SimplicialComplex{});
    CHECK(make_complex({}).empty());

    SimplicialComplex k = make_complex({FiniteSet{2, 4}});
    CHECK(k.faces() == FaceSet{FiniteSet{}, FiniteSet{2}, FiniteSet{4}, FiniteSet{2, 4}});

    FaceSet closed{FiniteSet{}, FiniteSet{2}, FiniteSet{3}};
    CHECK(make_complex(closed).faces() == closed);  // idempotence
}

TEST_CASE("cone") {
    SimplicialComplex k = make_complex({FiniteSet{2}, FiniteSet{3}});
    SimplicialComplex coned = cone(4, k);
    CHECK(coned.faces() == FaceSet{FiniteSet{}, FiniteSet{2}, FiniteSet{3}, FiniteSet{4},
                                   FiniteSet{2, 4}, FiniteSet{3, 4}});
    CHECK(coned.size() == 2 * k.size());

    CHECK(cone(1, SimplicialComplex{}).empty());

    SimplicialComplex point = make_complex({FiniteSet{}});
    CHECK(cone(7, point).faces() == FaceSet{FiniteSet{}, FiniteSet{7}});

    CHECK_THROWS_AS(cone(2, k), std::invalid_argument);
}

TEST_CASE("union and intersection") {
    SimplicialComplex a = make_complex({FiniteSet{2}});
    SimplicialComplex b = make_complex({FiniteSet{3}});
    CHECK(complex_union(a, b).faces() == FaceSet{FiniteSet{}, FiniteSet{2}, FiniteSet{3}});
    CHECK(complex_intersection(a, b).faces() == FaceSet{FiniteSet{}});
    CHECK(complex_intersection(a, a) == a);
}

TEST_CASE("f_vector") {
    SimplicialComplex k = make_complex({FiniteSet{2, 4}, FiniteSet{3, 4}});
    CHECK(k.f_vector() == std::vector<std::size_t>{1, 3, 2});
    CHECK(SimplicialComplex{}.f_vector().empty());
    CHECK(make_complex({FiniteSet{}}).f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("slice") {
    PointConfig v(FiniteSet{1, 2}, {{1, 0}, {0, 1}});
    PointConfig v0 = slice(v, 0);
    CHECK(v0.coords() == FiniteSet{1});
    CHECK(v0.points() == std::set<Point>{{1}});
    CHECK(slice(v, 1).points() == std::set<Point>{{0}});

    PointConfig w(FiniteSet{1, 2}, {{1, 1}});
    CHECK(slice(w, 0).empty());

    CHECK_THROWS_AS(slice(PointConfig{}, 0), std::invalid_argument);
}

TEST_CASE("reflect") {
    PointConfig v(FiniteSet{1, 2}, {{1, 0}, {0, 1}});
    CHECK(reflect(v, 1).points() == std::set<Point>{{0, 0}, {1, 1}});
    CHECK(reflect(reflect(v, 1), 1) == v);
    CHECK_THROWS_AS(reflect(v, 3), std::invalid_argument);
}

TEST_CASE("core properties on random complexes and configs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SimplicialComplex k = random_complex(rng, 6, 3);
        CHECK(k.is_downward_closed());
        CHECK(make_complex(k.faces()) == k);

        SimplicialComplex coned = cone(9, k);
        CHECK(coned.is_downward_closed());
        CHECK(coned.size() == 2 * k.size());

        SimplicialComplex other = random_complex(rng, 6, 3);
        CHECK(complex_union(k, other).is_downward_closed());
        CHECK(complex_intersection(k, other).is_downward_closed());

        std::size_t total = 0;
        for (std::size_t count : k.f_vector()) total += count;
        CHECK(total == k.size());
    }

    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::set<Point> pts;
        int want = static_cast<int>(rng() % 10);
        while (static_cast<int>(pts.size()) < want) {
            Point p(static_cast<std::size_t>(n));
            for (auto& bit : p) bit = static_cast<std::uint8_t>(rng() & 1);
            pts.insert(std::move(p));
        }
        PointConfig v(FiniteSet::range(1, n), pts);
        CHECK(slice(v, 0).size() + slice(v, 1).size() == v.size());
        for (int i = 1; i <= n; ++i) {
            CHECK(reflect(v, i).size() == v.size());
            CHECK(reflect(reflect(v, i), i) == v);
        }
    }
}

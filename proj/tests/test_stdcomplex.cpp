#include <doctest.h>

#include <random>

#include "stdcx/oracle.hpp"
#include "stdcx/stdcomplex.hpp"

using namespace stdcx;

namespace {

const FaceSet kU24Faces{FiniteSet{},     FiniteSet{2},    FiniteSet{3},
                        FiniteSet{4},    FiniteSet{2, 4}, FiniteSet{3, 4}};

}  // namespace

TEST_CASE("configuration recursion base cases") {
    CHECK(lex_standard_complex(PointConfig{}).empty());
    CHECK(lex_standard_complex(PointConfig(FiniteSet{1, 2}, {})).empty());

    // One point, any bits.
    CHECK(lex_standard_complex(PointConfig(FiniteSet{1, 2, 3}, {{1, 0, 1}})).faces() ==
          FaceSet{FiniteSet{}});
    CHECK(lex_standard_complex(PointConfig(FiniteSet{}, {Point{}})).faces() ==
          FaceSet{FiniteSet{}});
}

TEST_CASE("configuration recursion agrees with hand elimination") {
    PointConfig v(FiniteSet{1, 2}, {{1, 0}, {0, 1}});
    CHECK(lex_standard_complex(v).faces() == FaceSet{FiniteSet{}, FiniteSet{2}});
}

TEST_CASE("matroid recursion values") {
    // Rank-0 matroids on empty or all-loop groundsets.
    CHECK(lex_standard_complex(uniform_matroid(0, 0)).faces() == FaceSet{FiniteSet{}});
    CHECK(lex_standard_complex(uniform_matroid(3, 0)).faces() == FaceSet{FiniteSet{}});

    // Unrolled by hand: U_{1,3} splits into U_{1,2} and the all-loop minor.
    CHECK(lex_standard_complex(uniform_matroid(3, 1)).faces() ==
          FaceSet{FiniteSet{}, FiniteSet{2}, FiniteSet{3}});

    CHECK(lex_standard_complex(uniform_matroid(4, 2)).faces() == kU24Faces);
    CHECK(lex_standard_complex(uniform_matroid(4, 2)).f_vector() ==
          std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("lambda tables, hand unrolled") {
    BijectionTable u12 = lambda_table(uniform_matroid(2, 1));
    CHECK(u12.entries == std::map<FiniteSet, FiniteSet>{{FiniteSet{1}, FiniteSet{}},
                                                        {FiniteSet{2}, FiniteSet{2}}});

    for (int n = 1; n <= 4; ++n) {
        BijectionTable free_table = lambda_table(uniform_matroid(n, n));
        CHECK(free_table.entries ==
              std::map<FiniteSet, FiniteSet>{{FiniteSet::range(1, n), FiniteSet{}}});
    }

    BijectionTable u24 = lambda_table(uniform_matroid(4, 2));
    std::map<FiniteSet, FiniteSet> expected{
        {FiniteSet{1, 2}, FiniteSet{}},     {FiniteSet{1, 3}, FiniteSet{3}},
        {FiniteSet{2, 3}, FiniteSet{2}},    {FiniteSet{1, 4}, FiniteSet{4}},
        {FiniteSet{2, 4}, FiniteSet{2, 4}}, {FiniteSet{3, 4}, FiniteSet{3, 4}}};
    CHECK(u24.entries == expected);
    CHECK(u24.face_set() == kU24Faces);
}

TEST_CASE("lambda_of_basis matches the table without building it") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r <= n; ++r) {
            Matroid m = uniform_matroid(n, r);
            BijectionTable table = lambda_table(m);
            for (const FiniteSet& b : m.bases()) CHECK(lambda_of_basis(m, b) == table.at(b));
        }
    }
    CHECK_THROWS_AS(lambda_of_basis(uniform_matroid(3, 1), FiniteSet{1, 2}),
                    std::invalid_argument);
}

TEST_CASE("mapping cone decomposition") {
    MappingConeParts parts = mapping_cone_decomposition(uniform_matroid(4, 2));
    FaceSet s13{FiniteSet{}, FiniteSet{2}, FiniteSet{3}};
    CHECK(parts.deletion_part.faces() == s13);
    CHECK(parts.contraction_part.faces() == s13);
    CHECK(parts.intersection.faces() == s13);

    MappingConeParts u12 = mapping_cone_decomposition(uniform_matroid(2, 1));
    CHECK(u12.deletion_part.faces() == FaceSet{FiniteSet{}});
    CHECK(u12.contraction_part.faces() == FaceSet{FiniteSet{}});
    CHECK(u12.intersection.faces() == FaceSet{FiniteSet{}});

    CHECK_THROWS_WITH_AS(mapping_cone_decomposition(uniform_matroid(2, 2)),
                         doctest::Contains("degenerate"), std::invalid_argument);
}

TEST_CASE("recursion invariants on uniform matroids") {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            Matroid m = uniform_matroid(n, r);
            SimplicialComplex s = lex_standard_complex(m);
            CHECK(s.size() == m.basis_count());
            CHECK(s.is_subcomplex_of(independence_complex(m)));
            CHECK(s == lex_standard_complex(dual(m)));
            CHECK(s == lex_standard_complex(basis_configuration(m)));
            CHECK(s == oracle::standard_complex(basis_configuration(m),
                                                oracle::TermOrder::lex()));
        }
    }
}

TEST_CASE("config recursion equals oracle on random configurations") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::set<Point> pts;
        std::uint64_t want = rng() % 16;
        while (pts.size() < want && pts.size() < (1ull << n)) {
            Point p(static_cast<std::size_t>(n));
            for (auto& bit : p) bit = static_cast<std::uint8_t>(rng() & 1);
            pts.insert(std::move(p));
        }
        PointConfig config(FiniteSet::range(1, n), pts);
        SimplicialComplex rec = lex_standard_complex(config);
        CHECK(rec == oracle::standard_complex(config, oracle::TermOrder::lex()));
        CHECK(rec.size() == config.size());
        for (int i = 1; i <= n; ++i)
            CHECK(rec == lex_standard_complex(reflect(config, i)));
    }
}

TEST_CASE("reflection at every coordinate reaches the dual configuration") {
    Matroid m = uniform_matroid(4, 2);
    PointConfig v = basis_configuration(m);
    for (int i : m.groundset()) v = reflect(v, i);
    CHECK(v == basis_configuration(dual(m)));
}

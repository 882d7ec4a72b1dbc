#include <doctest.h>

#include <random>

#include "stdcx/matroid.hpp"
#include "stdcx/oracle.hpp"

using namespace stdcx;
using oracle::TermOrder;

TEST_CASE("term order comparisons") {
    TermOrder lex = TermOrder::lex();
    // x1 vs x2: the smaller label wins.
    CHECK(oracle::compare(lex, FiniteSet{1}, FiniteSet{2}) == 1);
    // Divisibility implies comparability: x2*x3 > x2.
    CHECK(oracle::compare(lex, FiniteSet{2, 3}, FiniteSet{2}) == 1);
    // 1 is minimal.
    CHECK(oracle::compare(lex, FiniteSet{}, FiniteSet{5}) == -1);
    CHECK(oracle::compare(lex, FiniteSet{2}, FiniteSet{2}) == 0);

    TermOrder grlex = TermOrder::grlex();
    // Degree dominates under grlex ...
    CHECK(oracle::compare(grlex, FiniteSet{2, 3}, FiniteSet{1}) == 1);
    // ... but lex breaks degree ties.
    CHECK(oracle::compare(grlex, FiniteSet{1, 3}, FiniteSet{2, 3}) == 1);
    // Under lex the degree comparison flips for these supports.
    CHECK(oracle::compare(lex, FiniteSet{2, 3}, FiniteSet{1}) == -1);
}

TEST_CASE("term order axioms on random supports") {
    std::mt19937_64 rng(11);
    auto random_support = [&]() {
        std::vector<int> v;
        for (int i = 1; i <= 6; ++i)
            if (rng() & 1) v.push_back(i);
        return FiniteSet(v);
    };
    for (TermOrder order : {TermOrder::lex(), TermOrder::grlex()}) {
        for (int trial = 0; trial < 200; ++trial) {
            FiniteSet a = random_support(), b = random_support(), c = random_support();
            int ab = oracle::compare(order, a, b);
            CHECK(oracle::compare(order, b, a) == -ab);
            CHECK((ab == 0) == (a == b));
            // 0 ≤ x^alpha: 1 is the minimum.
            CHECK(oracle::compare(order, FiniteSet{}, a) <= 0);
            // Multiplicative monotonicity on disjoint-support products.
            if (ab < 0) {
                FiniteSet extra = set_difference(c, set_union(a, b));
                CHECK(oracle::compare(order, set_union(a, extra), set_union(b, extra)) < 0);
            }
        }
    }
}

TEST_CASE("standard monomials by hand elimination") {
    // Two points: eval vectors of 1 and x2 are (1,1) and (0,1), independent.
    PointConfig v(FiniteSet{1, 2}, {{1, 0}, {0, 1}});
    CHECK(oracle::standard_monomials(v, TermOrder::lex()) ==
          std::vector<MonomialKey>{FiniteSet{}, FiniteSet{2}});

    // Three unit vectors: 1, x3, x2.
    PointConfig w(FiniteSet{1, 2, 3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(oracle::standard_monomials(w, TermOrder::lex()) ==
          std::vector<MonomialKey>{FiniteSet{}, FiniteSet{3}, FiniteSet{2}});

    PointConfig single(FiniteSet{1, 2, 3}, {{1, 0, 1}});
    CHECK(oracle::standard_monomials(single, TermOrder::lex()) ==
          std::vector<MonomialKey>{FiniteSet{}});

    CHECK(oracle::standard_monomials(PointConfig{}, TermOrder::lex()).empty());
}

TEST_CASE("standard complex") {
    PointConfig v(FiniteSet{1, 2}, {{1, 0}, {0, 1}});
    CHECK(oracle::standard_complex(v, TermOrder::lex()).faces() ==
          FaceSet{FiniteSet{}, FiniteSet{2}});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::set<Point> pts;
        std::uint64_t want = rng() % 12;
        while (pts.size() < want && pts.size() < (1ull << n)) {
            Point p(static_cast<std::size_t>(n));
            for (auto& bit : p) bit = static_cast<std::uint8_t>(rng() & 1);
            pts.insert(std::move(p));
        }
        PointConfig config(FiniteSet::range(1, n), pts);
        for (TermOrder order : {TermOrder::lex(), TermOrder::grlex()}) {
            SimplicialComplex s = oracle::standard_complex(config, order);
            CHECK(s.size() == config.size());        // |std| = |V|
            CHECK(s.is_downward_closed());           // divisibility closure
        }
    }
}

TEST_CASE("coordinate cap refusal") {
    // Empty V short-circuits; one point forces the scan machinery.
    std::set<Point> pts{Point(25, 0)};
    PointConfig big(FiniteSet::range(1, 25), pts);
    CHECK_THROWS_AS(oracle::standard_monomials(big, TermOrder::lex()),
                    ResourceLimitError);
}

TEST_CASE("grlex differs from lex on a witness config") {
    // Hand elimination: after 1, x3, x2 the vectors of x2*x3 and x1 both
    // extend the span, so the scan order decides the fourth face.
    PointConfig v(FiniteSet{1, 2, 3},
                  {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    SimplicialComplex lex_complex = oracle::standard_complex(v, TermOrder::lex());
    SimplicialComplex grlex_complex = oracle::standard_complex(v, TermOrder::grlex());
    CHECK(lex_complex.faces() ==
          FaceSet{FiniteSet{}, FiniteSet{2}, FiniteSet{3}, FiniteSet{2, 3}});
    CHECK(grlex_complex.faces() ==
          FaceSet{FiniteSet{}, FiniteSet{1}, FiniteSet{2}, FiniteSet{3}});
    CHECK(!(lex_complex == grlex_complex));
}

TEST_CASE("oracle reflection invariance for both orders") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::set<Point> pts;
        std::uint64_t want = rng() % 10;
        while (pts.size() < want && pts.size() < (1ull << n)) {
            Point p(static_cast<std::size_t>(n));
            for (auto& bit : p) bit = static_cast<std::uint8_t>(rng() & 1);
            pts.insert(std::move(p));
        }
        PointConfig config(FiniteSet::range(1, n), pts);
        for (TermOrder order : {TermOrder::lex(), TermOrder::grlex()}) {
            SimplicialComplex base = oracle::standard_complex(config, order);
            for (int i = 1; i <= n; ++i)
                CHECK(base == oracle::standard_complex(reflect(config, i), order));
        }
    }
}

#include <random>
#include <vector>

#include <doctest.h>

#include "cloven/complex.hpp"
#include "cloven/homology.hpp"
#include "cloven/report.hpp"

using namespace cloven;

TEST_CASE("differential of the three-cell arity") {
    const CellComplex full = build_full_complex(Arity(2, {1, 0}));
    REQUIRE(full.degree_count() == 2);
    CHECK(full.size_at(0) == 2);
    CHECK(full.size_at(1) == 1);
    CHECK(rank_of(full.delta[0]) == 1);
    CHECK(d_squared_is_zero(full));
}

TEST_CASE("differential of the triangle arity") {
    const CellComplex full = build_full_complex(Arity(3, {0, 0, 0}));
    REQUIRE(full.degree_count() == 3);
    CHECK(full.size_at(0) == 3);
    CHECK(full.size_at(1) == 3);
    CHECK(full.size_at(2) == 1);
    CHECK(rank_of(full.delta[0]) == 2);
    CHECK(rank_of(full.delta[1]) == 1);
    CHECK(d_squared_is_zero(full));
}

TEST_CASE("splitting off the bivalent-free subcomplex") {
    SUBCASE("two-output base case: no bivalent-free cells below the top") {
        const CellComplex full = build_full_complex(Arity(2, {0, 0}));
        const auto [y, clov] = split_y_and_clov(full);
        CHECK(y.total_cells() == 0);
        CHECK(clov.total_cells() == 1);
    }
    SUBCASE("three-cell arity") {
        const CellComplex full = build_full_complex(Arity(2, {1, 0}));
        const auto [y, clov] = split_y_and_clov(full);
        CHECK(y.total_cells() == 1);
        CHECK(y.size_at(0) == 1);  // re-graded by s - (k-1)
        CHECK(clov.total_cells() == 2);
        CHECK(clov.size_at(0) == 2);
    }
    SUBCASE("triangle arity") {
        const CellComplex full = build_full_complex(Arity(3, {0, 0, 0}));
        const auto [y, clov] = split_y_and_clov(full);
        CHECK(y.total_cells() == 1);
        CHECK(clov.total_cells() == 6);
    }
}

TEST_CASE("split bookkeeping holds degreewise on every small arity") {
    for (const Arity& a : arity_grid(6)) {
        CAPTURE(a.to_string());
        const CellComplex full = build_full_complex(a);
        const auto [y, clov] = split_y_and_clov(full);
        CHECK(d_squared_is_zero(full));
        CHECK(d_squared_is_zero(y));
        CHECK(d_squared_is_zero(clov));
        for (int s = 0; s < full.degree_count(); ++s) {
            const int sy = s - (a.k - 1);
            CHECK(full.size_at(s) == y.size_at(sy) + clov.size_at(s));
        }
        for (const auto& m : full.delta)
            for (const auto& [r, c, v] : m.entries)
                CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("subfamily complexes of named families") {
    SUBCASE("the unique family of the three-cell arity") {
        const CellComplex full = build_full_complex(Arity(2, {1, 0}));
        const CellComplex sub = subfamily_complex(full, {CutClass(0, 2)});
        CHECK(sub.total_cells() == 1);
        CHECK(d_squared_is_zero(sub));
    }
    SUBCASE("a two-class family of the triangle arity") {
        const CellComplex full = build_full_complex(Arity(3, {0, 0, 0}));
        const CellComplex sub = subfamily_complex(full, {CutClass(0, 1), CutClass(1, 2)});
        CHECK(sub.total_cells() == 1);
    }
    SUBCASE("a class no cell realizes gives the empty complex") {
        const CellComplex full = build_full_complex(Arity(2, {1, 0}));
        CHECK(subfamily_complex(full, {CutClass(0, 1)}).empty());
    }
    SUBCASE("the amortized extractor matches the direct construction") {
        const CellComplex full = build_full_complex(Arity(3, {1, 1, 0}));
        const SubfamilyExtractor ex(full);
        for (const CutClass& c : full.class_universe) {
            const CellComplex direct = subfamily_complex(full, {c});
            const CellComplex fast = ex.extract({c});
            CHECK(direct.basis == fast.basis);
            for (int s = 0; s < direct.degree_count(); ++s)
                CHECK(direct.delta[s].entries == fast.delta[s].entries);
        }
    }
}

TEST_CASE("incidence signs") {
    // A cell with two vertices has a single face; its sign is +1 because
    // contraction preserves the anchored vertex order.
    const PlanarTreeCell cell = decode_key("(L0>(L1L2))");
    REQUIRE(cell.edges.size() == 1);
    CHECK(sign_of(cell, 0) == 1);
}

TEST_CASE("cohomology is invariant under flipping basis signs") {
    // Negating a basis vector negates its row and column of the
    // differential; all homology output must be unchanged.
    std::mt19937 rng(20260826);
    for (const Arity& a : {Arity(3, {1, 0, 0}), Arity(2, {2, 1}), Arity(4, {0, 1, 0, 0})}) {
        CAPTURE(a.to_string());
        const CellComplex full = build_full_complex(a);
        CellComplex flipped = full;
        std::vector<std::vector<int>> sign(full.degree_count());
        for (int s = 0; s < full.degree_count(); ++s) {
            sign[s].resize(full.basis[s].size());
            for (auto& x : sign[s])
                x = rng() % 2 ? 1 : -1;
        }
        for (int s = 0; s + 1 < full.degree_count(); ++s)
            for (auto& [r, c, v] : flipped.delta[s].entries)
                v *= sign[s + 1][r] * sign[s][c];
        CHECK(d_squared_is_zero(flipped));
        const HomologySummary h0 = cohomology(full);
        const HomologySummary h1 = cohomology(flipped);
        CHECK(h0.betti == h1.betti);
        CHECK(h0.torsion == h1.torsion);
    }
}

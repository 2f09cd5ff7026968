#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <doctest.h>

#include "cloven/cuts.hpp"
#include "cloven/enumerate.hpp"
#include "cloven/nerve.hpp"
#include "cloven/report.hpp"

using namespace cloven;

namespace {

std::multiset<std::multiset<int>> as_multisets(const std::vector<std::vector<int>>& regs) {
    std::multiset<std::multiset<int>> out;
    for (const auto& r : regs)
        out.insert(std::multiset<int>(r.begin(), r.end()));
    return out;
}

}  // namespace

TEST_CASE("valid cut classes of small arities") {
    CHECK(valid_classes(Arity(2, {0, 0})) == std::vector<CutClass>{CutClass(0, 1)});
    CHECK(valid_classes(Arity(2, {1, 1})) ==
          std::vector<CutClass>{CutClass(0, 2), CutClass(0, 3), CutClass(1, 2),
                                CutClass(1, 3)});
    // A chord must leave an output on both sides: gaps 0 and 1 bound the
    // lone input of (2;1,0) and cannot pair with each other.
    CHECK(is_valid_class(CutClass(0, 2), Arity(2, {1, 0})));
    CHECK(is_valid_class(CutClass(1, 2), Arity(2, {1, 0})));
    CHECK(!is_valid_class(CutClass(0, 1), Arity(2, {1, 0})));
}

TEST_CASE("interleaving is strict crossing") {
    CHECK(classes_interleave(CutClass(0, 2), CutClass(1, 3), 4));
    CHECK(!classes_interleave(CutClass(0, 1), CutClass(1, 2), 4));  // shared gap
    CHECK(!classes_interleave(CutClass(0, 1), CutClass(2, 3), 4));  // nested/disjoint
}

TEST_CASE("regions of a noncrossing family") {
    const Arity tri(3, {0, 0, 0});
    SUBCASE("single chord splits the triangle boundary in two") {
        const auto regs = regions({CutClass(0, 1)}, tri);
        CHECK(as_multisets(regs) ==
              std::multiset<std::multiset<int>>{{1}, {0, 2}});
    }
    SUBCASE("two chords sharing a gap make three regions plus an empty one") {
        const auto regs = regions({CutClass(0, 1), CutClass(1, 2)}, tri);
        CHECK(regs.size() == 3);
        CHECK(as_multisets(regs) ==
              std::multiset<std::multiset<int>>{{1}, {2}, {0}});
    }
    SUBCASE("all three chords leave an empty central region") {
        const auto regs = regions({CutClass(0, 1), CutClass(0, 2), CutClass(1, 2)}, tri);
        CHECK(regs.size() == 4);
        CHECK(as_multisets(regs) ==
              std::multiset<std::multiset<int>>{{1}, {2}, {0}, {}});
    }
    SUBCASE("single chord of a two-output arity") {
        const auto regs = regions({CutClass(0, 2)}, Arity(2, {1, 1}));
        CHECK(as_multisets(regs) ==
              std::multiset<std::multiset<int>>{{1, 2}, {3, 0}});
    }
    SUBCASE("interleaving input is rejected") {
        CHECK_THROWS(regions({CutClass(0, 2), CutClass(1, 3)}, Arity(2, {1, 1})));
    }
}

TEST_CASE("joint realizability") {
    const Arity tri(3, {0, 0, 0});
    CHECK(jointly_realizable({CutClass(0, 1)}, tri));
    CHECK(jointly_realizable({CutClass(0, 1), CutClass(1, 2)}, tri));
    // All three chords cut the boundary into four regions but only three
    // outputs exist, so the full triple is not realizable.
    CHECK(!jointly_realizable({CutClass(0, 1), CutClass(0, 2), CutClass(1, 2)}, tri));
    CHECK_THROWS(jointly_realizable({CutClass(0, 1), CutClass(0, 1)}, tri));
    // Two outputs cannot serve the three regions of any two-chord family.
    const Arity two(2, {2, 2});
    const auto verts = valid_classes(two);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!classes_interleave(verts[i], verts[j], two.total_leaves()))
                CHECK(!jointly_realizable({verts[i], verts[j]}, two));
}

TEST_CASE("realizability matches cell-level evidence on small arities") {
    // A family is jointly realizable exactly when some cell has a bivalent
    // vertex in every class of the family.
    for (const Arity& a : arity_grid(6)) {
        CAPTURE(a.to_string());
        std::set<std::set<CutClass>> realized;  // closed downward by subsets
        for (const auto& [key, cell] : enumerate_cells(a)) {
            const auto classes = cut_classes(cell);
            const int m = static_cast<int>(classes.size());
            for (int mask = 1; mask < (1 << m); ++mask) {
                std::set<CutClass> fam;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i))
                        fam.insert(classes[i]);
                realized.insert(fam);
            }
        }
        const auto verts = valid_classes(a);
        const int m = static_cast<int>(verts.size());
        REQUIRE(m <= 20);
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<CutClass> fam;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i))
                    fam.push_back(verts[i]);
            if (static_cast<int>(fam.size()) > a.k - 1)
                continue;
            const bool cells_say = realized.count(std::set<CutClass>(fam.begin(), fam.end())) > 0;
            CAPTURE(mask);
            CHECK(jointly_realizable(fam, a) == cells_say);
        }
    }
}

TEST_CASE("nerve of the triangle arity is a three-cycle") {
    const NerveComplex nerve = build_nerve(Arity(3, {0, 0, 0}));
    REQUIRE(nerve.vertices.size() == 3);
    REQUIRE(nerve.dim() == 1);
    CHECK(nerve.simplices[0].size() == 3);
    CHECK(nerve.simplices[1].size() == 3);
    const HomologySummary h = nerve_homology(nerve);
    CHECK(h.betti == std::vector<long long>{1, 1});
    CHECK(h.torsion_free());
}

TEST_CASE("nerve dimension bound and cloven comparison on small arities") {
    for (const Arity& a : arity_grid(6)) {
        CAPTURE(a.to_string());
        const NerveComplex nerve = build_nerve(a);
        CHECK(nerve.dim() <= a.k - 2);
        const auto [y, clov] = split_y_and_clov(build_full_complex(a));
        const HomologySummary hn = nerve_homology(nerve);
        const HomologySummary hc = chain_homology(clov);
        for (int d = 0; d <= a.k - 2; ++d)
            CHECK(hn.betti_at(d) == hc.betti_at(d));
        CHECK(hn.torsion_free());
        CHECK(hc.torsion_free());
    }
}

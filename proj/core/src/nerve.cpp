#include "cloven/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cloven {

long long NerveComplex::simplex_count() const {
    long long n = 0;
    for (const auto& level : simplices)
        n += static_cast<long long>(level.size());
    return n;
}

std::vector<std::vector<int>> NerveComplex::facets() const {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> non_maximal;
    for (int r = dim(); r >= 0; --r) {
        for (const auto& s : simplices[r]) {
            if (non_maximal.count(s))
                continue;
            out.push_back(s);
        }
        for (const auto& s : simplices[r])
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face(s);
                face.erase(face.begin() + i);
                if (!face.empty())
                    non_maximal.insert(std::move(face));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string NerveComplex::facet_listing() const {
    std::ostringstream os;
    os << "%% nerve " << arity.to_string() << " vertices " << vertices.size() << "\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        os << "v " << i << " " << vertices[i].to_string() << "\n";
    for (const auto& f : facets()) {
        os << "f";
        for (int v : f)
            os << " " << v;
        os << "\n";
    }
    return os.str();
}

NerveComplex build_nerve(const Arity& arity, int max_leaves) {
    const int N = arity.total_leaves();
    if (N > max_leaves)
        throw resource_error("build_nerve: arity " + arity.to_string() + " has N = " +
                             std::to_string(N) + " > guard " + std::to_string(max_leaves));
    NerveComplex nerve;
    nerve.arity = arity;
    nerve.vertices = valid_classes(arity);
    const int n = static_cast<int>(nerve.vertices.size());
    if (n == 0)
        return nerve;

    std::vector<std::vector<int>> level;
    for (int i = 0; i < n; ++i)
        level.push_back({i});
    while (!level.empty()) {
        nerve.simplices.push_back(level);
        std::set<std::vector<int>> have(level.begin(), level.end());
        std::vector<std::vector<int>> next;
        for (const auto& s : level) {
            for (int v = s.back() + 1; v < n; ++v) {
                std::vector<int> cand(s);
                cand.push_back(v);
                // downward closure first (cheap), then the realizability test
                bool closed = true;
                for (size_t i = 0; i + 1 < cand.size() && closed; ++i) {
                    std::vector<int> face(cand);
                    face.erase(face.begin() + i);
                    closed = have.count(face) != 0;
                }
                if (!closed)
                    continue;
                std::vector<CutClass> family;
                for (int idx : cand)
                    family.push_back(nerve.vertices[idx]);
                if (jointly_realizable(family, arity))
                    next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    return nerve;
}

HomologySummary nerve_homology(const NerveComplex& nerve) {
    const int degrees = nerve.dim() + 1;
    std::vector<long long> sizes(degrees);
    std::vector<std::map<std::vector<int>, int>> index(degrees);
    for (int r = 0; r < degrees; ++r) {
        sizes[r] = static_cast<long long>(nerve.simplices[r].size());
        for (int i = 0; i < sizes[r]; ++i)
            index[r].emplace(nerve.simplices[r][i], i);
    }
    // Coboundary form: d[r] = (boundary_{r+1})^T maps C_r -> C_{r+1}; the
    // chain homology of the nerve is then read off like a cochain complex.
    std::vector<SparseIntMatrix> boundary(degrees);
    for (int r = 1; r < degrees; ++r) {
        boundary[r].rows = static_cast<int>(sizes[r - 1]);
        boundary[r].cols = static_cast<int>(sizes[r]);
        for (int j = 0; j < sizes[r]; ++j) {
            const auto& s = nerve.simplices[r][j];
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face(s);
                face.erase(face.begin() + i);
                boundary[r].add(index[r - 1].at(face), j, i % 2 == 0 ? 1 : -1);
            }
        }
    }
    std::vector<SparseIntMatrix> d(degrees);
    for (int r = 0; r < degrees; ++r) {
        if (r + 1 < degrees)
            d[r] = boundary[r + 1].transposed();
        else {
            d[r].rows = 0;
            d[r].cols = static_cast<int>(sizes[r]);
        }
    }
    HomologySummary h = cohomology_of_matrices(d, sizes, "nerve/chain", nerve.arity);
    // Torsion placement follows the chain convention (see chain_homology).
    for (int s = 0; s < degrees; ++s)
        h.torsion[s] = s + 1 < degrees ? h.torsion[s + 1] : std::vector<BigInt>{};
    return h;
}

}  // namespace cloven

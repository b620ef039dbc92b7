#pragma once

// Hand-rolled instance generators for property tests and sweeps.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "vca/complex.hpp"
#include "vca/poset.hpp"

namespace gen {

using Mask = std::uint32_t;

inline bool isAntichain(const std::vector<Mask>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && (sets[i] & ~sets[j]) == 0) return false;
        }
    }
    return true;
}

inline vca::SimplicialComplex fromMasks(int n, const std::vector<Mask>& sets) {
    std::vector<vca::FaceSet> faces;
    for (Mask m : sets) faces.push_back(vca::FaceSet::fromMask(m));
    return vca::SimplicialComplex(n, faces);
}

/// Random complex on [n] with 1..maxFacets facets of size 1..maxSize.
inline vca::SimplicialComplex randomComplex(std::mt19937& rng, int n, int maxFacets, int maxSize) {
    std::uniform_int_distribution<int> count(1, maxFacets);
    std::uniform_int_distribution<int> size(1, std::min(n, maxSize));
    std::vector<vca::FaceSet> faces;
    const int m = count(rng);
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    for (int i = 0; i < m; ++i) {
        std::shuffle(labels.begin(), labels.end(), rng);
        const int s = size(rng);
        faces.emplace_back(std::vector<int>(labels.begin(), labels.begin() + s));
    }
    return vca::SimplicialComplex(n, faces);
}

/// Random pure complex on [n] with facets of size d.
inline vca::SimplicialComplex randomPureComplex(std::mt19937& rng, int n, int d, int maxFacets) {
    std::uniform_int_distribution<int> count(1, maxFacets);
    std::vector<vca::FaceSet> faces;
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        std::shuffle(labels.begin(), labels.end(), rng);
        faces.emplace_back(std::vector<int>(labels.begin(), labels.begin() + d));
    }
    return vca::SimplicialComplex(n, faces);
}

/// Every antichain of nonempty subsets of [n] with 1..maxFacets members.
inline std::vector<std::vector<Mask>> allAntichains(int n, int maxFacets) {
    const Mask top = Mask{1} << n;
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> current;
    auto extend = [&](auto&& self, Mask next) -> void {
        if (!current.empty()) out.push_back(current);
        if (static_cast<int>(current.size()) == maxFacets) return;
        for (Mask s = next; s < top; ++s) {
            bool ok = std::none_of(current.begin(), current.end(),
                                   [&](Mask t) { return (s & ~t) == 0 || (t & ~s) == 0; });
            if (!ok) continue;
            current.push_back(s);
            self(self, s + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

using Edges = std::vector<std::pair<int, int>>;

/// One representative per isomorphism class of graphs on exactly n vertices.
inline std::vector<Edges> graphsUpToIso(int n) {
    Edges slots;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto slotIndex = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        // Index of (u, v) in the row-major upper triangle, 0-based labels.
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    };
    std::vector<Edges> out;
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t g = 0; g < total; ++g) {
        bool canonical = true;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < slots.size(); ++e) {
                if ((g >> e) & 1U) {
                    const int u = perm[static_cast<std::size_t>(slots[e].first - 1)];
                    const int v = perm[static_cast<std::size_t>(slots[e].second - 1)];
                    image |= std::uint32_t{1} << slotIndex(u, v);
                }
            }
            if (image < g) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Edges edges;
        for (std::size_t e = 0; e < slots.size(); ++e) {
            if ((g >> e) & 1U) edges.push_back(slots[e]);
        }
        out.push_back(edges);
    }
    return out;
}

/// Every labelled partial order on m elements.
inline std::vector<vca::Poset> allPosets(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a != b) pairs.emplace_back(a, b);
        }
    }
    std::vector<vca::Poset> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << pairs.size()); ++bits) {
        std::vector<std::vector<bool>> rel(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
        for (int a = 0; a < m; ++a) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((bits >> i) & 1U) rel[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] = true;
        }
        bool ok = true;
        for (int a = 0; a < m && ok; ++a) {
            for (int b = 0; b < m && ok; ++b) {
                if (a != b && rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) {
                    ok = false;
                }
                for (int c = 0; c < m && ok; ++c) {
                    if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                        rel[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                        !rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) out.emplace_back(std::move(rel));
    }
    return out;
}

}  // namespace gen

#include "vca/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "vca/error.hpp"

namespace vca {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (static_cast<int>(exps_.size()) > kMaxVertices) {
        throw InputError("monomial has more than " + std::to_string(kMaxVertices) + " variables");
    }
    for (int e : exps_) {
        if (e < 0) throw InputError("negative exponent in monomial");
    }
}

Monomial Monomial::squarefree(int n, FaceSet support) {
    if (support.maxLabel() > n) {
        throw InputError("support {" + support.toString() + "} exceeds ambient " + std::to_string(n));
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v : support.labels()) e[static_cast<std::size_t>(v - 1)] = 1;
    return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::isOne() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::isSquarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

FaceSet Monomial::support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
    }
    return FaceSet::fromMask(mask);
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    Monomial m;
    m.exps_ = std::move(e);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    Monomial m;
    m.exps_ = std::move(e);
    return m;
}

std::string Monomial::toString() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::string Monomial::toVectorString() const {
    std::string out = "[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(exps_[i]);
    }
    return out + "]";
}

bool canonicalLess(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] > eb[i];
    }
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

// ----------------------------------------------------------- MonomialIdeal

namespace detail {

MonomialIdeal minimalizeAny(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.ambient() != n) {
            throw InputError("monomial " + g.toVectorString() + " does not live in " +
                             std::to_string(n) + " variables");
        }
    }
    std::sort(gens.begin(), gens.end(), canonicalLess);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // A divisor never has larger degree, so scanning in degree order and
    // testing only against already accepted generators is enough.
    std::vector<Monomial> kept;
    std::vector<std::uint64_t> keptSupport;
    for (auto& g : gens) {
        const std::uint64_t s = g.support().mask();
        bool redundant = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if ((keptSupport[i] & ~s) == 0 && kept[i].divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            keptSupport.push_back(s);
            kept.push_back(std::move(g));
        }
    }
    MonomialIdeal out(n);
    out.gens_ = std::move(kept);
    return out;
}

}  // namespace detail

MonomialIdeal MonomialIdeal::unit(int n) {
    return detail::minimalizeAny(n, {Monomial(std::vector<int>(static_cast<std::size_t>(n), 0))});
}

MonomialIdeal MonomialIdeal::minimalize(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.isOne()) throw InputError("the constant monomial is not a valid generator");
    }
    return detail::minimalizeAny(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::fromSupports(int n, const std::vector<FaceSet>& supports) {
    std::vector<Monomial> gens;
    gens.reserve(supports.size());
    for (FaceSet f : supports) gens.push_back(Monomial::squarefree(n, f));
    return detail::minimalizeAny(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::prime(int n, FaceSet support) {
    std::vector<FaceSet> singletons;
    for (int v : support.labels()) singletons.push_back(FaceSet{v});
    return fromSupports(n, singletons);
}

bool MonomialIdeal::isSquarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.isSquarefree(); });
}

std::vector<FaceSet> MonomialIdeal::supports() const {
    if (!isSquarefree()) throw InputError("supports() requires a squarefree ideal");
    std::vector<FaceSet> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.support());
    return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.ambient() != n_) throw InputError("ambient mismatch in ideal membership");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::toString() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].toString();
    }
    return out + ")";
}

// -------------------------------------------------------------- arithmetic

namespace {

void requireSameAmbient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient()) {
        throw InputError("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                         std::to_string(b.ambient()) + " variables");
    }
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameAmbient(a, b);
    std::vector<Monomial> out;
    for (const auto& g : a.generators()) {
        if (b.contains(g)) {
            out.push_back(g);
            continue;
        }
        for (const auto& h : b.generators()) out.push_back(lcm(g, h));
    }
    return detail::minimalizeAny(a.ambient(), std::move(out));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameAmbient(a, b);
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) out.push_back(g * h);
    }
    return detail::minimalizeAny(a.ambient(), std::move(out));
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameAmbient(a, b);
    std::vector<Monomial> out = a.generators();
    out.insert(out.end(), b.generators().begin(), b.generators().end());
    return detail::minimalizeAny(a.ambient(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw InputError("power exponent must be >= 1");
    // Binary powering; every intermediate product is minimalized.
    MonomialIdeal result = MonomialIdeal::unit(ideal.ambient());
    MonomialIdeal base = ideal;
    while (k > 0) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return result;
}

MonomialIdeal squarefreePart(const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    for (const auto& g : ideal.generators()) {
        if (g.isSquarefree()) out.push_back(g);
    }
    return detail::minimalizeAny(ideal.ambient(), std::move(out));
}

MonomialIdeal squarefreePower(const MonomialIdeal& ideal, int k) {
    if (k < 1) throw InputError("squarefree power exponent must be >= 1");
    const int n = ideal.ambient();
    std::vector<FaceSet> base;
    for (const auto& g : ideal.generators()) {
        if (g.isSquarefree()) base.push_back(g.support());
    }
    std::vector<FaceSet> level = minimalSets(base);
    for (int step = 1; step < k; ++step) {
        std::vector<FaceSet> next;
        for (FaceSet p : level) {
            for (FaceSet g : base) {
                if (!p.intersects(g)) next.push_back(p | g);
            }
        }
        level = minimalSets(std::move(next));
        if (level.empty()) break;
    }
    return MonomialIdeal::fromSupports(n, level);
}

MonomialIdeal alexanderDual(const MonomialIdeal& ideal) {
    if (!ideal.isSquarefree()) throw InputError("Alexander dual requires a squarefree ideal");
    return MonomialIdeal::fromSupports(ideal.ambient(), minimalTransversals(ideal.supports()));
}

bool equalsIdeal(const MonomialIdeal& a, const MonomialIdeal& b) {
    requireSameAmbient(a, b);
    return a.generators() == b.generators();
}

// -------------------------------------------------------------- set helpers

std::vector<FaceSet> minimalSets(std::vector<FaceSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<FaceSet> kept;
    for (FaceSet s : sets) {
        bool redundant = false;
        for (FaceSet k : kept) {
            if (k.isSubsetOf(s)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(s);
    }
    return kept;
}

std::vector<FaceSet> maximalSets(std::vector<FaceSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<FaceSet> kept;
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
        bool redundant = false;
        for (FaceSet k : kept) {
            if (it->isSubsetOf(k)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(*it);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<FaceSet> minimalTransversals(const std::vector<FaceSet>& family) {
    // Berge's incremental scheme: extend the transversals of the first i
    // edges to edge i+1 and prune non-minimal candidates after each edge.
    std::vector<FaceSet> edges = minimalSets(family);
    if (!edges.empty() && edges.front().empty()) return {};
    std::vector<FaceSet> current{FaceSet{}};
    for (FaceSet edge : edges) {
        std::vector<FaceSet> hitting;
        std::vector<FaceSet> missing;
        for (FaceSet t : current) (t.intersects(edge) ? hitting : missing).push_back(t);
        std::vector<FaceSet> next = hitting;
        for (FaceSet t : missing) {
            for (int v : edge.labels()) {
                const FaceSet candidate = t.with(v);
                // Dominated by a transversal that already hits the edge.
                bool dominated = false;
                for (FaceSet h : hitting) {
                    if (h.isSubsetOf(candidate)) {
                        dominated = true;
                        break;
                    }
                }
                if (!dominated) next.push_back(candidate);
            }
        }
        current = minimalSets(std::move(next));
    }
    return current;
}

}  // namespace vca

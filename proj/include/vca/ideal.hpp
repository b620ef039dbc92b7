#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "vca/face_set.hpp"

namespace vca {

/// A monomial x^e in K[x_1..x_n], stored by its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    /// x_F
    static Monomial squarefree(int n, FaceSet support);

    int ambient() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }
    int operator[](std::size_t i) const { return exps_[i]; }

    int degree() const;
    bool isOne() const;
    bool isSquarefree() const;
    FaceSet support() const;

    bool divides(const Monomial& other) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// "x1*x3^2"; the constant monomial renders as "1".
    std::string toString() const;
    /// "[1,0,2]"
    std::string toVectorString() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

/// Canonical generator order: total degree ascending, then lexicographic
/// descending (a larger exponent on an earlier variable comes first), so
/// x1^2 < x1*x2 < x2^2 and x1*x2*x3*x4 < x1*x2*x3*x5.
bool canonicalLess(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

class MonomialIdeal;

namespace detail {
/// minimalize() without the constant-monomial check; internal arithmetic
/// needs it for the unit ideal.
MonomialIdeal minimalizeAny(int n, std::vector<Monomial> gens);
}  // namespace detail

/// A monomial ideal given by its minimal generating set.
///
/// The zero ideal (no generators) and the unit ideal (generator 1) are
/// ordinary values. Generators are kept minimal and canonically ordered,
/// so two ideals are equal iff their generator lists are identical.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n = 0) : n_(n) {}

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n);

    /// Minimal, canonically ordered generating set of the ideal spanned by
    /// `gens`. Rejects the constant monomial and ambient mismatches.
    static MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

    /// Ideal generated by x_F for F in `supports`.
    static MonomialIdeal fromSupports(int n, const std::vector<FaceSet>& supports);

    /// P_F = (x_i : i in F)
    static MonomialIdeal prime(int n, FaceSet support);

    int ambient() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool isZero() const { return gens_.empty(); }
    bool isUnit() const { return gens_.size() == 1 && gens_.front().isOne(); }
    bool isSquarefree() const;

    /// Supports of the generators; requires a squarefree ideal.
    std::vector<FaceSet> supports() const;

    bool contains(const Monomial& m) const;
    bool containsIdeal(const MonomialIdeal& other) const;

    /// "(x1*x2, x2*x3)"; the zero ideal renders as "(0)".
    std::string toString() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal detail::minimalizeAny(int n, std::vector<Monomial> gens);

    int n_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k, k >= 1, by iterated products with intermediate minimalization.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// I^sq: generated by the squarefree minimal generators of I.
MonomialIdeal squarefreePart(const MonomialIdeal& ideal);

/// I^<k> = (I^k)^sq. Only squarefree products of generators can contribute,
/// so the power is built keeping squarefree products at every step.
MonomialIdeal squarefreePower(const MonomialIdeal& ideal, int k);

/// Alexander dual of a squarefree ideal: generated by the indicator
/// monomials of the minimal transversals of the generator supports.
MonomialIdeal alexanderDual(const MonomialIdeal& ideal);

bool equalsIdeal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Inclusion-minimal transversals (hitting sets) of `family`, canonically
/// ordered. An empty family has the single transversal {}; a family
/// containing the empty set has none.
std::vector<FaceSet> minimalTransversals(const std::vector<FaceSet>& family);

/// Inclusion-minimal members of `sets`, deduplicated, canonically ordered.
std::vector<FaceSet> minimalSets(std::vector<FaceSet> sets);
/// Inclusion-maximal members of `sets`, deduplicated, canonically ordered.
std::vector<FaceSet> maximalSets(std::vector<FaceSet> sets);

}  // namespace vca

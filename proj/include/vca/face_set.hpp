#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vca {

/// Largest supported vertex count. Faces are stored as 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A finite set of vertices of [n].
///
/// Vertices are 1-based at every public boundary (constructors taking
/// labels, `labels()`, rendering) and 0-based in the underlying bit mask.
/// The natural ordering is by cardinality, then lexicographic on the
/// sorted label sequence; this is the canonical facet order everywhere.
class FaceSet {
public:
    constexpr FaceSet() = default;
    FaceSet(std::initializer_list<int> labels);
    explicit FaceSet(const std::vector<int>& labels);

    static constexpr FaceSet fromMask(std::uint64_t mask) {
        FaceSet f;
        f.bits_ = mask;
        return f;
    }
    /// {1, ..., n}
    static FaceSet interval(int n) { return range(1, n); }
    /// {lo, ..., hi}; empty if lo > hi.
    static FaceSet range(int lo, int hi);

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
    constexpr bool isSubsetOf(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(FaceSet other) const { return (bits_ & other.bits_) != 0; }

    /// Largest label, 0 when empty.
    int maxLabel() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
    /// Smallest label, 0 when empty.
    int minLabel() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    FaceSet with(int label) const;
    FaceSet without(int label) const;

    friend constexpr FaceSet operator&(FaceSet a, FaceSet b) { return fromMask(a.bits_ & b.bits_); }
    friend constexpr FaceSet operator|(FaceSet a, FaceSet b) { return fromMask(a.bits_ | b.bits_); }
    friend constexpr FaceSet operator-(FaceSet a, FaceSet b) { return fromMask(a.bits_ & ~b.bits_); }

    /// Sorted 1-based labels.
    std::vector<int> labels() const;

    /// "1,2,5"
    std::string toString() const;

    friend constexpr bool operator==(FaceSet a, FaceSet b) { return a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(FaceSet a, FaceSet b);

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted label sequences, ignoring size.
bool lexLess(FaceSet a, FaceSet b);

/// All subsets of `ground` with exactly `size` elements, in canonical order.
std::vector<FaceSet> subsetsOfSize(FaceSet ground, int size);

/// Parses "1,3,4" (whitespace tolerated). Rejects duplicates and labels
/// outside 1..64.
FaceSet parseFaceSet(const std::string& text);

struct FaceSetHash {
    std::size_t operator()(FaceSet f) const noexcept { return std::hash<std::uint64_t>{}(f.mask()); }
};

}  // namespace vca

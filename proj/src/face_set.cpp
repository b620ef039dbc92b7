#include "vca/face_set.hpp"

#include <algorithm>
#include <sstream>

#include "vca/error.hpp"

namespace vca {

namespace {

void checkLabel(int label) {
    if (label < 1 || label > kMaxVertices) {
        throw InputError("vertex label " + std::to_string(label) + " outside 1.." +
                         std::to_string(kMaxVertices));
    }
}

}  // namespace

FaceSet::FaceSet(std::initializer_list<int> labels) : FaceSet(std::vector<int>(labels)) {}

FaceSet::FaceSet(const std::vector<int>& labels) {
    for (int label : labels) {
        checkLabel(label);
        const std::uint64_t bit = std::uint64_t{1} << (label - 1);
        if (bits_ & bit) {
            throw InputError("duplicate vertex " + std::to_string(label) + " in face");
        }
        bits_ |= bit;
    }
}

FaceSet FaceSet::range(int lo, int hi) {
    FaceSet f;
    for (int i = lo; i <= hi; ++i) {
        checkLabel(i);
        f.bits_ |= std::uint64_t{1} << (i - 1);
    }
    return f;
}

FaceSet FaceSet::with(int label) const {
    checkLabel(label);
    return fromMask(bits_ | (std::uint64_t{1} << (label - 1)));
}

FaceSet FaceSet::without(int label) const {
    checkLabel(label);
    return fromMask(bits_ & ~(std::uint64_t{1} << (label - 1)));
}

std::vector<int> FaceSet::labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
    }
    return out;
}

std::string FaceSet::toString() const {
    std::string out;
    for (int v : labels()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

bool lexLess(FaceSet a, FaceSet b) {
    const auto la = a.labels();
    const auto lb = b.labels();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

std::strong_ordering operator<=>(FaceSet a, FaceSet b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    if (a.size() != b.size()) return a.size() <=> b.size();
    // Same size: the lexicographically smaller label sequence is the one whose
    // lowest differing element belongs to it.
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<FaceSet> subsetsOfSize(FaceSet ground, int size) {
    std::vector<FaceSet> out;
    const std::vector<int> elems = ground.labels();
    const int n = static_cast<int>(elems.size());
    if (size < 0 || size > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << (elems[static_cast<std::size_t>(i)] - 1);
        out.push_back(FaceSet::fromMask(mask));
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < size; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

FaceSet parseFaceSet(const std::string& text) {
    std::vector<int> labels;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            throw InputError("empty entry in vertex list '" + text + "'");
        }
        const auto last = token.find_last_not_of(" \t");
        const std::string trimmed = token.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(trimmed, &used);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + trimmed + "'");
        }
        if (used != trimmed.size()) throw InputError("not an integer: '" + trimmed + "'");
        labels.push_back(value);
    }
    return FaceSet(labels);
}

}  // namespace vca

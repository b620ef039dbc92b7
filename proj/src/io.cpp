#include "vca/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vca/error.hpp"

namespace vca {

namespace {

using nlohmann::json;

json parseJson(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

bool looksLikeJson(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

int intField(const json& doc, const char* key, const char* what) {
    if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string(what) + " needs field \"" + key + "\"");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> intList(const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be a list of integers");
    std::vector<int> out;
    for (const json& x : v) {
        if (!x.is_number_integer()) throw InputError(std::string(what) + " must be a list of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<FaceSet> faceList(const json& doc, const char* key, const char* what) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw InputError(std::string(what) + " needs a list field \"" + key + "\"");
    }
    std::vector<FaceSet> out;
    for (const json& f : doc.at(key)) out.emplace_back(intList(f, "a face"));
    return out;
}

std::vector<std::pair<int, int>> pairList(const json& doc, const char* key) {
    std::vector<std::pair<int, int>> out;
    for (const json& p : doc.at(key)) {
        const auto v = intList(p, "a pair");
        if (v.size() != 2) throw InputError(std::string("entries of \"") + key + "\" must be pairs");
        out.emplace_back(v[0], v[1]);
    }
    return out;
}

json faceArray(const std::vector<FaceSet>& faces) {
    json arr = json::array();
    for (FaceSet f : faces) arr.push_back(f.labels());
    return arr;
}

}  // namespace

SimplicialComplex parseComplex(const std::string& text) {
    if (looksLikeJson(text)) {
        const json doc = parseJson(text, "complex");
        return SimplicialComplex(intField(doc, "n", "complex"), faceList(doc, "facets", "complex"));
    }
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<FaceSet> faces;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::vector<int> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            try {
                values.push_back(std::stoi(token, &used));
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw InputError("line " + std::to_string(lineNo) + ": '" + token + "' is not an integer");
            }
        }
        if (n < 0) {
            if (values.size() != 1) throw InputError("first line must hold the vertex count n");
            n = values.front();
        } else {
            faces.emplace_back(values);
        }
    }
    if (n < 0) throw InputError("empty complex file");
    return SimplicialComplex(n, std::move(faces));
}

std::string complexToJson(const SimplicialComplex& complex) {
    json doc;
    doc["n"] = complex.vertexCount();
    doc["facets"] = faceArray(complex.facets());
    return doc.dump();
}

std::string complexToText(const SimplicialComplex& complex) {
    std::string out = std::to_string(complex.vertexCount()) + "\n";
    for (FaceSet f : complex.facets()) {
        const auto labels = f.labels();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(labels[i]);
        }
        out += '\n';
    }
    return out;
}

BorelSpec parseBorelSpec(const std::string& text) {
    const json doc = parseJson(text, "Borel spec");
    return makeBorelSpec(intField(doc, "n", "Borel spec"), faceList(doc, "generators", "Borel spec"));
}

std::string borelSpecToJson(const BorelSpec& spec) {
    json doc;
    doc["n"] = spec.n;
    doc["generators"] = faceArray(spec.generators);
    return doc.dump();
}

Poset parsePoset(const std::string& text) {
    const json doc = parseJson(text, "poset");
    const int m = intField(doc, "m", "poset");
    if (doc.contains("relation")) {
        if (doc.contains("covers")) throw InputError("poset file must give either \"covers\" or \"relation\"");
        const json& rows = doc.at("relation");
        if (!rows.is_array() || static_cast<int>(rows.size()) != m) throw InputError("relation must have m rows");
        std::vector<std::vector<bool>> rel;
        for (const json& row : rows) {
            const auto values = intList(row, "a relation row");
            if (static_cast<int>(values.size()) != m) throw InputError("relation must have m columns");
            std::vector<bool> bits;
            for (int v : values) {
                if (v != 0 && v != 1) throw InputError("relation entries must be 0 or 1");
                bits.push_back(v == 1);
            }
            rel.push_back(std::move(bits));
        }
        return Poset(std::move(rel));
    }
    if (!doc.contains("covers") || !doc.at("covers").is_array()) {
        throw InputError("poset file needs \"covers\" or \"relation\"");
    }
    return Poset::fromCovers(m, pairList(doc, "covers"));
}

std::string posetToJson(const Poset& poset) {
    json doc;
    doc["m"] = poset.size();
    json covers = json::array();
    for (auto [a, b] : poset.coverRelations()) covers.push_back({a, b});
    doc["covers"] = covers;
    return doc.dump();
}

Graph parseGraph(const std::string& text) {
    if (!looksLikeJson(text)) return Graph::fromComplex(parseComplex(text));
    const json doc = parseJson(text, "graph");
    const int n = intField(doc, "n", "graph");
    const char* key = doc.contains("edges") ? "edges" : "facets";
    if (!doc.contains(key) || !doc.at(key).is_array()) throw InputError("graph file needs \"edges\"");
    return Graph(n, pairList(doc, key));
}

std::string graphToJson(const Graph& g) {
    json doc;
    doc["n"] = g.vertexCount();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = edges;
    return doc.dump();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

}  // namespace vca

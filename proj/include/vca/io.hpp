#pragma once

#include <string>

#include "vca/borel.hpp"
#include "vca/classify.hpp"
#include "vca/complex.hpp"
#include "vca/poset.hpp"

namespace vca {

/// JSON `{"n": 8, "facets": [[1,2],[3,4]]}` or plain text: first line n,
/// then one facet per line as space-separated vertices. Blank lines and
/// lines starting with '#' are skipped in the text form.
SimplicialComplex parseComplex(const std::string& text);
/// Compact JSON with facets in canonical order.
std::string complexToJson(const SimplicialComplex& complex);
std::string complexToText(const SimplicialComplex& complex);

/// `{"n": 5, "generators": [[1,4,5],[2,3,4]]}`
BorelSpec parseBorelSpec(const std::string& text);
std::string borelSpecToJson(const BorelSpec& spec);

/// `{"m": 3, "covers": [[1,3],[2,3]]}` (pairs a < b) or
/// `{"m": 3, "relation": [[1,0,1],[0,1,1],[0,0,1]]}` with entry [a][b]
/// meaning p_a <= p_b.
Poset parsePoset(const std::string& text);
std::string posetToJson(const Poset& poset);

/// `{"n": 5, "edges": [[1,2],[2,3]]}`; "facets" is accepted in place of
/// "edges", as is the plain-text complex format.
Graph parseGraph(const std::string& text);
std::string graphToJson(const Graph& g);

/// Whole file as a string; InputError when unreadable.
std::string readFile(const std::string& path);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a64(const std::string& data);

}  // namespace vca

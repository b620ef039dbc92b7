#pragma once

#include "vca/complex.hpp"

namespace fixtures {

inline vca::SimplicialComplex villarreal() {
    return vca::SimplicialComplex(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {1, 3, 7}, {1, 4, 8}, {3, 5, 7}, {4, 5, 8},
                                      {2, 3, 6, 8}, {2, 4, 6, 7}});
}

inline vca::SimplicialComplex figure1() {
    return vca::SimplicialComplex(7, {{1, 2, 7}, {2, 3}, {3, 4}, {4, 5, 7}, {1, 5, 6}});
}

inline vca::SimplicialComplex figure2() { return vca::SimplicialComplex(6, {{1, 2, 6}, {2, 3, 4}, {4, 5, 6}}); }

inline vca::SimplicialComplex figure3a() {
    return vca::SimplicialComplex(5, {{1, 2, 5}, {2, 3}, {3, 4, 5}, {1, 4}});
}

inline vca::SimplicialComplex figure3b() {
    return vca::SimplicialComplex(6, {{1, 2, 6}, {2, 3, 4}, {4, 5, 6}, {1, 5}});
}

/// Facets of B({1,4,5}).
inline vca::SimplicialComplex borel145() {
    return vca::SimplicialComplex(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}});
}

/// Facets of B({2,3,4}) on [5].
inline vca::SimplicialComplex borel234() {
    return vca::SimplicialComplex(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

/// Facets of B({1,4,5},{2,3,4}).
inline vca::SimplicialComplex borelBoth() {
    return vca::SimplicialComplex(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}});
}

}  // namespace fixtures

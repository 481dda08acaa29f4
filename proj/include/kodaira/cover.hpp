#pragma once

#include <string>
#include <vector>

#include "kodaira/errors.hpp"

namespace kodaira {

// A finite indexed open cover; only the combinatorics matter here.
struct Cover {
    size_t size = 1;
    std::vector<std::string> labels;

    explicit Cover(size_t n, std::vector<std::string> lbls = {})
        : size(n), labels(std::move(lbls)) {
        if (n < 1) throw DimensionMismatch("cover must have at least one open set");
    }
};

// Strictly increasing tuple of chart indices. A p-simplex has p+1 entries
// and indexes sections over a (p+1)-fold intersection.
using Simplex = std::vector<int>;

// Omits the j-th index.
inline Simplex face(const Simplex& s, size_t j) {
    if (j >= s.size()) throw IndexOutOfRange("face index past simplex dimension");
    Simplex f;
    f.reserve(s.size() - 1);
    for (size_t i = 0; i < s.size(); ++i)
        if (i != j) f.push_back(s[i]);
    return f;
}

// All strictly increasing (p+1)-tuples drawn from {0, ..., size-1},
// lexicographically ordered. Empty when p+1 > size.
inline std::vector<Simplex> nerve(const Cover& c, size_t p) {
    std::vector<Simplex> out;
    size_t k = p + 1;
    if (k > c.size) return out;
    Simplex cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = static_cast<int>(i);
    while (true) {
        out.push_back(cur);
        // Next combination.
        long i = static_cast<long>(k) - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] ==
                             static_cast<int>(c.size - k + static_cast<size_t>(i)))
            --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace kodaira

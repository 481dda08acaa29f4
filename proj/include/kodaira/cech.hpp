#pragma once

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <vector>

#include "kodaira/cover.hpp"
#include "kodaira/errors.hpp"
#include "kodaira/exact_matrix.hpp"

namespace kodaira {

// The twisting sheaf O(d) on P^n over the standard (n+1)-chart cover.
struct TwistingSheaf {
    size_t n;
    long d;

    TwistingSheaf(size_t n_, long d_) : n(n_), d(d_) {
        if (n < 1) throw DimensionMismatch("projective dimension must be >= 1");
    }

    Cover cover() const { return Cover(n + 1); }
};

// Monomial multidegree in the homogeneous coordinates x_0..x_n. The
// coboundary preserves multidegree, so the complex splits into these
// finite-dimensional graded pieces.
using GradedPiece = std::vector<long>;

namespace detail {
inline void check_degree(const TwistingSheaf& s, const GradedPiece& a) {
    if (a.size() != s.n + 1)
        throw DegreeMismatch("multidegree length != n+1");
    if (std::accumulate(a.begin(), a.end(), 0L) != s.d)
        throw DegreeMismatch("multidegree components do not sum to the twist");
}
}  // namespace detail

// The monomial x^a is a section over U_I iff every exponent outside I is
// nonnegative (x_i may only appear inverted where x_i != 0).
inline size_t section_dim(const TwistingSheaf& s, const Simplex& I, const GradedPiece& a) {
    detail::check_degree(s, a);
    std::vector<bool> in(s.n + 1, false);
    for (int i : I) in[static_cast<size_t>(i)] = true;
    for (size_t i = 0; i <= s.n; ++i)
        if (!in[i] && a[i] < 0) return 0;
    return 1;
}

// Matrix of delta^p on the multidegree-a graded piece. Columns are indexed
// by the p-simplices carrying a section slot, rows by the (p+1)-simplices;
// omitting the j-th index (1-based position) contributes (-1)^j.
inline ExactMatrix coboundary_matrix(const TwistingSheaf& s, size_t p, const GradedPiece& a) {
    detail::check_degree(s, a);
    Cover c = s.cover();
    std::vector<Simplex> cols_all = nerve(c, p);
    std::vector<Simplex> rows_all = nerve(c, p + 1);
    std::vector<Simplex> cols, rows;
    for (const auto& I : cols_all)
        if (section_dim(s, I, a) == 1) cols.push_back(I);
    for (const auto& J : rows_all)
        if (section_dim(s, J, a) == 1) rows.push_back(J);

    auto col_index = [&](const Simplex& I) -> long {
        auto it = std::lower_bound(cols.begin(), cols.end(), I);
        if (it == cols.end() || *it != I) return -1;
        return it - cols.begin();
    };

    ExactMatrix m(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        const Simplex& J = rows[r];
        for (size_t j = 0; j < J.size(); ++j) {
            long ci = col_index(face(J, j));
            if (ci < 0) continue;
            int sign = (j % 2 == 0) ? 1 : -1;   // (-1)^(j+1) for 0-based j
            m.at(r, static_cast<size_t>(ci)) += ExactScalar(-sign);
        }
    }
    return m;
}

inline bool verify_delta_squared(const TwistingSheaf& s, size_t p, const GradedPiece& a) {
    ExactMatrix d1 = coboundary_matrix(s, p, a);
    ExactMatrix d2 = coboundary_matrix(s, p + 1, a);
    return (d2 * d1).is_zero();
}

// All multidegrees with sum d and |a_i| <= |d| + pad.
inline std::vector<GradedPiece> multidegree_window(const TwistingSheaf& s, long pad = 1) {
    long bound = std::labs(s.d) + pad;
    std::vector<GradedPiece> out;
    GradedPiece cur(s.n + 1, 0);
    auto rec = [&](auto&& self, size_t i, long remaining) -> void {
        if (i == s.n) {
            if (std::labs(remaining) <= bound) {
                cur[i] = remaining;
                out.push_back(cur);
            }
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            cur[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, s.d);
    return out;
}

struct GradedContribution {
    GradedPiece multidegree;
    size_t dim;  // contribution to H^q
};

struct CohomologyReport {
    size_t dim = 0;
    long window_pad = 1;
    std::vector<GradedContribution> pieces;  // nonzero contributions only
};

inline size_t worker_count_from_env() {
    if (const char* env = std::getenv("KODAIRA_KIT_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<size_t>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

// dim H^q(P^n, O(d)) = sum over the multidegree window of
// ker(delta^q) - rank(delta^{q-1}). Graded pieces are independent, so they
// fan out over `threads` workers; the report order is fixed by the window
// enumeration regardless of thread count.
inline CohomologyReport cohomology_report(const TwistingSheaf& s, size_t q, long pad = 1,
                                          size_t threads = 1) {
    std::vector<GradedPiece> window = multidegree_window(s, pad);
    std::vector<size_t> dims(window.size(), 0);

    auto piece_dim = [&](const GradedPiece& a) -> size_t {
        ExactMatrix dq = coboundary_matrix(s, q, a);
        size_t ker = dq.kernel_dim();
        size_t im = 0;
        if (q > 0) im = coboundary_matrix(s, q - 1, a).rank();
        return ker - im;
    };

    if (threads <= 1 || window.size() <= 1) {
        for (size_t i = 0; i < window.size(); ++i) dims[i] = piece_dim(window[i]);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= window.size()) break;
                dims[i] = piece_dim(window[i]);
            }
        };
        size_t nw = std::min(threads, window.size());
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nw; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    CohomologyReport rep;
    rep.window_pad = pad;
    for (size_t i = 0; i < window.size(); ++i) {
        rep.dim += dims[i];
        if (dims[i] > 0) rep.pieces.push_back({window[i], dims[i]});
    }
    return rep;
}

inline size_t cohomology_dim(const TwistingSheaf& s, size_t q, long pad = 1,
                             size_t threads = 1) {
    return cohomology_report(s, q, pad, threads).dim;
}

}  // namespace kodaira

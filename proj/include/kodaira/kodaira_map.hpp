#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/exact_matrix.hpp"
#include "kodaira/gaussian.hpp"
#include "kodaira/laurent.hpp"
#include "kodaira/univariate.hpp"

namespace kodaira {

// Point of projective space with Gaussian-rational homogeneous coordinates,
// kept in canonical scaling: first nonzero coordinate = 1.
struct ProjPoint {
    std::vector<GaussRat> coords;

    ProjPoint() = default;
    explicit ProjPoint(std::vector<GaussRat> c) : coords(std::move(c)) { canonicalize(); }

    void canonicalize() {
        for (const auto& c : coords)
            if (!c.is_zero()) {
                GaussRat lead = c;
                for (auto& x : coords) x = x / lead;
                return;
            }
        throw DimensionMismatch("projective point with all coordinates zero");
    }

    size_t first_nonzero() const {
        for (size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) return i;
        return coords.size();
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords == b.coords;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < coords.size(); ++i)
            s += (i ? ":" : "") + coords[i].str();
        return s + "]";
    }
};

inline ProjPoint p1_point(const ExactScalar& a, const ExactScalar& b) {
    return ProjPoint({GaussRat(a), GaussRat(b)});
}

// A basis of homogeneous degree-d sections of O(d) on P^n, as polynomials in
// x_0..x_n with nonnegative exponents. Linear independence is verified on
// the coefficient matrix.
class SectionBasis {
public:
    SectionBasis(size_t n, long d, std::vector<LaurentPoly> sections)
        : n_(n), d_(d), sections_(std::move(sections)) {
        if (sections_.empty()) throw EmptyBasis();
        for (const auto& s : sections_) {
            if (s.num_vars() != n_ + 1)
                throw DimensionMismatch("section over wrong variable count");
            long deg = 0;
            if (s.is_zero() || !s.is_homogeneous(&deg) || deg != d_)
                throw DegreeMismatch("section is not homogeneous of the stated degree");
            for (long e : s.min_exponents())
                if (e < 0) throw DegreeMismatch("section has a negative exponent");
        }
        if (coefficient_rank() != sections_.size())
            throw DimensionMismatch("sections are linearly dependent");
    }

    size_t n() const { return n_; }
    long d() const { return d_; }
    const std::vector<LaurentPoly>& sections() const { return sections_; }
    size_t size() const { return sections_.size(); }

private:
    size_t coefficient_rank() const {
        // Collect the union of monomials, then rank the coefficient matrix.
        std::vector<Exponents> monos;
        for (const auto& s : sections_)
            for (const auto& [e, c] : s.terms()) monos.push_back(e);
        std::sort(monos.begin(), monos.end());
        monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
        ExactMatrix m(sections_.size(), monos.size());
        for (size_t r = 0; r < sections_.size(); ++r)
            for (const auto& [e, c] : sections_[r].terms()) {
                size_t col = static_cast<size_t>(
                    std::lower_bound(monos.begin(), monos.end(), e) - monos.begin());
                m.at(r, col) = c;
            }
        return m.rank();
    }

    size_t n_;
    long d_;
    std::vector<LaurentPoly> sections_;
};

inline std::vector<std::string> homog_vars(size_t n) {
    std::vector<std::string> v;
    for (size_t i = 0; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// All degree-d monomials in x_0..x_n, lexicographic exponent order.
inline SectionBasis full_monomial_basis(size_t n, long d) {
    if (d < 0) throw DegreeMismatch("O(d) with d < 0 has no sections");
    std::vector<std::string> vars = homog_vars(n);
    std::vector<LaurentPoly> secs;
    Exponents cur(n + 1, 0);
    auto rec = [&](auto&& self, size_t i, long rem) -> void {
        if (i == n) {
            cur[i] = rem;
            secs.push_back(LaurentPoly::monomial(vars, cur, 1));
            return;
        }
        for (long v = rem; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, d);
    return SectionBasis(n, d, std::move(secs));
}

struct BasePointReport {
    std::vector<ProjPoint> points;  // rational base points found
    bool complete = false;          // true iff the list is provably exhaustive
};

// Base points of the linear system spanned by the basis. On P^1 the search
// is exact over the rationals: common roots come from the gcd of the
// dehomogenized sections on both charts; the completeness flag drops only
// when the gcd keeps an irrational factor. For n >= 2, emptiness is proven
// by the monomial-support criterion (a pure power x_i^d section for every i
// forces the common zero locus into the empty intersection of hyperplanes);
// otherwise a rational sample sweep reports what it finds, flagged incomplete.
inline BasePointReport base_points(const SectionBasis& b) {
    BasePointReport rep;
    if (b.n() == 1) {
        // Chart 0: t = x1/x0. Common roots of the dehomogenizations.
        uni::Dense g;
        for (const auto& s : b.sections()) {
            uni::Dense dense(static_cast<size_t>(b.d()) + 1, ExactScalar(0));
            for (const auto& [e, c] : s.terms()) dense[static_cast<size_t>(e[1])] = c;
            uni::trim(dense);
            g = g.empty() ? dense : uni::gcd(g, dense);
            if (uni::degree(g) == 0 && !g.empty()) break;
        }
        long rem = 0;
        if (!g.empty() && uni::degree(g) > 0) {
            for (const auto& [root, mult] : uni::rational_roots(g, &rem))
                rep.points.push_back(p1_point(1, root));
        }
        // The point [0:1] is a base point iff every section lacks x1^d.
        bool inf_base = true;
        for (const auto& s : b.sections()) {
            Exponents top(2, 0);
            top[1] = b.d();
            if (s.terms().count(top)) {
                inf_base = false;
                break;
            }
        }
        if (inf_base) rep.points.push_back(p1_point(0, 1));
        rep.complete = (rem == 0);
        return rep;
    }

    bool pure_powers = true;
    for (size_t i = 0; i <= b.n(); ++i) {
        Exponents pure(b.n() + 1, 0);
        pure[i] = b.d();
        bool found = false;
        for (const auto& s : b.sections())
            if (s.terms().size() == 1 && s.terms().count(pure)) found = true;
        if (!found) {
            pure_powers = false;
            break;
        }
    }
    if (pure_powers && b.d() > 0) {
        rep.complete = true;
        return rep;
    }
    // Rational sample sweep over a small grid.
    std::vector<ExactScalar> grid = {ExactScalar(0), ExactScalar(1), ExactScalar(-1),
                                     rat(1, 2),      ExactScalar(2), ExactScalar(-2)};
    std::vector<GaussRat> cur(b.n() + 1);
    auto sweep = [&](auto&& self, size_t i) -> void {
        if (i == b.n() + 1) {
            bool nonzero = false;
            for (const auto& c : cur)
                if (!c.is_zero()) nonzero = true;
            if (!nonzero) return;
            std::vector<GaussRat> pt(cur);
            bool all_vanish = true;
            for (const auto& s : b.sections())
                if (!s.eval<GaussRat>(pt).is_zero()) {
                    all_vanish = false;
                    break;
                }
            if (all_vanish) {
                ProjPoint p(pt);
                for (const auto& q : rep.points)
                    if (q == p) return;
                rep.points.push_back(std::move(p));
            }
            return;
        }
        for (const auto& v : grid) {
            cur[i] = GaussRat(v);
            self(self, i + 1);
        }
    };
    sweep(sweep, 0);
    rep.complete = false;
    return rep;
}

// The Kodaira map at p: [s_0(p) : ... : s_N(p)], canonically scaled.
// Scale invariance holds because the sections share one degree.
inline ProjPoint eval_map(const SectionBasis& b, const ProjPoint& p) {
    if (p.coords.size() != b.n() + 1)
        throw DimensionMismatch("point dimension does not match the basis");
    std::vector<GaussRat> img;
    img.reserve(b.size());
    bool all_zero = true;
    for (const auto& s : b.sections()) {
        GaussRat v = s.eval<GaussRat>(p.coords);
        if (!v.is_zero()) all_zero = false;
        img.push_back(v);
    }
    if (all_zero) throw BasePointEvaluation("every section vanishes at " + p.str());
    return ProjPoint(std::move(img));
}

struct PairVerdict {
    ProjPoint p, q;
    bool separated = false;
};

struct InjectivityReport {
    bool all_separated = true;
    std::vector<PairVerdict> verdicts;
};

inline InjectivityReport check_injective(const SectionBasis& b,
                                         const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs) {
    InjectivityReport rep;
    for (const auto& [p, q] : pairs) {
        PairVerdict v;
        v.p = p;
        v.q = q;
        if (p == q) throw EqualPoints();
        v.separated = !(eval_map(b, p) == eval_map(b, q));
        if (!v.separated) rep.all_separated = false;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

struct ImmersionVerdict {
    ProjPoint point;
    size_t chart = 0;
    size_t rank = 0;
    bool immersion = false;  // rank == n + 1
};

struct ImmersionReport {
    bool all_immersive = true;
    std::vector<ImmersionVerdict> verdicts;
};

// Sets x_chart = 1 and drops that variable.
inline LaurentPoly dehomogenize(const LaurentPoly& s, size_t chart) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < s.num_vars(); ++i)
        if (i != chart) vars.push_back(s.variables()[i]);
    LaurentPoly out(vars);
    for (const auto& [e, c] : s.terms()) {
        Exponents e2;
        for (size_t i = 0; i < e.size(); ++i)
            if (i != chart) e2.push_back(e[i]);
        out.add_term(e2, c);
    }
    return out;
}

// Tangent-separation check at each sample: in the affine chart containing
// the sample, the (n+1) x (N+1) matrix of section values and coordinate
// partials of the dehomogenized sections must have full rank n+1.
inline ImmersionReport check_immersion(const SectionBasis& b,
                                       const std::vector<ProjPoint>& samples) {
    ImmersionReport rep;
    for (const auto& p : samples) {
        if (p.coords.size() != b.n() + 1)
            throw DimensionMismatch("sample dimension does not match the basis");
        size_t chart = p.first_nonzero();  // canonical scaling: that coord is 1
        // Affine coordinates: the other homogeneous coordinates.
        std::vector<GaussRat> affine;
        for (size_t i = 0; i <= b.n(); ++i)
            if (i != chart) affine.push_back(p.coords[i]);

        std::vector<std::vector<GaussRat>> m(b.n() + 1,
                                             std::vector<GaussRat>(b.size()));
        for (size_t col = 0; col < b.size(); ++col) {
            LaurentPoly deh = dehomogenize(b.sections()[col], chart);
            m[0][col] = deh.eval<GaussRat>(affine);
            for (size_t v = 0; v < b.n(); ++v)
                m[v + 1][col] = deh.derivative(v).eval<GaussRat>(affine);
        }
        bool sec_all_zero = std::all_of(m[0].begin(), m[0].end(),
                                        [](const GaussRat& g) { return g.is_zero(); });
        if (sec_all_zero) throw BasePointEvaluation("every section vanishes at " + p.str());

        ImmersionVerdict v;
        v.point = p;
        v.chart = chart;
        v.rank = field_rank(m);
        v.immersion = (v.rank == b.n() + 1);
        if (!v.immersion) rep.all_immersive = false;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

// Surjectivity of the two-point evaluation map for O(d) on P^1: the
// 2 x (d+1) matrix of monomial values at p and q has rank 2. This is the
// desk-scale face of "H^1 vanishes => the restriction map is onto".
inline bool two_point_surjectivity(long d, const ProjPoint& p, const ProjPoint& q) {
    if (p.coords.size() != 2 || q.coords.size() != 2)
        throw DimensionMismatch("two_point_surjectivity works on P^1");
    if (p == q) throw EqualPoints();
    if (d < 0) return false;
    SectionBasis b = full_monomial_basis(1, d);
    std::vector<std::vector<GaussRat>> m(2, std::vector<GaussRat>(b.size()));
    for (size_t col = 0; col < b.size(); ++col) {
        m[0][col] = b.sections()[col].eval<GaussRat>(p.coords);
        m[1][col] = b.sections()[col].eval<GaussRat>(q.coords);
    }
    return field_rank(m) == 2;
}

// The "k >> 0" of the embedding theorem, made effective on an instance:
// smallest d <= d_max such that the full O(d) system on P^1 is base-point
// free and separates all sample points and tangents.
inline std::optional<long> smallest_embedding_degree(long d_max,
                                                     const std::vector<ProjPoint>& samples) {
    for (long d = 0; d <= d_max; ++d) {
        try {
            SectionBasis b = full_monomial_basis(1, d);
            BasePointReport bp = base_points(b);
            if (!bp.complete || !bp.points.empty()) continue;
            std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
            for (size_t i = 0; i < samples.size(); ++i)
                for (size_t j = i + 1; j < samples.size(); ++j)
                    pairs.emplace_back(samples[i], samples[j]);
            if (!check_injective(b, pairs).all_separated) continue;
            if (!check_immersion(b, samples).all_immersive) continue;
            bool surj = true;
            for (const auto& [p, q] : pairs)
                if (!two_point_surjectivity(d, p, q)) surj = false;
            if (!surj) continue;
            return d;
        } catch (const BasePointEvaluation&) {
            continue;
        }
    }
    return std::nullopt;
}

// Standard 12-point rational sample on P^1 (includes the boundary point of
// chart 0, which reroutes the immersion check to the other chart).
inline std::vector<ProjPoint> default_p1_samples() {
    std::vector<ProjPoint> pts;
    pts.push_back(p1_point(0, 1));
    for (const ExactScalar& t :
         {ExactScalar(0), ExactScalar(1), ExactScalar(-1), ExactScalar(2), ExactScalar(-2),
          ExactScalar(3), ExactScalar(-3), rat(1, 2), rat(-1, 2), rat(5, 2), ExactScalar(-7)})
        pts.push_back(p1_point(1, t));
    return pts;
}

}  // namespace kodaira

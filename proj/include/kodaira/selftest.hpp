#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kodaira/blowup.hpp"
#include "kodaira/cech.hpp"
#include "kodaira/divisor.hpp"
#include "kodaira/hermitian.hpp"
#include "kodaira/kodaira_map.hpp"
#include "kodaira/line_bundle.hpp"

namespace kodaira {

struct SelftestReport {
    bool all_pass = true;
    std::vector<std::pair<std::string, bool>> checks;

    void record(const std::string& name, bool pass) {
        checks.emplace_back(name, pass);
        if (!pass) all_pass = false;
    }
};

namespace detail {

inline ExactScalar random_rat(std::mt19937& rng, long cmax = 9) {
    std::uniform_int_distribution<long> num(-cmax, cmax);
    std::uniform_int_distribution<long> den(1, cmax);
    return rat(num(rng), den(rng));
}

inline LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                               long emin, long emax, int terms) {
    std::uniform_int_distribution<long> exp(emin, emax);
    LaurentPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = exp(rng);
        p.add_term(e, random_rat(rng));
    }
    return p;
}

inline RationalFunc random_rational_func(std::mt19937& rng,
                                         const std::vector<std::string>& vars) {
    LaurentPoly num = random_poly(rng, vars, -2, 3, 3);
    LaurentPoly den(vars);
    while (den.is_zero()) den = random_poly(rng, vars, -2, 3, 2);
    if (num.is_zero()) num = LaurentPoly::constant(vars, 1);
    return RationalFunc(num, den);
}

}  // namespace detail

// Deterministic invariant suite across every module. `threads` only affects
// scheduling inside cohomology computations, never results or report order.
inline SelftestReport run_selftest(size_t threads = 1) {
    SelftestReport rep;
    std::mt19937 rng(20240901);

    // symbolic_core invariants.
    {
        bool idem = true, subst_id = true, leibniz = true, scalar_exact = true;
        for (int t = 0; t < 20; ++t) {
            const std::vector<std::string> vars =
                (t % 2 == 0) ? std::vector<std::string>{"z"}
                             : std::vector<std::string>{"z1", "z2"};
            RationalFunc f = detail::random_rational_func(rng, vars);
            RationalFunc g = detail::random_rational_func(rng, vars);
            // Construction normalizes, so a rebuilt copy must be identical.
            RationalFunc f2(f.num(), f.den());
            idem = idem && f2.num() == f.num() && f2.den() == f.den();
            std::map<std::string, RationalFunc> ident;
            for (const auto& v : vars) ident[v] = RationalFunc::variable(vars, v);
            subst_id = subst_id && f.substitute(ident) == f;
            RationalFunc lhs = (f * g).formal_partial(vars[0]);
            RationalFunc rhs = f * g.formal_partial(vars[0]) + g * f.formal_partial(vars[0]);
            leibniz = leibniz && lhs == rhs;
            ExactScalar a = detail::random_rat(rng), b = detail::random_rat(rng);
            scalar_exact = scalar_exact && ((a + b) - b == a);
        }
        rep.record("symbolic.normalize_idempotent", idem);
        rep.record("symbolic.substitute_identity", subst_id);
        rep.record("symbolic.leibniz_rule", leibniz);
        rep.record("symbolic.scalar_exact", scalar_exact);
    }

    // linalg invariants.
    {
        bool transpose_ok = true, rank_nullity = true;
        std::uniform_int_distribution<size_t> dim(1, 5);
        for (int t = 0; t < 15; ++t) {
            ExactMatrix m(dim(rng), dim(rng));
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = detail::random_rat(rng, 4);
            transpose_ok = transpose_ok && m.rank() == m.transpose().rank();
            rank_nullity = rank_nullity && m.kernel_dim() + m.rank() == m.cols();
        }
        rep.record("linalg.rank_transpose", transpose_ok);
        rep.record("linalg.rank_nullity", rank_nullity);
    }

    // cover/nerve invariants.
    {
        bool simplicial = true, counts = true;
        for (size_t size = 2; size <= 5; ++size) {
            Cover c(size);
            for (size_t p = 0; p + 1 <= size; ++p) {
                std::vector<Simplex> simp = nerve(c, p);
                size_t binom = 1;
                for (size_t i = 0; i < p + 1; ++i) binom = binom * (size - i) / (i + 1);
                counts = counts && simp.size() == binom;
                if (p >= 2)
                    for (const Simplex& s : simp)
                        for (size_t j = 0; j + 1 < s.size(); ++j)
                            for (size_t k = j; k + 1 < s.size(); ++k)
                                simplicial = simplicial &&
                                             face(face(s, j), k) == face(face(s, k + 1), j);
            }
        }
        rep.record("cover.simplicial_identity", simplicial);
        rep.record("cover.nerve_counts", counts);
    }

    // Cech engine: delta^2 = 0 and the dimension formulas against oracles.
    {
        bool dsq = true;
        std::uniform_int_distribution<size_t> nd(1, 3);
        std::uniform_int_distribution<long> dd(-5, 5);
        for (int t = 0; t < 30; ++t) {
            TwistingSheaf s(nd(rng), dd(rng));
            std::vector<GradedPiece> window = multidegree_window(s);
            std::uniform_int_distribution<size_t> pick(0, window.size() - 1);
            std::uniform_int_distribution<size_t> pp(0, s.n);
            dsq = dsq && verify_delta_squared(s, pp(rng), window[pick(rng)]);
        }
        rep.record("cech.delta_squared_zero", dsq);

        bool h0_ok = true, h1_ok = true;
        for (long d = -4; d <= 4; ++d) {
            TwistingSheaf s(1, d);
            size_t h0 = cohomology_dim(s, 0, 1, threads);
            size_t h1 = cohomology_dim(s, 1, 1, threads);
            size_t h0_oracle = d >= 0 ? static_cast<size_t>(d + 1) : 0;
            size_t h1_oracle = d <= -2 ? static_cast<size_t>(-d - 1) : 0;
            h0_ok = h0_ok && h0 == h0_oracle;
            h1_ok = h1_ok && h1 == h1_oracle;
        }
        rep.record("cech.h0_formula_p1", h0_ok);
        rep.record("cech.h1_formula_p1", h1_ok);
    }

    // Picard arithmetic.
    {
        bool closure = true, homo = true, dual_ok = true, round = true;
        std::uniform_int_distribution<long> dd(-4, 4);
        for (int t = 0; t < 12; ++t) {
            long a = dd(rng), b = dd(rng);
            MonomialCocycle ca = standard_bundle(2, a), cb = standard_bundle(2, b);
            MonomialCocycle tp = tensor(ca, cb);
            closure = closure && check_cocycle(tp);
            homo = homo && equivalence_degree(tp) == a + b;
            dual_ok = dual_ok && equivalence_degree(dual(ca)) == -a;
            round = round && equivalence_degree(ca) == a;
        }
        rep.record("picard.tensor_closure", closure);
        rep.record("picard.degree_homomorphism", homo);
        rep.record("picard.dual_negates", dual_ok);
        rep.record("picard.roundtrip", round);
    }

    // Divisor correspondences.
    {
        bool deg0 = true, ord_add = true, ldim = true, cross = true, effective = true;
        std::uniform_int_distribution<long> root(-4, 4);
        std::uniform_int_distribution<long> mult(1, 3);
        std::uniform_int_distribution<int> nfac(1, 3);
        const std::vector<std::string> zv{"z"};
        RationalFunc z = RationalFunc::variable(zv, "z");
        auto random_split = [&]() {
            RationalFunc f = RationalFunc::constant(zv, detail::random_rat(rng));
            while (f.is_zero()) f = RationalFunc::constant(zv, detail::random_rat(rng));
            int k = nfac(rng);
            for (int i = 0; i < k; ++i) {
                RationalFunc lin = z - RationalFunc::constant(zv, rat(root(rng)));
                long m = mult(rng);
                f = (i % 2 == 0) ? f * lin.pow(m) : f / lin.pow(m);
            }
            return f;
        };
        for (int t = 0; t < 20; ++t) {
            RationalFunc f = random_split(), g = random_split();
            deg0 = deg0 && principal_divisor(f).degree() == 0;
            PointP1 p = PointP1::affine(rat(root(rng)));
            ord_add = ord_add && ord_at(f * g, p) == ord_at(f, p) + ord_at(g, p);
        }
        for (int t = 0; t < 10; ++t) {
            DivisorP1 d;
            int k = nfac(rng);
            for (int i = 0; i < k; ++i) d.add(PointP1::affine(rat(root(rng))), mult(rng));
            if (t % 3 == 0) d.add(PointP1::infinity(), mult(rng));
            SectionSpace ss = section_space(d);
            ldim = ldim && static_cast<long>(ss.basis.size()) == d.degree() + 1;
            cross = cross && ss.basis.size() ==
                                 cohomology_dim(TwistingSheaf(1, d.degree()), 0, 1, threads);
            for (const auto& f : ss.basis)
                effective = effective && is_effective(d + principal_divisor(f));
        }
        rep.record("divisor.principal_degree_zero", deg0);
        rep.record("divisor.ord_additivity", ord_add);
        rep.record("divisor.section_space_dim", ldim);
        rep.record("divisor.section_space_matches_h0", cross);
        rep.record("divisor.sections_effective", effective);
    }

    // Blowup chart algebra.
    {
        bool cocycle_consistency = true, chain = true, closed_form = true, relations = true;
        for (size_t n = 2; n <= 3; ++n) {
            BlowupAtlas atlas(n);
            std::vector<std::string> uv = atlas.chart_vars();
            for (size_t j = 1; j <= n; ++j)
                for (size_t k = 1; k <= n; ++k) {
                    if (j == k) continue;
                    // Transition consistency through a third chart.
                    for (size_t m = 1; m <= n; ++m) {
                        if (m == j || m == k) continue;
                        RationalMapTuple jk = chart_transition(atlas, j, k);
                        RationalMapTuple km = chart_transition(atlas, k, m);
                        RationalMapTuple jm = chart_transition(atlas, j, m);
                        std::map<std::string, RationalFunc> bind;
                        for (size_t i = 0; i < n; ++i) bind[uv[i]] = jk[i];
                        for (size_t i = 0; i < n; ++i)
                            cocycle_consistency =
                                cocycle_consistency && km[i].substitute(bind) == jm[i];
                        RationalFunc dkm = jacobian_det(atlas, k, m).substitute(bind);
                        chain = chain &&
                                dkm * jacobian_det(atlas, j, k) == jacobian_det(atlas, j, m);
                    }
                    RationalFunc jd = jacobian_det(atlas, j, k);
                    RationalFunc cf =
                        RationalFunc::variable(uv, "u" + std::to_string(k)).pow(
                            -(static_cast<long>(n) - 1));
                    closed_form = closed_form && (jd == cf || jd == -cf);
                }
            // Defining relations x_i y_j - x_j y_i under the chart parameterization.
            for (size_t c = 1; c <= n; ++c) {
                RationalMapTuple x = chart_parameterization(atlas, c);
                std::vector<RationalFunc> y;
                for (size_t i = 1; i <= n; ++i)
                    y.push_back(i == c ? RationalFunc::constant(uv, 1)
                                       : RationalFunc::variable(uv, "u" + std::to_string(i)));
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        relations = relations && (x[i] * y[j] - x[j] * y[i]).is_zero();
            }
        }
        rep.record("blowup.transition_consistency", cocycle_consistency);
        rep.record("blowup.jacobian_chain_rule", chain);
        rep.record("blowup.jacobian_closed_form", closed_form);
        rep.record("blowup.defining_relations", relations);
        rep.record("blowup.canonical_lemma_n2",
                   verify_canonical_lemma(BlowupAtlas(2),
                                          trivial_base_canonical(BlowupAtlas(2))));
        rep.record("blowup.canonical_lemma_n3",
                   verify_canonical_lemma(BlowupAtlas(3),
                                          trivial_base_canonical(BlowupAtlas(3))));
        rep.record("blowup.exceptional_degree",
                   equivalence_degree(exceptional_cocycle(BlowupAtlas(3))) == -1);
    }

    // Hermitian curvature.
    {
        const std::vector<std::string> hv = herm_vars(1);
        HermExpr base = HermExpr::constant(hv, 1) +
                        HermExpr::variable(hv, "z1") * HermExpr::variable(hv, "w1");
        bool additive = true, hermitian_sym = true;
        std::uniform_int_distribution<long> pw(-3, 3);
        for (int t = 0; t < 10; ++t) {
            HermExpr h1 = base.pow(pw(rng));
            HermExpr h2 = base.pow(pw(rng));
            FormCoeffMatrix diff =
                curvature(h1 * h2) - (curvature(h1) + curvature(h2));
            additive = additive && diff.is_zero();
            hermitian_sym = hermitian_sym && curvature(h1).is_hermitian();
        }
        rep.record("curvature.additivity", additive);
        rep.record("curvature.hermitian_symmetry", hermitian_sym);

        std::vector<std::vector<ExactScalar>> pts1 = {
            {ExactScalar(0)}, {ExactScalar(1)}, {ExactScalar(-2)}, {rat(1, 3)}};
        bool fs_pos = positivity_sample(fubini_study(1, 0), pts1).all_positive &&
                      positivity_sample(fubini_study(1, 1), pts1).all_positive;
        std::vector<std::vector<ExactScalar>> pts2 = {
            {ExactScalar(0), ExactScalar(0)}, {ExactScalar(1), rat(-1, 2)},
            {ExactScalar(-1), ExactScalar(2)}};
        fs_pos = fs_pos && positivity_sample(fubini_study(2, 0), pts2).all_positive;
        rep.record("curvature.fubini_study_positive", fs_pos);
    }

    // Kodaira map.
    {
        bool scale_inv = true;
        std::vector<ProjPoint> samples = default_p1_samples();
        SectionBasis b3 = full_monomial_basis(1, 3);
        std::uniform_int_distribution<long> lam(1, 7);
        for (int t = 0; t < 10; ++t) {
            ExactScalar l = rat(lam(rng), lam(rng));
            ExactScalar v = detail::random_rat(rng, 5);
            ProjPoint p = p1_point(1, v);
            ProjPoint q(std::vector<GaussRat>{GaussRat(l), GaussRat(l * v)});
            scale_inv = scale_inv && eval_map(b3, p) == eval_map(b3, q);
        }
        rep.record("kodaira.scale_invariance", scale_inv);

        bool embed = true;
        for (long d = 1; d <= 3; ++d) {
            SectionBasis b = full_monomial_basis(1, d);
            BasePointReport bp = base_points(b);
            std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
            for (size_t i = 0; i < samples.size(); ++i)
                for (size_t j = i + 1; j < samples.size(); ++j)
                    pairs.emplace_back(samples[i], samples[j]);
            bool surj = true;
            for (const auto& [p, q] : pairs)
                surj = surj && two_point_surjectivity(d, p, q);
            embed = embed && bp.complete && bp.points.empty() &&
                    check_injective(b, pairs).all_separated &&
                    check_immersion(b, samples).all_immersive && surj;
        }
        rep.record("kodaira.embedding_small_degrees", embed);
        rep.record("kodaira.h0_cross_module",
                   full_monomial_basis(1, 4).size() ==
                       cohomology_dim(TwistingSheaf(1, 4), 0, 1, threads));
    }

    return rep;
}

}  // namespace kodaira

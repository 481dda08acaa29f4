// Command-line front end: every library computation as a subcommand with
// exact JSON output.  Exit codes: 0 success, 1 failed mathematical verdict,
// 2 malformed input.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <kodaira/json_io.hpp>
#include <kodaira/selftest.hpp>

namespace {

using nlohmann::json;
using namespace kodaira;

// Document arguments accept either a file path or inline JSON text.
json load_doc(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw SchemaError("cannot open document: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<ProjPoint> load_samples(const std::string& arg, size_t n) {
    if (arg == "default") {
        if (n != 1) throw SchemaError("default samples are only defined for n=1");
        return default_p1_samples();
    }
    json j = load_doc(arg);
    if (!j.is_array()) throw SchemaError("samples must be an array of points");
    std::vector<ProjPoint> out;
    for (const auto& p : j) out.push_back(io::proj_point_from_json(p));
    return out;
}

std::vector<std::vector<ExactScalar>> load_points(const std::string& arg) {
    json j = load_doc(arg);
    if (!j.is_array()) throw SchemaError("points must be an array");
    std::vector<std::vector<ExactScalar>> out;
    for (const auto& p : j) {
        if (!p.is_array()) throw SchemaError("each point must be a coordinate array");
        std::vector<ExactScalar> coords;
        for (const auto& c : p)
            coords.push_back(c.is_string() ? parse_rat(c.get<std::string>())
                                           : ExactScalar(c.get<long>()));
        out.push_back(std::move(coords));
    }
    return out;
}

json to_json(const SelftestReport& r) {
    json checks = json::array();
    for (const auto& [name, pass] : r.checks)
        checks.push_back({{"name", name}, {"pass", pass}});
    return {{"all_pass", r.all_pass}, {"checks", checks}};
}

// Generic human-readable rendering; JSON stays the machine format.
void print_table(const json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive()) {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            } else {
                os << pad << k << ":\n";
                print_table(v, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive()) {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            } else if (v.is_array()) {
                os << pad << "- " << v.dump() << "\n";
            } else {
                os << pad << "-\n";
                print_table(v, os, indent + 2);
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

struct Output {
    std::string format = "json";
    int exit_code = 0;
    json doc;

    void emit() const {
        if (format == "table")
            print_table(doc, std::cout);
        else
            std::cout << doc.dump(2) << "\n";
    }
};

PointP1 parse_point_arg(const std::string& s) { return io::point_p1_from_string(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for line bundles on projective space: Cech "
                 "cohomology, Picard arithmetic, divisors on P^1, blowup charts, "
                 "Hermitian curvature, and projective embedding checks."};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format: json (default) or table")
        ->check(CLI::IsMember({"json", "table"}));

    // cohomology
    long co_n = 1, co_d = 0, co_q = 0, co_pad = 1;
    auto* co = app.add_subcommand("cohomology",
                                  "Cech cohomology dimension of O(d) on P^n");
    co->add_option("--n", co_n, "Projective space dimension")->required();
    co->add_option("--d", co_d, "Twist degree")->required();
    co->add_option("--q", co_q, "Cohomology degree")->required();
    co->add_option("--pad", co_pad, "Multidegree window padding beyond |d|");

    // picard
    auto* pic = app.add_subcommand("picard", "Monomial transition cocycle arithmetic");
    pic->require_subcommand(1);
    std::string pic_in, pic_a, pic_b;
    auto* pic_check = pic->add_subcommand("check", "Verify the cocycle conditions");
    pic_check->add_option("--in", pic_in, "Cocycle document")->required();
    auto* pic_tensor = pic->add_subcommand("tensor", "Tensor product of two cocycles");
    pic_tensor->add_option("--a", pic_a, "First cocycle document")->required();
    pic_tensor->add_option("--b", pic_b, "Second cocycle document")->required();
    auto* pic_degree = pic->add_subcommand("degree", "Degree of a standard-form cocycle");
    pic_degree->add_option("--in", pic_in, "Cocycle document")->required();

    // divisor
    auto* dv = app.add_subcommand("divisor", "Divisors on P^1 and their sections");
    dv->require_subcommand(1);
    std::string dv_func, dv_point, dv_in, dv_a, dv_b;
    auto* dv_ord = dv->add_subcommand("ord", "Vanishing order of a rational function");
    dv_ord->add_option("--func", dv_func, "Rational function document")->required();
    dv_ord->add_option("--point", dv_point, "Point: rational p/q or 'inf'")->required();
    auto* dv_prin = dv->add_subcommand("principal", "Divisor of zeros and poles");
    dv_prin->add_option("--func", dv_func, "Rational function document")->required();
    auto* dv_bundle = dv->add_subcommand("bundle", "Transition cocycle of a divisor");
    dv_bundle->add_option("--in", dv_in, "Divisor document")->required();
    auto* dv_sections = dv->add_subcommand("sections", "Basis of L(D)");
    dv_sections->add_option("--in", dv_in, "Divisor document")->required();
    auto* dv_equiv = dv->add_subcommand("equiv", "Linear equivalence test with witness");
    dv_equiv->add_option("--a", dv_a, "First divisor document")->required();
    dv_equiv->add_option("--b", dv_b, "Second divisor document")->required();

    // blowup
    auto* bl = app.add_subcommand("blowup", "Blowup of C^n at the origin");
    bl->require_subcommand(1);
    long bl_n = 2, bl_j = 1, bl_k = 2;
    auto* bl_tr = bl->add_subcommand("transition", "Chart transition map");
    bl_tr->add_option("--n", bl_n, "Ambient dimension")->required();
    bl_tr->add_option("--j", bl_j, "Source chart (1-based)")->required();
    bl_tr->add_option("--k", bl_k, "Target chart (1-based)")->required();
    auto* bl_jac = bl->add_subcommand("jacobian", "Jacobian determinant of a transition");
    bl_jac->add_option("--n", bl_n, "Ambient dimension")->required();
    bl_jac->add_option("--j", bl_j, "Source chart (1-based)")->required();
    bl_jac->add_option("--k", bl_k, "Target chart (1-based)")->required();
    auto* bl_ver = bl->add_subcommand(
        "verify-canonical",
        "Check the canonical bundle transitions against (n-1) copies of the "
        "exceptional divisor");
    bl_ver->add_option("--n", bl_n, "Ambient dimension")->required();

    // curvature
    auto* cu = app.add_subcommand("curvature", "Curvature coefficient matrix of a metric");
    std::string cu_metric;
    long cu_fs = -1, cu_chart = 0;
    cu->add_option("--metric", cu_metric, "Metric weight document (rational function)");
    cu->add_option("--fs", cu_fs, "Fubini-Study metric on P^N instead of --metric");
    cu->add_option("--chart", cu_chart, "Chart index for --fs");

    // positivity
    auto* po = app.add_subcommand("positivity", "Positive definiteness at sample points");
    std::string po_metric, po_points;
    long po_fs = -1, po_chart = 0;
    po->add_option("--metric", po_metric, "Metric weight document (rational function)");
    po->add_option("--fs", po_fs, "Fubini-Study metric on P^N instead of --metric");
    po->add_option("--chart", po_chart, "Chart index for --fs");
    po->add_option("--points", po_points, "Sample point list document")->required();

    // kodaira
    auto* ko = app.add_subcommand("kodaira", "Projective maps from section bases");
    ko->require_subcommand(1);
    long ko_n = 1, ko_d = 1;
    std::string ko_samples = "default";
    auto add_nd = [&](CLI::App* sub, bool with_samples) {
        sub->add_option("--n", ko_n, "Source projective space dimension")->required();
        sub->add_option("--d", ko_d, "Twist degree of the section basis")->required();
        if (with_samples)
            sub->add_option("--samples", ko_samples,
                            "Sample list document, or 'default' (12 rational points)");
    };
    auto* ko_base = ko->add_subcommand("basepoints", "Common zeros of the basis");
    add_nd(ko_base, false);
    auto* ko_map = ko->add_subcommand("map", "Evaluate the map at sample points");
    add_nd(ko_map, true);
    auto* ko_inj = ko->add_subcommand("inject", "Point separation on all sample pairs");
    add_nd(ko_inj, true);
    auto* ko_imm = ko->add_subcommand("immerse", "Tangent separation at all samples");
    add_nd(ko_imm, true);
    auto* ko_two = ko->add_subcommand("two-point",
                                      "Surjectivity of evaluation on point pairs");
    add_nd(ko_two, true);

    // selftest
    auto* st = app.add_subcommand("selftest", "Run the full invariant suite");

    // Let global flags like --format appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        size_t threads = worker_count_from_env();

        if (*co) {
            if (co_n < 1 || co_q < 0 || co_pad < 0)
                throw SchemaError("need n >= 1, q >= 0, pad >= 0");
            CohomologyReport r = cohomology_report(
                TwistingSheaf(static_cast<size_t>(co_n), co_d),
                static_cast<size_t>(co_q), static_cast<size_t>(co_pad), threads);
            out.doc = io::to_json(r);
        } else if (*pic_check) {
            MonomialCocycle c = io::cocycle_from_json(load_doc(pic_in));
            bool ok = check_cocycle(c);
            out.doc = {{"ok", ok}};
            if (!ok) out.exit_code = 1;
        } else if (*pic_tensor) {
            out.doc = io::to_json(tensor(io::cocycle_from_json(load_doc(pic_a)),
                                         io::cocycle_from_json(load_doc(pic_b))));
        } else if (*pic_degree) {
            out.doc = {{"degree",
                        equivalence_degree(io::cocycle_from_json(load_doc(pic_in)))}};
        } else if (*dv_ord) {
            RationalFunc f = io::rational_func_from_json(load_doc(dv_func));
            out.doc = {{"ord", ord_at(f, parse_point_arg(dv_point))}};
        } else if (*dv_prin) {
            RationalFunc f = io::rational_func_from_json(load_doc(dv_func));
            out.doc = io::to_json(principal_divisor(f));
        } else if (*dv_bundle) {
            DivisorP1 d = io::divisor_from_json(load_doc(dv_in));
            MonomialCocycle c = divisor_cocycle(d);
            out.doc = {{"cocycle", io::to_json(c)}, {"degree", equivalence_degree(c)}};
        } else if (*dv_sections) {
            SectionSpace s = section_space(io::divisor_from_json(load_doc(dv_in)));
            json basis = json::array();
            for (const auto& f : s.basis) basis.push_back(io::to_json(f));
            out.doc = {{"dim", s.basis.size()}, {"basis", basis}};
        } else if (*dv_equiv) {
            DivisorP1 a = io::divisor_from_json(load_doc(dv_a));
            DivisorP1 b = io::divisor_from_json(load_doc(dv_b));
            RationalFunc witness = RationalFunc::constant({"z"}, 1);
            bool eq = linearly_equivalent(a, b, &witness);
            out.doc = {{"equivalent", eq}};
            if (eq)
                out.doc["witness"] = io::to_json(witness);
            else
                out.exit_code = 1;
        } else if (*bl_tr) {
            BlowupAtlas atlas(static_cast<size_t>(bl_n));
            RationalMapTuple t = chart_transition(atlas, static_cast<size_t>(bl_j),
                                                  static_cast<size_t>(bl_k));
            json comps = json::array();
            for (const auto& f : t) comps.push_back(io::to_json(f));
            out.doc = {{"components", comps}};
        } else if (*bl_jac) {
            BlowupAtlas atlas(static_cast<size_t>(bl_n));
            out.doc = io::to_json(jacobian_det(atlas, static_cast<size_t>(bl_j),
                                               static_cast<size_t>(bl_k)));
        } else if (*bl_ver) {
            BlowupAtlas atlas(static_cast<size_t>(bl_n));
            CanonicalCheck c =
                verify_canonical_lemma_detail(atlas, trivial_base_canonical(atlas),
                                              static_cast<long>(bl_n) - 1);
            out.doc = io::to_json(c);
            if (!c.ok) out.exit_code = 1;
        } else if (*cu) {
            if (cu_fs < 1 && cu_metric.empty())
                throw SchemaError("curvature needs --metric or --fs");
            FormCoeffMatrix m =
                cu_fs >= 1 ? fubini_study(static_cast<size_t>(cu_fs),
                                          static_cast<size_t>(cu_chart))
                           : curvature(io::rational_func_from_json(load_doc(cu_metric)));
            out.doc = io::to_json(m);
        } else if (*po) {
            if (po_fs < 1 && po_metric.empty())
                throw SchemaError("positivity needs --metric or --fs");
            FormCoeffMatrix m =
                po_fs >= 1 ? fubini_study(static_cast<size_t>(po_fs),
                                          static_cast<size_t>(po_chart))
                           : curvature(io::rational_func_from_json(load_doc(po_metric)));
            PositivityReport r = positivity_sample(m, load_points(po_points));
            out.doc = io::to_json(r);
            if (!r.all_positive) out.exit_code = 1;
        } else if (*ko_base) {
            BasePointReport r = base_points(
                full_monomial_basis(static_cast<size_t>(ko_n), ko_d));
            out.doc = io::to_json(r);
            if (!r.points.empty()) out.exit_code = 1;
        } else if (*ko_map) {
            SectionBasis b = full_monomial_basis(static_cast<size_t>(ko_n), ko_d);
            json imgs = json::array();
            for (const auto& p : load_samples(ko_samples, static_cast<size_t>(ko_n)))
                imgs.push_back({{"point", io::to_json(p)},
                                {"image", io::to_json(eval_map(b, p))}});
            out.doc = {{"images", imgs}};
        } else if (*ko_inj) {
            SectionBasis b = full_monomial_basis(static_cast<size_t>(ko_n), ko_d);
            std::vector<ProjPoint> s = load_samples(ko_samples, static_cast<size_t>(ko_n));
            std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j)
                    pairs.emplace_back(s[i], s[j]);
            InjectivityReport r = check_injective(b, pairs);
            out.doc = io::to_json(r);
            if (!r.all_separated) out.exit_code = 1;
        } else if (*ko_imm) {
            SectionBasis b = full_monomial_basis(static_cast<size_t>(ko_n), ko_d);
            ImmersionReport r =
                check_immersion(b, load_samples(ko_samples, static_cast<size_t>(ko_n)));
            out.doc = io::to_json(r);
            if (!r.all_immersive) out.exit_code = 1;
        } else if (*ko_two) {
            if (ko_n != 1) throw SchemaError("two-point needs --n 1");
            std::vector<ProjPoint> s = load_samples(ko_samples, 1);
            json verdicts = json::array();
            bool all = true;
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j) {
                    bool ok = two_point_surjectivity(ko_d, s[i], s[j]);
                    all = all && ok;
                    verdicts.push_back({{"p", io::to_json(s[i])},
                                        {"q", io::to_json(s[j])},
                                        {"surjective", ok}});
                }
            out.doc = {{"all_surjective", all}, {"pairs", verdicts}};
            if (!all) out.exit_code = 1;
        } else if (*st) {
            SelftestReport r = run_selftest(threads);
            out.doc = to_json(r);
            if (!r.all_pass) out.exit_code = 1;
        }

        out.emit();
        return out.exit_code;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// smf: exact and numerical toolkit for Siegel theta constants, truncated
// Fourier expansions, formal Fourier-Jacobi series, and paramodular
// symmetry checks.
//
// Exit codes: 0 all checks pass, 1 verification failure (witnesses in the
// report), 2 usage or infeasible request, 3 inconclusive (budget).

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "smf/arith.hpp"
#include "smf/constructions.hpp"
#include "smf/formal_fj.hpp"
#include "smf/io.hpp"
#include "smf/paramodular.hpp"
#include "smf/series.hpp"
#include "smf/theta.hpp"

using namespace smf;

namespace {

struct GlobalOpts {
    int64_t trunc = 16;
    double tol = 1e-10;
    uint64_t seed = 1;
    uint64_t budget = 1u << 20;
    std::string out;
};

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int emit(Report& rep, const GlobalOpts& g, const Timer& timer) {
    rep.seed = g.seed;
    rep.timings_ms.emplace_back("total", timer.ms());
    Json j = rep.to_json();
    if (g.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(g.out, j);
    return rep.exit_code();
}

ThetaCharacteristic parse_char(int genus, const std::string& a, const std::string& b) {
    if (static_cast<int>(a.size()) != genus || static_cast<int>(b.size()) != genus)
        throw CLI::ValidationError("characteristic bits must have length = genus");
    uint32_t av = 0, bv = 0;
    for (int i = 0; i < genus; ++i) {
        if ((a[i] != '0' && a[i] != '1') || (b[i] != '0' && b[i] != '1'))
            throw CLI::ValidationError("characteristic bits must be 0/1");
        av |= (a[i] - '0') << i;
        bv |= (b[i] - '0') << i;
    }
    return ThetaCharacteristic(genus, av, bv);
}

QSymMatrix parse_sym_matrix(const std::string& text) {
    Json j = Json::parse(text);
    int n = static_cast<int>(j.size());
    QSymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Rational v = j[i][k].is_string() ? parse_rational(j[i][k].get<std::string>())
                                             : Rational(j[i][k].get<long>());
            if (k >= i) m.set(i, k, v);
        }
    return m;
}

QMat parse_qmat(const std::string& text) {
    Json j = Json::parse(text);
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            m(i, k) = j[i][k].is_string() ? parse_rational(j[i][k].get<std::string>())
                                          : Rational(j[i][k].get<long>());
    return m;
}

PointInHn parse_tau(const std::string& path_or_default, int genus) {
    if (path_or_default.empty()) return PointInHn::diagonal_i(genus);
    Json j = read_json_file(path_or_default);
    int n = static_cast<int>(j.at("re").size());
    CMat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            t(i, k) = Complex(j.at("re")[i][k].get<double>(), j.at("im")[i][k].get<double>());
    PointInHn p(n, t);
    if (!p.valid()) throw std::domain_error("tau is not a point of H_n");
    return p;
}

Json sym_report_json(const SymmetryReport& rep) {
    Json j;
    j["pairs_checked"] = rep.pairs_checked;
    Json v = Json::array();
    for (const auto& w : rep.violations) {
        v.push_back({{"generator", w.generator_index},
                     {"E", w.key.str()},
                     {"expected", rational_str(w.expected)},
                     {"found", rational_str(w.found)}});
        if (v.size() >= 16) break;
    }
    j["violations"] = std::move(v);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel theta / Fourier-Jacobi verification toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--trunc", g.trunc, "exponent trace bound on E = 8T");
    app.add_option("--tol", g.tol, "numerical tolerance");
    app.add_option("--seed", g.seed, "seed for randomized scans");
    app.add_option("--budget", g.budget, "orbit BFS node budget");
    app.add_option("--out", g.out, "write the JSON report/table here");
    std::string format = "json";
    app.add_option("--format", format, "output format (json)");

    Timer timer;
    Report rep;
    int genus = 2;
    std::string a_bits, b_bits, in_path, in2_path, tau_path, name, chi_spec;
    long long level = 1, divisor = 1;
    long weight = 0;
    size_t points = 100;
    int n1 = 1;
    double u_param = 2.0;
    std::string matrix_text, key_text;

    // ---- theta ----
    auto* theta = app.add_subcommand("theta", "theta characteristic operations");
    theta->require_subcommand(1);
    auto* tcount = theta->add_subcommand("count", "even/odd characteristic counts");
    tcount->add_option("--genus", genus)->required();
    auto* torbits = theta->add_subcommand("orbits", "orbits of the symplectic action");
    torbits->add_option("--genus", genus)->required();
    auto* tqexp = theta->add_subcommand("qexp", "exact q-expansion of theta[m]");
    tqexp->add_option("--genus", genus)->required();
    tqexp->add_option("--a", a_bits, "a bits, e.g. 01")->required();
    tqexp->add_option("--b", b_bits, "b bits")->required();
    auto* teval = theta->add_subcommand("eval", "numerical theta value");
    teval->add_option("--genus", genus)->required();
    teval->add_option("--a", a_bits)->required();
    teval->add_option("--b", b_bits)->required();
    teval->add_option("--tau", tau_path, "JSON file with re/im matrices (default i*I)");

    // ---- series ----
    auto* series = app.add_subcommand("series", "ring operations on coefficient files");
    series->require_subcommand(1);
    auto* smul = series->add_subcommand("mul", "multiply two series");
    smul->add_option("--in", in_path)->required();
    smul->add_option("--in2", in2_path)->required();
    auto* sphi = series->add_subcommand("phi", "Siegel phi operator");
    sphi->add_option("--in", in_path)->required();
    auto* srestrict = series->add_subcommand("restrict", "block-diagonal restriction");
    srestrict->add_option("--in", in_path)->required();
    srestrict->add_option("--n1", n1, "size of the first block");
    auto* ssym = series->add_subcommand("symmetry", "GL symmetry check");
    ssym->add_option("--in", in_path)->required();
    ssym->add_option("--weight", weight, "integer weight k")->required();
    auto* scusp = series->add_subcommand("cusp", "phi-vanishing up to trunc");
    scusp->add_option("--in", in_path)->required();

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "named forms as q-expansions");
    construct->add_option("name", name, "F_null | F_1 | F_T")->required();
    construct->add_option("--genus", genus)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verification bundles");
    verify->require_subcommand(1);
    verify->add_subcommand("delta", "F_null^8 vs the eta product");
    verify->add_subcommand("f12", "restriction facts behind the F_{1,2} lemma");
    auto* acn3 = verify->add_subcommand("acn3-scan", "reducible-locus sampling, genus 3");
    acn3->add_option("--points", points);
    auto* acn4 = verify->add_subcommand("acn4-scan", "reducible-locus sampling, genus 4");
    acn4->add_option("--points", points);

    // ---- fj ----
    auto* fj = app.add_subcommand("fj", "formal Fourier-Jacobi containers");
    fj->require_subcommand(1);
    auto* fdec = fj->add_subcommand("decompose", "series -> per-index Jacobi tables");
    fdec->add_option("--in", in_path)->required();
    auto* fasm = fj->add_subcommand("assemble", "Jacobi tables -> Fourier table");
    fasm->add_option("--in", in_path)->required();
    auto* fval = fj->add_subcommand("validate", "psd support and elliptic consistency");
    fval->add_option("--in", in_path)->required();
    auto* fsym = fj->add_subcommand("symmetry", "eq-(3)-style symmetry of a Fourier table");
    fsym->add_option("--in", in_path)->required();
    fsym->add_option("--weight", weight)->required();

    // ---- para ----
    auto* para = app.add_subcommand("para", "paramodular group checks");
    para->require_subcommand(1);
    auto* pmember = para->add_subcommand("member", "K(N) membership of a rational matrix");
    pmember->add_option("--N", level)->required();
    pmember->add_option("--matrix", matrix_text, "4x4 JSON rows, rational strings allowed")
        ->required();
    auto* pal = para->add_subcommand("atkin-lehner", "construct and verify V_d");
    pal->add_option("--N", level)->required();
    pal->add_option("--d", divisor)->required();
    auto* pinv = para->add_subcommand("involution", "mu_N involution condition on a table");
    pinv->add_option("--table", in_path)->required();
    auto* pstrong = para->add_subcommand("strong-symmetry", "strong symmetry on a table");
    pstrong->add_option("--table", in_path)->required();
    pstrong->add_option("--weight", weight)->required();
    pstrong->add_option("--chi", chi_spec, "signs on prime exact divisors, e.g. 2:-1,3:+1");

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "quadratic form utilities");
    reduce->require_subcommand(1);
    auto* rmin = reduce->add_subcommand("min", "minimum of a positive definite form");
    rmin->add_option("--matrix", matrix_text, "symmetric rational matrix, JSON rows")->required();
    auto* rjac = reduce->add_subcommand("jacobi", "exact Jacobi decomposition");
    rjac->add_option("--matrix", matrix_text)->required();
    auto* rdom = reduce->add_subcommand("siegel-domain", "Siegel domain membership");
    rdom->add_option("--tau", tau_path)->required();
    rdom->add_option("--u", u_param, "domain parameter");
    auto* rgl2 = reduce->add_subcommand("gl2", "Gauss reduction of a binary psd key");
    rgl2->add_option("--key", key_text, "JSON [a, b, c] for [[a,b],[b,c]]")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostringstream cmdline;
        for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];
        rep.command = cmdline.str();
        if (!in_path.empty()) rep.inputs.emplace_back(in_path, fnv64_file(in_path));
        if (!in2_path.empty()) rep.inputs.emplace_back(in2_path, fnv64_file(in2_path));

        if (tcount->parsed()) {
            auto [even, odd] = characteristic_counts(genus);
            std::cout << "(" << even << ", " << odd << ")\n";
            rep.add("counts", true, Json{{"even", even}, {"odd", odd}});
        } else if (torbits->parsed()) {
            auto blocks = orbits(genus);
            Json sizes = Json::array();
            for (const auto& b : blocks) sizes.push_back(b.size());
            rep.add("two_orbits", blocks.size() == 2, Json{{"block_sizes", sizes}});
        } else if (tqexp->parsed()) {
            SiegelFourierSeries f = theta_qexp(parse_char(genus, a_bits, b_bits), g.trunc);
            Json j = series_to_json(f);
            if (g.out.empty())
                std::cout << j.dump(2) << "\n";
            else
                write_json_file(g.out, j);
            return 0;
        } else if (teval->parsed()) {
            Complex v =
                theta_numeric(parse_char(genus, a_bits, b_bits), parse_tau(tau_path, genus), g.tol);
            rep.add("theta_eval", true, Json{{"re", v.real()}, {"im", v.imag()}});
        } else if (smul->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            SiegelFourierSeries h = series_from_json(read_json_file(in2_path));
            write_json_file(g.out.empty() ? "product.json" : g.out, series_to_json(mul(f, h)));
            return 0;
        } else if (sphi->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            write_json_file(g.out.empty() ? "phi.json" : g.out, series_to_json(phi(f)));
            return 0;
        } else if (srestrict->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            BlockRestriction r = restrict_block(f, n1);
            Json entries = Json::array();
            for (const auto& [key, c] : r.coeffs)
                entries.push_back({{"E1", to_row_major(key.first)},
                                   {"E2", to_row_major(key.second)},
                                   {"re", rational_str(c.re)},
                                   {"im", rational_str(c.im)}});
            Json j{{"n1", r.n1}, {"n2", r.n2}, {"trunc", r.trunc}, {"entries", entries}};
            if (g.out.empty())
                std::cout << j.dump(2) << "\n";
            else
                write_json_file(g.out, j);
            return 0;
        } else if (ssym->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            std::vector<IMat> gens;
            if (f.genus == 2)
                gens = default_gl2_generators();
            else if (f.genus == 1) {
                IMat r(1, 1);
                r(0, 0) = -1;
                gens = {r};
            } else
                throw std::domain_error("symmetry check: genus 1 or 2 tables only");
            GlSymmetryReport r = check_gl_symmetry(f, weight, gens);
            Json v = Json::array();
            for (const auto& w : r.violations) {
                v.push_back({{"generator", w.generator_index}, {"E", w.key.str()}});
                if (v.size() >= 16) break;
            }
            rep.add("gl_symmetry", r.pass(),
                    Json{{"pairs_checked", r.pairs_checked}, {"violations", v}});
        } else if (scusp->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            rep.add("phi_vanishes_up_to_trunc", is_cusp_qexp(f),
                    Json{{"trunc", f.trunc}});
        } else if (construct->parsed()) {
            SiegelFourierSeries f = construct_named(named_form_from_string(name), genus, g.trunc);
            write_json_file(g.out.empty() ? name + ".json" : g.out, series_to_json(f));
            return 0;
        } else if (verify->parsed() && verify->get_subcommands().front()->get_name() == "delta") {
            DeltaCompareReport r = delta_compare(std::max<int64_t>(g.trunc, 16));
            rep.add("delta_proportionality", r.pass,
                    Json{{"constant", rational_str(r.constant)},
                         {"first_nonzero_key", r.first_nonzero_key},
                         {"keys_checked", r.keys_checked},
                         {"failure", r.failure}});
        } else if (verify->parsed() && verify->get_subcommands().front()->get_name() == "f12") {
            F12Report r = verify_f12_restriction(std::max<int64_t>(g.trunc, 16));
            rep.add("f12_restriction", r.pass,
                    Json{{"factors_checked", r.factors_checked},
                         {"multiplicity_m1", r.multiplicity_m1},
                         {"multiplicity_m2", r.multiplicity_m2},
                         {"delta_constant", rational_str(r.delta_constant)},
                         {"failure", r.failure}});
        } else if (acn3->parsed()) {
            Acn3Report r = acn3_scan(points, g.seed, 1e-6, 1e-3, g.budget);
            rep.add("acn3_scan", r.pass,
                    Json{{"points", r.rows.size()}, {"common_zero_flags", r.common_zero_flags}});
        } else if (acn4->parsed()) {
            Acn4Report r = acn4_scan(points, g.seed, g.tol, g.budget);
            rep.inconclusive = r.inconclusive;
            rep.add("acn4_scan", r.pass && !r.inconclusive,
                    Json{{"points", r.points},
                         {"common_zero_flags", r.common_zero_flags},
                         {"inconclusive", r.inconclusive}});
        } else if (fdec->parsed()) {
            SiegelFourierSeries f = series_from_json(read_json_file(in_path));
            write_json_file(g.out.empty() ? "fj.json" : g.out, fj_to_json(fj_decompose(f)));
            return 0;
        } else if (fasm->parsed()) {
            FormalFJSeries s = fj_from_json(read_json_file(in_path));
            write_json_file(g.out.empty() ? "fourier.json" : g.out,
                            fourier_table_to_json(assemble_formal_fourier(s)));
            return 0;
        } else if (fval->parsed()) {
            FormalFJSeries s = fj_from_json(read_json_file(in_path));
            bool all = true;
            Json tables = Json::array();
            for (const auto& t : s.tables) {
                JacobiValidationReport r = validate_jacobi(t);
                all = all && r.pass();
                tables.push_back({{"index", t.index},
                                  {"psd_ok", r.psd_ok},
                                  {"elliptic_ok", r.elliptic_ok},
                                  {"violations", r.violations.size()}});
            }
            rep.add("jacobi_tables_valid", all, Json{{"tables", tables}});
        } else if (fsym->parsed()) {
            FourierTable t = fourier_table_from_json(read_json_file(in_path));
            SymmetryReport r = check_symmetric(t, weight, default_gl2_generators());
            rep.add("formal_symmetry", r.pass(), sym_report_json(r));
        } else if (pmember->parsed()) {
            rep.add("paramodular_member", is_paramodular(parse_qmat(matrix_text), level),
                    Json{{"N", level}});
        } else if (pal->parsed()) {
            ScaledSymplectic v = make_atkin_lehner(level, divisor);
            Json rows = Json::array();
            for (int i = 0; i < 4; ++i) {
                Json row = Json::array();
                for (int j = 0; j < 4; ++j) row.push_back(rational_str(v.m(i, j)));
                rows.push_back(std::move(row));
            }
            rep.add("atkin_lehner", true,
                    Json{{"N", level},
                         {"d", v.d},
                         {"matrix_over_sqrt_d", rows},
                         {"similitude", is_symplectic_similitude(v.m, v.d)},
                         {"square_in_KN", projectively_paramodular(v * v, level)}});
        } else if (pinv->parsed()) {
            ParamodularTable t = paramodular_table_from_json(read_json_file(in_path));
            InvolutionResult r = check_involution(t);
            Json w = Json::array();
            for (const auto& x : r.witnesses) {
                w.push_back({{"E", x.key.str()},
                             {"muE", x.image.str()},
                             {"a", rational_str(x.value)},
                             {"a_mu", rational_str(x.image_value)}});
                if (w.size() >= 16) break;
            }
            rep.add("involution_condition", r.consistent,
                    Json{{"eps", r.eps},
                         {"determined", r.determined},
                         {"pairs", r.pairs},
                         {"skipped", r.skipped},
                         {"witnesses", w}});
        } else if (pstrong->parsed()) {
            ParamodularTable t = paramodular_table_from_json(read_json_file(in_path));
            SignCharacter chi = SignCharacter::trivial(t.N);
            if (!chi_spec.empty()) {
                std::map<long long, int> primes;
                std::stringstream ss(chi_spec);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto colon = item.find(':');
                    primes[std::stoll(item.substr(0, colon))] =
                        std::stoi(item.substr(colon + 1));
                }
                chi = SignCharacter::from_prime_signs(t.N, primes);
            }
            StrongSymmetryReport r =
                check_strong_symmetry(t, weight, chi, default_gamma0_star_elements(t.N));
            Json v = Json::array();
            for (const auto& w : r.violations) {
                v.push_back({{"element", w.element_index},
                             {"E", w.key.str()},
                             {"expected", rational_str(w.expected)},
                             {"found", rational_str(w.found)}});
                if (v.size() >= 16) break;
            }
            rep.add("strong_symmetry", r.pass(),
                    Json{{"pairs_checked", r.pairs_checked},
                         {"skipped", r.skipped},
                         {"violations", v}});
        } else if (rmin->parsed()) {
            Rational m = minkowski_min(parse_sym_matrix(matrix_text));
            std::cout << rational_str(m) << "\n";
            rep.add("minkowski_min", true, Json{{"min", rational_str(m)}});
        } else if (rjac->parsed()) {
            JacobiDecomposition jd = jacobi_decompose(parse_sym_matrix(matrix_text));
            Json d = Json::array(), w = Json::array();
            for (const auto& x : jd.d) d.push_back(rational_str(x));
            for (int i = 0; i < jd.w.rows; ++i) {
                Json row = Json::array();
                for (int j = 0; j < jd.w.cols; ++j) row.push_back(rational_str(jd.w(i, j)));
                w.push_back(std::move(row));
            }
            rep.add("jacobi", true, Json{{"d", d}, {"w", w}});
        } else if (rdom->parsed()) {
            PointInHn tau = parse_tau(tau_path, 1);
            rep.add("siegel_domain_contains", true,
                    Json{{"contains", siegel_domain_contains(tau, u_param)}});
        } else if (rgl2->parsed()) {
            Json k = Json::parse(key_text);
            ExponentMatrix e(2);
            e.set(0, 0, k[0].get<int64_t>());
            e.set(0, 1, k[1].get<int64_t>());
            e.set(1, 1, k[2].get<int64_t>());
            Gl2Reduction r = reduce_gl2(e);
            Json u = Json::array();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) u.push_back(r.u(i, j));
            rep.add("reduce_gl2", true, Json{{"reduced", r.reduced.str()}, {"u", u}});
        }
        return emit(rep, g, timer);
    } catch (const OrbitBudgetExhausted& e) {
        rep.inconclusive = true;
        rep.add("budget", false, Json{{"error", e.what()}});
        emit(rep, g, timer);
        return 3;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

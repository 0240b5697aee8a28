// Command-line front end: characteristic polynomials, Mahler measures,
// finite-torus partition functions, q-series, the L-function probe, rhombus
// tiling SVGs, and the acceptance-suite runner.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dimers/acceptance.hpp"
#include "dimers/families.hpp"
#include "dimers/json_io.hpp"
#include "dimers/kasteleyn.hpp"
#include "dimers/lseries.hpp"
#include "dimers/mahler.hpp"
#include "dimers/qseries.hpp"
#include "dimers/tiling.hpp"
#include "dimers/torus_partition.hpp"

namespace {

using namespace dimers;

// KASTELEYN_THREADS caps worker parallelism. Evaluation in this build is
// sequential, so any cap is honored; the value is still validated so a typo
// fails loudly instead of silently running unconstrained.
int thread_cap() {
    const char* env = std::getenv("KASTELEYN_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument("KASTELEYN_THREADS must be a positive integer");
    return static_cast<int>(std::min(v, 256L));
}

std::string poly_lines(const LaurentPoly2& p) {
    std::ostringstream out;
    for (const auto& [e, c] : p.terms())
        out << e.first << " " << e.second << " " << to_string(c) << "\n";
    return out.str();
}

EdgeWeighting weighting_argument(const std::string& weights_file, int family,
                                 const std::string& m, const std::string& w) {
    if (!weights_file.empty()) return weighting_from_json(read_json_file(weights_file));
    return example_weighting(family, parse_rational(m), parse_rational(w)).weighting;
}

void cmd_charpoly(const std::string& weights_file, int family, const std::string& m,
                  const std::string& w, bool symbolic, bool homogeneous, bool json) {
    if (symbolic) {
        const auto& sym = symbolic_char_poly();
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : sym.terms) {
            std::ostringstream row;
            row << (t.sign > 0 ? "+" : "-");
            for (int e : t.bases) row << " " << edge_label(e);
            row << "  x^" << t.a << " y^" << t.b;
            if (json) {
                nlohmann::json jt;
                jt["sign"] = t.sign;
                jt["a"] = t.a;
                jt["b"] = t.b;
                for (int e : t.bases) jt["edges"].push_back(edge_label(e));
                terms.push_back(jt);
            } else {
                std::cout << row.str() << "\n";
            }
        }
        if (json) std::cout << nlohmann::json{{"terms", terms}}.dump(2) << "\n";
        return;
    }
    auto g = build_torus_graph(1);
    EdgeWeighting wt = weighting_argument(weights_file, family, m, w);
    LaurentPoly2 p = char_poly(g, wt);
    bool cubic_display = homogeneous || weights_file.empty();
    if (json) {
        nlohmann::json out = poly_to_json(p);
        if (cubic_display) out["cubic"] = cubic_to_string(homogenize3(p));
        std::cout << out.dump(2) << "\n";
    } else if (cubic_display) {
        std::cout << cubic_to_string(homogenize3(p)) << "\n";
    } else {
        std::cout << poly_lines(p);
    }
}

void cmd_mahler(const std::string& poly_file, const std::string& method, int resolution,
                bool json) {
    LaurentPoly2 p = poly_from_json(read_json_file(poly_file));
    nlohmann::json out;
    std::ostringstream text;
    if (method == "quad" || method == "both") {
        auto est = mahler_quadrature(p, resolution);
        out["quadrature"] = est.value;
        out["quadrature_error_indicator"] = est.error_indicator;
        text << "quadrature " << std::setprecision(15) << est.value << " (error indicator "
             << std::setprecision(3) << est.error_indicator << ")\n";
    }
    if (method == "jensen" || method == "both") {
        double v = mahler_jensen(p);
        out["jensen"] = v;
        text << "jensen     " << std::setprecision(15) << v << "\n";
    }
    if (method == "both") {
        auto cc = mahler_cross_check(p, resolution);
        out["gap"] = cc.gap;
        text << "gap        " << std::setprecision(3) << cc.gap << "\n";
    }
    std::cout << (json ? out.dump(2) + "\n" : text.str());
}

void cmd_partition(const std::string& weights_file, int n, bool brute, bool json) {
    auto g1 = build_torus_graph(1);
    EdgeWeighting w = weighting_from_json(read_json_file(weights_file));
    LaurentPoly2 f = LaurentPoly2::monomial(-1, -1) * char_poly(g1, w);
    SectorValues s = sector_values(f, n);
    PartitionValue z = partition_function_full(f, n);
    double logz = z.log_z / (double(n) * n);
    nlohmann::json out;
    std::ostringstream text;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            out["z"][std::to_string(a) + std::to_string(b)] = s.z(a, b);
            text << "z(" << a << "," << b << ") = " << std::setprecision(15) << s.z(a, b)
                 << "\n";
        }
    out["partition"] = z.value();
    out["log_per_domain"] = logz;
    text << "Z = " << std::setprecision(15) << z.value() << "\n";
    text << "(1/n^2) log Z = " << std::setprecision(15) << logz << "\n";
    if (brute) {
        Rational bf = brute_force_partition(build_torus_graph(n), w);
        out["brute_force"] = to_string(bf);
        text << "brute force = " << to_string(bf) << "\n";
    }
    std::cout << (json ? out.dump(2) + "\n" : text.str());
}

void cmd_qseries(int family, long order, const std::string& what, bool json) {
    QSeries s;
    if (what == "product") s = q_product(family, order);
    else if (what == "eisenstein") s = eisenstein(family, order);
    else if (what == "t") s = t_of_q(family, order);
    else throw std::invalid_argument("--what must be product, eisenstein or t");
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream text;
    for (size_t k = 0; k < s.size(); ++k) {
        long e24 = s.off24() + long(k) * s.step24();
        if (e24 > 24 * order) break;
        if (s.coeffs()[k] == 0) continue;
        std::string e = to_string(Rational(e24, 24));
        std::string c = to_string(s.coeffs()[k]);
        arr.push_back({{"exponent", e}, {"coefficient", c}});
        text << "q^" << e << ": " << c << "\n";
    }
    std::cout << (json ? nlohmann::json{{"terms", arr}}.dump(2) + "\n" : text.str());
}

void cmd_qseries_solve(int family, const std::string& s_str, bool json) {
    double s = to_double(parse_rational(s_str));
    double q0 = solve_q(family, s);
    if (json)
        std::cout << nlohmann::json{{"q0", q0}}.dump(2) << "\n";
    else
        std::cout << std::setprecision(15) << q0 << "\n";
}

void cmd_lseries(int family, const std::string& s_str, long long pmax, long long conductor,
                 int sign, bool json) {
    Rational s = parse_rational(s_str);
    PlaneCubic cubic = spectral_cubic(family, s);
    APTable t = ap_table(cubic, pmax);
    nlohmann::json out;
    std::ostringstream text;
    for (const auto& [p, e] : t.entries) {
        out["ap"][std::to_string(p)] = {{"count", e.count}, {"ap", e.ap}, {"bad", e.bad}};
        text << "p=" << p << " count=" << e.count << " ap=" << e.ap << (e.bad ? " bad" : "")
             << "\n";
    }
    long long n_cond = conductor;
    int eps = sign;
    if (n_cond == 0) {
        auto found = conductor_sign_search(t);
        n_cond = found.N;
        eps = found.eps;
    }
    auto a = dirichlet_coeffs(t, static_cast<int>(std::min(pmax, 100000LL)));
    int cutoff = std::min<int>(static_cast<int>(a.size()) - 1,
                               std::max(200, static_cast<int>(std::ceil(
                                                 12.0 * std::sqrt(double(n_cond))))));
    double lp = l_prime_zero(a, n_cond, eps, cutoff);
    double mf = mahler_quadrature(family_poly(family, s)).value;
    double ratio = mf / lp;
    auto detected = detect_rational(ratio, 64);
    out["conductor"] = n_cond;
    out["sign"] = eps;
    out["l_prime"] = lp;
    out["mahler"] = mf;
    out["ratio"] = ratio;
    out["rational"] = detected ? to_string(*detected) : "none";
    text << "conductor N = " << n_cond << ", sign = " << (eps > 0 ? "+1" : "-1") << "\n";
    text << "L'(0) = " << std::setprecision(12) << lp << "\n";
    text << "m(F) = " << std::setprecision(12) << mf << "\n";
    text << "ratio = " << std::setprecision(12) << ratio << "\n";
    text << "rational = " << (detected ? to_string(*detected) : std::string("none")) << "\n";
    std::cout << (json ? out.dump(2) + "\n" : text.str());
}

void cmd_tiling(int family, const std::string& m, const std::string& w, int index,
                const std::string& out_path, bool json) {
    auto g = build_torus_graph(1);
    auto ew = example_weighting(family, parse_rational(m), parse_rational(w));
    auto matchings = enumerate_matchings(g);
    std::vector<Matching> usable;
    for (const auto& mt : matchings) {
        bool nonzero = true;
        for (int e : mt)
            if (ew.weighting.at(edge_label(g.edges[size_t(e)].base)) == 0) nonzero = false;
        if (nonzero) usable.push_back(mt);
    }
    if (index < 0 || size_t(index) >= usable.size())
        throw std::invalid_argument("--index out of range: " + std::to_string(usable.size()) +
                                    " matchings have nonzero weight");
    RhombusTiling t = to_rhombus_tiling(g, usable[size_t(index)], ew.weighting);
    write_text_file(out_path, render_tiling_svg(t));
    if (json)
        std::cout << nlohmann::json{{"out", out_path}, {"matchings", usable.size()}}.dump(2)
                  << "\n";
    else
        std::cout << "wrote " << out_path << " (" << usable.size()
                  << " matchings with nonzero weight)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexagonal-torus dimer models: characteristic polynomials, Mahler "
                 "measures, q-series and L-function probes"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    std::string weights_file, poly_file, m_str = "1", w_str = "1", s_str = "1";
    std::string method = "both", what = "product", out_path;
    int family = 6, n = 1, resolution = 512, index = 0, sign = 0;
    long order = 20;
    long long pmax = 1000, conductor = 0;
    bool symbolic = false, homogeneous = false, brute = false;

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a weighting");
    charpoly->add_option("--weights", weights_file, "weighting JSON file");
    charpoly->add_option("--family", family, "example family (6, 3 or 4)")
        ->check(CLI::IsMember({6, 3, 4}));
    charpoly->add_option("--m", m_str, "example parameter m (rational)");
    charpoly->add_option("--w", w_str, "example parameter w (rational)");
    charpoly->add_flag("--symbolic", symbolic, "print the 42-term symbolic expansion");
    charpoly->add_flag("--homogeneous", homogeneous, "print as a homogeneous cubic");
    charpoly->callback([&] {
        cmd_charpoly(weights_file, family, m_str, w_str, symbolic, homogeneous, json);
    });

    auto* mahler = app.add_subcommand("mahler", "Mahler measure of a Laurent polynomial");
    mahler->add_option("--poly", poly_file, "polynomial JSON file")->required();
    mahler->add_option("--method", method, "quad, jensen or both")
        ->check(CLI::IsMember({"quad", "jensen", "both"}));
    mahler->add_option("--resolution", resolution, "quadrature grid resolution");
    mahler->callback([&] { cmd_mahler(poly_file, method, resolution, json); });

    auto* partition = app.add_subcommand("partition", "finite-torus partition function");
    partition->add_option("--weights", weights_file, "weighting JSON file")->required();
    partition->add_option("--n", n, "cover size n")->required();
    partition->add_flag("--brute-force", brute, "also enumerate matchings directly");
    partition->callback([&] { cmd_partition(weights_file, n, brute, json); });

    auto* qs = app.add_subcommand("qseries", "weight-counting q-series");
    qs->add_option("--family", family, "family (6, 3 or 4)")->check(CLI::IsMember({6, 3, 4}));
    qs->add_option("--order", order, "truncation order");
    qs->add_option("--what", what, "product, eisenstein or t");
    auto* solve = qs->add_subcommand("solve", "invert t(q) = target for q0");
    solve->add_option("--family", family, "family (6, 3 or 4)")->check(CLI::IsMember({6, 3, 4}));
    solve->add_option("--s", s_str, "family parameter s (rational)")->required();
    solve->callback([&] { cmd_qseries_solve(family, s_str, json); });
    qs->callback([&] {
        if (qs->get_subcommands().empty()) cmd_qseries(family, order, what, json);
    });

    auto* ls = app.add_subcommand("lseries", "point counts and the L-function probe");
    ls->add_option("--family", family, "family (6, 3 or 4)")->check(CLI::IsMember({6, 3, 4}));
    ls->add_option("--s", s_str, "family parameter s (rational)")->required();
    ls->add_option("--pmax", pmax, "count points at all primes up to this bound");
    ls->add_option("--conductor", conductor, "skip the search and use this conductor");
    ls->add_option("--sign", sign, "functional-equation sign (+1 or -1)")
        ->check(CLI::IsMember({-1, 0, 1}));
    ls->callback([&] { cmd_lseries(family, s_str, pmax, conductor, sign, json); });

    auto* tiling = app.add_subcommand("tiling", "rhombus tiling SVG for one matching");
    tiling->add_option("--family", family, "family (6, 3 or 4)")->check(CLI::IsMember({6, 3, 4}));
    tiling->add_option("--m", m_str, "example parameter m (rational)");
    tiling->add_option("--w", w_str, "example parameter w (rational)");
    tiling->add_option("--index", index, "which nonzero-weight matching to draw");
    tiling->add_option("--out", out_path, "output SVG path")->required();
    tiling->callback([&] { cmd_tiling(family, m_str, w_str, index, out_path, json); });

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->callback([&] {
        if (!dimers::acceptance::report(std::cout)) throw std::runtime_error("acceptance failed");
    });

    // accepted both before and after the subcommand name
    for (auto* sub : {charpoly, mahler, partition, qs, solve, ls, tiling})
        sub->add_flag("--json", json, "machine-readable JSON output");

    try {
        (void)thread_cap();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

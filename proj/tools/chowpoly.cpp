// Command-line front end: parses the text grammar, runs the exact and
// Monte Carlo verification commands, and emits a JSON report.
//
// Exit codes: 0 computed/verified, 1 verification failed, 2 input error,
// 3 unsupported structure.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowpoly/fiveterm.hpp"
#include "chowpoly/integrate.hpp"
#include "chowpoly/parser.hpp"
#include "chowpoly/registry.hpp"

using namespace chowpoly;
using nlohmann::json;

namespace {

struct Settings {
    IntegralCfg cfg;
    double tolerance_sigma = 3.0;
    std::string registry_path;
    bool timings = false;
};

struct CommandFailure : std::runtime_error {
    int code;
    CommandFailure(int code, const std::string& msg)
        : std::runtime_error(msg), code(code) {}
};

Complex parse_complex(const std::string& text) {
    double re = 0, im = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto component = [&] {
        skip_ws();
        double sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        double mag = 1;
        bool has_digits = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                text[i] == '.')) {
            std::size_t used = 0;
            mag = std::stod(text.substr(i), &used);
            i += used;
            has_digits = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == 'i') {
            ++i;
            im += sign * mag;
        } else if (has_digits) {
            re += sign * mag;
        } else {
            throw CommandFailure(2, "bad complex literal: " + text);
        }
    };
    component();
    skip_ws();
    while (i < text.size()) {
        component();
        skip_ws();
    }
    return {re, im};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(parse_complex(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw CommandFailure(2, "empty point list");
    return out;
}

Valuation parse_valuation(const std::string& text) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos)
        throw CommandFailure(2, "valuation must look like var=value: " + text);
    std::string var = text.substr(0, eq);
    std::string rhs = text.substr(eq + 1);
    auto trim = [](std::string& s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
    };
    trim(var);
    trim(rhs);
    if (rhs == "INF") return Valuation::infinity(var);
    bool has_letter = std::any_of(rhs.begin(), rhs.end(), [](char c) {
        return c >= 'a' && c <= 'z';
    });
    if (!has_letter) {
        if (rhs == "0") return Valuation::point(var, Rat(0));
        FactoredRational f = parse_rational(rhs);
        if (!f.is_constant())
            throw CommandFailure(2, "expected a constant point: " + rhs);
        return Valuation::point(var, f.constant());
    }
    // graph divisor var = r: the defining atom is var*den - num
    FactoredRational r = parse_rational(rhs);
    auto [num, den] = r.expand();
    MultiPoly defining = MultiPoly::variable(var) * den - num;
    FactoredRational fd = factor(defining);
    if (fd.factors().size() != 1 || fd.factors()[0].second != 1)
        throw CommandFailure(2, "graph divisor is not irreducible: " + rhs);
    return Valuation::graph(var, std::move(r), fd.factors()[0].first);
}

json numeric_json(const IntegralEstimate& e) {
    return {{"value", e.value},
            {"stderr", e.stderr_},
            {"samples", e.samples},
            {"seed", e.seed},
            {"rejected_fraction", e.rejected_fraction}};
}

json numeric_json(const WedgeIntegral& w, const Settings& st) {
    return {{"value", w.value},
            {"stderr", w.stderr_},
            {"l1_mass", w.l1_mass},
            {"samples", st.cfg.samples},
            {"seed", st.cfg.seed}};
}

// deterministic seeded complex sample points in a safe box off the real axis
std::vector<Complex> sample_points(std::uint64_t seed, int count) {
    std::vector<Complex> out;
    std::uint64_t s = seed * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL;
    auto next = [&] {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return double((s * 0x2545f4914f6cdd1dULL) >> 11) * 0x1.0p-53;
    };
    while (int(out.size()) < count) {
        Complex z(3.0 * next() - 1.5, 2.4 * next() - 1.2);
        if (std::abs(z.imag()) < 0.15) continue;
        out.push_back(z);
    }
    return out;
}

// value of a projective point at a complex parameter; nullopt off C^x
std::optional<Complex> point_value(const PPoint& p, const std::string& var,
                                   Complex t) {
    if (!p.is_value()) return std::nullopt;
    CSlot s = to_cslot(p.value, {var});
    Complex v = s.value({t});
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
    return v;
}

int run_command(const std::string& name, CLI::App* cmd, const Settings& st,
                json& report) {
    auto arg = [&](std::size_t i) -> std::string {
        const char* opt = (name == "weil") ? (i == 0 ? "f" : "g") : "expr";
        return cmd->get_option(opt)->as<std::string>();
    };

    if (name == "factor") {
        FactoredRational f = parse_rational(arg(0));
        report["exact_results"]["factored"] = f.to_string();
        return 0;
    }
    if (name == "wedge") {
        WedgeElement w = parse_wedge(arg(0));
        report["exact_results"]["canonical"] = w.to_string();
        report["exact_results"]["arity"] = w.arity();
        return 0;
    }
    if (name == "tame") {
        Valuation v = parse_valuation(cmd->get_option("--at")->as<std::string>());
        WedgeElement w = parse_wedge(arg(0));
        WedgeElement r = tame_symbol(v, w);
        report["exact_results"]["valuation"] = v.to_string();
        report["exact_results"]["tame"] = r.to_string();
        return 0;
    }
    if (name == "d") {
        CycleSum s = parse_cycle_sum(arg(0));
        CycleSum d = differential(s);
        report["exact_results"]["differential"] = d.to_string();
        return 0;
    }
    if (name == "delta") {
        LiSymbol s = parse_li(arg(0));
        DeltaImage d = delta(s);
        report["exact_results"]["delta"] = d.to_string();
        report["exact_results"]["is_zero"] = d.is_zero();
        return 0;
    }
    if (name == "res") {
        Valuation v = parse_valuation(cmd->get_option("--at")->as<std::string>());
        if (v.kind == Valuation::Kind::Graph)
            throw CommandFailure(2, "res needs a point or INF on the parameter line");
        LiSymbol s = parse_li(arg(0));
        LiSymbol r = res(v, s);
        report["exact_results"]["res"] = r.to_string();
        return 0;
    }
    if (name == "weil") {
        FactoredRational f = parse_rational(arg(0));
        FactoredRational g = parse_rational(arg(1));
        std::vector<std::string> vars = f.variables();
        for (const auto& v : g.variables())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        if (vars.size() != 1)
            throw CommandFailure(2, "weil needs univariate functions");
        WedgeElement w = wedge_of({f, g});
        WedgeElement sum(1);
        json terms = json::array();
        for (const auto& v : divisor_support(w, vars)) {
            WedgeElement t = tame_symbol(v, w);
            terms.push_back({{"valuation", v.to_string()}, {"tame", t.to_string()}});
            sum = sum + t;
        }
        report["exact_results"]["terms"] = terms;
        report["exact_results"]["sum"] = sum.to_string();
        report["verdict"] = sum.is_zero() ? "pass" : "fail";
        return sum.is_zero() ? 0 : 1;
    }
    if (name == "d2check") {
        CycleSum s = parse_cycle_sum(arg(0));
        CycleSum dd = differential(differential(s));
        report["exact_results"]["dd"] = dd.to_string();
        report["verdict"] = dd.is_zero() ? "pass" : "fail";
        return dd.is_zero() ? 0 : 1;
    }
    if (name == "omega") {
        int m = cmd->get_option("-m")->as<int>();
        std::string a = cmd->get_option("-a")->as<std::string>();
        WedgeElement w;
        if (cmd->get_option("--tilde")->count()) {
            FactoredRational fa = parse_rational(a);
            if (!fa.is_constant())
                throw CommandFailure(2, "--tilde needs a constant argument");
            w = omega_tilde(m, fa.constant());
        } else if (a == "0") {
            w = omega(m, Rat(0));
        } else {
            w = omega(m, parse_rational(a));
        }
        report["exact_results"]["omega"] = w.to_string();
        return 0;
    }
    if (name == "gamma") {
        int m = cmd->get_option("-m")->as<int>();
        FactoredRational f = parse_rational(cmd->get_option("-p")->as<std::string>());
        auto [num, den] = f.expand();
        if (!den.is_constant())
            throw CommandFailure(2, "gamma needs a polynomial");
        Cycle c = gamma_P(m, num * (Rat(1) / den.constant_value()));
        report["exact_results"]["cycle"] = c.to_string();
        return 0;
    }
    if (name == "tmap") {
        LiSymbol s = parse_li(arg(0));
        CycleSum c = T_m(s);
        report["exact_results"]["cycle_sum"] = c.to_string();
        return 0;
    }
    if (name == "rgen") {
        LiSymbol alpha = parse_li(arg(0));
        Registry reg;
        if (!st.registry_path.empty()) reg = Registry::load(st.registry_path);
        std::vector<CertificateRow> cert;
        for (const auto& row : cmd->get_option("--cert-row")->results()) {
            // COEFF;NAME;ATOM
            std::size_t a1 = row.find(';'), a2 = row.rfind(';');
            if (a1 == std::string::npos || a2 == a1)
                throw CommandFailure(2, "certificate row must be COEFF;NAME;ATOM");
            CertificateRow cr;
            cr.coeff = rat_from_string(row.substr(0, a1));
            const RegistryEntry* e = reg.find(row.substr(a1 + 1, a2 - a1 - 1));
            if (!e) throw CommandFailure(2, "unknown registry generator in certificate");
            cr.generator = e->symbol;
            FactoredRational fa = parse_rational(row.substr(a2 + 1));
            if (fa.factors().size() != 1 || fa.factors()[0].second != 1)
                throw CommandFailure(2, "certificate atom must be a single atom");
            cr.tensor_atom = fa.factors()[0].first;
            cert.push_back(std::move(cr));
        }
        RmGenerator g = r_m_generator(alpha, cert, sv_pairing_kernel_check());
        report["exact_results"]["generator"] = g.symbol.to_string();
        report["exact_results"]["evidence"] = evidence_name(g.evidence);
        std::string gname = cmd->get_option("--name")->as<std::string>();
        if (!gname.empty() && !st.registry_path.empty()) {
            reg.add({gname, g.symbol, g.evidence});
            reg.save(st.registry_path);
            report["exact_results"]["registered"] = gname;
        }
        return 0;
    }
    if (name == "integrate") {
        CycleSum s = parse_cycle_sum(arg(0));
        WedgeIntegral w = integrate_cycle_sum(s, st.cfg);
        report["numeric_results"] = numeric_json(w, st);
        return 0;
    }
    if (name == "estimate-q") {
        int m = cmd->get_option("-m")->as<int>();
        auto points = parse_complex_list(cmd->get_option("--points")->as<std::string>());
        EmpiricalConstant q = estimate_q(m, points, st.cfg);
        double rel_err = q.q_hat != 0 ? q.combined_stderr / std::abs(q.q_hat) : 0;
        bool pass = q.spread <= std::max(st.tolerance_sigma * rel_err, 0.02);
        report["numeric_results"] = {{"q_hat", q.q_hat},
                                     {"spread", q.spread},
                                     {"combined_stderr", q.combined_stderr},
                                     {"ratios", q.ratios},
                                     {"ratio_stderr", q.ratio_stderr},
                                     {"samples", st.cfg.samples},
                                     {"seed", st.cfg.seed}};
        for (std::size_t i = 0; i < q.rejected.size(); ++i)
            report["warnings"].push_back("rejected point with small single-valued value");
        report["verdict"] = pass ? "pass" : "fail";
        return pass ? 0 : 1;
    }
    if (name == "verify-boundary") {
        Cycle top = parse_cycle(arg(0));
        BoundaryReport br = verify_boundary(top, st.cfg);
        json terms = json::array();
        for (const auto& t : br.terms)
            terms.push_back({{"term", t.description},
                             {"value", t.value},
                             {"stderr", t.stderr_}});
        report["numeric_results"] = {{"sum", br.sum},
                                     {"total_stderr", br.total_stderr},
                                     {"l1_mass", br.l1_mass},
                                     {"terms", terms},
                                     {"samples", st.cfg.samples},
                                     {"seed", st.cfg.seed}};
        report["verdict"] = br.pass ? "pass" : "fail";
        return br.pass ? 0 : 1;
    }
    if (name == "verify-fiveterm") {
        Rat c = rat_from_string(cmd->get_option("-c")->as<std::string>());
        LiSymbol family = five_term_family(c);
        RmGenerator g = r_m_generator(family);
        bool exact_ok = g.symbol == five_term_generator(c);
        report["exact_results"]["generator"] = g.symbol.to_string();
        report["exact_results"]["evidence"] = evidence_name(g.evidence);
        report["exact_results"]["matches_frozen_form"] = exact_ok;
        // the functional equation at sampled complex parameters
        double worst = 0;
        for (Complex t : sample_points(st.cfg.seed, 20)) {
            double sum = 0;
            for (const auto& [p, k] : family.terms()) {
                auto v = point_value(p, "t", t);
                if (v) sum += k.get_d() * sv_polylog(2, *v);
            }
            worst = std::max(worst, std::abs(sum));
        }
        bool numeric_ok = worst < 1e-9;
        report["numeric_results"] = {{"max_abs_sum", worst}, {"seed", st.cfg.seed}};
        report["verdict"] = (exact_ok && numeric_ok) ? "pass" : "fail";
        return (exact_ok && numeric_ok) ? 0 : 1;
    }
    throw CommandFailure(2, "unknown command: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wedge calculus with polylogarithm numerics"};
    app.require_subcommand(1);

    Settings st;
    std::string config_path, out_path;
    app.add_option("--seed", st.cfg.seed, "RNG seed");
    app.add_option("--samples", st.cfg.samples, "Monte Carlo samples per integral");
    app.add_option("--workers", st.cfg.workers, "worker threads");
    app.add_option("--epsilon", st.cfg.epsilon, "singularity rejection cutoff");
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "write the JSON report here too");
    app.add_option("--tolerance-sigma", st.tolerance_sigma, "sigma multiplier");
    app.add_option("--registry", st.registry_path, "generator registry path");
    app.add_flag("--timings", st.timings, "include wall-clock timings");
    app.fallthrough();

    struct Spec {
        const char* name;
        const char* desc;
    };
    const Spec specs[] = {
        {"factor", "factor a rational expression"},
        {"wedge", "canonical form of a wedge expression"},
        {"tame", "tame symbol at a valuation"},
        {"d", "differential of a cycle sum"},
        {"delta", "delta of a Li symbol"},
        {"res", "specialize a Li symbol at a point of the parameter line"},
        {"weil", "reciprocity sum of tame symbols of f ^ g"},
        {"d2check", "verify d(d(cycle)) = 0"},
        {"omega", "standard wedge element at weight m"},
        {"gamma", "graph cycle of a polynomial"},
        {"tmap", "cycle sum of a Li symbol"},
        {"rgen", "validated res_0 - res_inf generator"},
        {"integrate", "Monte Carlo integral of a degree-1 cycle sum"},
        {"estimate-q", "ratio of the integral to the single-valued polylog"},
        {"verify-boundary", "boundary-sum vanishing of a degree-0 cycle"},
        {"verify-fiveterm", "exact and numeric five-term checks"},
    };
    for (const auto& s : specs) {
        CLI::App* c = app.add_subcommand(s.name, s.desc);
        std::string n = s.name;
        if (n == "weil") {
            c->add_option("f", "first function")->required();
            c->add_option("g", "second function")->required();
        } else if (n != "omega" && n != "gamma" && n != "estimate-q" &&
                   n != "verify-fiveterm") {
            c->add_option("expr", "expression argument")->required();
        }
        if (n == "tame" || n == "res")
            c->add_option("--at", "valuation var=value")->required();
        if (n == "omega" || n == "gamma" || n == "estimate-q")
            c->add_option("-m", "weight")->required();
        if (n == "omega") {
            c->add_option("-a", "argument")->required();
            c->add_flag("--tilde", "product-coordinate variant");
        }
        if (n == "gamma") c->add_option("-p", "defining polynomial")->required();
        if (n == "estimate-q") c->add_option("--points", "complex points")->required();
        if (n == "rgen") {
            c->add_option("--name", "register under this name")->default_val("");
            c->add_option("--cert-row", "COEFF;NAME;ATOM")->take_all();
        }
        if (n == "verify-fiveterm")
            c->add_option("-c", "frozen rational leg")->default_val("2");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot read config: " << config_path << "\n";
            return 2;
        }
        json cfg = json::parse(in, nullptr, false);
        if (cfg.is_discarded()) {
            std::cerr << "config is not valid JSON: " << config_path << "\n";
            return 2;
        }
        // flags given on the command line win over the file
        if (cfg.contains("samples") && !app.count("--samples"))
            st.cfg.samples = cfg["samples"].get<std::uint64_t>();
        if (cfg.contains("seed") && !app.count("--seed"))
            st.cfg.seed = cfg["seed"].get<std::uint64_t>();
        if (cfg.contains("workers") && !app.count("--workers"))
            st.cfg.workers = cfg["workers"].get<int>();
        if (cfg.contains("epsilon") && !app.count("--epsilon"))
            st.cfg.epsilon = cfg["epsilon"].get<double>();
        if (cfg.contains("tolerance_sigma") && !app.count("--tolerance-sigma"))
            st.tolerance_sigma = cfg["tolerance_sigma"].get<double>();
        if (cfg.contains("registry_path") && !app.count("--registry"))
            st.registry_path = cfg["registry_path"].get<std::string>();
    }

    CLI::App* cmd = app.get_subcommands().front();
    json report;
    report["command"] = cmd->get_name();
    json in_args = json::array();
    for (const CLI::Option* o : cmd->get_options())
        if (o->get_positional() && o->count()) in_args.push_back(o->as<std::string>());
    report["inputs"] = {{"args", in_args},
                       {"samples", st.cfg.samples},
                       {"seed", st.cfg.seed},
                       {"workers", st.cfg.workers},
                       {"epsilon", st.cfg.epsilon}};
    report["exact_results"] = json::object();
    report["numeric_results"] = json::object();
    report["verdict"] = "computed";
    report["warnings"] = json::array();
    report["timings"] = json::object();

    auto start = std::chrono::steady_clock::now();
    int code;
    try {
        code = run_command(cmd->get_name(), cmd, st, report);
    } catch (const CommandFailure& e) {
        report["verdict"] = "error";
        report["warnings"].push_back(e.what());
        code = e.code;
    } catch (const ParseError& e) {
        report["verdict"] = "error";
        report["warnings"].push_back(e.what());
        code = 2;
    } catch (const UnparametrizableDivisorError& e) {
        report["verdict"] = "error";
        report["warnings"].push_back(e.what());
        code = 3;
    } catch (const IndeterminateResidueError& e) {
        report["verdict"] = "error";
        report["warnings"].push_back(e.what());
        code = 3;
    } catch (const EvidenceError& e) {
        report["verdict"] = "fail";
        report["warnings"].push_back(e.what());
        code = 1;
    } catch (const std::exception& e) {
        report["verdict"] = "error";
        report["warnings"].push_back(e.what());
        code = 2;
    }

    if (st.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        report["timings"]["total_ms"] = ms;
    }

    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << text << "\n";
    }
    return code;
}

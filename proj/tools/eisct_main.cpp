// Command-line surface: computations (weyl, cfunc, cterm, gk, euler) and
// verification suites (verify <target>) with JSON/CSV output.
//
// Exit codes: 0 success, 1 verification failure (first counterexample is
// printed), 2 configuration error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eisct/errors.hpp"
#include "eisct/local.hpp"
#include "eisct/term_io.hpp"

using namespace eisct;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string type_label = "A";
    int rank = 1;
    std::vector<std::string> chi_raw;  // comma-separated rationals
    int genus = 0;
    std::optional<long long> lpoly_a;  // genus-1 middle coefficient
    std::vector<std::string> h_raw;    // deg<d>:o1,o2,...
    std::vector<std::string> m_raw;    // deg<d>:m
    int L = 4;
    std::optional<std::string> q0_raw;
    std::string format = "json";
    std::string out_path;
    std::string mode = "convergence";
    std::vector<int> word;
    long long q = 2;
    std::string kappa_raw = "-3";
    int N = 4, M = 4;
    std::string gk_mode = "shells";
    std::string s_raw = "2";
    long long degree = 10;
    int max_length = 3;
    unsigned long long seed = 20240901ULL;
    int instances = 200;
    int threads = 0;  // 0 = library default
};

Rat parse_rat(const std::string& s) {
    try {
        Rat r;
        if (s.find('/') != std::string::npos) {
            r = Rat(s);
        } else if (s.find('.') != std::string::npos) {
            throw ConfigError("decimal literals are not accepted; use p/q");
        } else {
            r = Rat(s);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse rational '" + s + "'");
    }
}

std::vector<Rat> parse_rat_list(const std::vector<std::string>& parts) {
    std::vector<Rat> out;
    for (const auto& p : parts) {
        std::stringstream ss(p);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(parse_rat(item));
        }
    }
    return out;
}

Character parse_character(const CartanDatum& d, const std::vector<std::string>& chi_raw) {
    std::vector<Rat> vals = parse_rat_list(chi_raw);
    if (vals.size() != static_cast<std::size_t>(d.gens()))
        throw ConfigError("--chi needs exactly " + std::to_string(d.gens()) + " values");
    Character c;
    c.values = std::move(vals);
    return c;
}

TorusData parse_torus(const CartanDatum& d, const std::vector<std::string>& raw) {
    TorusData h;
    for (const auto& spec : raw) {
        auto colon = spec.find(':');
        if (spec.rfind("deg", 0) != 0 || colon == std::string::npos)
            throw ConfigError("--h entries look like deg<d>:o1,o2,... got '" + spec + "'");
        TorusData::Place p;
        p.degree = std::stoll(spec.substr(3, colon - 3));
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) p.ord.push_back(std::stoll(item));
        if (p.ord.size() != static_cast<std::size_t>(d.gens()))
            throw ConfigError("--h ord vector needs " + std::to_string(d.gens()) + " entries");
        h.places.push_back(std::move(p));
    }
    return h;
}

AutomorphismData parse_autdata(const std::vector<std::string>& raw) {
    AutomorphismData m;
    for (const auto& spec : raw) {
        auto colon = spec.find(':');
        if (spec.rfind("deg", 0) != 0 || colon == std::string::npos)
            throw ConfigError("--m entries look like deg<d>:<m>, got '" + spec + "'");
        AutomorphismData::Place p;
        p.degree = std::stoll(spec.substr(3, colon - 3));
        p.m = std::stoll(spec.substr(colon + 1));
        m.places.push_back(p);
    }
    return m;
}

ZetaFunction parse_zeta(const RunConfig& cfg) {
    if (cfg.genus == 0) return ZetaFunction{};
    if (cfg.genus == 1) {
        if (!cfg.lpoly_a) throw ConfigError("genus 1 needs --lpoly-a");
        return ZetaFunction(LPolynomial::genus_one(*cfg.lpoly_a));
    }
    throw ConfigError("only genus 0 and the genus-1 family are configurable here");
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open --out file " + cfg.out_path);
        f << payload;
    }
}

// JSON config file as a base layer; explicitly passed flags win.
void apply_config_file(CLI::App& app, RunConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open --config file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    auto passed = [&](const std::string& flag) {
        auto* opt = app.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    auto get_strings = [](const nlohmann::json& v) {
        std::vector<std::string> out;
        if (v.is_array())
            for (const auto& e : v) out.push_back(e.get<std::string>());
        else
            out.push_back(v.get<std::string>());
        return out;
    };
    if (j.contains("type") && !passed("--type")) cfg.type_label = j["type"].get<std::string>();
    if (j.contains("rank") && !passed("--rank")) cfg.rank = j["rank"].get<int>();
    if (j.contains("chi") && !passed("--chi")) cfg.chi_raw = get_strings(j["chi"]);
    if (j.contains("genus") && !passed("--genus")) cfg.genus = j["genus"].get<int>();
    if (j.contains("lpoly_a") && !passed("--lpoly-a")) cfg.lpoly_a = j["lpoly_a"].get<long long>();
    if (j.contains("h") && !passed("--h")) cfg.h_raw = get_strings(j["h"]);
    if (j.contains("m") && !passed("--m")) cfg.m_raw = get_strings(j["m"]);
    if (j.contains("L") && !passed("--L")) cfg.L = j["L"].get<int>();
    if (j.contains("q0") && !passed("--q")) cfg.q0_raw = j["q0"].get<std::string>();
    if (j.contains("format") && !passed("--format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("mode") && !passed("--mode")) cfg.mode = j["mode"].get<std::string>();
    if (j.contains("max_length") && !passed("--max-length"))
        cfg.max_length = j["max_length"].get<int>();
}

int cmd_weyl(const RunConfig& cfg) {
    CartanDatum d = build_cartan(parse_simple_type(cfg.type_label), cfg.rank);
    auto els = enumerate_elements(d, cfg.L);
    ordered_json out;
    out["type"] = cfg.type_label + std::to_string(cfg.rank);
    out["max_length"] = cfg.L;
    out["count"] = els.size();
    ordered_json arr = ordered_json::array();
    for (const auto& w : els) {
        ordered_json e;
        e["word"] = w.word();
        e["length"] = w.length();
        WeylNormalForm nf = w.decompose();
        e["classical_word"] = nf.classical_part.word();
        e["translation"] = nf.translation;
        arr.push_back(std::move(e));
    }
    out["elements"] = std::move(arr);
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

int cmd_cfunc(const RunConfig& cfg) {
    CartanDatum d = build_cartan(parse_simple_type(cfg.type_label), cfg.rank);
    Character chi = parse_character(d, cfg.chi_raw);
    ZetaFunction Z = parse_zeta(cfg);
    WeylElement w = reduce(d, cfg.word);
    RatFunc c = c_function(d, chi, w, Z);
    ordered_json out;
    out["word"] = w.word();
    out["length"] = w.length();
    out["c"] = {{"num", c.num().to_string()}, {"den", c.den().to_string()}};
    if (cfg.q0_raw) {
        Rat q0 = parse_rat(*cfg.q0_raw);
        out["numeric_at_q0"] = c.eval(q0).get_d();
        out["q0"] = q0.get_str();
    }
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

int cmd_cterm(const RunConfig& cfg) {
    CartanDatum d = build_cartan(parse_simple_type(cfg.type_label), cfg.rank);
    Character chi = parse_character(d, cfg.chi_raw);
    ZetaFunction Z = parse_zeta(cfg);
    TorusData h = parse_torus(d, cfg.h_raw);
    AutomorphismData m = parse_autdata(cfg.m_raw);
    std::optional<Rat> q0;
    if (cfg.q0_raw) q0 = parse_rat(*cfg.q0_raw);
    CtermMode mode =
        cfg.mode == "meromorphic" ? CtermMode::Meromorphic : CtermMode::Convergence;
    CTermTable table = constant_term(d, chi, h, m, Z, cfg.L, q0, mode);
    std::optional<ThetaConstants> theta;
    if (q0 && mode == CtermMode::Convergence && chi.dominant_negative() && m.total() > 0)
        theta = theta_constants(d, chi, h, m, Z, *q0);
    std::string payload = cfg.format == "csv"
                              ? term_table_csv(table, theta ? &*theta : nullptr)
                              : term_table_json(table, theta ? &*theta : nullptr);
    emit(cfg, payload);
    return 0;
}

int cmd_gk(const RunConfig& cfg) {
    Rat kappa = parse_rat(cfg.kappa_raw);
    GkMode mode = cfg.gk_mode == "bruteforce" ? GkMode::BruteForce : GkMode::Shells;
    GkResult r = gk_integral(cfg.q, kappa, mode, cfg.N, cfg.M);
    ordered_json out;
    out["q"] = cfg.q;
    out["kappa"] = kappa.get_str();
    out["mode"] = cfg.gk_mode;
    if (r.exact) {
        out["value"] = r.value.get_str();
        out["tail"] = r.tail.get_str();
        out["total"] = r.total().get_str();
        out["closed_form"] = r.closed_form.get_str();
        out["total_equals_closed_form"] = r.total() == r.closed_form;
    } else {
        out["value"] = r.value_d;
        out["tail"] = r.tail_d;
        out["closed_form"] = r.closed_form_d;
    }
    out["outside_paper_domain"] = r.outside_paper_domain;
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

int cmd_euler(const RunConfig& cfg) {
    Rat s = parse_rat(cfg.s_raw);
    EulerPartial e = euler_partial(cfg.q, s, cfg.degree);
    ordered_json out;
    out["q0"] = cfg.q;
    out["s"] = s.get_str();
    out["degree"] = cfg.degree;
    out["partial"] = e.value;
    if (e.exact) out["partial_exact"] = e.exact_value.get_str();
    out["tail_log_bound"] = e.tail_log_bound;
    if (is_integer(s) && s >= 2) {
        ZetaFunction Z;
        Rat closed = zeta_at(Z, s.get_num().get_si()).eval(rat_of(cfg.q));
        out["closed_form"] = closed.get_d();
        out["closed_form_exact"] = closed.get_str();
        out["gap"] = Rat(closed - e.exact_value).get_d();
    }
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

struct Failure {
    bool failed = false;
    std::string message;
};

int report(const Failure& f, const std::string& target) {
    if (f.failed) {
        std::cout << "FAIL " << target << ": " << f.message << "\n";
        return 1;
    }
    std::cout << "OK " << target << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& target) {
    CartanDatum d = build_cartan(parse_simple_type(cfg.type_label), cfg.rank);
    ZetaFunction Z = parse_zeta(cfg);
    Failure f;
    if (target == "cocycle") {
        Character chi = parse_character(d, cfg.chi_raw);
        auto els = enumerate_elements(d, cfg.max_length);
        for (const auto& w : els)
            for (const auto& wp : els)
                if (!cocycle_check(d, chi, w, wp, Z)) {
                    f.failed = true;
                    f.message = "w = " + word_to_string(w.word()) +
                                ", w' = " + word_to_string(wp.word());
                    return report(f, target);
                }
        for (int i = 1; i <= d.gens(); ++i) {
            WeylElement wi = WeylElement::simple(d, i);
            Functional shifted = shifted_action(wi, chi.to_functional(d));
            RatFunc prod = c_function(d, chi, wi, Z) * c_function(d, shifted, wi, Z);
            if (!prod.is_one()) {
                f.failed = true;
                f.message = "c(chi,w_i) c(w_i o chi, w_i) != 1 at i = " + std::to_string(i);
                return report(f, target);
            }
        }
    } else if (target == "funceq") {
        Character chi = parse_character(d, cfg.chi_raw);
        TorusData h = parse_torus(d, cfg.h_raw);
        AutomorphismData m = parse_autdata(cfg.m_raw);
        auto els = enumerate_elements(d, cfg.max_length);
        for (int i = 1; i <= d.gens(); ++i) {
            WeylElement wi = WeylElement::simple(d, i);
            for (const auto& wp : els)
                if (!functional_equation_term_check(d, chi, wi, wp, h, m, Z)) {
                    f.failed = true;
                    f.message = "w = w_" + std::to_string(i) +
                                ", w' = " + word_to_string(wp.word());
                    return report(f, target);
                }
        }
    } else if (target == "three-factor") {
        std::mt19937_64 rng(cfg.seed);
        auto rnd = [&](long long lo, long long hi) {
            return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
        };
        auto els = enumerate_elements(d, 5);
        for (int inst = 0; inst < cfg.instances; ++inst) {
            TorusData h;
            int nh = static_cast<int>(rnd(0, 2));
            for (int k = 0; k < nh; ++k) {
                TorusData::Place p;
                p.degree = rnd(1, 3);
                for (int i = 0; i < d.gens(); ++i) p.ord.push_back(rnd(-3, 3));
                h.places.push_back(std::move(p));
            }
            AutomorphismData m;
            AutomorphismData::Place mp;
            mp.degree = rnd(1, 3);
            mp.m = rnd(1, 3);
            m.places.push_back(mp);
            Character chi;
            for (int i = 0; i < d.gens(); ++i) chi.values.push_back(rat_of(rnd(-6, 5)));
            const WeylElement& w = els[static_cast<std::size_t>(
                rnd(0, static_cast<long long>(els.size()) - 1))];
            ScaledValue direct =
                character_eval_direct(d, h, m, w, chi.to_functional(d) + d.rho());
            ScaledValue three = character_eval_three_factor(d, h, m, w, chi);
            if (!(direct == three)) {
                f.failed = true;
                f.message = "instance " + std::to_string(inst) + " at w = " +
                            word_to_string(w.word());
                return report(f, target);
            }
        }
    } else if (target == "gk-induction") {
        Character chi = parse_character(d, cfg.chi_raw);
        auto els = enumerate_elements(d, cfg.max_length);
        for (const auto& w : els) {
            try {
                gk_local_product(d, chi, w, cfg.q);
            } catch (const InductionMismatch& e) {
                f.failed = true;
                f.message = e.what();
                return report(f, target);
            }
        }
    } else if (target == "zeta-ratios") {
        for (long long s = 2; s <= 5; ++s) {
            RatioCheck rc = ratio_identity_check(Z, s);
            bool xi = xi_at(Z, s) == xi_at(Z, 1 - s);
            if (!rc.all() || !xi) {
                f.failed = true;
                f.message = "s = " + std::to_string(s);
                return report(f, target);
            }
        }
    } else if (target == "inversions") {
        Functional rho = d.rho();
        for (const auto& w : enumerate_elements(d, cfg.max_length)) {
            auto betas = inversion_set(w);
            if (static_cast<int>(betas.size()) != w.length()) {
                f.failed = true;
                f.message = "size != length at " + word_to_string(w.word());
                return report(f, target);
            }
            // brute-force scan of positive real roots sent negative by w^{-1}
            std::vector<AffineRoot> brute;
            for (const auto& rc : d.roots)
                for (long long n = 0; n <= 3 * cfg.max_length + 4; ++n) {
                    AffineRoot a{rc, n};
                    if (!is_positive(a, d)) continue;
                    if (!is_positive(w.inverse().act(a), d)) brute.push_back(a);
                }
            std::sort(brute.begin(), brute.end());
            std::vector<AffineRoot> sorted = betas;
            std::sort(sorted.begin(), sorted.end());
            if (!(sorted == brute)) {
                f.failed = true;
                f.message = "beta set != brute force at " + word_to_string(w.word());
                return report(f, target);
            }
            Functional sum;
            sum.h.assign(d.rank, Rat(0));
            for (const auto& b : betas) sum = sum + d.root_functional(b);
            if (!(sum == rho - w.act(rho))) {
                f.failed = true;
                f.message = "sum over inversions != rho - w rho at " + word_to_string(w.word());
                return report(f, target);
            }
        }
    } else {
        throw ConfigError("unknown verify target '" + target + "'");
    }
    return report(f, target);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constant-term computations for affine Eisenstein series over function fields"};
    app.set_help_flag("--help", "print help");  // keep -h free for --h place data
    app.require_subcommand(1);
    RunConfig cfg;
    std::string config_path;
    std::string verify_target;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--type", cfg.type_label, "finite type label A..G");
        sub->add_option("--rank", cfg.rank, "classical rank");
        sub->add_option("--chi", cfg.chi_raw, "character values, comma separated");
        sub->add_option("--genus", cfg.genus, "genus (0 or 1)");
        sub->add_option("--lpoly-a", cfg.lpoly_a, "genus-1 L-polynomial middle coefficient");
        sub->add_option("--h", cfg.h_raw, "torus place data deg<d>:o1,o2,...");
        sub->add_option("--m", cfg.m_raw, "automorphism place data deg<d>:<m>");
        sub->add_option("--q", cfg.q0_raw, "numeric evaluation point q0");
        sub->add_option("--out", cfg.out_path, "write output to file instead of stdout");
        sub->add_option("--config", config_path, "JSON config file; flags override");
        return sub;
    };

    CLI::App* weyl = add_common(app.add_subcommand("weyl", "enumerate Weyl elements"));
    weyl->add_option("--L", cfg.L, "length bound");
    CLI::App* cfunc = add_common(app.add_subcommand("cfunc", "c(chi, w) as an exact rational function"));
    cfunc->add_option("--word", cfg.word, "Weyl word, comma separated generator indices")
        ->delimiter(',');
    CLI::App* cterm = add_common(app.add_subcommand("cterm", "truncated constant-term table"));
    cterm->add_option("--L", cfg.L, "truncation length");
    cterm->add_option("--format", cfg.format, "json or csv");
    cterm->add_option("--mode", cfg.mode, "convergence or meromorphic");
    CLI::App* gk = app.add_subcommand("gk", "rank-1 Gindikin-Karpelevich integral");
    gk->set_help_flag("--help", "print help");
    gk->add_option("--q", cfg.q, "residue field size (prime)");
    gk->add_option("--kappa", cfg.kappa_raw, "exponent kappa < -1");
    gk->add_option("--mode", cfg.gk_mode, "shells or bruteforce");
    gk->add_option("--N", cfg.N, "pole-depth truncation");
    gk->add_option("--M", cfg.M, "residue precision (bruteforce)");
    gk->add_option("--out", cfg.out_path, "output file");
    CLI::App* euler = app.add_subcommand("euler", "partial Euler product for zeta_{F_q(T)}");
    euler->set_help_flag("--help", "print help");
    euler->add_option("--q", cfg.q, "constant field size");
    euler->add_option("--s", cfg.s_raw, "argument s > 1");
    euler->add_option("--degree", cfg.degree, "place degree cutoff");
    euler->add_option("--out", cfg.out_path, "output file");
    CLI::App* verify = add_common(app.add_subcommand(
        "verify", "verification suites: cocycle funceq three-factor gk-induction zeta-ratios inversions"));
    verify->add_option("target", verify_target, "verification target")->required();
    verify->add_option("--max-length", cfg.max_length, "length bound for element grids");
    verify->add_option("--seed", cfg.seed, "seed for randomized instance grids");
    verify->add_option("--instances", cfg.instances, "number of randomized instances");
    verify->add_option("--gk-q", cfg.q, "prime residue field for gk-induction");

    try {
        app.parse(argc, argv);
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) apply_config_file(*sub, cfg, config_path);
        if (sub == weyl) return cmd_weyl(cfg);
        if (sub == cfunc) return cmd_cfunc(cfg);
        if (sub == cterm) return cmd_cterm(cfg);
        if (sub == gk) return cmd_gk(cfg);
        if (sub == euler) return cmd_euler(cfg);
        if (sub == verify) return cmd_verify(cfg, verify_target);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ZetaPole& e) {
        std::cerr << "zeta pole: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedType& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

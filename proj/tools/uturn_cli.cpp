// uturn: partition functions, identity verification, and sampling for the
// U-turn lattice model, with machine-readable JSON output.
//
// Exit codes: 0 success, 1 a verification instance failed, 2 usage or
// parse error (including a refused sample run), 3 pole.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "uturn/colors.hpp"
#include "uturn/identities.hpp"
#include "uturn/lattice.hpp"
#include "uturn/params.hpp"
#include "uturn/rational.hpp"
#include "uturn/weights.hpp"

using json = nlohmann::ordered_json;
using namespace uturn;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json rat_json(const Rat& v) { return json{{"num", v.num_str()}, {"den", v.den_str()}}; }

Rat parse_rat_flag(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const DomainError& e) {
        throw UsageError("flag " + flag + ": " + e.what());
    }
}

std::vector<Rat> parse_rat_list(const std::string& flag, const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat_flag(flag, item));
    if (out.empty()) throw UsageError("flag " + flag + ": empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("flag " + flag + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("flag " + flag + ": empty list");
    return out;
}

struct Options {
    int n = 2;
    int L = 2;
    std::string sigma_text;
    std::string mu_text;
    std::string r_text, s_text, nu_text, t_text, x_text;
    uint64_t seed = 1;
    uint64_t trials = 5;
    std::string mode = "exact";
    std::string suite = "all";
    bool assert_stochastic = false;
    std::string out_path;

    bool has(const std::string& text) const { return !text.empty(); }

    SignedPerm sigma() const {
        if (sigma_text.empty()) return SignedPerm::identity(n);
        try {
            return SignedPerm::parse(sigma_text, n);
        } catch (const DomainError& e) {
            throw UsageError(std::string("flag --sigma: ") + e.what());
        }
    }

    std::vector<int> mu() const {
        if (mu_text.empty()) throw UsageError("flag --mu is required for this subcommand");
        return parse_int_list("--mu", mu_text);
    }

    ParamPoint params() const {
        for (const auto& [flag, text] : std::initializer_list<std::pair<const char*, const std::string&>>{
                 {"--r", r_text}, {"--s", s_text}, {"--nu", nu_text}, {"--t", t_text}, {"--x", x_text}})
            if (text.empty()) throw UsageError(std::string("flag ") + flag + " is required for this subcommand");
        std::vector<Rat> xs = parse_rat_list("--x", x_text);
        if (static_cast<int>(xs.size()) != n)
            throw UsageError("flag --x: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(xs.size()));
        try {
            return ParamPoint(parse_rat_flag("--r", r_text), parse_rat_flag("--s", s_text),
                              parse_rat_flag("--nu", nu_text), parse_rat_flag("--t", t_text),
                              std::move(xs));
        } catch (const DomainError& e) {
            throw UsageError(std::string("parameter point: ") + e.what());
        }
    }

    json spec_json(const SignedPerm& sig, const std::vector<int>* mu_opt,
                   const ParamPoint& p) const {
        json xs = json::array();
        for (const Rat& xv : p.x) xs.push_back(rat_json(xv));
        json spec{{"n", n}, {"L", L}, {"sigma", sig.str()}};
        if (mu_opt) {
            std::ostringstream os;
            for (std::size_t i = 0; i < mu_opt->size(); ++i) {
                if (i) os << ",";
                os << (*mu_opt)[i];
            }
            spec["mu"] = os.str();
        }
        spec["r"] = rat_json(p.r);
        spec["s"] = rat_json(p.s);
        spec["nu"] = rat_json(p.nu);
        spec["t"] = rat_json(p.t);
        spec["x"] = xs;
        return spec;
    }
};

void emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output path " + out_path);
        f << text;
    }
}

uint64_t mix_seed(uint64_t base, uint64_t k) {
    uint64_t z = base + (k + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int cmd_pf(const Options& opt) {
    ModelSpec spec(opt.n, opt.L, opt.sigma(), opt.mu(), opt.params());
    const Rat f = partition_function(spec, PfMode::DFS);
    const std::size_t states = count_states(spec);
    json doc{{"f", rat_json(f)},
             {"stateCount", states},
             {"spec", opt.spec_json(spec.sigma, &spec.mu, spec.params)},
             {"seed", opt.seed}};
    if (opt.mode == "float") doc["fFloat"] = f.to_double();
    emit(doc, opt.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyRun {
    std::vector<json> reports;
    int failures = 0;

    void add_exact(const IdentityReport& rep, const std::string& mode) {
        json j{{"identity", rep.identity},
               {"instance", rep.instance},
               {"left", rat_json(rep.left)},
               {"right", rat_json(rep.right)},
               {"residual", rat_json(rep.residual())},
               {"pass", rep.pass()},
               {"seed", rep.seed}};
        if (mode == "float") {
            j["leftFloat"] = rep.left.to_double();
            j["rightFloat"] = rep.right.to_double();
        }
        if (!rep.pass()) ++failures;
        reports.push_back(std::move(j));
    }

    void add_float(const FloatReport& rep, double tol) {
        json j{{"identity", rep.identity},
               {"instance", rep.instance},
               {"left", rep.left},
               {"right", rep.right},
               {"relErr", rep.rel_err()},
               {"tol", tol},
               {"pass", rep.pass(tol)},
               {"seed", rep.seed}};
        if (!rep.pass(tol)) ++failures;
        reports.push_back(std::move(j));
    }
};

// Draws a parameter point, retrying on poles of the checked identity.  A
// user-pinned point is used as-is: a pole there is a hard error.
template <typename Fn>
void with_redraws(const Options& opt, uint64_t inst_seed, int rank, Fn&& fn) {
    const bool pinned = opt.has(opt.r_text) || opt.has(opt.s_text) || opt.has(opt.nu_text) ||
                        opt.has(opt.t_text) || opt.has(opt.x_text);
    if (pinned) {
        fn(opt.params(), inst_seed, std::mt19937_64(inst_seed));
        return;
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        const uint64_t s = mix_seed(inst_seed, attempt);
        std::mt19937_64 rng(s);
        ParamPoint p = random_param_point(rng, rank);
        try {
            fn(p, s, std::move(rng));
            return;
        } catch (const PoleError&) {
            continue;
        }
    }
    throw DomainError("could not draw a pole-free parameter point after 100 attempts");
}

ColorVec random_vec(std::mt19937_64& rng, int n, int max_entry) {
    std::uniform_int_distribution<int> d(0, max_entry);
    ColorVec v(n);
    for (Color c : all_colors(n))
        if (c != 0) v.add(c, d(rng));
    return v;
}

Color random_color(std::mt19937_64& rng, int n) {
    const auto cols = all_colors(n);
    std::uniform_int_distribution<std::size_t> d(0, cols.size() - 1);
    return cols[d(rng)];
}

// A point in the real regime of the transform: 0 < r < 1, r < x_j < 1/r,
// x_j pairwise distinct and != 1.
ParamPoint random_real_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(1, 49);
    for (;;) {
        int a = d(rng), b = d(rng) + 1;
        if (a >= b) continue;
        Rat r{a, b};
        Rat span = r.inv() - r;
        std::vector<Rat> xs;
        bool ok = true;
        for (int j = 0; j < n; ++j) {
            int c = d(rng), e = d(rng) + 1;
            if (c >= e) {
                ok = false;
                break;
            }
            Rat x = r + span * Rat{c, e};
            if (x == Rat{1}) ok = false;
            for (const Rat& prev : xs)
                if (prev == x) ok = false;
            if (!ok) break;
            xs.push_back(x);
        }
        if (!ok) continue;
        Rat s = random_nonzero_rational(rng);
        Rat nu = random_nonzero_rational(rng);
        Rat t = random_nonzero_rational(rng);
        if (t.is_zero()) continue;
        return ParamPoint(r, s, nu, t, std::move(xs));
    }
}

std::vector<int> random_mu(std::mt19937_64& rng, int n, int L, bool barred_sorted) {
    std::uniform_int_distribution<int> dcol(1, L);
    std::uniform_int_distribution<int> dsign(0, 1);
    std::vector<int> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = dsign(rng) ? dcol(rng) : -dcol(rng);
    if (barred_sorted) {
        for (int& m : mu) m = m > 0 ? -m : m;
        std::sort(mu.begin(), mu.end());
    }
    return mu;
}

void run_suite(const std::string& suite, const Options& opt, VerifyRun& run) {
    const int n = opt.n;
    const uint64_t T = opt.trials;

    if (suite == "stochastic") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             ColorVec I = random_vec(rng, n, 2);
                             Color j = random_color(rng, n);
                             const Rat& x = p.x.front();
                             auto g = check_vertex_stochastic(VertexKind::Gamma, I, j, x, p);
                             auto d = check_vertex_stochastic(VertexKind::Delta, I, j, x, p);
                             auto c = check_cap_stochastic(j, x, p);
                             g.seed = d.seed = c.seed = s;
                             VerifyRun tmp;
                             tmp.add_exact(g, opt.mode);
                             tmp.add_exact(d, opt.mode);
                             tmp.add_exact(c, opt.mode);
                             run.reports.insert(run.reports.end(), tmp.reports.begin(),
                                                tmp.reports.end());
                             run.failures += tmp.failures;
                         });
        }
        return;
    }
    if (suite == "ybe") {
        for (uint64_t k = 0; k < T; ++k) {
            for (RFamily fam : {RFamily::GG, RFamily::DG, RFamily::DD}) {
                with_redraws(opt, mix_seed(opt.seed, k * 3 + static_cast<int>(fam)), n,
                             [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                                 ColorVec f = random_vec(rng, n, 2);
                                 Color a = random_color(rng, n), b = random_color(rng, n);
                                 Color d = random_color(rng, n), e = random_color(rng, n);
                                 Rat y = p.x.size() > 1 ? p.x[1] : p.x[0] + Rat{1};
                                 auto rep = check_ybe(fam, f, a, b, d, e, p.x[0], y, p);
                                 rep.seed = s;
                                 run.add_exact(rep, opt.mode);
                             });
            }
        }
        return;
    }
    if (suite == "reflection") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             Color e1 = random_color(rng, n), e2 = random_color(rng, n);
                             Color e3 = random_color(rng, n), e4 = random_color(rng, n);
                             Rat y = p.x.size() > 1 ? p.x[1] : p.x[0] + Rat{1};
                             auto rep = check_reflection(e1, e2, e3, e4, p.x[0], y, p, n);
                             rep.seed = s;
                             run.add_exact(rep, opt.mode);
                         });
        }
        return;
    }
    if (suite == "capfusion") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             Color e1 = random_color(rng, n), e2 = random_color(rng, n);
                             VerifyRun tmp;
                             for (int m = 1; m <= n; ++m) {
                                 auto rep = check_cap_fusion(e1, e2, m, p.x[0], p, n);
                                 rep.seed = s;
                                 tmp.add_exact(rep, opt.mode);
                             }
                             run.reports.insert(run.reports.end(), tmp.reports.begin(),
                                                tmp.reports.end());
                             run.failures += tmp.failures;
                         });
        }
        return;
    }
    if (suite == "closedform") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             std::vector<int> mu = opt.has(opt.mu_text)
                                                       ? opt.mu()
                                                       : random_mu(rng, n, opt.L, true);
                             ModelSpec spec(n, opt.L, SignedPerm::identity(n), mu, p);
                             auto rep = check_closed_form(spec);
                             rep.seed = s;
                             run.add_exact(rep, opt.mode);
                         });
        }
        return;
    }
    if (suite == "exchange") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             SignedPerm sig = opt.has(opt.sigma_text) ? opt.sigma()
                                                                      : SignedPerm::identity(n);
                             if (!opt.has(opt.sigma_text)) {
                                 auto perms = all_signed_perms(n);
                                 std::uniform_int_distribution<std::size_t> d(0, perms.size() - 1);
                                 sig = perms[d(rng)];
                             }
                             int i = -1;
                             for (int cand = 1; cand < n; ++cand)
                                 if (color_compare(sig.apply(cand), sig.apply(cand + 1), n) ==
                                     Cmp::LT) {
                                     i = cand;
                                     break;
                                 }
                             if (i < 0) {
                                 sig = SignedPerm::identity(n);
                                 i = 1;
                             }
                             std::vector<int> mu =
                                 opt.has(opt.mu_text) ? opt.mu() : random_mu(rng, n, opt.L, false);
                             ModelSpec spec(n, opt.L, sig, mu, p);
                             auto rep = check_exchange(spec, i);
                             rep.seed = s;
                             run.add_exact(rep, opt.mode);
                         });
        }
        return;
    }
    if (suite == "inversion") {
        for (uint64_t k = 0; k < T; ++k) {
            with_redraws(opt, mix_seed(opt.seed, k), n,
                         [&](const ParamPoint& p, uint64_t s, std::mt19937_64 rng) {
                             SignedPerm sig = SignedPerm::identity(n);
                             if (opt.has(opt.sigma_text)) {
                                 sig = opt.sigma();
                             } else {
                                 auto perms = all_signed_perms(n);
                                 std::uniform_int_distribution<std::size_t> d(0, perms.size() - 1);
                                 do {
                                     sig = perms[d(rng)];
                                 } while (sig.apply(n) < 0);
                             }
                             std::vector<int> mu =
                                 opt.has(opt.mu_text) ? opt.mu() : random_mu(rng, n, opt.L, false);
                             ModelSpec spec(n, opt.L, sig, mu, p);
                             auto rep = check_inversion(spec);
                             rep.seed = s;
                             run.add_exact(rep, opt.mode);
                         });
        }
        return;
    }
    if (suite == "hecke") {
        const double tol = 1e-9;
        for (uint64_t k = 0; k < T; ++k) {
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 100)
                    throw DomainError("could not draw a pole-free transform point after 100 attempts");
                const uint64_t s = mix_seed(mix_seed(opt.seed, k), attempt);
                std::mt19937_64 rng(s);
                try {
                    ParamPoint p = random_real_point(rng, n);
                    auto perms = all_signed_perms(n);
                    std::uniform_int_distribution<std::size_t> d(0, perms.size() - 1);
                    SignedPerm sig = perms[d(rng)];
                    std::vector<int> mu =
                        opt.has(opt.mu_text) ? opt.mu() : random_mu(rng, n, opt.L, false);
                    VerifyRun tmp;
                    for (int i = 1; i <= n; ++i) {
                        bool applies = i < n ? color_compare(sig.apply(i), sig.apply(i + 1), n) ==
                                                   Cmp::LT
                                             : sig.apply(n) > 0;
                        if (!applies) continue;
                        ModelSpec spec(n, opt.L, sig, mu, p);
                        auto rep = check_hecke(spec, i);
                        rep.seed = s;
                        tmp.add_float(rep, tol);
                    }
                    run.reports.insert(run.reports.end(), tmp.reports.begin(), tmp.reports.end());
                    run.failures += tmp.failures;
                    break;
                } catch (const PoleError&) {
                    continue;
                }
            }
        }
        return;
    }
    throw UsageError("unknown suite: " + suite);
}

int cmd_verify(const Options& opt) {
    static const std::vector<std::string> kSuites = {
        "ybe",      "reflection", "stochastic", "closedform",
        "exchange", "inversion",  "capfusion",  "hecke"};
    std::vector<std::string> todo;
    if (opt.suite == "all") {
        todo = kSuites;
    } else if (std::find(kSuites.begin(), kSuites.end(), opt.suite) != kSuites.end()) {
        todo = {opt.suite};
    } else {
        throw UsageError("flag --suite: unknown suite '" + opt.suite + "'");
    }
    VerifyRun run;
    for (const auto& s : todo) run_suite(s, opt, run);
    std::stable_sort(run.reports.begin(), run.reports.end(), [](const json& a, const json& b) {
        if (a["identity"] != b["identity"])
            return a["identity"].get<std::string>() < b["identity"].get<std::string>();
        return a["instance"].get<std::string>() < b["instance"].get<std::string>();
    });
    json doc{{"suite", opt.suite},
             {"trials", opt.trials},
             {"seed", opt.seed},
             {"total", run.reports.size()},
             {"failures", run.failures},
             {"reports", run.reports}};
    emit(doc, opt.out_path);
    std::cerr << "verify suite=" << opt.suite << ": " << (run.reports.size() - run.failures)
              << "/" << run.reports.size() << " passed\n";
    return run.failures == 0 ? 0 : 1;
}

int cmd_sample(const Options& opt) {
    if (!opt.assert_stochastic)
        throw UsageError(
            "sample requires --assert-stochastic: the caller asserts the parameter point "
            "defines transition probabilities");
    const SignedPerm sig = opt.sigma();
    const ParamPoint p = opt.params();
    const uint64_t N = opt.trials;

    MassReport exact = total_mass(opt.n, opt.L, sig, p);
    std::map<std::string, uint64_t> counts;
    uint64_t rejected = 0;
    for (uint64_t k = 0; k < N; ++k) {
        SampleResult res = sample_state(opt.n, opt.L, sig, p, mix_seed(opt.seed, k));
        MassOutcome o;
        if (res.rejected) {
            ++rejected;
            o.rejected = true;
            o.reject_pair = res.reject_pair;
            o.reject_color = res.trace.back().chosen;
        } else {
            o.mu = *res.mu;
        }
        ++counts[o.key()];
    }

    json outcomes = json::array();
    double max_abs_z = 0;
    for (const auto& [outcome, mass] : exact.outcomes) {
        const std::string key = outcome.key();
        const uint64_t c = counts.count(key) ? counts.at(key) : 0;
        const double pp = mass.to_double();
        json row{{"key", key},
                 {"count", c},
                 {"freq", N ? static_cast<double>(c) / static_cast<double>(N) : 0.0},
                 {"exact", rat_json(mass)},
                 {"exactFloat", pp}};
        if (N && pp > 0 && pp < 1) {
            const double z = (static_cast<double>(c) - static_cast<double>(N) * pp) /
                             std::sqrt(static_cast<double>(N) * pp * (1 - pp));
            row["z"] = z;
            max_abs_z = std::max(max_abs_z, std::fabs(z));
        }
        outcomes.push_back(std::move(row));
        counts.erase(key);
    }
    if (!counts.empty()) {
        std::string stray = counts.begin()->first;
        throw DomainError("sampled an outcome with zero exact mass: " + stray);
    }

    json doc{{"spec", opt.spec_json(sig, nullptr, p)},
             {"seed", opt.seed},
             {"trials", N},
             {"rejectionCount", rejected},
             {"rejectionRate", N ? static_cast<double>(rejected) / static_cast<double>(N) : 0.0},
             {"totalMass", rat_json(exact.total)},
             {"maxAbsZ", max_abs_z},
             {"outcomes", outcomes}};
    emit(doc, opt.out_path);
    return 0;
}

json error_json(const std::string& type, const std::string& message) {
    return json{{"error", json{{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification for the U-turn lattice model"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "rank (number of row pairs)");
        sub->add_option("--L", opt.L, "number of columns");
        sub->add_option("--sigma", opt.sigma_text, "signed permutation, one-line, e.g. 2,-1");
        sub->add_option("--mu", opt.mu_text, "destination vector, e.g. 1,-2");
        sub->add_option("--r", opt.r_text, "parameter r (q = r^2), rational p/q");
        sub->add_option("--s", opt.s_text, "parameter s, rational");
        sub->add_option("--nu", opt.nu_text, "parameter nu, rational");
        sub->add_option("--t", opt.t_text, "parameter t, rational");
        sub->add_option("--x", opt.x_text, "spectral parameters, comma list of rationals");
        sub->add_option("--seed", opt.seed, "base RNG seed");
        sub->add_option("--mode", opt.mode, "exact|float")
            ->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--out", opt.out_path, "write the JSON document to this path");
    };

    CLI::App* pf = app.add_subcommand("pf", "compute one partition function exactly");
    add_common(pf);
    CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
    add_common(verify);
    verify->add_option("--suite", opt.suite,
                       "ybe|reflection|stochastic|closedform|exchange|inversion|capfusion|hecke|all");
    verify->add_option("--trials", opt.trials, "instances per suite");
    CLI::App* sample = app.add_subcommand("sample", "sample the stochastic process");
    add_common(sample);
    sample->add_option("--trials", opt.trials, "number of samples");
    sample->add_flag("--assert-stochastic", opt.assert_stochastic,
                     "assert the point defines transition probabilities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("parse", e.what()).dump(2) << "\n";
        return 2;
    }

    try {
        if (pf->parsed()) return cmd_pf(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (sample->parsed()) return cmd_sample(opt);
        std::cerr << error_json("parse", "missing subcommand").dump(2) << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << error_json("parse", e.what()).dump(2) << "\n";
        return 2;
    } catch (const PoleError& e) {
        json err = error_json("pole", e.what());
        err["error"]["factor"] = e.factor();
        std::cerr << err.dump(2) << "\n";
        return 3;
    } catch (const RegimeError& e) {
        std::cerr << error_json("regime", e.what()).dump(2) << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << error_json("domain", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump(2) << "\n";
        return 2;
    }
}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ope/ensembles.hpp"
#include "ope/equilibrium.hpp"
#include "ope/moments.hpp"
#include "ope/randomised.hpp"
#include "ope/schur.hpp"
#include "ope/suite.hpp"

using json = nlohmann::ordered_json;
using namespace ope;

namespace {

constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct OutputConfig {
    std::string format = "json";
    std::string path;   // empty = stdout
    int digits = 60;
};

// "a..b" (inclusive) or a single integer
std::vector<long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return {std::stol(text)};
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("range", "empty range " + text);
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::string dec(const Real& x, int digits) { return x.str(digits); }

void emit(const OutputConfig& out, const std::string& command, const json& config,
          const json& rows, const json& summary) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.path.empty()) {
        file.open(out.path);
        if (!file) throw std::runtime_error("cannot open " + out.path);
        os = &file;
    }
    if (out.format == "json") {
        json doc;
        doc["command"] = command;
        doc["config"] = config;
        doc["rows"] = rows;
        doc["summary"] = summary;
        *os << doc.dump(2) << "\n";
        return;
    }
    // CSV: union of keys from the first row, RFC-4180 quoting
    auto quote = [](std::string s) {
        bool needs = s.find_first_of(",\"\n") != std::string::npos;
        if (!needs) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += "\"\"";
            else q += ch;
        }
        return q + "\"";
    };
    std::vector<std::string> keys;
    if (!rows.empty())
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (size_t i = 0; i < keys.size(); ++i) *os << (i ? "," : "") << quote(keys[i]);
    *os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < keys.size(); ++i) {
            const auto& v = row.contains(keys[i]) ? row[keys[i]] : json();
            std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
            *os << (i ? "," : "") << quote(cell);
        }
        *os << "\n";
    }
}

int cmd_moments(const OutputConfig& out, const std::string& ensemble, const std::string& theta_s,
                const std::string& gamma_s, const std::string& q_s, long bigK,
                const std::string& p_s, const std::string& k_range, const std::string& n_range,
                bool with_oracle, long x_max) {
    json config{{"ensemble", ensemble}, {"precision", out.digits}};
    json rows = json::array();
    bool all_equal = true;

    auto ks = parse_range(k_range);
    auto ns = parse_range(n_range);
    Real tol = pow10(-10, out.digits);

    for (long N : ns) {
        for (long k : ks) {
            if (k < 0 || N < 1) throw CLI::ValidationError("range", "need k >= 0 and N >= 1");
            auto uk = static_cast<unsigned long>(k);
            json row{{"k", k}, {"N", N}};
            Rational closed;
            EnsembleParams params;
            if (ensemble == "charlier") {
                Rational theta = parse_rational(theta_s);
                if (theta <= 0) throw CLI::ValidationError("--theta", "need theta > 0");
                config["theta"] = to_string(theta);
                params = Charlier{theta};
                closed = charlier_ledoux(theta, uk, N);
                row["ledoux"] = to_string(closed);
                Rational hyper = charlier_hyper(theta, uk, N);
                row["hyper"] = to_string(hyper);
                row["routes_equal"] = (hyper == closed);
                all_equal = all_equal && hyper == closed;
            } else if (ensemble == "meixner") {
                Rational gamma = parse_rational(gamma_s), q = parse_rational(q_s);
                if (gamma <= 0) throw CLI::ValidationError("--gamma", "need gamma > 0");
                if (q <= 0 || q >= 1) throw CLI::ValidationError("--q", "need q in (0,1)");
                config["gamma"] = to_string(gamma);
                config["q"] = to_string(q);
                params = Meixner{gamma, q};
                closed = meixner_ledoux(gamma, q, uk, N);
                row["ledoux"] = to_string(closed);
                if (gamma == 1) {
                    Rational hyper = meixner1_hyper(q, uk, N);
                    row["hyper"] = to_string(hyper);
                    row["routes_equal"] = (hyper == closed);
                    all_equal = all_equal && hyper == closed;
                }
            } else if (ensemble == "krawtchouk") {
                Rational p = parse_rational(p_s);
                if (p <= 0 || p >= 1) throw CLI::ValidationError("--p", "need p in (0,1)");
                if (bigK < 1 || N > bigK)
                    throw CLI::ValidationError("--bigk", "need K >= 1 and N <= K");
                config["K"] = bigK;
                config["p"] = to_string(p);
                params = Krawtchouk{bigK, p};
                closed = krawtchouk_ledoux(bigK, p, uk, N);
                row["ledoux"] = to_string(closed);
                Rational sub = krawtchouk_via_meixner(bigK, p, uk, N);
                row["substitution"] = to_string(sub);
                row["routes_equal"] = (sub == closed);
                all_equal = all_equal && sub == closed;
            } else {
                throw CLI::ValidationError("--ensemble", "unknown ensemble " + ensemble);
            }
            if (with_oracle) {
                long xm = x_max > 0 ? x_max : default_x_max(params, N);
                auto oracle = factorial_moment_oracle({params, N}, uk, xm, out.digits);
                Real gap = abs_diff(oracle.value, Real(closed, out.digits));
                row["oracle"] = dec(oracle.value, out.digits);
                row["oracle_gap"] = dec(gap, 3);
                all_equal = all_equal && gap < tol;
            }
            rows.push_back(row);
        }
    }
    emit(out, "moments", config, rows, json{{"all_routes_agree", all_equal}});
    return all_equal ? 0 : kExitIdentityFailure;
}

int cmd_randomised(const OutputConfig& out, const std::string& kind, const std::string& theta_s,
                   const std::string& q_s, const std::string& k_range, long recurrence_max) {
    json config{{"kind", kind}, {"precision", out.digits}};
    json rows = json::array();
    bool all_ok = true;
    auto ks = parse_range(k_range);

    if (kind == "charlier") {
        Rational theta = parse_rational(theta_s);
        if (theta <= 0) throw CLI::ValidationError("--theta", "need theta > 0");
        config["theta"] = to_string(theta);
        for (long k : ks) {
            auto uk = static_cast<unsigned long>(k);
            Poly m = poissonised_charlier(theta, uk);
            json coeffs = json::array();
            for (int i = 0; i <= m.degree(); ++i) coeffs.push_back(to_string(m.coeff(i)));
            bool jacobi_eq = poissonised_charlier_jacobi(theta, uk) == RatFunc(m);
            bool catalan = m.eval(Rational(1)) == catalan_poissonised(theta, uk);
            all_ok = all_ok && jacobi_eq && catalan;
            rows.push_back(json{{"k", k},
                                {"coefficients_in_t", coeffs},
                                {"jacobi_form_equal", jacobi_eq},
                                {"catalan_at_t1", to_string(catalan_poissonised(theta, uk))},
                                {"catalan_equal", catalan}});
        }
    } else if (kind == "meixner") {
        Rational q = parse_rational(q_s);
        if (q <= 0 || q >= 1) throw CLI::ValidationError("--q", "need q in (0,1)");
        config["q"] = to_string(q);
        for (long k : ks) {
            auto uk = static_cast<unsigned long>(k);
            RatFunc m = nb_meixner(q, uk).canonical();
            json num = json::array(), den = json::array();
            for (int i = 0; i <= m.num().degree(); ++i) num.push_back(to_string(m.num().coeff(i)));
            for (int i = 0; i <= m.den().degree(); ++i) den.push_back(to_string(m.den().coeff(i)));
            bool legendre_eq = nb_meixner_legendre(q, uk) == m;
            bool catalan = m.eval(Rational(1)) == catalan_nb_meixner(q, uk);
            all_ok = all_ok && legendre_eq && catalan;
            rows.push_back(json{{"k", k},
                                {"numerator_in_t", num},
                                {"denominator_in_t", den},
                                {"legendre_form_equal", legendre_eq},
                                {"catalan_at_t1", to_string(catalan_nb_meixner(q, uk))},
                                {"catalan_equal", catalan}});
        }
    } else {
        throw CLI::ValidationError("--kind", "unknown kind " + kind);
    }

    Rational theta = theta_s.empty() ? Rational(1) : parse_rational(theta_s);
    Rational q = q_s.empty() ? make_rational(1, 2) : parse_rational(q_s);
    bool recurrences_ok = true;
    for (long k = 1; k <= recurrence_max; ++k) {
        auto uk = static_cast<unsigned long>(k);
        bool zc = recurrence_residual_charlier(theta, uk).is_zero();
        bool zm = recurrence_residual_meixner(q, uk).is_zero();
        bool zj = ode_residual_jacobi_substituted(uk).is_zero();
        recurrences_ok = recurrences_ok && zc && zm && zj;
    }
    all_ok = all_ok && recurrences_ok;

    json printed = json::array();
    for (const auto& e : adjudicate_printed_equations(theta, q, {1, 2, 3}))
        printed.push_back(json{{"equation", e.equation},
                               {"k", e.k},
                               {"identically_zero", e.identically_zero},
                               {"residual", e.residual}});

    json summary{{"recurrence_residuals_zero_up_to", recurrence_max},
                 {"recurrences_ok", recurrences_ok},
                 {"all_identities_hold", all_ok},
                 {"printed_equation_report", printed}};
    emit(out, "randomised", config, rows, summary);
    return all_ok ? 0 : kExitIdentityFailure;
}

int cmd_equilibrium(const OutputConfig& out, const std::string& kind, const std::string& h_s,
                    const std::string& q_s, const std::string& c_s, const std::string& kappa_s,
                    const std::string& p_s, const std::string& k_range) {
    json config{{"kind", kind}, {"precision", out.digits}};
    json rows = json::array();
    bool all_equal = true;
    for (long k : parse_range(k_range)) {
        auto uk = static_cast<unsigned long>(k);
        Rational closed, oracle;
        if (kind == "charlier") {
            Rational h = parse_rational(h_s);
            if (h <= 0) throw CLI::ValidationError("--h", "need h > 0");
            config["h"] = to_string(h);
            closed = charlier_eq_moment(h, uk);
            oracle = charlier_eq_moment_oracle(h, uk);
        } else if (kind == "meixner1") {
            Rational q = parse_rational(q_s);
            config["q"] = to_string(q);
            closed = meixner1_eq_moment(q, uk);
            oracle = meixner1_eq_moment_oracle(q, uk);
        } else if (kind == "meixner-general") {
            Rational q = parse_rational(q_s), c = parse_rational(c_s);
            config["q"] = to_string(q);
            config["c"] = to_string(c);
            closed = meixner_general_eq_moment(q, c, uk);
            oracle = meixner_general_eq_moment_oracle(q, c, uk);
        } else if (kind == "krawtchouk") {
            Rational kappa = parse_rational(kappa_s), p = parse_rational(p_s);
            config["kappa"] = to_string(kappa);
            config["p"] = to_string(p);
            closed = krawtchouk_eq_moment(kappa, p, uk);
            oracle = krawtchouk_eq_moment_oracle(kappa, p, uk);
        } else {
            throw CLI::ValidationError("--kind", "unknown kind " + kind);
        }
        bool equal = closed == oracle;
        all_equal = all_equal && equal;
        rows.push_back(json{{"k", k},
                            {"closed_form", to_string(closed)},
                            {"expansion_oracle", to_string(oracle)},
                            {"exactly_equal", equal}});
    }
    emit(out, "equilibrium", config, rows, json{{"all_exactly_equal", all_equal}});
    return all_equal ? 0 : kExitIdentityFailure;
}

int cmd_schur(const OutputConfig& out, const std::string& verify, const std::string& theta_s,
              const std::string& q_s, const std::string& t_s, long N, const std::string& k_range,
              long max_N, unsigned long max_size) {
    json config{{"verify", verify}, {"precision", out.digits}};
    json rows = json::array();
    bool all_ok = true;
    Real tol = pow10(-8, out.digits);
    for (long k : parse_range(k_range)) {
        auto uk = static_cast<unsigned long>(k);
        json row{{"k", k}};
        if (verify == "charlier") {
            Rational theta = parse_rational(theta_s);
            config["theta"] = to_string(theta);
            config["N"] = N;
            auto rep = verify_charlier_cauchy(theta, N, uk, max_size, out.digits);
            row["lhs"] = dec(rep.lhs, out.digits);
            row["rhs"] = dec(rep.rhs, out.digits);
            row["gap"] = dec(rep.gap, 3);
            row["last_shell"] = dec(rep.last_shell, 3);
            row["converged"] = rep.converged;
            all_ok = all_ok && rep.converged && rep.gap < tol;
        } else if (verify == "meixner") {
            Rational q = parse_rational(q_s);
            config["q"] = to_string(q);
            config["N"] = N;
            auto rep = verify_meixner_cauchy(q, N, uk, max_size, out.digits);
            row["lhs"] = dec(rep.lhs, out.digits);
            row["rhs_printed"] = to_string(rep.rhs_printed);
            row["rhs_lower_one"] = to_string(rep.rhs_lower_one);
            row["gap_printed"] = dec(rep.gap_printed, 3);
            row["gap_lower_one"] = dec(rep.gap_lower_one, 3);
            row["matches"] = rep.matches;
            all_ok = all_ok && (rep.matches == "lower_one" || rep.matches == "both");
        } else if (verify == "poissonised") {
            Rational theta = parse_rational(theta_s), t = parse_rational(t_s);
            config["theta"] = to_string(theta);
            config["t"] = to_string(t);
            auto rep = verify_poissonised_cauchy(theta, t, uk, max_N, max_size, out.digits);
            row["lhs"] = dec(rep.lhs, out.digits);
            row["rhs"] = dec(rep.rhs, out.digits);
            row["gap"] = dec(rep.gap, 3);
            row["particle_counts_used"] = rep.terms_N;
            all_ok = all_ok && rep.gap < tol;
        } else if (verify == "nb") {
            Rational q = parse_rational(q_s), t = parse_rational(t_s);
            config["q"] = to_string(q);
            config["t"] = to_string(t);
            auto rep = verify_nb_cauchy(q, t, uk, max_N, max_size, out.digits);
            row["lhs"] = dec(rep.lhs, out.digits);
            row["rhs"] = dec(rep.rhs, out.digits);
            row["gap"] = dec(rep.gap, 3);
            row["particle_counts_used"] = rep.terms_N;
            all_ok = all_ok && rep.gap < tol;
        } else {
            throw CLI::ValidationError("--verify", "unknown verification " + verify);
        }
        rows.push_back(row);
    }
    emit(out, "schur", config, rows, json{{"all_verified", all_ok}});
    return all_ok ? 0 : kExitIdentityFailure;
}

int cmd_suite(const OutputConfig& out) {
    auto results = run_verification_battery(out.digits);
    json rows = json::array();
    for (const auto& r : results)
        rows.push_back(json{{"criterion", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"informational", r.informational},
                            {"details", r.details}});
    bool ok = battery_passed(results);
    emit(out, "suite", json{{"precision", out.digits}}, rows, json{{"all_passed", ok}});
    return ok ? 0 : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorial moments of discrete orthogonal polynomial ensembles"};
    app.require_subcommand(1);

    OutputConfig out;
    if (const char* env = std::getenv("OPE_PRECISION")) out.digits = std::atoi(env);
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out.path, "output path (default stdout)");
    app.add_option("--precision", out.digits, "working precision in decimal digits (>= 30)");

    std::string ensemble, kind, verify;
    std::string theta_s, gamma_s = "1", q_s, p_s, h_s, c_s = "0", kappa_s, t_s;
    std::string k_range = "0..4", n_range = "1..3";
    long bigK = 0, x_max = 0, recurrence_max = 30, N = 1, max_N = 30;
    unsigned long max_size = 90;
    bool with_oracle = false;

    auto* moments = app.add_subcommand("moments", "factorial moments via every closed-form route");
    moments->add_option("--ensemble", ensemble, "charlier | meixner | krawtchouk")->required();
    moments->add_option("--theta", theta_s, "Charlier rate, as a rational a/b");
    moments->add_option("--gamma", gamma_s, "Meixner shape");
    moments->add_option("--q", q_s, "Meixner parameter in (0,1)");
    moments->add_option("--bigk", bigK, "Krawtchouk trial count K");
    moments->add_option("--p", p_s, "Krawtchouk success probability");
    moments->add_option("--k", k_range, "moment orders, e.g. 0..5");
    moments->add_option("--n", n_range, "particle counts, e.g. 1..4");
    moments->add_flag("--with-oracle", with_oracle, "include the brute-force lattice oracle");
    moments->add_option("--xmax", x_max, "oracle truncation bound (default: automatic)");

    auto* randomised = app.add_subcommand("randomised", "poissonised / negative binomialised moments");
    randomised->add_option("--kind", kind, "charlier | meixner")->required();
    randomised->add_option("--theta", theta_s, "Charlier rate");
    randomised->add_option("--q", q_s, "Meixner parameter");
    randomised->add_option("--k", k_range, "moment orders");
    randomised->add_option("--recurrence-max", recurrence_max, "verify recurrences up to this k");

    auto* equilibrium = app.add_subcommand("equilibrium", "equilibrium-measure moments");
    equilibrium->add_option("--kind", kind, "charlier | meixner1 | meixner-general | krawtchouk")
        ->required();
    equilibrium->add_option("--h", h_s, "Charlier scale h > 0");
    equilibrium->add_option("--q", q_s, "Meixner parameter");
    equilibrium->add_option("--c", c_s, "Meixner shape scale c >= 0");
    equilibrium->add_option("--kappa", kappa_s, "Krawtchouk scale kappa > 1");
    equilibrium->add_option("--p", p_s, "Krawtchouk success probability");
    equilibrium->add_option("--k", k_range, "moment orders");

    auto* schur = app.add_subcommand("schur", "cauchy-type identities over partitions");
    schur->add_option("--verify", verify, "charlier | meixner | poissonised | nb")->required();
    schur->add_option("--theta", theta_s, "Charlier rate");
    schur->add_option("--q", q_s, "Meixner parameter");
    schur->add_option("--t", t_s, "randomisation parameter");
    schur->add_option("--n", N, "particle count (fixed-N verifications)");
    schur->add_option("--k", k_range, "moment orders");
    schur->add_option("--max-n", max_N, "particle-count cap (randomised verifications)");
    schur->add_option("--max-size", max_size, "partition size cap");

    auto* suite = app.add_subcommand("suite", "run the full verification battery");
    (void)suite;

    CLI11_PARSE(app, argc, argv);

    try {
        if (out.digits < 30) throw CLI::ValidationError("--precision", "need at least 30 digits");
        Real::set_default_digits(out.digits);
        if (app.got_subcommand("moments"))
            return cmd_moments(out, ensemble, theta_s, gamma_s, q_s, bigK, p_s, k_range, n_range,
                               with_oracle, x_max);
        if (app.got_subcommand("randomised"))
            return cmd_randomised(out, kind, theta_s, q_s, k_range, recurrence_max);
        if (app.got_subcommand("equilibrium"))
            return cmd_equilibrium(out, kind, h_s, q_s, c_s, kappa_s, p_s, k_range);
        if (app.got_subcommand("schur"))
            return cmd_schur(out, verify, theta_s, q_s, t_s, N, k_range, max_N, max_size);
        if (app.got_subcommand("suite")) return cmd_suite(out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
    return kExitUsage;
}

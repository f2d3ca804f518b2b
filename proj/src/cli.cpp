#include "qdirac/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qdirac/json_io.hpp"
#include "qdirac/measurement.hpp"
#include "qdirac/oracle_algorithms.hpp"
#include "qdirac/protocols.hpp"
#include "qdirac/quantum_game.hpp"
#include "qdirac/verify.hpp"

namespace qdirac::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Text };

struct GlobalOptions {
    std::string format = "json";
    std::optional<double> eps;
};

// Number in plain decimal with at most 6 fractional digits, no trailing zeros.
std::string short_number(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    std::string s = os.str();
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

double parse_angle(const std::string& text, const char* flag) {
    if (text == "PI") return std::numbers::pi;
    if (text == "PI_2") return std::numbers::pi / 2;
    if (text == "PI_4") return std::numbers::pi / 4;
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(flag) + ": cannot parse angle '" + text + "'");
}

Strategy parse_strategy(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        try {
            return named_strategy(text);
        } catch (const Error&) {
            throw UsageError(std::string(flag) + ": expected C, D, Q, M, E or theta,phi; got '" + text + "'");
        }
    }
    return Strategy(parse_angle(text.substr(0, comma), flag), parse_angle(text.substr(comma + 1), flag));
}

std::vector<std::string> split_names(const std::string& letters) {
    std::vector<std::string> out;
    for (char c : letters) out.emplace_back(1, c);
    return out;
}

Tolerance resolve_tolerance(const GlobalOptions& opts) {
    double eps = Tolerance::kDefaultEps;
    if (const char* env = std::getenv("QDIRAC_EPS"); env != nullptr && *env != '\0') {
        try {
            eps = std::stod(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("QDIRAC_EPS: cannot parse '") + env + "'");
        }
    }
    if (opts.eps) eps = *opts.eps;
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw UsageError("--eps: tolerance must be finite and > 0");
    }
    return Tolerance(eps);
}

Json strategy_json(const Strategy& s) { return Json{{"theta", s.theta()}, {"phi", s.phi()}}; }

Json payoff_json(const PayoffPair& p) {
    Json j{{"alice", p.alice}, {"bob", p.bob}};
    if (p.branch_probs) j["branch_probs"] = *p.branch_probs;
    return j;
}

// ---------------------------------------------------------------------------
// Subcommand handlers. Each returns an exit status and writes its output.
// ---------------------------------------------------------------------------

struct MeasureArgs {
    std::string state_file;
    std::size_t qubit = 0;
    std::size_t shots = 1;
    std::uint64_t seed = 0;
};

int do_measure(const MeasureArgs& a, Format fmt, Tolerance tol, std::ostream& out) {
    const QuantumState s = state_from_json(read_json_file(a.state_file), tol);
    const double p0 = prob0(s, a.qubit);
    const double p1 = prob1(s, a.qubit);
    const ShotCounts counts = sample_counts(s, a.qubit, a.shots, a.seed);
    if (fmt == Format::Json) {
        out << Json{{"prob0", p0}, {"prob1", p1}, {"counts", {{"0", counts.zeros}, {"1", counts.ones}}}}.dump(2)
            << "\n";
    } else {
        out << "qubit " << a.qubit << ": prob0 = " << short_number(p0) << ", prob1 = " << short_number(p1) << "\n"
            << "counts over " << a.shots << " shots (seed " << a.seed << "): 0 -> " << counts.zeros << ", 1 -> "
            << counts.ones << "\n";
    }
    return kExitOk;
}

struct TeleportArgs {
    std::string state_file;
    std::string branch;
};

int do_teleport(const TeleportArgs& a, Format fmt, Tolerance tol, std::ostream& out) {
    const QuantumState phi = state_from_json(read_json_file(a.state_file), tol);
    std::vector<TeleportOutcome> outcomes;
    if (a.branch.empty()) {
        for (auto& o : teleport(phi)) outcomes.push_back(std::move(o));
    } else {
        if (a.branch.size() != 2 || (a.branch[0] != '0' && a.branch[0] != '1') ||
            (a.branch[1] != '0' && a.branch[1] != '1')) {
            throw UsageError("--branch: expected two bits such as 01, got '" + a.branch + "'");
        }
        outcomes.push_back(teleport_branch(phi, a.branch[0] - '0', a.branch[1] - '0'));
    }
    Json rows = Json::array();
    for (const auto& o : outcomes) {
        rows.push_back({{"m1", o.m1}, {"m2", o.m2}, {"probability", o.probability},
                        {"fidelity", fidelity(o.bob_state, phi)}});
    }
    if (fmt == Format::Json) {
        out << (a.branch.empty() ? rows : rows[0]).dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            out << "m1m2 = " << r["m1"].get<int>() << r["m2"].get<int>()
                << "  probability = " << short_number(r["probability"].get<double>())
                << "  fidelity = " << short_number(r["fidelity"].get<double>()) << "\n";
        }
    }
    return kExitOk;
}

void emit_oracle_result(int eval, Classification c, double p_zero, Format fmt, std::ostream& out) {
    if (fmt == Format::Json) {
        out << Json{{"eval", eval}, {"classification", to_string(c)}, {"all_zero_probability", p_zero}}.dump(2)
            << "\n";
    } else {
        out << "eval = " << eval << " (" << to_string(c) << "), all-zero probability = " << short_number(p_zero)
            << "\n";
    }
}

int do_deutsch(const std::string& table, Format fmt, std::ostream& out) {
    const auto f = BooleanFunction::parse(table);
    if (f.n_inputs() != 1) {
        throw UsageError("--table: Deutsch's algorithm takes two bits, got '" + table + "'");
    }
    const QuantumState s = deutsch_algo(f);
    emit_oracle_result(deutsch_eval(f), classify(f), prob0(s, 0), fmt, out);
    return kExitOk;
}

int do_jozsa(std::size_t n, const std::string& table, Format fmt, std::ostream& out) {
    const auto f = BooleanFunction::parse(table);
    if (f.n_inputs() != n) {
        throw UsageError("--table: expected 2^" + std::to_string(n) + " bits, got " + std::to_string(table.size()));
    }
    const Classification c = classify(f);
    const Promise promise = c == Classification::Balanced ? Promise::Balanced : Promise::Constant;
    const JozsaReport r = jozsa_run(f, promise);
    emit_oracle_result(r.eval, c, r.all_zero_probability, fmt, out);
    return kExitOk;
}

struct NocloneArgs {
    std::string machine_file;
    std::size_t basis_cloner_n = 0;
    std::vector<std::string> states;
};

int do_noclone(const NocloneArgs& a, Format fmt, Tolerance tol, std::ostream& out) {
    if (a.machine_file.empty() == (a.basis_cloner_n == 0)) {
        throw UsageError("noclone: give exactly one of --machine-file or --basis-cloner");
    }
    const QuantumMachine m = a.machine_file.empty() ? basis_cloner(a.basis_cloner_n)
                                                    : machine_from_json(read_json_file(a.machine_file), tol);
    const QuantumState va = state_from_json(read_json_file(a.states.at(0)), tol);
    const QuantumState vb = state_from_json(read_json_file(a.states.at(1)), tol);
    const bool ca = is_cloner_for(m, va, tol);
    const bool cb = is_cloner_for(m, vb, tol);
    const double overlap = std::abs(inner_prod(va.vector(), vb.vector()));
    if (fmt == Format::Json) {
        out << Json{{"cloner_for_a", ca}, {"cloner_for_b", cb}, {"overlap", overlap}}.dump(2) << "\n";
    } else {
        out << "clones a: " << (ca ? "yes" : "no") << "\nclones b: " << (cb ? "yes" : "no")
            << "\n|<a|b>| = " << short_number(overlap) << "\n";
    }
    return kExitOk;
}

struct GameArgs {
    std::string gamma = "PI_2";
    std::string alice;
    std::string bob;
    std::vector<std::string> table;
    bool nash = false;
    bool pareto = false;
    std::string grid = "65x33";
    std::string coeffs = "3,0,5,1";
    double margin = kDefaultGameMargin;
    bool alice_classical = false;
    bool bob_classical = false;
};

GridSpec parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x != std::string::npos) {
            std::size_t used_a = 0, used_b = 0;
            const std::string a = text.substr(0, x), b = text.substr(x + 1);
            const auto theta = std::stoul(a, &used_a);
            const auto phi = std::stoul(b, &used_b);
            if (used_a == a.size() && used_b == b.size()) return GridSpec{theta, phi};
        }
    } catch (const std::exception&) {
    }
    throw UsageError("--grid: expected NxM, got '" + text + "'");
}

PayoffCoeffs parse_coeffs(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) values.clear();
        } catch (const std::exception&) {
            values.clear();
            break;
        }
    }
    if (values.size() != 4) {
        throw UsageError("--coeffs: expected r,s,t,p, got '" + text + "'");
    }
    return PayoffCoeffs{values[0], values[1], values[2], values[3]};
}

std::string pair_text(const PayoffPair& p) {
    return "(" + short_number(p.alice) + ", " + short_number(p.bob) + ")";
}

void render_table_text(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                       const std::vector<std::vector<PayoffPair>>& table, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& line : table) {
        for (const auto& p : line) width = std::max(width, pair_text(p).size());
    }
    width += 2;
    std::size_t label = 0;
    for (const auto& r : rows) label = std::max(label, r.size());
    label += 2;
    auto emit = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };
    std::string header(label, ' ');
    for (const auto& c : cols) header += c + std::string(width - c.size(), ' ');
    emit(header);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line = rows[i] + std::string(label - rows[i].size(), ' ');
        for (const auto& p : table[i]) {
            const std::string cell = pair_text(p);
            line += cell + std::string(width - cell.size(), ' ');
        }
        emit(line);
    }
}

int do_game(const GameArgs& a, Format fmt, std::ostream& out) {
    const GameConfig cfg(parse_angle(a.gamma, "--gamma"), parse_coeffs(a.coeffs));
    if (a.table.empty() && (a.alice.empty() || a.bob.empty())) {
        throw UsageError("game: give --alice and --bob, or --table ROWS COLS");
    }
    if ((a.nash || a.pareto) && (a.alice.empty() || a.bob.empty())) {
        throw UsageError("--nash/--pareto need --alice and --bob");
    }
    Json result{{"gamma", cfg.gamma()}};
    std::ostringstream text;

    if (!a.table.empty()) {
        const auto row_names = split_names(a.table.at(0));
        const auto col_names = split_names(a.table.at(1));
        std::vector<Strategy> rows, cols;
        for (const auto& r : row_names) rows.push_back(parse_strategy(r, "--table"));
        for (const auto& c : col_names) cols.push_back(parse_strategy(c, "--table"));
        const auto table = payoff_table(cfg, rows, cols);
        Json entries = Json::array();
        for (const auto& line : table) {
            Json jl = Json::array();
            for (const auto& p : line) jl.push_back({p.alice, p.bob});
            entries.push_back(jl);
        }
        result["table"] = {{"rows", row_names}, {"cols", col_names}, {"entries", entries}};
        render_table_text(row_names, col_names, table, text);
    }

    if (!a.alice.empty() && !a.bob.empty()) {
        const Strategy sa = parse_strategy(a.alice, "--alice");
        const Strategy sb = parse_strategy(a.bob, "--bob");
        const PayoffPair p = payoffs(cfg, sa, sb);
        result["alice"] = strategy_json(sa);
        result["bob"] = strategy_json(sb);
        result["payoffs"] = payoff_json(p);
        text << "payoffs " << pair_text(p) << "\n";

        const SearchSpace space{parse_grid(a.grid), a.alice_classical ? Restriction::Classical : Restriction::Full,
                                a.bob_classical ? Restriction::Classical : Restriction::Full};
        if (a.nash) {
            const NashVerdict v = is_nash_eq(cfg, sa, sb, space, a.margin);
            Json jv{{"holds", v.holds}};
            text << "nash: " << (v.holds ? "holds" : "refuted");
            if (v.witness) {
                const auto& w = *v.witness;
                const char* who = w.player == Player::Alice ? "alice" : "bob";
                jv["witness"] = {{"player", who}, {"strategy", strategy_json(w.strategy)}, {"payoff", w.payoff},
                                 {"gain", w.gain}};
                text << " (" << who << " deviates to U(" << short_number(w.strategy.theta()) << ", "
                     << short_number(w.strategy.phi()) << "), gain " << short_number(w.gain) << ")";
            }
            result["nash"] = jv;
            text << "\n";
        }
        if (a.pareto) {
            const ParetoVerdict v = is_pareto_optimal(cfg, sa, sb, space, a.margin);
            Json jv{{"holds", v.holds}};
            text << "pareto: " << (v.holds ? "holds" : "refuted");
            if (v.witness) {
                const auto& w = *v.witness;
                jv["witness"] = {{"alice", strategy_json(w.alice)}, {"bob", strategy_json(w.bob)},
                                 {"payoffs", payoff_json(w.payoffs)}};
                text << " (dominated by payoffs " << pair_text(w.payoffs) << ")";
            }
            result["pareto"] = jv;
            text << "\n";
        }
    }

    if (fmt == Format::Json) {
        out << result.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return kExitOk;
}

int do_bell(const std::string& which, Format fmt, Tolerance tol, std::ostream& out) {
    if (which.size() != 2 || (which[0] != '0' && which[0] != '1') || (which[1] != '0' && which[1] != '1')) {
        throw UsageError("--which: expected 00, 01, 10 or 11, got '" + which + "'");
    }
    const QuantumState s = bell(which[0] - '0', which[1] - '0');
    const bool entangled = is_entangled_2q(s, tol);
    const bool same = prob1(post_meas0(s, 0, tol), 1) < tol.eps();
    if (fmt == Format::Json) {
        out << Json{{"state", to_json(s)},
                    {"entangled", entangled},
                    {"prob1_qubit0", prob1(s, 0)},
                    {"correlation", same ? "same" : "opposite"}}
                   .dump(2)
            << "\n";
    } else {
        out << "beta_" << which << ":";
        for (std::size_t j = 0; j < 4; ++j) out << " " << short_number(s.amplitude(j).real());
        out << "\nentangled: " << (entangled ? "yes" : "no") << "\noutcomes: " << (same ? "same" : "opposite")
            << "\n";
    }
    return kExitOk;
}

int do_verify(Format fmt, Tolerance tol, std::ostream& out) {
    const auto checks = run_verification(tol);
    std::size_t failed = 0;
    Json jchecks = Json::array();
    for (const auto& c : checks) {
        if (!c.passed) ++failed;
        jchecks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    if (fmt == Format::Json) {
        Json report{{"subcommand", "verify"},
                    {"inputs", {{"eps", tol.eps()}}},
                    {"results", {{"passed", checks.size() - failed}, {"failed", failed}}},
                    {"checks", jchecks}};
        out << report.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
        }
        out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum circuit simulation and theorem checks", "qdirac"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--eps", global.eps, "Comparison tolerance (overrides QDIRAC_EPS)");

    MeasureArgs measure_args;
    auto* measure_cmd = app.add_subcommand("measure", "Measure one qubit of a state");
    measure_cmd->add_option("--state-file", measure_args.state_file, "State JSON file")->required();
    measure_cmd->add_option("--qubit", measure_args.qubit, "Qubit index (0 = leftmost)");
    measure_cmd->add_option("--shots", measure_args.shots, "Number of sampled measurements");
    measure_cmd->add_option("--seed", measure_args.seed, "Sampling seed");

    TeleportArgs teleport_args;
    auto* teleport_cmd = app.add_subcommand("teleport", "Teleport a one-qubit state");
    teleport_cmd->add_option("--state-file", teleport_args.state_file, "State JSON file")->required();
    teleport_cmd->add_option("--branch", teleport_args.branch, "Only this branch, e.g. 01");

    std::string deutsch_table;
    auto* deutsch_cmd = app.add_subcommand("deutsch", "Run Deutsch's algorithm");
    deutsch_cmd->add_option("--table", deutsch_table, "f(0)f(1), e.g. 01")->required();

    std::size_t jozsa_n = 0;
    std::string jozsa_table;
    auto* jozsa_cmd = app.add_subcommand("jozsa", "Run the Deutsch-Jozsa algorithm");
    jozsa_cmd->add_option("--n", jozsa_n, "Number of input bits")->required()->check(CLI::Range(1, 10));
    jozsa_cmd->add_option("--table", jozsa_table, "Truth table in basis order")->required();

    NocloneArgs noclone_args;
    auto* noclone_cmd = app.add_subcommand("noclone", "Check a cloning machine on two states");
    noclone_cmd->add_option("--machine-file", noclone_args.machine_file, "Machine JSON file");
    noclone_cmd->add_option("--basis-cloner", noclone_args.basis_cloner_n, "Use the n-qubit basis cloner")
        ->check(CLI::Range(1, 5));
    noclone_cmd->add_option("--states", noclone_args.states, "Two state JSON files")->required()->expected(2);

    GameArgs game_args;
    auto* game_cmd = app.add_subcommand("game", "Quantum Prisoner's Dilemma");
    game_cmd->add_option("--gamma", game_args.gamma, "Entanglement in [0, PI_2]");
    game_cmd->add_option("--alice", game_args.alice, "Alice's strategy: C|D|Q|M|E or theta,phi");
    game_cmd->add_option("--bob", game_args.bob, "Bob's strategy: C|D|Q|M|E or theta,phi");
    game_cmd->add_option("--table", game_args.table, "Row and column strategy letters, e.g. CDQM CDE")
        ->expected(2);
    game_cmd->add_flag("--nash", game_args.nash, "Grid-check the Nash property");
    game_cmd->add_flag("--pareto", game_args.pareto, "Grid-check Pareto optimality");
    game_cmd->add_option("--grid", game_args.grid, "theta x phi grid points, e.g. 65x33");
    game_cmd->add_option("--coeffs", game_args.coeffs, "Payoffs r,s,t,p");
    game_cmd->add_option("--margin", game_args.margin, "Improvement margin for verdicts");
    game_cmd->add_flag("--alice-classical", game_args.alice_classical, "Alice deviates only with phi = 0");
    game_cmd->add_flag("--bob-classical", game_args.bob_classical, "Bob deviates only with phi = 0");

    std::string bell_which = "00";
    auto* bell_cmd = app.add_subcommand("bell", "Show a Bell state");
    bell_cmd->add_option("--which", bell_which, "ab for beta_ab");

    auto* verify_cmd = app.add_subcommand("verify", "Run all theorem checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Tolerance tol = resolve_tolerance(global);
        const Format fmt = global.format == "text" ? Format::Text : Format::Json;
        if (*measure_cmd) return do_measure(measure_args, fmt, tol, out);
        if (*teleport_cmd) return do_teleport(teleport_args, fmt, tol, out);
        if (*deutsch_cmd) return do_deutsch(deutsch_table, fmt, out);
        if (*jozsa_cmd) return do_jozsa(jozsa_n, jozsa_table, fmt, out);
        if (*noclone_cmd) return do_noclone(noclone_args, fmt, tol, out);
        if (*game_cmd) return do_game(game_args, fmt, out);
        if (*bell_cmd) return do_bell(bell_which, fmt, tol, out);
        if (*verify_cmd) return do_verify(fmt, tol, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace qdirac::cli

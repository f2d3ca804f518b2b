#include "qdirac/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qdirac/measurement.hpp"
#include "qdirac/oracle_algorithms.hpp"
#include "qdirac/protocols.hpp"
#include "qdirac/quantum_game.hpp"

namespace qdirac {

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

QuantumState random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const double len = std::sqrt(std::norm(amps[0]) + std::norm(amps[1]));
    for (auto& a : amps) a /= len;
    return state_from_amplitudes(std::move(amps));
}

Check check_named_gates(Tolerance tol) {
    double worst = 0.0;
    for (const char* token : {"H", "X", "Y", "Z", "S", "T", "CNOT", "ID1", "ID2"}) {
        worst = std::max(worst, unitarity_deviation(gate_from_token(token).matrix()));
    }
    const bool self_adjoint = max_abs_diff(dagger(hadamard().matrix()), hadamard().matrix()) < tol.eps() &&
                              max_abs_diff(dagger(cnot().matrix()), cnot().matrix()) < tol.eps();
    return {"gates are unitary; H and CNOT are self-adjoint", worst < tol.eps() && self_adjoint,
            "max unitarity deviation " + fmt_double(worst)};
}

Check check_bell(Tolerance tol) {
    bool ok = true;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const QuantumState s = bell(a, b);
            ok = ok && is_entangled_2q(s, tol);
            for (int first = 0; first < 2; ++first) {
                const QuantumState post = post_meas(s, 0, first, tol);
                const int expected = b == 0 ? first : 1 - first;
                const double p_same = expected == 1 ? prob1(post, 1) : prob0(post, 1);
                ok = ok && std::abs(p_same - 1.0) < tol.eps();
            }
        }
    }
    return {"Bell states are entangled with correlated outcomes", ok, "4 states, 8 branches"};
}

Check check_no_cloning(Tolerance tol) {
    const QuantumMachine m = basis_cloner(1);
    const QuantumState plus = apply(hadamard(), ket("0"));
    const bool clones_basis = is_cloner_for(m, ket("0"), tol) && is_cloner_for(m, ket("1"), tol);
    const bool rejects_plus = !is_cloner_for(m, plus, tol);
    const double overlap = no_cloning_check(m, ket("0"), ket("1"), tol);
    return {"no-cloning: cloned pairs are identical or orthogonal",
            clones_basis && rejects_plus && std::min(overlap, std::abs(1.0 - overlap)) < tol.eps(),
            "residual on |+> = " + fmt_double(clone_residual(m, plus))};
}

Check check_teleportation(Tolerance tol) {
    std::mt19937_64 rng(20200101);
    double worst_fid = 1.0;
    double worst_prob = 0.0;
    bool factors = true;
    for (int k = 0; k < 200; ++k) {
        const QuantumState phi = random_qubit(rng);
        for (const auto& o : teleport(phi)) {
            worst_fid = std::min(worst_fid, fidelity(o.bob_state, phi));
            worst_prob = std::max(worst_prob, std::abs(o.probability - 0.25));
            const auto label = ket(BasisLabel({o.m1, o.m2}));
            factors = factors && states_equal_up_to_phase(o.bob_state, phi, tol) &&
                      max_abs_diff(o.combined_state.vector(), tensor_states(label, o.bob_state).vector()) < tol.eps();
        }
    }
    return {"teleportation: Bob's qubit equals the input on every branch",
            factors && worst_fid >= 1.0 - tol.eps() && worst_prob < tol.eps(),
            "200 random inputs, min fidelity " + fmt_double(worst_fid)};
}

Check check_deutsch() {
    bool ok = true;
    for (const char* table : {"00", "01", "10", "11"}) {
        const auto f = BooleanFunction::parse(table);
        ok = ok && deutsch_eval(f) == (f(0) ^ f(1));
    }
    return {"Deutsch: output is f(0) xor f(1)", ok, "all 4 one-input functions"};
}

Check check_jozsa() {
    bool ok = true;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& f : constant_functions(n)) {
            ok = ok && jozsa_eval(f, Promise::Constant) == 1;
            ++cases;
        }
        for (const auto& f : balanced_functions(n)) {
            ok = ok && jozsa_eval(f, Promise::Balanced) == 0;
            ++cases;
        }
    }
    return {"Deutsch-Jozsa: 1 iff constant, 0 iff balanced", ok,
            std::to_string(cases) + " tables for n = 1..3"};
}

Check check_payoff_table() {
    const GameConfig cfg(std::numbers::pi / 2);
    std::vector<Strategy> rows, cols;
    for (const char* s : {"C", "D", "Q", "M"}) rows.push_back(named_strategy(s));
    for (const char* s : {"C", "D", "E"}) cols.push_back(named_strategy(s));
    const double expected[4][3][2] = {{{3, 3}, {0, 5}, {1.5, 4}},
                                      {{5, 0}, {1, 1}, {3, 0.5}},
                                      {{1, 1}, {5, 0}, {3, 0.5}},
                                      {{3, 0.5}, {3, 0.5}, {1, 1}}};
    const auto table = payoff_table(cfg, rows, cols);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            worst = std::max({worst, std::abs(table[i][j].alice - expected[i][j][0]),
                              std::abs(table[i][j].bob - expected[i][j][1])});
        }
    }
    return {"quantum Prisoner's Dilemma payoff table at gamma = pi/2", worst < 1e-9,
            "max deviation " + fmt_double(worst)};
}

Check check_miracle_move() {
    double worst = 0.0;
    double erroneous_gap = 0.0;
    const std::size_t n = 50;
    for (std::size_t a = 0; a < n; ++a) {
        const double gamma = (std::numbers::pi / 2) * static_cast<double>(a) / (n - 1);
        const GameConfig cfg(gamma);
        for (std::size_t b = 0; b < n; ++b) {
            const double theta = std::numbers::pi * static_cast<double>(b) / (n - 1);
            const auto sim = payoffs(cfg, named_strategy("M"), Strategy(theta, 0.0));
            const auto closed = miracle_payoffs_closed_form(gamma, theta);
            worst = std::max({worst, std::abs(sim.alice - closed.alice), std::abs(sim.bob - closed.bob)});
            erroneous_gap = std::max({erroneous_gap, std::abs(sim.alice - (3.0 + 2.0 * std::sin(theta))),
                                      std::abs(sim.bob - 0.5 * (1.0 - std::sin(theta)))});
        }
    }
    return {"miracle move: corrected closed forms match simulation",
            worst < 1e-9 && erroneous_gap > 0.1,
            "max deviation " + fmt_double(worst) + ", erroneous forms off by " + fmt_double(erroneous_gap)};
}

Check check_equilibria() {
    const GameConfig separable(0.0);
    const GameConfig maximal(std::numbers::pi / 2);
    const Strategy d = named_strategy("D");
    const Strategy q = named_strategy("Q");
    const bool dd_classical = is_nash_eq(separable, d, d).holds;
    const NashVerdict dd_quantum = is_nash_eq(maximal, d, d);
    const bool qq_nash = is_nash_eq(maximal, q, q).holds;
    const bool qq_pareto = is_pareto_optimal(maximal, q, q).holds;
    const bool ok = dd_classical && !dd_quantum.holds && qq_nash && qq_pareto;
    std::string detail = "65x33 grid";
    if (dd_quantum.witness) detail += ", (D,D) deviation gains " + fmt_double(dd_quantum.witness->gain);
    return {"Nash/Pareto: (D,D) only classical; (Q,Q) Nash and Pareto optimal", ok, detail};
}

}  // namespace

std::vector<Check> run_verification(Tolerance tol) {
    std::vector<Check> checks;
    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            checks.push_back(body());
        } catch (const Error& e) {
            checks.push_back({name, false, e.what()});
        }
    };
    guarded("gates", [&] { return check_named_gates(tol); });
    guarded("bell", [&] { return check_bell(tol); });
    guarded("no-cloning", [&] { return check_no_cloning(tol); });
    guarded("teleportation", [&] { return check_teleportation(tol); });
    guarded("deutsch", [&] { return check_deutsch(); });
    guarded("deutsch-jozsa", [&] { return check_jozsa(); });
    guarded("payoff table", [&] { return check_payoff_table(); });
    guarded("miracle move", [&] { return check_miracle_move(); });
    guarded("equilibria", [&] { return check_equilibria(); });
    return checks;
}

}  // namespace qdirac

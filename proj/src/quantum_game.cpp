#include "qdirac/quantum_game.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdirac {

namespace {

// Accepts values that overshoot a bound by rounding, e.g. a decimal pi.
constexpr double kAngleSlack = 1e-12;

void require_range(double value, double hi, const char* name) {
    if (!std::isfinite(value) || value < -kAngleSlack || value > hi + kAngleSlack) {
        throw Error(ErrorKind::OutOfRange, std::string(name) + " = " + std::to_string(value) +
                                               " is outside [0, " + std::to_string(hi) + "]");
    }
}

PayoffPair payoff_from_probs(const PayoffCoeffs& c, std::array<double, 4> p) {
    // p = {P00, P01, P10, P11}; bit 1 means defect, Alice's bit first.
    const double alice = c.reward * p[0] + c.sucker * p[1] + c.temptation * p[2] + c.punishment * p[3];
    const double bob = c.reward * p[0] + c.temptation * p[1] + c.sucker * p[2] + c.punishment * p[3];
    return PayoffPair{alice, bob, p};
}

std::vector<double> axis(std::size_t points, double hi) {
    std::vector<double> out(points);
    for (std::size_t k = 0; k < points; ++k) {
        out[k] = hi * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    out.back() = hi;
    return out;
}

void require_grid(const GridSpec& grid) {
    if (grid.theta_points < 2 || grid.phi_points < 2) {
        throw Error(ErrorKind::InvalidGrid, "grid needs at least 2 points per axis, got " +
                                                std::to_string(grid.theta_points) + "x" +
                                                std::to_string(grid.phi_points));
    }
}

}  // namespace

Strategy::Strategy(double theta, double phi) : theta_(theta), phi_(phi) {
    require_range(theta, std::numbers::pi, "theta");
    require_range(phi, std::numbers::pi / 2, "phi");
}

GameConfig::GameConfig(double gamma, PayoffCoeffs coeffs) : gamma_(gamma), coeffs_(coeffs) {
    require_range(gamma, std::numbers::pi / 2, "gamma");
    for (double c : {coeffs.reward, coeffs.sucker, coeffs.temptation, coeffs.punishment}) {
        if (!std::isfinite(c)) {
            throw Error(ErrorKind::OutOfRange, "payoff coefficients must be finite");
        }
    }
}

Gate strategy_matrix(const Strategy& s) {
    const double c = std::cos(s.theta() / 2);
    const double sn = std::sin(s.theta() / 2);
    return make_gate(1, {{std::polar(c, s.phi()), sn}, {-sn, std::polar(c, -s.phi())}});
}

Strategy named_strategy(std::string_view name) {
    constexpr double pi = std::numbers::pi;
    if (name == "C") return {0.0, 0.0};
    if (name == "D") return {pi, 0.0};
    if (name == "Q") return {0.0, pi / 2};
    if (name == "M") return {pi / 2, pi / 2};
    if (name == "E") return {pi / 2, 0.0};
    throw Error(ErrorKind::UnknownName, "no strategy named '" + std::string(name) + "'");
}

Gate entangler(double gamma) {
    require_range(gamma, std::numbers::pi / 2, "gamma");
    const Gate d = strategy_matrix(named_strategy("D"));
    const ComplexMatrix dd = kronecker(d.matrix(), d.matrix());
    const ComplexMatrix j = Complex{std::cos(gamma / 2)} * ComplexMatrix::identity(4) +
                            Complex{0.0, std::sin(gamma / 2)} * dd;
    return make_gate(2, j);
}

QuantumState final_state(const GameConfig& cfg, const Strategy& alice, const Strategy& bob) {
    const Gate j = entangler(cfg.gamma());
    const Gate j_dagger = make_gate(2, dagger(j.matrix()));
    const Gate play = tensor_gates(strategy_matrix(alice), strategy_matrix(bob));
    return apply(compose(j_dagger, compose(play, j)), ket("00"));
}

PayoffPair payoffs(const GameConfig& cfg, const Strategy& alice, const Strategy& bob) {
    const QuantumState psi = final_state(cfg, alice, bob);
    std::array<double, 4> p{};
    for (std::size_t xy = 0; xy < 4; ++xy) {
        p[xy] = std::norm(inner_prod(ket(BasisLabel::from_index(2, xy)).vector(), psi.vector()));
    }
    return payoff_from_probs(cfg.coeffs(), p);
}

PayoffPair miracle_payoffs_closed_form(double gamma, double theta) {
    require_range(gamma, std::numbers::pi / 2, "gamma");
    require_range(theta, std::numbers::pi, "theta");
    const double cg2 = std::cos(gamma) * std::cos(gamma);
    const double sg = std::sin(gamma);
    const double sg2 = sg * sg;
    const double alice = (21.0 + cg2 * (-3.0 + 14.0 * std::cos(theta)) + 3.0 * sg2 - 16.0 * sg * std::sin(theta)) / 8.0;
    const double bob = (11.0 + cg2 * (7.0 - 6.0 * std::cos(theta)) - 7.0 * sg2 + 4.0 * sg * std::sin(theta)) / 8.0;
    return PayoffPair{alice, bob, std::nullopt};
}

PayoffEvaluator::PayoffEvaluator(const GameConfig& cfg) : coeffs_(cfg.coeffs()) {
    const ComplexMatrix j = entangler(cfg.gamma()).matrix();
    const ComplexMatrix jd = dagger(j);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) j_dagger_[r * 4 + c] = jd(r, c);
        entangled_input_[r] = j(r, 0);
    }
}

PayoffEvaluator::Mat2 PayoffEvaluator::strategy_entries(const Strategy& s) {
    const double c = std::cos(s.theta() / 2);
    const double sn = std::sin(s.theta() / 2);
    return {std::polar(c, s.phi()), Complex{sn}, Complex{-sn}, std::polar(c, -s.phi())};
}

PayoffPair PayoffEvaluator::evaluate(const Mat2& a, const Mat2& b) const {
    const auto& v = entangled_input_;
    std::array<Complex, 4> played{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) acc += a[i * 2 + k] * b[j * 2 + l] * v[2 * k + l];
            }
            played[2 * i + j] = acc;
        }
    }
    std::array<double, 4> p{};
    for (std::size_t r = 0; r < 4; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < 4; ++c) acc += j_dagger_[r * 4 + c] * played[c];
        p[r] = std::norm(acc);
    }
    return payoff_from_probs(coeffs_, p);
}

PayoffPair PayoffEvaluator::operator()(const Strategy& alice, const Strategy& bob) const {
    return evaluate(strategy_entries(alice), strategy_entries(bob));
}

std::vector<Strategy> grid_strategies(const GridSpec& grid, Restriction restriction) {
    require_grid(grid);
    const auto thetas = axis(grid.theta_points, std::numbers::pi);
    const auto phis = restriction == Restriction::Classical ? std::vector<double>{0.0}
                                                            : axis(grid.phi_points, std::numbers::pi / 2);
    std::vector<Strategy> out;
    out.reserve(thetas.size() * phis.size());
    for (double t : thetas) {
        for (double p : phis) out.emplace_back(t, p);
    }
    return out;
}

NashVerdict is_nash_eq(const GameConfig& cfg, const Strategy& alice, const Strategy& bob,
                       const SearchSpace& space, double margin) {
    const PayoffEvaluator eval(cfg);
    const PayoffPair base = eval(alice, bob);

    std::optional<Deviation> best;
    auto consider = [&](Player who, const std::vector<Strategy>& candidates) {
        for (const auto& s : candidates) {
            const PayoffPair p = who == Player::Alice ? eval(s, bob) : eval(alice, s);
            const double mine = who == Player::Alice ? p.alice : p.bob;
            const double gain = mine - (who == Player::Alice ? base.alice : base.bob);
            if (gain > margin && (!best || gain > best->gain)) best = Deviation{who, s, mine, gain};
        }
    };
    consider(Player::Alice, grid_strategies(space.grid, space.alice));
    consider(Player::Bob, grid_strategies(space.grid, space.bob));
    return NashVerdict{!best.has_value(), best};
}

ParetoVerdict is_pareto_optimal(const GameConfig& cfg, const Strategy& alice, const Strategy& bob,
                                const SearchSpace& space, double margin) {
    const PayoffEvaluator eval(cfg);
    const PayoffPair base = eval(alice, bob);
    const auto alice_grid = grid_strategies(space.grid, space.alice);
    const auto bob_grid = grid_strategies(space.grid, space.bob);

    std::vector<PayoffEvaluator::Mat2> bob_entries;
    bob_entries.reserve(bob_grid.size());
    for (const auto& s : bob_grid) bob_entries.push_back(PayoffEvaluator::strategy_entries(s));

    for (const auto& sa : alice_grid) {
        const auto a = PayoffEvaluator::strategy_entries(sa);
        for (std::size_t k = 0; k < bob_grid.size(); ++k) {
            const PayoffPair p = eval.evaluate(a, bob_entries[k]);
            const bool no_worse = p.alice >= base.alice - margin && p.bob >= base.bob - margin;
            const bool better = p.alice > base.alice + margin || p.bob > base.bob + margin;
            if (no_worse && better) {
                return ParetoVerdict{false, Domination{sa, bob_grid[k], p}};
            }
        }
    }
    return ParetoVerdict{true, std::nullopt};
}

std::vector<std::vector<PayoffPair>> payoff_table(const GameConfig& cfg, const std::vector<Strategy>& rows,
                                                  const std::vector<Strategy>& cols) {
    if (rows.empty() || cols.empty()) {
        throw Error(ErrorKind::EmptyInput, "payoff table needs at least one row and one column");
    }
    std::vector<std::vector<PayoffPair>> table;
    table.reserve(rows.size());
    for (const auto& r : rows) {
        auto& line = table.emplace_back();
        line.reserve(cols.size());
        for (const auto& c : cols) line.push_back(payoffs(cfg, r, c));
    }
    return table;
}

bool classical_restriction(const Strategy& s, Tolerance tol) { return s.phi() < tol.eps(); }

}  // namespace qdirac

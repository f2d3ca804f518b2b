#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qdirac/quantum_gate.hpp"
#include "qdirac/quantum_state.hpp"

namespace qdirac {

/// Two-parameter strategy U(theta, phi) with theta in [0, pi] and phi in
/// [0, pi/2]. The constructor throws OutOfRange naming the parameter.
class Strategy {
public:
    Strategy(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    double theta_;
    double phi_;
};

/// Reward, sucker, temptation, punishment. The payoff of a player who
/// cooperates against a defector is the sucker payoff.
struct PayoffCoeffs {
    double reward = 3.0;
    double sucker = 0.0;
    double temptation = 5.0;
    double punishment = 1.0;
};

class GameConfig {
public:
    /// gamma in [0, pi/2]; coefficients must be finite.
    explicit GameConfig(double gamma, PayoffCoeffs coeffs = {});

    double gamma() const noexcept { return gamma_; }
    const PayoffCoeffs& coeffs() const noexcept { return coeffs_; }

private:
    double gamma_;
    PayoffCoeffs coeffs_;
};

struct PayoffPair {
    double alice;
    double bob;
    /// P00, P01, P10, P11; absent for closed-form evaluations.
    std::optional<std::array<double, 4>> branch_probs;
};

/// [[e^{i phi} cos(theta/2), sin(theta/2)], [-sin(theta/2), e^{-i phi} cos(theta/2)]]
Gate strategy_matrix(const Strategy& s);

/// C = U(0,0), D = U(pi,0), Q = U(0,pi/2), M = U(pi/2,pi/2), E = U(pi/2,0).
Strategy named_strategy(std::string_view name);

/// exp(i gamma D(x)D / 2) = cos(gamma/2) I + i sin(gamma/2) D(x)D, using
/// (D(x)D)^2 = I.
Gate entangler(double gamma);

/// J^dagger (U_A (x) U_B) J |00>.
QuantumState final_state(const GameConfig& cfg, const Strategy& alice, const Strategy& bob);

/// Expected payoffs from P_xy = |<xy|psi_f>|^2.
PayoffPair payoffs(const GameConfig& cfg, const Strategy& alice, const Strategy& bob);

/// Payoffs when Alice plays M and Bob plays U(theta, 0), default coefficients,
/// in closed form.
PayoffPair miracle_payoffs_closed_form(double gamma, double theta);

/// Fixed-size evaluator for grid searches. Numerically the same product as
/// payoffs() but without heap allocation per call.
class PayoffEvaluator {
public:
    explicit PayoffEvaluator(const GameConfig& cfg);

    PayoffPair operator()(const Strategy& alice, const Strategy& bob) const;

    using Mat2 = std::array<Complex, 4>;
    static Mat2 strategy_entries(const Strategy& s);
    PayoffPair evaluate(const Mat2& alice, const Mat2& bob) const;

private:
    PayoffCoeffs coeffs_;
    std::array<Complex, 16> j_dagger_;
    std::array<Complex, 4> entangled_input_;  // J |00>
};

struct GridSpec {
    std::size_t theta_points = 65;
    std::size_t phi_points = 33;
};

enum class Restriction { Full, Classical };

/// Deviation grid for each player. A classical player only ranges over phi = 0.
struct SearchSpace {
    GridSpec grid{};
    Restriction alice = Restriction::Full;
    Restriction bob = Restriction::Full;
};

/// Grid points of one player, theta-major then phi, both ascending.
std::vector<Strategy> grid_strategies(const GridSpec& grid, Restriction restriction);

enum class Player { Alice, Bob };

struct Deviation {
    Player player;
    Strategy strategy;
    double payoff;  ///< deviating player's payoff after the deviation
    double gain;
};

/// holds == true means no grid deviation gains more than the margin; the
/// verdict says nothing about points off the grid.
struct NashVerdict {
    bool holds;
    std::optional<Deviation> witness;
};

struct Domination {
    Strategy alice;
    Strategy bob;
    PayoffPair payoffs;
};

struct ParetoVerdict {
    bool holds;
    std::optional<Domination> witness;
};

inline constexpr double kDefaultGameMargin = 1e-7;

/// Refuted verdicts carry the largest-gain deviation; ties go to Alice, then
/// to the first grid point in scan order. InvalidGrid if either axis of the
/// grid has fewer than 2 points.
NashVerdict is_nash_eq(const GameConfig& cfg, const Strategy& alice, const Strategy& bob,
                       const SearchSpace& space = {}, double margin = kDefaultGameMargin);

/// Holds unless some grid pair is no worse than (alice, bob) for both players,
/// up to the margin, and better by more than the margin for at least one. The
/// witness is the first such pair in scan order.
ParetoVerdict is_pareto_optimal(const GameConfig& cfg, const Strategy& alice, const Strategy& bob,
                                const SearchSpace& space = {}, double margin = kDefaultGameMargin);

/// Entry (i, j) is payoffs(cfg, rows[i], cols[j]). EmptyInput on empty lists.
std::vector<std::vector<PayoffPair>> payoff_table(const GameConfig& cfg, const std::vector<Strategy>& rows,
                                                  const std::vector<Strategy>& cols);

/// True iff s lies in the one-parameter classical subset phi = 0.
bool classical_restriction(const Strategy& s, Tolerance tol = {});

}  // namespace qdirac

#include "jrcsim/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jrcsim {

namespace {

// Vertex solution of one operation's linear subproblem: chain k active
// iff weight * (c_k - kappa * g_k) > 0, capped at the max_active largest.
Eigen::VectorXd linear_vertex(const Eigen::VectorXd& c, const Eigen::VectorXd& g,
                              double kappa, double weight,
                              std::optional<int> max_active) {
    const int n = static_cast<int>(c.size());
    Eigen::VectorXd chain_weight = weight * (c - kappa * g);
    std::vector<int> positive;
    for (int k = 0; k < n; ++k)
        if (chain_weight(k) > 0.0) positive.push_back(k);
    if (max_active && static_cast<int>(positive.size()) > *max_active) {
        std::stable_sort(positive.begin(), positive.end(), [&](int a, int b) {
            return chain_weight(a) > chain_weight(b);
        });
        positive.resize(*max_active);
    }
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
    for (int k : positive) s(k) = 1.0;
    return s;
}

double guarded_ratio(double num, double den) {
    return num / std::max(den, kDenomEpsilon);
}

// Exhaustive single-operation ratio maximizer; masks are walked in
// lexicographic diagonal order with strict improvement, so ties keep
// the first diagonal.
Eigen::VectorXd brute_force_op(const Eigen::VectorXd& c, const Eigen::VectorXd& g,
                               double noise, std::optional<int> max_active) {
    const int n = static_cast<int>(c.size());
    Eigen::VectorXd best = Eigen::VectorXd::Zero(n);
    double best_obj = 0.0;
    Eigen::VectorXd s(n);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        int active = 0;
        for (int k = 0; k < n; ++k) {
            s(k) = (mask >> (n - 1 - k)) & 1ULL ? 1.0 : 0.0;
            active += static_cast<int>(s(k));
        }
        if (max_active && active > *max_active) continue;
        const double obj = guarded_ratio(c.dot(s), g.dot(s) + noise);
        if (obj > best_obj) {
            best_obj = obj;
            best = s;
        }
    }
    return best;
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> solve_db_subproblem(
    const LinearCoefficients& coeffs, double kappa_com, double kappa_rad,
    double rho, std::optional<int> max_active) {
    if (!std::isfinite(kappa_com) || !std::isfinite(kappa_rad))
        throw std::invalid_argument("solve_db_subproblem: kappa must be finite");
    return {linear_vertex(coeffs.c_com, coeffs.g_com, kappa_com, rho, max_active),
            linear_vertex(coeffs.c_rad, coeffs.g_rad, kappa_rad, 1.0 - rho,
                          max_active)};
}

Eigen::VectorXd round_selection(const Eigen::VectorXd& relaxed) {
    Eigen::VectorXd s(relaxed.size());
    for (Eigen::Index k = 0; k < relaxed.size(); ++k) {
        if (relaxed(k) < 0.0 || relaxed(k) > 1.0)
            throw std::invalid_argument("round_selection: entry outside [0,1]");
        s(k) = relaxed(k) > 0.5 ? 1.0 : 0.0;
    }
    return s;
}

SelectionResult dinkelbach_select(const LinearCoefficients& coeffs, double rho,
                                  const DinkelbachOptions& opts) {
    if (opts.i_max < 1)
        throw std::invalid_argument("dinkelbach_select: i_max must be >= 1");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("dinkelbach_select: rho outside [0,1]");
    const int n = coeffs.n_rf();

    SelectionResult res;
    res.s_com = Eigen::VectorXd::Ones(n);
    res.s_rad = Eigen::VectorXd::Ones(n);
    res.kappa_com_trajectory = {1.0};
    res.kappa_rad_trajectory = {1.0};

    double kappa_com_prev = 1.0;
    double kappa_rad_prev = 1.0;
    for (int i = 1; i <= opts.i_max; ++i) {
        res.iterations = i;
        const double delta_com = coeffs.c_com.dot(res.s_com);
        const double sigma_com = coeffs.g_com.dot(res.s_com) + coeffs.noise_com;
        const double delta_rad = coeffs.c_rad.dot(res.s_rad);
        const double sigma_rad = coeffs.g_rad.dot(res.s_rad) + coeffs.noise_rad;
        if ((sigma_com < kDenomEpsilon && delta_com > kDenomEpsilon) ||
            (sigma_rad < kDenomEpsilon && delta_rad > kDenomEpsilon))
            res.degenerate_interference = true;

        const double kappa_com = guarded_ratio(delta_com, sigma_com);
        const double kappa_rad = guarded_ratio(delta_rad, sigma_rad);
        res.kappa_com_trajectory.push_back(kappa_com);
        res.kappa_rad_trajectory.push_back(kappa_rad);
        res.objective_trajectory.push_back(
            approx_weighted_objective(coeffs, res.s_com, res.s_rad, rho));

        const bool com_settled =
            std::abs(kappa_com - kappa_com_prev) <=
            opts.kappa_tol * std::max(1.0, std::abs(kappa_com_prev));
        const bool rad_settled =
            std::abs(kappa_rad - kappa_rad_prev) <=
            opts.kappa_tol * std::max(1.0, std::abs(kappa_rad_prev));
        if (i > 1 && com_settled && rad_settled) {
            res.converged = true;
            break;
        }
        kappa_com_prev = kappa_com;
        kappa_rad_prev = kappa_rad;

        auto [next_com, next_rad] =
            solve_db_subproblem(coeffs, kappa_com, kappa_rad, rho, opts.max_active);
        next_com = round_selection(next_com);
        next_rad = round_selection(next_rad);
        // An empty subproblem solution while the current selection still
        // achieves a positive ratio means no selection beats kappa: the
        // current selection is the fixed point for that operation.
        if (!(next_com.sum() > 0.0) && delta_com > 0.0 && rho > 0.0)
            next_com = res.s_com;
        if (!(next_rad.sum() > 0.0) && delta_rad > 0.0 && rho < 1.0)
            next_rad = res.s_rad;
        res.s_com = next_com;
        res.s_rad = next_rad;
    }
    res.objective = approx_weighted_objective(coeffs, res.s_com, res.s_rad, rho);
    return res;
}

BruteForceResult brute_force_select(const LinearCoefficients& coeffs, double rho,
                                    std::optional<int> max_active) {
    const int n = coeffs.n_rf();
    if (n > 16)
        throw std::invalid_argument("brute_force_select: n_rf too large");
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("brute_force_select: rho outside [0,1]");
    BruteForceResult res;
    // The objective is separable across the two operations; a zero-weight
    // operation contributes nothing and stays deselected.
    res.s_com = rho > 0.0 ? brute_force_op(coeffs.c_com, coeffs.g_com,
                                           coeffs.noise_com, max_active)
                          : Eigen::VectorXd::Zero(n);
    res.s_rad = rho < 1.0 ? brute_force_op(coeffs.c_rad, coeffs.g_rad,
                                           coeffs.noise_rad, max_active)
                          : Eigen::VectorXd::Zero(n);
    res.objective = approx_weighted_objective(coeffs, res.s_com, res.s_rad, rho);
    return res;
}

}  // namespace jrcsim

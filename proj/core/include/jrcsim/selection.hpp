#ifndef JRCSIM_SELECTION_HPP
#define JRCSIM_SELECTION_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "jrcsim/rates.hpp"

namespace jrcsim {

struct DinkelbachOptions {
    int i_max = 20;
    double kappa_tol = 1e-6;  // relative change on both kappa values
    std::optional<int> max_active;  // cap on active chains per operation
};

struct SelectionResult {
    Eigen::VectorXd s_com;  // binary diagonal
    Eigen::VectorXd s_rad;  // binary diagonal
    std::vector<double> kappa_com_trajectory;  // starts at 1
    std::vector<double> kappa_rad_trajectory;  // starts at 1
    std::vector<double> objective_trajectory;  // fractional objective per iteration
    int iterations = 0;
    bool converged = false;
    bool degenerate_interference = false;  // a kappa update hit the epsilon guard
    double objective = 0.0;  // approx_weighted_objective at the final selection
};

// One Dinkelbach subproblem: maximize the kappa-weighted linear
// objective over box-constrained diagonals. Separable and linear per
// chain, so the optimum sits at a vertex: a chain is active iff its
// weight is strictly positive (ties deactivate). With max_active set,
// only the top-L positive weights per operation stay active.
std::pair<Eigen::VectorXd, Eigen::VectorXd> solve_db_subproblem(
    const LinearCoefficients& coeffs, double kappa_com, double kappa_rad,
    double rho, std::optional<int> max_active = {});

// Dinkelbach iteration over the relaxed selection problem: evaluate
// delta/sigma at the current selection, update kappa from their ratio,
// re-solve the subproblem, and stop once both kappa values settle or
// i_max is reached.
SelectionResult dinkelbach_select(const LinearCoefficients& coeffs, double rho,
                                  const DinkelbachOptions& opts = {});

struct BruteForceResult {
    Eigen::VectorXd s_com;
    Eigen::VectorXd s_rad;
    double objective = 0.0;
};

// Exhaustive maximizer of the fractional objective over all binary
// diagonal pairs; ties keep the lexicographically first diagonal.
// Verification oracle; refuses n_rf > 16.
BruteForceResult brute_force_select(const LinearCoefficients& coeffs,
                                    double rho,
                                    std::optional<int> max_active = {});

// Threshold at 0.5; exact 0.5 rounds down. Rejects entries outside [0,1].
Eigen::VectorXd round_selection(const Eigen::VectorXd& relaxed);

}  // namespace jrcsim

#endif

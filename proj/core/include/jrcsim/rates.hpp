#ifndef JRCSIM_RATES_HPP
#define JRCSIM_RATES_HPP

#include <Eigen/Dense>

namespace jrcsim {

// Guard for fractional objectives whose interference denominator
// vanishes exactly.
inline constexpr double kDenomEpsilon = 1e-12;

/// Rates and interference powers for one realization.
struct RateReport {
    double r_com = 0.0;           // bits/s/Hz
    double r_rad = 0.0;           // bits/s/Hz
    double r_joint = 0.0;         // rho*r_com + (1-rho)*r_rad
    double sigma2_rad_com = 0.0;  // interference power in the comm denominator
    double sigma2_com_rad = 0.0;  // interference power in the radar denominator
};

/// Per-chain decomposition of the rate numerators and interference
/// powers: for any binary selection S, delta and sigma^2 are the
/// selection-weighted sums of these coefficients.
struct LinearCoefficients {
    Eigen::VectorXd c_com;  // numerator coefficients of delta_com
    Eigen::VectorXd g_com;  // coefficients of sigma^2_rad-com
    Eigen::VectorXd c_rad;  // numerator coefficients of delta_rad
    Eigen::VectorXd g_rad;  // coefficients of sigma^2_com-rad
    // Selection-independent denominator terms (receiver noise referred to
    // the same power scale as the coefficients). Zero keeps the pure
    // interference ratio.
    double noise_com = 0.0;
    double noise_rad = 0.0;

    int n_rf() const { return static_cast<int>(c_com.size()); }
};

// Interference power leaking through the radar channel from the
// communication transmission, summed over the radar combiner columns.
double interference_rad_to_com(const Eigen::VectorXd& s_com,
                               const Eigen::MatrixXcd& f_rf_com,
                               const Eigen::MatrixXcd& h_rad,
                               const Eigen::MatrixXcd& w_rad);

// Mirror image: radar transmission through the communication channel.
double interference_com_to_rad(const Eigen::VectorXd& s_rad,
                               const Eigen::MatrixXcd& f_rf_rad,
                               const Eigen::MatrixXcd& h_com,
                               const Eigen::MatrixXcd& w_com);

// Sum over streams of log2(1 + signal_k / (interference + noise_floor)),
// signal_k being the selection-parameterized quadratic form for combiner
// column k. Throws if interference + noise_floor is not positive.
double comm_rate(const Eigen::VectorXd& s_com,
                 const Eigen::MatrixXcd& f_rf,
                 const Eigen::MatrixXcd& f_bb,
                 const Eigen::MatrixXcd& h_com,
                 const Eigen::MatrixXcd& w_com,
                 double interference, double noise_floor);

// Same expression with the radar quantities.
double radar_rate(const Eigen::VectorXd& s_rad,
                  const Eigen::MatrixXcd& f_rf,
                  const Eigen::MatrixXcd& f_bb,
                  const Eigen::MatrixXcd& h_rad,
                  const Eigen::MatrixXcd& w_rad,
                  double interference, double noise_floor);

// rho*r_com + (1-rho)*r_rad; rejects rho outside [0,1].
double joint_rate(double rho, double r_com, double r_rad);

// Per-chain coefficients: c_com[k] sums |w_com^H H_com f_k^com|^2 over
// streams, g_com[k] sums |w_rad^H H_rad f_k^com|^2 over the radar
// combiner columns; c_rad/g_rad analogous with roles swapped.
LinearCoefficients linear_coefficients(const Eigen::MatrixXcd& f_rf_com,
                                       const Eigen::MatrixXcd& f_rf_rad,
                                       const Eigen::MatrixXcd& h_com,
                                       const Eigen::MatrixXcd& h_rad,
                                       const Eigen::MatrixXcd& w_com,
                                       const Eigen::MatrixXcd& w_rad);

// rho*delta_com/(sigma_rad-com + noise_com) + (1-rho)*delta_rad/
// (sigma_com-rad + noise_rad) with epsilon-guarded denominators;
// total on valid input.
double approx_weighted_objective(const LinearCoefficients& coeffs,
                                 const Eigen::VectorXd& s_com,
                                 const Eigen::VectorXd& s_rad,
                                 double rho);

}  // namespace jrcsim

#endif

#include "jrcsim/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace jrcsim {

namespace {

// w^H H F diag(s) F^H H^H w summed over combiner columns.
double selection_quadratic_form(const Eigen::VectorXd& s,
                                const Eigen::MatrixXcd& f_rf,
                                const Eigen::MatrixXcd& h,
                                const Eigen::MatrixXcd& w) {
    if (f_rf.cols() != s.size() || h.cols() != f_rf.rows() || w.rows() != h.rows())
        throw std::invalid_argument("interference: dimension mismatch");
    const Eigen::MatrixXcd coupling = w.adjoint() * h * f_rf;  // streams x n_rf
    double total = 0.0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        total += s(k) * coupling.col(k).squaredNorm();
    return total;
}

// Selection-parameterized per-stream rate, shared by both operations.
double selected_rate(const Eigen::VectorXd& s,
                     const Eigen::MatrixXcd& f_rf,
                     const Eigen::MatrixXcd& f_bb,
                     const Eigen::MatrixXcd& h,
                     const Eigen::MatrixXcd& w,
                     double interference, double noise_floor) {
    if (interference < 0.0 || noise_floor < 0.0)
        throw std::invalid_argument("rate: negative denominator term");
    const double denom = interference + noise_floor;
    if (denom <= 0.0)
        throw std::invalid_argument("rate: zero total denominator");
    if (f_rf.cols() != s.size() || f_bb.rows() != s.size() ||
        h.cols() != f_rf.rows() || w.rows() != h.rows())
        throw std::invalid_argument("rate: dimension mismatch");
    const Eigen::MatrixXcd sel_bb =
        s.asDiagonal().toDenseMatrix().cast<std::complex<double>>() * f_bb;
    double rate = 0.0;
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
        const Eigen::RowVectorXcd row = w.col(k).adjoint() * h * f_rf;
        const double signal = (row * sel_bb).squaredNorm();
        rate += std::log2(1.0 + signal / denom);
    }
    return rate;
}

}  // namespace

double interference_rad_to_com(const Eigen::VectorXd& s_com,
                               const Eigen::MatrixXcd& f_rf_com,
                               const Eigen::MatrixXcd& h_rad,
                               const Eigen::MatrixXcd& w_rad) {
    return selection_quadratic_form(s_com, f_rf_com, h_rad, w_rad);
}

double interference_com_to_rad(const Eigen::VectorXd& s_rad,
                               const Eigen::MatrixXcd& f_rf_rad,
                               const Eigen::MatrixXcd& h_com,
                               const Eigen::MatrixXcd& w_com) {
    return selection_quadratic_form(s_rad, f_rf_rad, h_com, w_com);
}

double comm_rate(const Eigen::VectorXd& s_com, const Eigen::MatrixXcd& f_rf,
                 const Eigen::MatrixXcd& f_bb, const Eigen::MatrixXcd& h_com,
                 const Eigen::MatrixXcd& w_com, double interference,
                 double noise_floor) {
    return selected_rate(s_com, f_rf, f_bb, h_com, w_com, interference, noise_floor);
}

double radar_rate(const Eigen::VectorXd& s_rad, const Eigen::MatrixXcd& f_rf,
                  const Eigen::MatrixXcd& f_bb, const Eigen::MatrixXcd& h_rad,
                  const Eigen::MatrixXcd& w_rad, double interference,
                  double noise_floor) {
    return selected_rate(s_rad, f_rf, f_bb, h_rad, w_rad, interference, noise_floor);
}

double joint_rate(double rho, double r_com, double r_rad) {
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("joint_rate: rho outside [0,1]");
    return rho * r_com + (1.0 - rho) * r_rad;
}

LinearCoefficients linear_coefficients(const Eigen::MatrixXcd& f_rf_com,
                                       const Eigen::MatrixXcd& f_rf_rad,
                                       const Eigen::MatrixXcd& h_com,
                                       const Eigen::MatrixXcd& h_rad,
                                       const Eigen::MatrixXcd& w_com,
                                       const Eigen::MatrixXcd& w_rad) {
    if (h_com.cols() != f_rf_com.rows() || h_rad.cols() != f_rf_rad.rows() ||
        w_com.rows() != h_com.rows() || w_rad.rows() != h_rad.rows())
        throw std::invalid_argument("linear_coefficients: dimension mismatch");
    const Eigen::MatrixXcd com_sig = w_com.adjoint() * h_com * f_rf_com;
    const Eigen::MatrixXcd com_intf = w_rad.adjoint() * h_rad * f_rf_com;
    const Eigen::MatrixXcd rad_sig = w_rad.adjoint() * h_rad * f_rf_rad;
    const Eigen::MatrixXcd rad_intf = w_com.adjoint() * h_com * f_rf_rad;

    LinearCoefficients coeffs;
    const int n_rf = static_cast<int>(f_rf_com.cols());
    coeffs.c_com.resize(n_rf);
    coeffs.g_com.resize(n_rf);
    coeffs.c_rad.resize(n_rf);
    coeffs.g_rad.resize(n_rf);
    for (int k = 0; k < n_rf; ++k) {
        coeffs.c_com(k) = com_sig.col(k).squaredNorm();
        coeffs.g_com(k) = com_intf.col(k).squaredNorm();
        coeffs.c_rad(k) = rad_sig.col(k).squaredNorm();
        coeffs.g_rad(k) = rad_intf.col(k).squaredNorm();
    }
    return coeffs;
}

double approx_weighted_objective(const LinearCoefficients& coeffs,
                                 const Eigen::VectorXd& s_com,
                                 const Eigen::VectorXd& s_rad, double rho) {
    if (rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("approx_weighted_objective: rho outside [0,1]");
    const double delta_com = coeffs.c_com.dot(s_com);
    const double sigma_com = coeffs.g_com.dot(s_com) + coeffs.noise_com;
    const double delta_rad = coeffs.c_rad.dot(s_rad);
    const double sigma_rad = coeffs.g_rad.dot(s_rad) + coeffs.noise_rad;
    return rho * delta_com / std::max(sigma_com, kDenomEpsilon) +
           (1.0 - rho) * delta_rad / std::max(sigma_rad, kDenomEpsilon);
}

}  // namespace jrcsim

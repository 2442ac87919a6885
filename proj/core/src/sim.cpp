#include "jrcsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jrcsim {

const char* baseline_name(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::NoInterference: return "no_interference";
        case BaselineKind::InterferenceBoth: return "interference_both";
        case BaselineKind::InterferenceRadarOnly: return "interference_radar_only";
        case BaselineKind::InterferenceCommsOnly: return "interference_comms_only";
        case BaselineKind::ProposedFlexible: return "proposed";
    }
    throw std::invalid_argument("baseline_name: unknown kind");
}

Realization make_realization(std::mt19937_64& rng, const SystemConfig& cfg) {
    Realization real;
    real.comm = gen_comm_channel(rng, cfg);
    real.radar = gen_radar_scene(rng, cfg);
    real.f_rf = fft_analog_precoder(cfg.n_tx, cfg.n_rf);
    real.f_bb = Eigen::MatrixXcd::Identity(cfg.n_rf, cfg.n_streams());
    const int n_s = cfg.n_streams();
    real.combiners.w_com = svd_combiner(real.comm.matrix).leftCols(n_s);
    real.combiners.w_rad = svd_combiner(real.radar.h_rad).leftCols(n_s);
    return real;
}

namespace {

// Power scale for one operation's effective precoder under selection s.
double power_scale_sq(const Eigen::VectorXd& s, const Eigen::MatrixXcd& f_rf,
                      const Eigen::MatrixXcd& f_bb, double p_max) {
    const Eigen::MatrixXcd eff =
        f_rf * s.asDiagonal().toDenseMatrix().cast<std::complex<double>>() * f_bb;
    const double tr = eff.squaredNorm();
    return tr > 0.0 ? p_max / tr : 0.0;
}

}  // namespace

RateReport eval_baseline(BaselineKind kind, const Realization& real,
                         const SystemConfig& cfg, std::optional<int> rf_cap,
                         double* active_rf) {
    cfg.validate();
    if (rf_cap && (*rf_cap < 1 || *rf_cap > cfg.n_rf))
        throw std::invalid_argument("eval_baseline: rf_cap outside [1, n_rf]");

    // The power budget is set by the reference design with all rf_cap
    // chains driven; deactivating a chain sheds its share of the budget
    // instead of recycling it onto the survivors.
    Eigen::VectorXd s_ref = Eigen::VectorXd::Zero(cfg.n_rf);
    s_ref.head(rf_cap.value_or(cfg.n_rf)).setOnes();
    const double scale_com_sq =
        power_scale_sq(s_ref, real.f_rf, real.f_bb, cfg.p_max_com);
    const double scale_rad_sq =
        power_scale_sq(s_ref, real.f_rf, real.f_bb, cfg.p_max_rad);
    const double noise = cfg.noise_floor();

    Eigen::VectorXd s_com;
    Eigen::VectorXd s_rad;
    bool com_interfered = false;  // sigma^2_rad-com enters the comm denominator
    bool rad_interfered = false;  // sigma^2_com-rad enters the radar denominator
    if (kind == BaselineKind::ProposedFlexible) {
        auto coeffs =
            linear_coefficients(real.f_rf, real.f_rf, real.comm.matrix,
                                real.radar.h_rad, real.combiners.w_com,
                                real.combiners.w_rad);
        // Coefficients live in the unscaled precoder domain; refer the
        // receiver noise to the same domain so the selection ratio matches
        // the exact rate denominator.
        coeffs.noise_com = scale_com_sq > 0.0 ? noise / scale_com_sq : 0.0;
        coeffs.noise_rad = scale_rad_sq > 0.0 ? noise / scale_rad_sq : 0.0;
        // A chain cap models hardware with rf_cap physical chains, so the
        // selection chooses among the same chains the baselines drive.
        for (int k = rf_cap.value_or(cfg.n_rf); k < cfg.n_rf; ++k) {
            coeffs.c_com(k) = coeffs.g_com(k) = 0.0;
            coeffs.c_rad(k) = coeffs.g_rad(k) = 0.0;
        }
        DinkelbachOptions opts;
        opts.max_active = rf_cap;
        const auto sel = dinkelbach_select(coeffs, cfg.rho, opts);
        s_com = sel.s_com;
        s_rad = sel.s_rad;
        for (int k = rf_cap.value_or(cfg.n_rf); k < cfg.n_rf; ++k) {
            s_com(k) = 0.0;
            s_rad(k) = 0.0;
        }
        com_interfered = true;
        rad_interfered = true;
    } else {
        s_com = s_ref;
        s_rad = s_ref;
        com_interfered = kind == BaselineKind::InterferenceBoth ||
                         kind == BaselineKind::InterferenceCommsOnly;
        rad_interfered = kind == BaselineKind::InterferenceBoth ||
                         kind == BaselineKind::InterferenceRadarOnly;
    }

    RateReport report;
    if (com_interfered)
        report.sigma2_rad_com =
            scale_com_sq * interference_rad_to_com(s_com, real.f_rf,
                                                   real.radar.h_rad,
                                                   real.combiners.w_rad);
    if (rad_interfered)
        report.sigma2_com_rad =
            scale_rad_sq * interference_com_to_rad(s_rad, real.f_rf,
                                                   real.comm.matrix,
                                                   real.combiners.w_com);

    const Eigen::MatrixXcd f_bb_com = std::sqrt(scale_com_sq) * real.f_bb;
    const Eigen::MatrixXcd f_bb_rad = std::sqrt(scale_rad_sq) * real.f_bb;
    report.r_com = comm_rate(s_com, real.f_rf, f_bb_com, real.comm.matrix,
                             real.combiners.w_com, report.sigma2_rad_com, noise);
    report.r_rad = radar_rate(s_rad, real.f_rf, f_bb_rad, real.radar.h_rad,
                              real.combiners.w_rad, report.sigma2_com_rad, noise);
    report.r_joint = joint_rate(cfg.rho, report.r_com, report.r_rad);
    if (active_rf) *active_rf = 0.5 * (s_com.sum() + s_rad.sum());
    return report;
}

namespace {

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    double active = 0.0;
    long n = 0;

    void add(double rate, double active_rf) {
        sum += rate;
        sum_sq += rate * rate;
        active += active_rf;
        ++n;
    }
    double mean() const { return sum / n; }
    double stddev() const {
        const double m = mean();
        return std::sqrt(std::max(sum_sq / n - m * m, 0.0));
    }
};

std::vector<SweepRow> run_sweep(const SystemConfig& base_cfg,
                                const std::vector<double>& sweep_values,
                                const std::vector<BaselineKind>& kinds,
                                bool sweep_is_rf_cap, double rho, long trials,
                                std::uint64_t seed) {
    if (sweep_values.empty())
        throw std::invalid_argument("run_sweep: empty grid");
    if (trials < 1)
        throw std::invalid_argument("run_sweep: trials must be >= 1");
    SystemConfig cfg = base_cfg;
    cfg.rho = rho;
    cfg.validate();

    std::vector<SweepRow> rows;
    for (double value : sweep_values) {
        std::optional<int> rf_cap;
        if (sweep_is_rf_cap) {
            const int cap = static_cast<int>(value);
            if (cap < 1 || cap > cfg.n_rf)
                throw std::invalid_argument("run_rf_sweep: cap outside [1, n_rf]");
            rf_cap = cap;
        } else {
            cfg.snr_db = value;
        }
        std::vector<Accumulator> acc(kinds.size());
        for (long t = 0; t < trials; ++t) {
            auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
            const Realization real = make_realization(rng, cfg);
            for (std::size_t b = 0; b < kinds.size(); ++b) {
                double active_rf = 0.0;
                const RateReport rep =
                    eval_baseline(kinds[b], real, cfg, rf_cap, &active_rf);
                acc[b].add(rep.r_joint, active_rf);
            }
        }
        for (std::size_t b = 0; b < kinds.size(); ++b) {
            SweepRow row;
            row.sweep_value = value;
            row.baseline = kinds[b];
            row.rho = rho;
            row.mean_rate = acc[b].mean();
            row.std_rate = acc[b].stddev();
            row.trials = trials;
            row.mean_active_rf = acc[b].active / trials;
            rows.push_back(row);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
        return static_cast<int>(a.baseline) < static_cast<int>(b.baseline);
    });
    return rows;
}

}  // namespace

std::vector<SweepRow> run_snr_sweep(const SystemConfig& cfg,
                                    const std::vector<double>& snr_grid,
                                    double rho, long trials,
                                    std::uint64_t seed) {
    static const std::vector<BaselineKind> kinds = {
        BaselineKind::NoInterference, BaselineKind::InterferenceBoth,
        BaselineKind::InterferenceRadarOnly, BaselineKind::InterferenceCommsOnly,
        BaselineKind::ProposedFlexible};
    return run_sweep(cfg, snr_grid, kinds, false, rho, trials, seed);
}

std::vector<SweepRow> run_rf_sweep(const SystemConfig& cfg,
                                   const std::vector<int>& rf_grid, double rho,
                                   long trials, std::uint64_t seed) {
    static const std::vector<BaselineKind> kinds = {
        BaselineKind::NoInterference, BaselineKind::InterferenceBoth,
        BaselineKind::ProposedFlexible};
    std::vector<double> values(rf_grid.begin(), rf_grid.end());
    return run_sweep(cfg, values, kinds, true, rho, trials, seed);
}

}  // namespace jrcsim

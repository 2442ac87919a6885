#ifndef JRCSIM_SIM_HPP
#define JRCSIM_SIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jrcsim/model.hpp"
#include "jrcsim/rates.hpp"
#include "jrcsim/selection.hpp"

namespace jrcsim {

enum class BaselineKind {
    NoInterference,          // (i)   both interference terms zeroed
    InterferenceBoth,        // (ii)  both terms active
    InterferenceRadarOnly,   // (iii) communication interferes with radar
    InterferenceCommsOnly,   // (iv)  radar interferes with communication
    ProposedFlexible,        // Dinkelbach RF-chain selection, both terms active
};

const char* baseline_name(BaselineKind kind);

/// One aggregated point of a sweep.
struct SweepRow {
    double sweep_value = 0.0;  // SNR in dB or RF-chain cap
    BaselineKind baseline = BaselineKind::NoInterference;
    double rho = 0.0;
    double mean_rate = 0.0;
    double std_rate = 0.0;
    long trials = 0;
    double mean_active_rf = 0.0;
};

/// Everything drawn or derived for one Monte-Carlo trial: channels,
/// the shared FFT analog precoder, identity baseband, SVD combiners.
struct Realization {
    CommChannel comm;
    RadarScene radar;
    Eigen::MatrixXcd f_rf;  // n_tx x n_rf
    Eigen::MatrixXcd f_bb;  // n_rf x n_streams
    Combiners combiners;
};

Realization make_realization(std::mt19937_64& rng, const SystemConfig& cfg);

// Evaluates one baseline on a realization. Fixed baselines activate the
// first rf_cap chains (all of them when unset); the proposed scheme runs
// dinkelbach_select with max_active = rf_cap. Each operation's effective
// precoder is scaled to its power budget. active_rf, when given, receives
// the mean active-chain count over the two operations.
RateReport eval_baseline(BaselineKind kind, const Realization& real,
                         const SystemConfig& cfg,
                         std::optional<int> rf_cap = {},
                         double* active_rf = nullptr);

// Joint rate vs SNR for all five baseline kinds, averaged over trials
// with per-trial derived RNG substreams. Rows sorted by
// (sweep_value, baseline).
std::vector<SweepRow> run_snr_sweep(const SystemConfig& cfg,
                                    const std::vector<double>& snr_grid,
                                    double rho, long trials,
                                    std::uint64_t seed);

// Joint rate vs RF-chain cap for the proposed scheme and the
// no-interference / both-interference references.
std::vector<SweepRow> run_rf_sweep(const SystemConfig& cfg,
                                   const std::vector<int>& rf_grid,
                                   double rho, long trials,
                                   std::uint64_t seed);

}  // namespace jrcsim

#endif

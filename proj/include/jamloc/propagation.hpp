#pragma once

#include <random>

#include "jamloc/errors.hpp"

namespace jamloc {

// Log-normal shadowing radio model: deterministic path loss plus a zero-mean
// Gaussian shadowing term (in dB).
struct RadioParams {
    double jammer_power_dbm = 0.0;
    double antenna_constant_db = 0.0;
    double path_loss_exponent = 2.0;   // 2 in free space
    double shadowing_sigma_db = 0.0;
    double node_comm_range_m = 10.0;
};

struct PowerSample {
    double deterministic_dbm = 0.0;
    double shadowing_db = 0.0;
    double received_dbm = 0.0;  // deterministic_dbm + shadowing_db, exactly
};

// The model is singular at zero distance; anything closer is rejected.
inline constexpr double kMinModelDistanceM = 0.01;

// jammer_power + antenna_constant - 10 * exponent * log10(d).
double path_loss_power(const RadioParams& radio, double distance_m);

// Path-loss power plus a shadowing draw from the supplied stream. With
// sigma = 0 no draw is consumed and the sample is fully deterministic.
PowerSample received_power(const RadioParams& radio, double distance_m, std::mt19937_64& rng);

}  // namespace jamloc

#include "jamloc/propagation.hpp"

#include <cmath>

#include "jamloc/random.hpp"

namespace jamloc {

double path_loss_power(const RadioParams& radio, double distance_m) {
    if (!(distance_m >= kMinModelDistanceM)) throw NonPositiveDistance(distance_m);
    return radio.jammer_power_dbm + radio.antenna_constant_db -
           10.0 * radio.path_loss_exponent * std::log10(distance_m);
}

PowerSample received_power(const RadioParams& radio, double distance_m, std::mt19937_64& rng) {
    const double deterministic = path_loss_power(radio, distance_m);
    const double shadowing =
        radio.shadowing_sigma_db > 0.0 ? radio.shadowing_sigma_db * standard_normal(rng) : 0.0;
    return {deterministic, shadowing, deterministic + shadowing};
}

}  // namespace jamloc

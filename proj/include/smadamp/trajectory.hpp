#pragma once

#include <vector>

#include "smadamp/energy.hpp"
#include "smadamp/rod_model.hpp"

namespace smadamp {

struct Sample {
    double time = 0.0;
    RodState state;
    EnergyReport energy;
};

struct Trajectory {
    std::vector<Sample> samples;
    std::vector<int> newton_iterations;  ///< one entry per accepted time step
    int retries = 0;                     ///< steps that needed the dt/2 fallback
};

}  // namespace smadamp

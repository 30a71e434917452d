#pragma once

#include <stdexcept>
#include <string>

namespace bbmfront {

// Error classes map to distinct process exit codes (see cli): usage-class
// errors exit 2, capacity 3, budget 4, io 5.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed time grid (wrong start, non-increasing, non-finite).
struct grid_error : error {
    explicit grid_error(const std::string& msg) : error(msg) {}
};

// Out-of-contract argument (epsilon outside (0,1), negative s, ...).
struct parameter_error : error {
    explicit parameter_error(const std::string& msg) : error(msg) {}
};

// Inconsistent configuration (missing table in tilted mode, horizon too
// short for the requested truncation, ...).
struct config_error : error {
    explicit config_error(const std::string& msg) : error(msg) {}
};

// Particle population would exceed the hard cap.
struct capacity_error : error {
    capacity_error(const std::string& msg, double violating_time)
        : error(msg), time(violating_time) {}
    double time;
};

// Rejection-sampling budget exhausted.
struct budget_error : error {
    budget_error(const std::string& msg, double empirical_acceptance)
        : error(msg), acceptance_rate(empirical_acceptance) {}
    double acceptance_rate;
};

struct io_error : error {
    explicit io_error(const std::string& msg) : error(msg) {}
};

}  // namespace bbmfront

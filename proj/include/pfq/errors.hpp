#pragma once

#include <stdexcept>
#include <string>

namespace pfq {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Gamma pole, zero denominator inside a summed range, and friends.
struct pole_error : error {
    explicit pole_error(const std::string& msg) : error(msg) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A series truncation whose tail estimate still exceeds the target at n_max.
struct unconverged_error : error {
    explicit unconverged_error(const std::string& msg) : error(msg) {}
};

} // namespace pfq

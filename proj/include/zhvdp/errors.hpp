#pragma once

#include <stdexcept>
#include <string>

namespace zhvdp {

// Exit-code mapping used by the CLI: config 2, hypothesis/degeneracy 3, numerical 4.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zhvdp

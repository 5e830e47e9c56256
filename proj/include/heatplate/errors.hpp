#ifndef HEATPLATE_ERRORS_HPP
#define HEATPLATE_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace heatplate {

/// Raised when a temperature or rate becomes non-finite (or a temperature
/// negative). Carries the flat index of the first offending cell and, when
/// known, the time step at which it happened.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t cell, std::optional<std::size_t> step = std::nullopt)
        : std::runtime_error(describe(cell, step)), cell_(cell), step_(step) {}

    std::size_t cell() const { return cell_; }
    std::optional<std::size_t> step() const { return step_; }

private:
    static std::string describe(std::size_t cell, std::optional<std::size_t> step) {
        std::string s = "divergence at cell " + std::to_string(cell);
        if (step) s += ", step " + std::to_string(*step);
        return s;
    }

    std::size_t cell_;
    std::optional<std::size_t> step_;
};

/// Configuration problems. what() names the offending field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace heatplate

#endif

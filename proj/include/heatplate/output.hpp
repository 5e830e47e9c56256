#ifndef HEATPLATE_OUTPUT_HPP
#define HEATPLATE_OUTPUT_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heatplate/grid.hpp"
#include "heatplate/scenario.hpp"

namespace heatplate {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

/// "x1,x2,theta" header plus one row per cell in flat-index order, at
/// cell centres. LF line endings.
std::string write_field_csv(std::span<const double> field, const Grid& grid);

/// Rows of a field CSV as {x1, x2, theta}. Throws std::runtime_error on
/// malformed input.
std::vector<std::array<double, 3>> parse_field_csv(std::string_view text);

/// "t,u_0..,y_0..,u_avg,y_avg", one row per logged instant.
std::string write_signals_csv(const SignalLog& log);

/// Binary PGM (P5, maxval 255), J columns × K rows with the topside row
/// first. pixel = round(255·clamp((θ − lo)/(hi − lo), 0, 1)). Without an
/// explicit range the field's min/max is used, and a flat field renders
/// as uniform 128.
std::vector<std::uint8_t> render_heatmap(std::span<const double> field, const Grid& grid,
                                         std::optional<double> theta_lo = std::nullopt,
                                         std::optional<double> theta_hi = std::nullopt);

/// Writes bytes to `path`; throws std::runtime_error naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> contents);

}  // namespace heatplate

#endif

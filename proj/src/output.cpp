#include "heatplate/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace heatplate {

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string write_field_csv(std::span<const double> field, const Grid& grid) {
    std::string out = "x1,x2,theta\n";
    out.reserve(out.size() + field.size() * 40);
    for (std::size_t c = 0; c < field.size(); ++c) {
        const auto [x1, x2] = grid.cell_center(grid.cell_index(c));
        out += format_number(x1);
        out += ',';
        out += format_number(x2);
        out += ',';
        out += format_number(field[c]);
        out += '\n';
    }
    return out;
}

std::vector<std::array<double, 3>> parse_field_csv(std::string_view text) {
    std::vector<std::array<double, 3>> rows;
    std::size_t pos = text.find('\n');
    if (pos == std::string_view::npos || text.substr(0, pos) != "x1,x2,theta")
        throw std::runtime_error("field csv: missing header");
    ++pos;
    std::size_t line = 2;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view row = text.substr(pos, end - pos);
        std::array<double, 3> values{};
        const char* p = row.data();
        const char* last = row.data() + row.size();
        for (std::size_t i = 0; i < 3; ++i) {
            const auto res = std::from_chars(p, last, values[i]);
            if (res.ec != std::errc{})
                throw std::runtime_error("field csv: bad number on line " + std::to_string(line));
            p = res.ptr;
            if (i < 2) {
                if (p == last || *p != ',')
                    throw std::runtime_error("field csv: expected ',' on line " +
                                             std::to_string(line));
                ++p;
            }
        }
        if (p != last)
            throw std::runtime_error("field csv: trailing data on line " + std::to_string(line));
        rows.push_back(values);
        pos = end + 1;
        ++line;
    }
    return rows;
}

std::string write_signals_csv(const SignalLog& log) {
    const std::size_t nu = log.u.empty() ? 0 : log.u.front().size();
    const std::size_t ny = log.y.empty() ? 0 : log.y.front().size();
    std::string out = "t";
    for (std::size_t n = 0; n < nu; ++n) out += ",u_" + std::to_string(n);
    for (std::size_t n = 0; n < ny; ++n) out += ",y_" + std::to_string(n);
    out += ",u_avg,y_avg\n";

    const auto avg = averaged_signals(log);
    for (std::size_t i = 0; i < log.times.size(); ++i) {
        out += format_number(log.times[i]);
        for (double v : log.u[i]) out += ',' + format_number(v);
        for (double v : log.y[i]) out += ',' + format_number(v);
        out += ',' + format_number(avg.u_avg[i]);
        out += ',' + format_number(avg.y_avg[i]);
        out += '\n';
    }
    return out;
}

std::vector<std::uint8_t> render_heatmap(std::span<const double> field, const Grid& grid,
                                         std::optional<double> theta_lo,
                                         std::optional<double> theta_hi) {
    double lo = 0.0;
    double hi = 0.0;
    if (theta_lo && theta_hi) {
        lo = *theta_lo;
        hi = *theta_hi;
        if (!(lo < hi)) throw std::invalid_argument("render_heatmap: theta_lo must be < theta_hi");
    } else {
        const auto [mn, mx] = std::minmax_element(field.begin(), field.end());
        lo = theta_lo.value_or(*mn);
        hi = theta_hi.value_or(*mx);
    }

    const std::string header =
        "P5\n" + std::to_string(grid.J()) + " " + std::to_string(grid.K()) + "\n255\n";
    std::vector<std::uint8_t> image(header.begin(), header.end());
    image.reserve(header.size() + grid.size());
    for (std::size_t row = 0; row < grid.K(); ++row) {
        const std::size_t k = grid.K() - 1 - row;
        for (std::size_t j = 0; j < grid.J(); ++j) {
            const double theta = field[grid.flat_index({j, k})];
            std::uint8_t pixel = 128;
            if (lo < hi) {
                const double s = std::clamp((theta - lo) / (hi - lo), 0.0, 1.0);
                pixel = static_cast<std::uint8_t>(std::lround(255.0 * s));
            }
            image.push_back(pixel);
        }
    }
    return image;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> contents) {
    write_file(path, std::string_view(reinterpret_cast<const char*>(contents.data()),
                                      contents.size()));
}

}  // namespace heatplate

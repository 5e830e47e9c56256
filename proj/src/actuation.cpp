#include "heatplate/actuation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatplate {

namespace {

// Checks that partitions lie in [0, L], are pairwise disjoint and tile the
// whole boundary line. `what` prefixes error messages.
void validate_layout(const std::vector<BoundaryDevice>& devices, double length,
                     const std::string& what) {
    if (devices.empty()) throw std::invalid_argument(what + ".count: must be >= 1");
    const double tol = 1e-12 * length;
    std::vector<BoundaryPartition> sorted;
    for (std::size_t n = 0; n < devices.size(); ++n) {
        const auto& p = devices[n].partition;
        if (!(p.lo >= -tol && p.hi <= length + tol && p.lo < p.hi))
            throw std::invalid_argument(what + "[" + std::to_string(n) +
                                        "]: partition must satisfy 0 <= lo < hi <= L");
        validate(devices[n].shape);
        sorted.push_back(p);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.lo < b.lo; });
    for (std::size_t n = 1; n < sorted.size(); ++n) {
        if (sorted[n].lo < sorted[n - 1].hi - tol)
            throw std::invalid_argument(what + ": partitions overlap");
        if (sorted[n].lo > sorted[n - 1].hi + tol)
            throw std::invalid_argument(what + ": partitions leave a gap on the boundary");
    }
    if (sorted.front().lo > tol || sorted.back().hi < length - tol)
        throw std::invalid_argument(what + ": partitions must cover the whole boundary");
}

std::vector<double> weight_table(const Grid& grid, const std::vector<BoundaryDevice>& devices,
                                 const std::string& what) {
    const std::size_t J = grid.J();
    std::vector<double> table(devices.size() * J, 0.0);
    for (std::size_t n = 0; n < devices.size(); ++n) {
        std::size_t owned = 0;
        for (std::size_t j = 0; j < J; ++j) {
            const double x = grid.center_x1(j);
            if (devices[n].partition.contains(x)) ++owned;
            table[n * J + j] = characterization_value(devices[n].shape, devices[n].partition, x);
        }
        if (owned == 0)
            throw std::invalid_argument(what + "[" + std::to_string(n) +
                                        "]: partition contains no cell centre");
    }
    return table;
}

}  // namespace

void validate(const Characterization& ch) {
    if (!(ch.m >= 0.0 && ch.m <= 1.0))
        throw std::invalid_argument("characterization.m: must lie in [0, 1]");
    if (!(ch.M >= 0.0) || !std::isfinite(ch.M))
        throw std::invalid_argument("characterization.M: must be >= 0");
    if (!(ch.nu >= 0.0) || !std::isfinite(ch.nu))
        throw std::invalid_argument("characterization.nu: must be >= 0");
    if (ch.nu == 0.0 && ch.M == 0.0)
        throw std::invalid_argument("characterization: nu = 0 with M = 0 is ambiguous (0^0)");
    if (!std::isfinite(ch.x_center))
        throw std::invalid_argument("characterization.x_center: must be finite");
}

double characterization_value(const Characterization& ch, const BoundaryPartition& part,
                              double x) {
    if (!part.contains(x)) return 0.0;
    const double r = std::abs(ch.M * (x - ch.x_center));
    return ch.m * std::exp(-std::pow(r, ch.nu));
}

std::vector<BoundaryPartition> uniform_partitions(double length, std::size_t count) {
    if (count < 1) throw std::invalid_argument("partition count must be >= 1");
    std::vector<BoundaryPartition> parts;
    parts.reserve(count);
    const double n_total = static_cast<double>(count);
    for (std::size_t n = 0; n < count; ++n) {
        // share the edge expression so neighbours meet exactly
        const double lo = static_cast<double>(n) * length / n_total;
        const double hi = static_cast<double>(n + 1) * length / n_total;
        parts.push_back({lo, hi});
    }
    return parts;
}

std::vector<BoundaryDevice> uniform_devices(double length, std::size_t count, double m, double M,
                                            double nu) {
    std::vector<BoundaryDevice> devices;
    for (const auto& p : uniform_partitions(length, count)) {
        const double center = (static_cast<double>(devices.size()) + 0.5) * length /
                              static_cast<double>(count);
        devices.push_back({p, {m, M, nu, center}});
    }
    return devices;
}

ActuatorBank::ActuatorBank(const Grid& grid, std::vector<BoundaryDevice> devices)
    : devices_(std::move(devices)), cells_(grid.J()) {
    validate_layout(devices_, grid.geometry().length, "actuators");
    table_ = weight_table(grid, devices_, "actuators");
}

SensorBank::SensorBank(const Grid& grid, std::vector<BoundaryDevice> devices)
    : devices_(std::move(devices)), cells_(grid.J()), dx1_(grid.dx1()) {
    validate_layout(devices_, grid.geometry().length, "sensors");
    table_ = weight_table(grid, devices_, "sensors");
    normalizers_.resize(devices_.size());
    for (std::size_t n = 0; n < devices_.size(); ++n) {
        double mass = 0.0;
        for (double w : weights(n)) mass += w * dx1_;
        if (!(mass > 0.0))
            throw std::invalid_argument("sensors[" + std::to_string(n) +
                                        "]: characterization has zero quadrature mass");
        normalizers_[n] = mass;
    }
}

std::vector<double> induced_flux(const ActuatorBank& bank, std::span<const double> u) {
    if (u.size() != bank.count())
        throw std::invalid_argument("induced_flux: input vector has " + std::to_string(u.size()) +
                                    " entries, bank has " + std::to_string(bank.count()));
    std::vector<double> phi(bank.cells(), 0.0);
    for (std::size_t n = 0; n < bank.count(); ++n) {
        const auto w = bank.weights(n);
        for (std::size_t j = 0; j < phi.size(); ++j) phi[j] += w[j] * u[n];
    }
    return phi;
}

std::vector<double> measure(const SensorBank& bank, std::span<const double> field,
                            const Grid& grid) {
    assert(field.size() == grid.size());
    assert(bank.cells() == grid.J());
    const auto top = field.subspan((grid.K() - 1) * grid.J(), grid.J());
    std::vector<double> y(bank.count());
    for (std::size_t n = 0; n < bank.count(); ++n) {
        const auto w = bank.weights(n);
        double acc = 0.0;
        for (std::size_t j = 0; j < top.size(); ++j) acc += w[j] * top[j] * grid.dx1();
        y[n] = acc / bank.normalizer(n);
    }
    return y;
}

}  // namespace heatplate

#ifndef HEATPLATE_ACTUATION_HPP
#define HEATPLATE_ACTUATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "heatplate/grid.hpp"

namespace heatplate {

/// Spatial characterization m·exp(−|M (x − x_c)|^ν) of one actuator or
/// sensor along its boundary line. m = 1, M = 0 is the indicator function
/// of the partition.
struct Characterization {
    double m = 1.0;
    double M = 0.0;
    double nu = 4.0;
    double x_center = 0.0;

    bool operator==(const Characterization&) const = default;
};

/// Half-open interval [lo, hi) along the boundary coordinate x₁.
struct BoundaryPartition {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x < hi; }
    bool operator==(const BoundaryPartition&) const = default;
};

struct BoundaryDevice {
    BoundaryPartition partition;
    Characterization shape;

    bool operator==(const BoundaryDevice&) const = default;
};

/// Throws std::invalid_argument on m ∉ [0,1], M < 0, ν < 0, or ν = 0 with M = 0.
void validate(const Characterization& ch);

/// Weight of a device at boundary coordinate x; zero outside its partition.
double characterization_value(const Characterization& ch, const BoundaryPartition& part, double x);

/// [n·L/N, (n+1)·L/N) for n = 0..N−1.
std::vector<BoundaryPartition> uniform_partitions(double length, std::size_t count);

/// Uniform partitions with one shared shape; each device's centre is the
/// midpoint of its partition.
std::vector<BoundaryDevice> uniform_devices(double length, std::size_t count, double m, double M,
                                            double nu);

/// Heating elements on the underside. The weight table holds b_n at the
/// underside cell centres, N_u rows of J entries.
class ActuatorBank {
public:
    ActuatorBank(const Grid& grid, std::vector<BoundaryDevice> devices);

    std::size_t count() const { return devices_.size(); }
    std::size_t cells() const { return cells_; }
    const std::vector<BoundaryDevice>& devices() const { return devices_; }
    std::span<const double> weights(std::size_t n) const {
        return {table_.data() + n * cells_, cells_};
    }

private:
    std::vector<BoundaryDevice> devices_;
    std::size_t cells_;
    std::vector<double> table_;
};

/// Temperature sensors on the topside. Measurements are weighted averages
/// of the topside row using midpoint quadrature at cell centres.
class SensorBank {
public:
    SensorBank(const Grid& grid, std::vector<BoundaryDevice> devices);

    std::size_t count() const { return devices_.size(); }
    std::size_t cells() const { return cells_; }
    const std::vector<BoundaryDevice>& devices() const { return devices_; }
    std::span<const double> weights(std::size_t n) const {
        return {table_.data() + n * cells_, cells_};
    }
    /// W_n = Σ_j g_n(x_j)·dx1, strictly positive.
    double normalizer(std::size_t n) const { return normalizers_[n]; }

private:
    std::vector<BoundaryDevice> devices_;
    std::size_t cells_;
    double dx1_;
    std::vector<double> table_;
    std::vector<double> normalizers_;
};

inline ActuatorBank build_actuator_bank(const Grid& grid, std::vector<BoundaryDevice> devices) {
    return ActuatorBank(grid, std::move(devices));
}
inline SensorBank build_sensor_bank(const Grid& grid, std::vector<BoundaryDevice> devices) {
    return SensorBank(grid, std::move(devices));
}

/// φ_in at the J underside cells: Σ_n b_n(x_j) u_n. Throws
/// std::invalid_argument if u.size() != bank.count().
std::vector<double> induced_flux(const ActuatorBank& bank, std::span<const double> u);

/// Sensor outputs y_n for a full J·K field.
std::vector<double> measure(const SensorBank& bank, std::span<const double> field,
                            const Grid& grid);

}  // namespace heatplate

#endif

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfd/geometry.hpp"
#include "nfd/metrics.hpp"
#include "nfd/tensor.hpp"

namespace nfd {

/// Physics and sampling constants for one reservoir realization. The solver
/// is a deliberately simplified proxy: single-phase slightly-compressible
/// pressure diffusion with well sources, plus a travel-time-ordered
/// volume-filling saturation front. It is conservation-checkable, not a
/// multiphase simulator.
struct SimConfig {
    double porosity = 0.2;
    double mean_ln_mD = 1.2;   // mean of the ln-permeability field
    double lnk_std = 0.35;
    double corr_len = 3.0;     // correlation length in level-0 cells
    double viscosity = 1.0;
    double compressibility = 4.0;
    std::array<double, 3> spacing{1.0, 1.0, 0.5};  // level-0 cell size (toy units)
    double dip_deg = 0.0;
    double depth_top = 1500.0;  // m; temperature and initial pressure derive from depth

    double temp_surface = 15.0;     // deg C at zero depth
    double geo_gradient = 0.03;     // deg C per m
    double meters_per_unit = 100.0; // physical depth per spacing unit
    double p0_base = 0.3;           // absolute initial pressure offset (toy units)
    double p0_per_km = 0.08;        // slope vs depth in km
    double rho_ref = 6.0;           // injected-fluid density scale (MT per unit^3)
    double rho_temp_coeff = 0.004;  // relative density drop per deg C above 40
    double sat_max = 0.7;
    double buoyancy = 0.35;         // up-dip travel preference
    double source_gain = 8.0;       // pressure source scaling
    i64 max_substeps = 400000;

    std::vector<WellSpec> wells;
    TimeGrid times = TimeGrid::standard24();
    Geometry geometry;
    i64 fine_xy = 2, fine_z = 2;  // fine-grid refinement of level 0
    i64 max_level = 0;            // deepest level to extract
    std::uint64_t seed = 0;       // permeability realization

    void validate() const;  // ConfigError naming the field
};

/// Log-normal permeability via Gaussian-filtered white noise in spectral
/// space; the ln-field is standardized to the requested mean/std exactly.
/// Returns exp(ln k) on `grid`; corr_len is in cells of that grid.
Tensor gen_permeability(std::uint64_t seed, const std::array<i64, 3>& grid, double mean_ln,
                        double stddev, double corr_len);

struct SimOutput {
    Tensor dp;    // [T, fine grid] pressure buildup, >= 0
    Tensor sat;   // [T, fine grid] gas saturation in [0, 1]
    Tensor p0;    // [fine grid] absolute initial pressure
    Tensor lnk;   // [fine grid]
    Tensor temp;  // [fine grid]
    double injected_volume(double t_years) const { return inj_rate_total * t_years; }
    double inj_rate_total = 0.0;  // gas volume per year
};

/// Explicit CFL-limited diffusion for buildup; SolverError (naming the
/// violated bound) when the substep budget does not cover the horizon.
SimOutput simulate(const SimConfig& cfg);

/// Per-level base input channels: [ln k, temperature, initial pressure,
/// injection rate mask], normalized, at that level's grid.
inline constexpr i64 kBaseChannels = 4;

struct LevelData {
    Tensor inputs;  // [4, grid...]
    Tensor p0;      // [grid...] absolute initial pressure
    Tensor dp;      // [T, grid...]
    Tensor sat;     // [T, grid...]
};

struct ReservoirSample {
    i64 id = 0;
    std::vector<WellSpec> wells;
    double mean_lnk = 0.0;
    double max_rate = 0.0;
    double dip_deg = 0.0;
    double depth_top = 0.0;
    TimeGrid times;
    Geometry geometry;
    i64 max_level = 0;
    LevelData level0;
    std::vector<std::vector<LevelData>> local;  // [well][level-1 .. max_level-1]

    i64 n_wells() const { return static_cast<i64>(wells.size()); }
};

/// Dataset generation parameters (JSON-configurable via the CLI).
struct GenConfig {
    SimConfig sim;  // geometry, physics, time grid; wells are drawn per sample
    i64 n_samples = 8;
    std::array<i64, 2> wells_range{1, 4};
    std::array<double, 2> rate_range{0.5, 2.0};
    std::array<double, 2> mean_lnk_range{0.8, 1.6};
    std::array<double, 2> depth_top_range{800.0, 4500.0};
    std::array<double, 2> dip_range{0.0, 2.0};
    int threads = 1;

    void validate() const;
};

/// Fully deterministic in (cfg, seed, id).
ReservoirSample make_sample(const GenConfig& cfg, i64 id, std::uint64_t seed);

std::vector<ReservoirSample> generate_dataset(const GenConfig& cfg, std::uint64_t seed);

// "NGCS1" container: magic, u32 version, u32 sample count, then per sample a
// length-prefixed JSON metadata blob and named tensors.
void write_dataset(const std::string& path, const std::vector<ReservoirSample>& samples);
std::vector<ReservoirSample> read_dataset(const std::string& path);

// Input-channel normalizers (fixed schema shared by generation and assembly).
double norm_lnk(double lnk);
double norm_temp(double t);
double norm_p0(double p);
double norm_rate(double r);

}  // namespace nfd

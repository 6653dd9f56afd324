#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nfd/tensor.hpp"

namespace nfd {

/// Snapshot times in years, strictly increasing and positive.
struct TimeGrid {
    std::vector<double> years;

    i64 n() const { return static_cast<i64>(years.size()); }

    /// Trunk coordinates: t / horizon, in (0, 1].
    std::vector<double> normalized(double horizon = 30.0) const;

    Tensor normalized_tensor(double horizon = 30.0) const;

    /// The 24 snapshots spanning 10 days to 30 years with exponentially
    /// growing spacing.
    static TimeGrid standard24();

    void validate() const;  // ConfigError on violations
};

/// Mean absolute pressure error normalized by the per-time maximum pressure:
/// (1 / (n_T * n_cells)) * sum_t sum_i |pred - truth| / p_max[t].
/// pred/truth are [T, ...]; p_max_per_t is [T] and must be positive.
double delta_p(const Tensor& pred, const Tensor& truth, const Tensor& p_max_per_t);

/// Plume-masked mean absolute saturation error:
/// sum I|S - S_hat| / sum I with I = (truth > 0.01) || (|pred| > 0.01).
/// Returns nullopt when no cell is in the plume on either side.
std::optional<double> delta_s(const Tensor& pred, const Tensor& truth);

/// Per-time maximum over the full field; input [T, ...] of absolute pressure.
Tensor p_max_per_time(const Tensor& absolute_pressure);

/// One level of a composited multi-resolution domain: cells whose finest
/// covering level is this one are flagged in own_mask (per spatial cell).
struct LevelFieldPair {
    Tensor pred;   // [T, ...]
    Tensor truth;  // [T, ...]
    std::vector<std::uint8_t> own_mask;
};

/// Totals over the de-duplicated composite domain; every cell counted once
/// at its finest covering level, uniformly weighted.
double total_delta_p(const std::vector<LevelFieldPair>& levels, const Tensor& p_max_per_t);
std::optional<double> total_delta_s(const std::vector<LevelFieldPair>& levels);

struct MetricRow {
    std::string field;   // "pressure" | "saturation"
    std::string level;   // "0".."4" | "total"
    std::string metric;  // "delta_p" | "delta_s"
    std::optional<double> value;  // nullopt = undefined (empty plume)
    i64 n_cells = 0;
};

struct MetricsReport {
    std::vector<MetricRow> rows;

    bool all_undefined() const;
    /// CSV columns: field, level, metric, value, n_cells. Undefined values
    /// are written as the literal "undefined".
    void write_csv(std::ostream& os) const;
};

}  // namespace nfd

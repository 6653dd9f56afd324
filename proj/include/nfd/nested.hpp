#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nfd/geometry.hpp"
#include "nfd/metrics.hpp"
#include "nfd/model.hpp"
#include "nfd/rng.hpp"
#include "nfd/synth.hpp"
#include "nfd/trainer.hpp"

namespace nfd {

enum class FieldKind { Pressure, Saturation };

/// One model per level: pressure at levels 0..L, saturation at levels 1..L.
struct NestedModelSet {
    std::vector<FourierDeepONet> pressure;    // index = level
    std::vector<FourierDeepONet> saturation;  // index = level - 1

    i64 max_level() const { return static_cast<i64>(pressure.size()) - 1; }
    void validate() const;  // ContractError when the registry is inconsistent
};

std::string model_name(FieldKind kind, i64 level);  // "NP0", "NS1", ...
void save_model_set(const std::string& dir, const NestedModelSet& set);
NestedModelSet load_model_set(const std::string& dir, i64 max_level);

/// Level-0 field values over the level-1 context window around a well.
/// Accepts [X, Y, Z] or [T, X, Y, Z] fields; ContractError if the well lies
/// outside the global grid.
Tensor extract_window(const Tensor& field0, const Geometry& g, const WellSpec& w);

/// The previous-level field one level feeds on: the windowed level-0
/// pressure for level 1 (both output kinds), the same-kind previous-level
/// field for levels >= 2. Spatial tensors; the dataset schema carries the
/// final-snapshot slice of time-dependent fields.
Tensor truth_prev_field(const ReservoirSample& s, i64 level, i64 well, FieldKind kind);

/// Stacks the base reservoir/injection channels with the previous-level
/// channel (levels >= 1). prev_field is at the previous level's own grid
/// (level-0 grid for level 1); pass nullptr only for level 0.
Tensor assemble_level_input(const ReservoirSample& s, i64 level, i64 well, FieldKind kind,
                            const Tensor* prev_field);

/// Training items for one (level, kind): one item per sample at level 0, one
/// per (sample, well) at local levels.
std::vector<TrainItem> build_train_items(const std::vector<ReservoirSample>& samples, i64 level,
                                         FieldKind kind);

struct NestedPrediction {
    Tensor p0;                                // [T, grid0]
    std::vector<std::vector<Tensor>> p_local;  // [well][level-1]
    std::vector<std::vector<Tensor>> s_local;
    int pressure_calls = 0;
    int saturation_calls = 0;
};

/// Deployment-mode inference: the global pressure model runs once, then the
/// per-well level chains run on the previous level's *predictions*. Exactly
/// 4n+1 pressure and 4n saturation forward calls for n wells at 4 local
/// levels.
NestedPrediction sequential_infer(const NestedModelSet& models, const ReservoirSample& s,
                                  const TimeGrid& times);

/// Diagnostic mode: every level consumes the ground-truth previous-level
/// field instead of the prediction.
NestedPrediction separate_infer(const NestedModelSet& models, const ReservoirSample& s,
                                const TimeGrid& times);

/// Multi-resolution composite: per-level fields plus ownership masks that
/// flag each cell's finest covering level. The level boxes of distinct wells
/// must not intersect (ContractError).
struct CompositeField {
    Tensor level0;                                 // [T, grid0]
    std::vector<std::vector<Tensor>> local;        // [well][level-1]
    std::vector<std::uint8_t> mask0;               // per level-0 cell
    std::vector<std::vector<std::vector<std::uint8_t>>> mask_local;

    /// Restriction of the composite onto the level-0 grid (finest covering
    /// level averaged into each coarse cell); used for plotting.
    Tensor flatten_to_level0(const ReservoirSample& s) const;
};

CompositeField composite_fields(const ReservoirSample& s, Tensor level0_field,
                                std::vector<std::vector<Tensor>> local_fields);

/// Residuals (prediction - truth) of one level's model over the training set,
/// evaluated in separate mode; one spatial tensor per sample (per well at
/// local levels).
struct ErrorBank {
    std::vector<Tensor> residuals;
};

ErrorBank build_error_bank(const NestedModelSet& models, const std::vector<ReservoirSample>& train,
                           i64 level, FieldKind kind, const TimeGrid& times);

/// truth_prev + one uniformly sampled residual. ContractError on empty bank.
Tensor noised_input(const Tensor& truth_prev, const ErrorBank& bank, Rng& rng);

struct FinetuneTarget {
    FieldKind kind;
    i64 level;
};

/// The published tuned set: pressure levels 1 and 4, saturation levels 1 and 2.
std::vector<FinetuneTarget> default_finetune_set();

/// Continued training of one model with its previous-level channel perturbed
/// by residuals sampled from `bank`. Level 0 is a ContractError (it has no
/// previous-level input).
TrainResult finetune_one(NestedModelSet& models, FinetuneTarget target, const ErrorBank& bank,
                         const std::vector<ReservoirSample>& train, const TimeGrid& times,
                         const TrainSettings& settings);

/// Fine-tunes every listed model. The banks are built from the base models
/// (before any target is updated). Returns per-target histories in order.
std::vector<TrainResult> finetune(NestedModelSet& models, const std::vector<FinetuneTarget>& targets,
                                  const std::vector<ReservoirSample>& train,
                                  const TimeGrid& times, const TrainSettings& settings);

enum class EvalMode { Sequential, Separate };

/// Per-level and total error table over a test set. With oracle=true the
/// model calls are replaced by ground truth (testing hook; all deltas zero).
MetricsReport evaluate_mode(const NestedModelSet* models, const std::vector<ReservoirSample>& test,
                            const TimeGrid& times, EvalMode mode, bool oracle = false);

}  // namespace nfd

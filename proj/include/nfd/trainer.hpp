#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nfd/metrics.hpp"
#include "nfd/model.hpp"
#include "nfd/rng.hpp"
#include "nfd/tensor.hpp"

namespace nfd {

/// Step-decay learning-rate schedule: base_lr * decay^(epoch / period).
struct Schedule {
    double base_lr = 0.001;
    double decay = 0.9;
    int period = 2;
};

double lr_at_epoch(const Schedule& s, int epoch);

/// ||pred - truth|| / (||truth|| + 1e-12); evaluation-side convenience.
double l2_relative_loss(const Tensor& pred, const Tensor& truth);

/// Adam moments per parameter, in param_refs order.
struct OptimState {
    std::vector<std::vector<double>> m, v;
    i64 step = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    static OptimState init(FourierDeepONet& model);
};

/// One bias-corrected Adam update over all parameters. Throws TrainError
/// naming the parameter if a gradient is non-finite.
void adam_step(std::vector<ParamRef>& params, const std::vector<Tensor>& grads, OptimState& st,
               double lr);

/// Shuffles snapshot indices and partitions them into ceil(n_T / batch)
/// groups; indices within each group are sorted so only the composition is
/// random. With batch == n_T the identity partition is returned and the rng
/// is not consumed (time batching disabled).
std::vector<std::vector<i64>> time_batches(i64 n_t, i64 batch, Rng& rng);

/// One training example: base input channels plus an optional previous-level
/// field that is turned into the final input by `assemble` (which lets
/// fine-tuning perturb the field before injection).
struct TrainItem {
    std::string tag;
    Tensor base_channels;               // [C_base, grid...]
    std::optional<Tensor> prev_field;   // previous-level field, own grid
    std::function<Tensor(const Tensor& base, const Tensor* prev)> assemble;
    Tensor target;                      // [n_T, grid...]
};

struct StepRecord {
    int epoch;
    int step;
    double lr;
    double loss;
};

struct TrainSettings {
    int epochs = 10;
    i64 time_batch = 6;
    i64 branch_batch = 1;  // fixed at 1; larger values are rejected
    Schedule sched;
    std::uint64_t seed = 0;
};

struct TrainResult {
    std::vector<StepRecord> steps;
    std::vector<double> epoch_mean_loss;
    i64 peak_tape_elements = 0;
    double seconds = 0.0;
};

/// Perturbation applied to the previous-level field before assembly
/// (fine-tuning error injection). Drawn from its own rng stream so a no-op
/// noiser leaves the training trajectory untouched.
using PrevNoiser = std::function<Tensor(const Tensor& prev, Rng& rng)>;

/// Per (sample, time-batch) step: forward on the snapshot subset, L2 relative
/// loss, backward, Adam update at the epoch's learning rate. Sample order
/// reshuffles every epoch; the time partition reshuffles every epoch.
TrainResult train_level(FourierDeepONet& model, OptimState& opt, const std::vector<TrainItem>& items,
                        const TimeGrid& times, const TrainSettings& settings,
                        const PrevNoiser& noiser = {});

void write_loss_csv(const std::string& path, const std::vector<StepRecord>& steps);

}  // namespace nfd

#pragma once

#include <cstdint>
#include <vector>

namespace nfd::fftcore {

inline constexpr int kLanes = 4;

/// Factorization and twiddle table for one transform length. The factor list
/// is smallest-prime-first; a prime length degenerates to a single factor,
/// which makes the combine step the naive DFT fallback.
struct Plan {
    std::int64_t n = 0;
    std::vector<int> factors;
    std::vector<double> tw_re;  // cos(-2*pi*t/n), t in [0, n)
    std::vector<double> tw_im;  // sin(-2*pi*t/n)
    int max_factor = 1;
};

Plan make_plan(std::int64_t n);

/// Cached plan lookup (thread-safe).
const Plan& plan_for(std::int64_t n);

/// Mixed-radix Cooley-Tukey over a lane-major workspace: element p of line l
/// lives at w[p*4 + l]. Four independent lines are transformed per call, all
/// with identical operation order per line, so any backend that evaluates the
/// same IEEE expressions lane-by-lane produces bitwise-identical lines.
///
/// V must provide: load(const double*), store(double*), broadcast(double),
/// add, sub, mul as static ops on a 4-wide value type.
template <class V>
class LaneFft {
public:
    explicit LaneFft(const Plan& plan, bool inverse)
        : plan_(plan), inverse_(inverse),
          col_re_(static_cast<std::size_t>(plan.max_factor) * kLanes),
          col_im_(static_cast<std::size_t>(plan.max_factor) * kLanes) {}

    /// in: workspace [n][4]; out: scratch [n][4] receiving the transform.
    void run(const double* in_re, const double* in_im, double* out_re, double* out_im) {
        rec(in_re, in_im, 1, out_re, out_im, plan_.n, plan_.factors.data());
    }

private:
    using Vec = typename V::Value;

    void rec(const double* ire, const double* iim, std::int64_t istride,
             double* ore, double* oim, std::int64_t n, const int* factors) {
        if (n == 1) {
            V::store(ore, V::load(ire));
            V::store(oim, V::load(iim));
            return;
        }
        const int r = *factors;
        const std::int64_t m = n / r;
        for (int j = 0; j < r; ++j) {
            rec(ire + kLanes * istride * j, iim + kLanes * istride * j, istride * r,
                ore + kLanes * m * j, oim + kLanes * m * j, m, factors + 1);
        }
        // Combine the r sub-transforms. Twiddle powers of W_n map onto the
        // full-length table via stride plan_.n / n.
        const std::int64_t twmul = plan_.n / n;
        const std::int64_t rstep = m * twmul;  // table stride for W_r powers
        double* cre = col_re_.data();
        double* cim = col_im_.data();
        for (std::int64_t k2 = 0; k2 < m; ++k2) {
            for (int j = 0; j < r; ++j) {
                const std::int64_t t = (static_cast<std::int64_t>(j) * k2 % n) * twmul;
                const Vec yr = V::load(ore + kLanes * (j * m + k2));
                const Vec yi = V::load(oim + kLanes * (j * m + k2));
                const Vec wr = V::broadcast(plan_.tw_re[static_cast<std::size_t>(t)]);
                const Vec wi = V::broadcast(inverse_ ? -plan_.tw_im[static_cast<std::size_t>(t)]
                                                     : plan_.tw_im[static_cast<std::size_t>(t)]);
                V::store(cre + kLanes * j, V::sub(V::mul(yr, wr), V::mul(yi, wi)));
                V::store(cim + kLanes * j, V::add(V::mul(yr, wi), V::mul(yi, wr)));
            }
            for (int q = 0; q < r; ++q) {
                Vec accr = V::load(cre);
                Vec acci = V::load(cim);
                for (int j = 1; j < r; ++j) {
                    const std::int64_t t = (static_cast<std::int64_t>(j) * q * rstep) % plan_.n;
                    const Vec wr = V::broadcast(plan_.tw_re[static_cast<std::size_t>(t)]);
                    const Vec wi = V::broadcast(inverse_ ? -plan_.tw_im[static_cast<std::size_t>(t)]
                                                         : plan_.tw_im[static_cast<std::size_t>(t)]);
                    const Vec yr = V::load(cre + kLanes * j);
                    const Vec yi = V::load(cim + kLanes * j);
                    accr = V::add(accr, V::sub(V::mul(yr, wr), V::mul(yi, wi)));
                    acci = V::add(acci, V::add(V::mul(yr, wi), V::mul(yi, wr)));
                }
                V::store(ore + kLanes * (q * m + k2), accr);
                V::store(oim + kLanes * (q * m + k2), acci);
            }
        }
    }

    const Plan& plan_;
    bool inverse_;
    std::vector<double> col_re_, col_im_;
};

/// Scalar reference backend: plain per-lane loops.
struct ScalarV {
    struct Value {
        double v[kLanes];
    };
    static Value load(const double* p) {
        Value x;
        for (int l = 0; l < kLanes; ++l) x.v[l] = p[l];
        return x;
    }
    static void store(double* p, const Value& x) {
        for (int l = 0; l < kLanes; ++l) p[l] = x.v[l];
    }
    static Value broadcast(double s) {
        Value x;
        for (int l = 0; l < kLanes; ++l) x.v[l] = s;
        return x;
    }
    static Value add(const Value& a, const Value& b) {
        Value x;
        for (int l = 0; l < kLanes; ++l) x.v[l] = a.v[l] + b.v[l];
        return x;
    }
    static Value sub(const Value& a, const Value& b) {
        Value x;
        for (int l = 0; l < kLanes; ++l) x.v[l] = a.v[l] - b.v[l];
        return x;
    }
    static Value mul(const Value& a, const Value& b) {
        Value x;
        for (int l = 0; l < kLanes; ++l) x.v[l] = a.v[l] * b.v[l];
        return x;
    }
};

}  // namespace nfd::fftcore

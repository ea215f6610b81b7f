#include "cio/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "cio/error.hpp"
#include "cio/normal.hpp"

namespace cio {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform on the open interval (0,1) from the top 53 bits.
double to_open_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Streaming first and second moments of (x, y), mergeable in a fixed order.
struct Moments {
    double n = 0.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double m2_x = 0.0;
    double m2_y = 0.0;
    double c_xy = 0.0;

    void add(double x, double y) {
        n += 1.0;
        const double dx = x - mean_x;
        mean_x += dx / n;
        const double dy = y - mean_y;
        mean_y += dy / n;
        m2_x += dx * (x - mean_x);
        m2_y += dy * (y - mean_y);
        c_xy += dx * (y - mean_y);
    }

    void merge(const Moments& o) {
        if (o.n == 0.0) return;
        if (n == 0.0) {
            *this = o;
            return;
        }
        const double total = n + o.n;
        const double dx = o.mean_x - mean_x;
        const double dy = o.mean_y - mean_y;
        const double f = n * o.n / total;
        m2_x += o.m2_x + dx * dx * f;
        m2_y += o.m2_y + dy * dy * f;
        c_xy += o.c_xy + dx * dy * f;
        mean_x += dx * o.n / total;
        mean_y += dy * o.n / total;
        n = total;
    }
};

/// Per-path outcome of one scenario of the copula.
struct PathOutcome {
    int defaults = 0;
};

class PathSampler {
public:
    explicit PathSampler(const CopulaParams& params)
        : n_(params.n_names),
          threshold_(norm_inv(params.default_prob)),
          sqrt_rho_(std::sqrt(params.rho)),
          sqrt_1m_rho_(std::sqrt(1.0 - params.rho)),
          comonotone_(params.rho >= 1.0 - kComonotoneCutoff) {}

    int n_names() const { return n_; }

    double conditional_default(double m) const {
        if (comonotone_) return m <= threshold_ ? 1.0 : 0.0;
        return norm_cdf((threshold_ - sqrt_rho_ * m) / sqrt_1m_rho_);
    }

    PathOutcome evaluate(double m, const std::vector<double>& u, bool mirrored) const {
        const double c = conditional_default(m);
        PathOutcome out;
        for (int i = 0; i < n_; ++i) {
            const double ui = mirrored ? 1.0 - u[static_cast<std::size_t>(i)]
                                       : u[static_cast<std::size_t>(i)];
            if (ui < c) ++out.defaults;
        }
        return out;
    }

private:
    int n_;
    double threshold_;
    double sqrt_rho_;
    double sqrt_1m_rho_;
    bool comonotone_;
};

/// Runs `samples` independent samples (a sample is one path, or an antithetic
/// pair averaged) and accumulates (x, y) = observe(outcome...) per sample.
template <typename Observe>
Moments run(const CopulaParams& params, const McConfig& cfg, Observe observe) {
    validate(params);
    detail::require(cfg.n_paths >= 1, "mc: n_paths must be positive");

    const PathSampler sampler(params);
    const std::size_t samples = cfg.antithetic ? (cfg.n_paths + 1) / 2 : cfg.n_paths;
    const std::size_t n_chunks = (samples + kMcChunkPaths - 1) / kMcChunkPaths;
    std::vector<Moments> chunk_moments(n_chunks);

    auto run_chunk = [&](std::size_t chunk) {
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(chunk + 1)));
        std::vector<double> u(static_cast<std::size_t>(sampler.n_names()));
        const std::size_t first = chunk * kMcChunkPaths;
        const std::size_t last = std::min(samples, first + kMcChunkPaths);
        Moments acc;
        for (std::size_t s = first; s < last; ++s) {
            const double m = norm_inv(to_open_unit(rng()));
            for (auto& ui : u) ui = to_open_unit(rng());
            auto [x, y] = observe(sampler.evaluate(m, u, false));
            if (cfg.antithetic) {
                const auto [x2, y2] = observe(sampler.evaluate(-m, u, true));
                x = 0.5 * (x + x2);
                y = 0.5 * (y + y2);
            }
            acc.add(x, y);
        }
        chunk_moments[chunk] = acc;
    };

    unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_chunks)));
    if (workers == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < n_chunks; c = next++) run_chunk(c);
            });
    }

    Moments total;
    for (const auto& m : chunk_moments) total.merge(m);
    return total;
}

double sample_variance(double m2, double n) {
    return n > 1.0 ? std::max(m2, 0.0) / (n - 1.0) : 0.0;
}

}  // namespace

McEstimate simulate_armageddon(const CopulaParams& params, const McConfig& cfg) {
    // x: default fraction (control, mean p), y: armageddon indicator
    const Moments mom = run(params, cfg, [n = params.n_names](const PathOutcome& o) {
        return std::pair{static_cast<double>(o.defaults) / static_cast<double>(n),
                         o.defaults == n ? 1.0 : 0.0};
    });
    const double beta = mom.m2_x > 0.0 ? mom.c_xy / mom.m2_x : 0.0;
    const double residual_m2 = mom.m2_y - beta * mom.c_xy;

    McEstimate est;
    est.n_paths = cfg.n_paths;
    est.mean = params.default_prob * beta + (mom.mean_y - beta * mom.mean_x);
    est.std_error = std::sqrt(sample_variance(residual_m2, mom.n) / mom.n);
    return est;
}

McEstimate simulate_loss_given_no_armageddon(const CopulaParams& params, const McConfig& cfg,
                                             double recovery) {
    detail::require(recovery >= 0.0 && recovery <= 1.0, "mc: recovery outside [0,1]");
    const double n = static_cast<double>(params.n_names);
    const Moments mom = run(params, cfg, [&](const PathOutcome& o) {
        const double loss = (1.0 - recovery) * static_cast<double>(o.defaults) / n;
        return std::pair{0.0, o.defaults == params.n_names ? 0.0 : loss};
    });

    McEstimate est;
    est.n_paths = cfg.n_paths;
    est.mean = mom.mean_y;
    est.std_error = std::sqrt(sample_variance(mom.m2_y, mom.n) / mom.n);
    return est;
}

}  // namespace cio

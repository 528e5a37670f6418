#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camel/errors.hpp"

namespace camel {

inline constexpr double kSimplexTol = 1e-9;

/// Point on the probability simplex over n >= 2 training datasets.
/// Entries are nonnegative and sum to 1 (the constructor enforces it to
/// within 1e-9 absolute; factory functions produce exact sums).
class Mixture {
public:
    explicit Mixture(std::vector<double> weights);

    const std::vector<double>& weights() const noexcept { return w_; }
    double operator[](std::size_t i) const { return w_[i]; }
    std::size_t size() const noexcept { return w_.size(); }

    bool operator==(const Mixture& other) const noexcept { return w_ == other.w_; }

private:
    std::vector<double> w_;
};

/// Column-stochastic k x n matrix: entry (i, j) is the proportion of
/// intrinsic domain i in dataset j. Every column sums to 1.
class DomainProfile {
public:
    DomainProfile(std::size_t k, std::size_t n, std::vector<double> row_major);

    std::size_t domains() const noexcept { return k_; }
    std::size_t datasets() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }
    const std::vector<double>& data() const noexcept { return t_; }

    static DomainProfile identity(std::size_t k);

    bool operator==(const DomainProfile& other) const noexcept {
        return k_ == other.k_ && n_ == other.n_ && t_ == other.t_;
    }

private:
    std::size_t k_, n_;
    std::vector<double> t_;
};

/// One observed training run: where it sat on the simplex, how big the
/// model was, how long it trained, and what it measured.
struct RunRecord {
    Mixture mixture;
    double scale;   // activated-parameter count M
    double tokens;  // training tokens D
    std::map<std::string, double> losses;                     // validation-set name -> nats/token
    std::optional<std::map<std::string, double>> benchmarks;  // benchmark name -> accuracy in [0,1]

    RunRecord(Mixture mixture, double scale, double tokens,
              std::map<std::string, double> losses,
              std::optional<std::map<std::string, double>> benchmarks = std::nullopt);
};

/// Nonnegative per-benchmark weights summing to 1.
class ObjectiveWeights {
public:
    explicit ObjectiveWeights(std::map<std::string, double> weights);

    const std::map<std::string, double>& weights() const noexcept { return w_; }

private:
    std::map<std::string, double> w_;
};

// Normalizes a raw nonnegative vector onto the simplex. The residual left
// by rounding is folded into the largest entry until the stored sum is
// exactly 1, which also makes the operation idempotent.
Mixture make_mixture(const std::vector<double>& raw);

// Multiplies one entry by `factor` and rescales the remaining entries by
// the common ratio (1 - factor*r_i) / (1 - r_i) so the result stays on the
// simplex.
Mixture perturb_mixture(const Mixture& r, std::size_t domain_index, double factor);

// Reference mixture followed by the up/down perturbation of each domain in
// order: 2n + 1 mixtures. Duplicates (possible for n = 2) are retained.
std::vector<Mixture> mixture_pool(const Mixture& reference, double factor_up, double factor_down);

// Effective intrinsic-domain weights eta_i = <t_i, r>.
std::vector<double> effective_weights(const DomainProfile& profile, const Mixture& r);

}  // namespace camel

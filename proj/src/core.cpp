#include "camel/core.hpp"

#include <algorithm>
#include <cmath>

namespace camel {

namespace {

double checked_sum(const std::vector<double>& w) {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
}

std::size_t largest_index(const std::vector<double>& w) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[best]) best = i;
    return best;
}

// Nudges the largest entry until the running sum is exactly 1.0. The
// residual pass converges in a couple of rounds; the ulp walk covers the
// rare case where rounding leaves the sum one step off.
void exactify_sum(std::vector<double>& w) {
    std::size_t big = largest_index(w);
    for (int round = 0; round < 8; ++round) {
        double s = checked_sum(w);
        if (s == 1.0) return;
        w[big] += 1.0 - s;
    }
    for (int step = 0; step < 1024; ++step) {
        double s = checked_sum(w);
        if (s == 1.0) return;
        w[big] = std::nextafter(w[big], s < 1.0 ? 2.0 : -2.0);
    }
}

}  // namespace

Mixture::Mixture(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.size() < 2) fail(Errc::dimension_mismatch, "mixture needs at least 2 entries");
    for (double v : w_) {
        if (!std::isfinite(v)) fail(Errc::degenerate_sum, "non-finite mixture entry");
        if (v < 0.0) fail(Errc::negative_weight, "mixture entry below zero");
    }
    double s = checked_sum(w_);
    if (std::abs(s - 1.0) > kSimplexTol) fail(Errc::degenerate_sum, "mixture does not sum to 1");
}

DomainProfile::DomainProfile(std::size_t k, std::size_t n, std::vector<double> row_major)
    : k_(k), n_(n), t_(std::move(row_major)) {
    if (k_ == 0 || n_ == 0 || t_.size() != k_ * n_)
        fail(Errc::dimension_mismatch, "profile shape does not match data");
    for (double v : t_) {
        if (!std::isfinite(v) || v < 0.0) fail(Errc::negative_weight, "profile entry invalid");
    }
    for (std::size_t j = 0; j < n_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < k_; ++i) col += at(i, j);
        if (std::abs(col - 1.0) > kSimplexTol)
            fail(Errc::degenerate_sum, "profile column does not sum to 1");
    }
}

DomainProfile DomainProfile::identity(std::size_t k) {
    std::vector<double> t(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) t[i * k + i] = 1.0;
    return DomainProfile(k, k, std::move(t));
}

RunRecord::RunRecord(Mixture mixture_, double scale_, double tokens_,
                     std::map<std::string, double> losses_,
                     std::optional<std::map<std::string, double>> benchmarks_)
    : mixture(std::move(mixture_)),
      scale(scale_),
      tokens(tokens_),
      losses(std::move(losses_)),
      benchmarks(std::move(benchmarks_)) {
    if (!(scale > 0.0) || !std::isfinite(scale)) fail(Errc::invalid_range, "run scale must be > 0");
    if (!(tokens > 0.0) || !std::isfinite(tokens))
        fail(Errc::invalid_range, "run tokens must be > 0");
    if (losses.empty()) fail(Errc::invalid_range, "run has no losses");
    for (const auto& [name, v] : losses) {
        if (!(v > 0.0) || !std::isfinite(v))
            fail(Errc::invalid_range, "loss '" + name + "' must be a positive finite value");
    }
    if (benchmarks) {
        for (const auto& [name, v] : *benchmarks) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                fail(Errc::invalid_range, "benchmark '" + name + "' outside [0, 1]");
        }
    }
}

ObjectiveWeights::ObjectiveWeights(std::map<std::string, double> weights) : w_(std::move(weights)) {
    double s = 0.0;
    for (const auto& [name, v] : w_) {
        if (!std::isfinite(v) || v < 0.0)
            fail(Errc::negative_weight, "objective weight '" + name + "' invalid");
        s += v;
    }
    if (std::abs(s - 1.0) > kSimplexTol)
        fail(Errc::degenerate_sum, "objective weights do not sum to 1");
}

Mixture make_mixture(const std::vector<double>& raw) {
    if (raw.size() < 2) fail(Errc::dimension_mismatch, "mixture needs at least 2 entries");
    double s = 0.0;
    for (double v : raw) {
        if (!std::isfinite(v)) fail(Errc::degenerate_sum, "non-finite entry");
        if (v < 0.0) fail(Errc::negative_weight, "entry below zero");
        s += v;
    }
    if (!(s > 0.0) || !std::isfinite(s)) fail(Errc::degenerate_sum, "entries sum to zero");

    std::vector<double> w(raw);
    if (s != 1.0)
        for (auto& v : w) v /= s;
    exactify_sum(w);
    return Mixture(std::move(w));
}

Mixture perturb_mixture(const Mixture& r, std::size_t domain_index, double factor) {
    const auto& w = r.weights();
    if (domain_index >= w.size()) fail(Errc::index_out_of_range, "domain index out of range");
    if (!(factor > 0.0) || !std::isfinite(factor))
        fail(Errc::invalid_range, "factor must be positive");

    double ri = w[domain_index];
    double scaled = factor * ri;
    if (scaled > 1.0) fail(Errc::infeasible_factor, "scaled entry exceeds 1");
    if (ri >= 1.0) fail(Errc::degenerate_mixture, "no mass left to renormalize");

    double ratio = (1.0 - scaled) / (1.0 - ri);
    std::vector<double> out(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) out[j] = j == domain_index ? scaled : w[j] * ratio;
    exactify_sum(out);
    return Mixture(std::move(out));
}

std::vector<Mixture> mixture_pool(const Mixture& reference, double factor_up, double factor_down) {
    if (!(factor_up > 1.0) || !(factor_down < 1.0) || !(factor_down > 0.0))
        fail(Errc::invalid_range, "need factor_up > 1 > factor_down > 0");
    std::vector<Mixture> pool;
    pool.reserve(2 * reference.size() + 1);
    pool.push_back(reference);
    for (std::size_t i = 0; i < reference.size(); ++i) {
        pool.push_back(perturb_mixture(reference, i, factor_up));
        pool.push_back(perturb_mixture(reference, i, factor_down));
    }
    return pool;
}

std::vector<double> effective_weights(const DomainProfile& profile, const Mixture& r) {
    if (profile.datasets() != r.size())
        fail(Errc::dimension_mismatch, "profile columns != mixture size");
    std::vector<double> eta(profile.domains(), 0.0);
    for (std::size_t i = 0; i < profile.domains(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) acc += profile.at(i, j) * r[j];
        eta[i] = acc;
    }
    return eta;
}

}  // namespace camel

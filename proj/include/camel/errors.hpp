#pragma once

#include <stdexcept>
#include <string>

namespace camel {

// Failure categories surfaced across the library. Callers that care about
// the specific condition switch on code(); everyone else just sees a
// std::runtime_error with a readable message.
enum class Errc {
    negative_weight,
    degenerate_sum,
    index_out_of_range,
    infeasible_factor,
    degenerate_mixture,
    dimension_mismatch,
    zero_effective_weight,
    non_convergence,
    invalid_range,
    missing_target,
    mixed_scales,
    missing_benchmark,
    inconsistent_loss_keys,
    too_few_scales,
    zero_observation,
    empty_scales,
    pool_too_small,
    lattice_too_large,
    invalid_argument,
    parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace camel

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace renyi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Failure categories surfaced by the library. The CLI maps input/validation
/// kinds to exit code 2 and numerical kinds to exit code 3.
enum class errc {
    invalid_argument,
    zero_diagonal,
    non_finite,
    size_mismatch,
    domain_error,
    rank_collapse,
    non_positive_trace,
    alpha_is_one,
    degenerate_bounds,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

    /// Input/validation failures (vs. numerical/estimator failures).
    bool is_usage() const noexcept {
        switch (kind_) {
            case errc::invalid_argument:
            case errc::size_mismatch:
            case errc::domain_error:
            case errc::parse_error:
            case errc::alpha_is_one:
                return true;
            default:
                return false;
        }
    }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace renyi

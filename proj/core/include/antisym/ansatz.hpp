// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ansatz.hpp
 * @brief phi(X) = sum_k f_k(X) g_k(X) with symmetric g_k.
 *
 * Antisymmetry of phi is structural: every f_k is antisymmetric and every g_k
 * symmetric, whatever the g_k are. Two kinds of g_k are provided: the exact
 * reconstruction g_k = f_k Psi of a known target, and linear models over
 * symmetric features (fit.hpp).
 */

#pragma once

#include <antisym/basis.hpp>
#include <antisym/features.hpp>
#include <antisym/targets.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace antisym {

class SymmetricFunction;
struct AnsatzModel;

namespace detail {
struct EvalCache;
}

class SymmetricFunction {
public:
    enum class Kind { exact_reconstruction, feature_model };

    /// g(X) = f_k(X) Psi(X) with f_k from `directions`.
    [[nodiscard]] static SymmetricFunction exact(TargetOracle target, std::shared_ptr<const DirectionSet> directions,
                                                 std::size_t k);
    /// g(X) = weights . symmetric_features(spec, X).
    [[nodiscard]] static SymmetricFunction linear(std::shared_ptr<const FeatureSpec> spec, std::vector<double> weights);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] double operator()(const Configuration& x) const;

    /// Feature-model weights; empty for exact heads.
    [[nodiscard]] const std::vector<double>& weights() const noexcept;
    [[nodiscard]] std::shared_ptr<const FeatureSpec> feature_spec() const noexcept;

private:
    struct Exact {
        TargetOracle target;
        std::shared_ptr<const DirectionSet> directions;
        std::size_t k;
    };
    struct Linear {
        std::shared_ptr<const FeatureSpec> spec;
        std::vector<double> weights;
    };
    explicit SymmetricFunction(std::variant<Exact, Linear> v) : impl_(std::move(v)) {}

    double evaluate(const Configuration& x, detail::EvalCache& cache) const;
    friend double evaluate_ansatz(const AnsatzModel&, const Configuration&);

    std::variant<Exact, Linear> impl_;
};

struct AnsatzModel {
    std::size_t n = 0; ///< particle count
    std::shared_ptr<const DirectionSet> directions;
    std::vector<SymmetricFunction> gs; ///< one per direction
    KernelOptions kernel{};
};

/// Construction rejected because the target failed the antisymmetry spot check.
class NotAntisymmetricError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// sum_k f_k(X) g_k(X), summed in k order; exactly 0 on the coincidence set.
[[nodiscard]] double evaluate_ansatz(const AnsatzModel& model, const Configuration& x);

/**
 * g_k = f_k Psi. The target is first probed at 32 random points with a random
 * permutation each; a mismatch beyond 1e-10 relative rejects it.
 */
[[nodiscard]] AnsatzModel exact_reconstruction(const TargetOracle& target, const DirectionSet& ys);

/**
 * max over trials of |phi(pi X) - sign(pi) phi(X)| / max(1, |phi(X)|), with
 * standard-normal X and uniform random pi. Deterministic in `seed`.
 */
[[nodiscard]] double antisymmetry_check(const AnsatzModel& model, std::size_t trials, std::uint64_t seed,
                                        std::size_t threads = 0);

/// Same law for any configuration function with n particles in d dimensions.
[[nodiscard]] double antisymmetry_deviation(const ConfigFunction& f, std::size_t n, std::size_t d,
                                            std::size_t trials, std::uint64_t seed, std::size_t threads = 0);

/**
 * Plain-text model: a reference to the direction file, the feature settings,
 * the feature directions and the K x F weight matrix. Only feature models
 * can be written; throws std::invalid_argument otherwise.
 */
void write_model(const AnsatzModel& model, const std::string& direction_file, std::ostream& os);

} // namespace antisym

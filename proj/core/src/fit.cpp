// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/fit.hpp>

#include <antisym/parallel.hpp>
#include <antisym/random.hpp>

#include <Eigen/Dense>
#include <json.hpp>

#include <cmath>

namespace antisym {

namespace {

constexpr std::uint64_t kTestStreamOffset = std::uint64_t{1} << 40;

struct Samples {
    Eigen::MatrixXd design;
    Eigen::VectorXd target;
};

Samples build_samples(const TargetOracle& target, const DirectionSet& ys, const FeatureSpec& spec,
                      std::size_t count, std::uint64_t seed, std::uint64_t stream_offset, const FitOptions& options) {
    const std::size_t k = ys.k_count();
    const std::size_t f = spec.dimension();
    Samples s{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(k * f)),
              Eigen::VectorXd::Zero(static_cast<Eigen::Index>(count))};
    parallel_for(count, options.threads, [&](std::size_t i) {
        Rng rng = make_rng(seed, stream_offset + i);
        const Configuration x = random_separated_configuration(target.n(), target.d(), options.separation, rng);
        const BasisEvaluation be = evaluate_basis(ys, x, options.kernel);
        const auto phi = symmetric_features(spec, x);
        const auto row = static_cast<Eigen::Index>(i);
        for (std::size_t h = 0; h < k; ++h)
            for (std::size_t j = 0; j < f; ++j)
                s.design(row, static_cast<Eigen::Index>(h * f + j)) = be.normalized[h] * phi[j];
        s.target(row) = target(x);
    });
    return s;
}

double relative_rmse(const Eigen::VectorXd& pred, const Eigen::VectorXd& truth) {
    const double err = (pred - truth).norm();
    const double ref = truth.norm();
    return ref > 0.0 ? err / ref : err;
}

} // namespace

std::string FitReport::to_json() const {
    nlohmann::ordered_json j;
    j["n_train"] = n_train;
    j["n_test"] = n_test;
    j["ridge"] = ridge;
    j["train_rmse"] = train_rmse;
    j["test_rmse"] = test_rmse;
    j["seed"] = seed;
    return j.dump();
}

std::size_t fit_unknowns(const DirectionSet& ys, const FeatureSpec& spec) noexcept {
    return ys.k_count() * spec.dimension();
}

FitResult fit(const TargetOracle& target, const DirectionSet& ys, const FeatureSpec& spec, std::size_t n_train,
              std::size_t n_test, double ridge, std::uint64_t seed, const FitOptions& options) {
    if (!(ridge >= 0.0)) throw std::invalid_argument("fit: ridge must be non-negative");
    if (ys.d() != target.d() || spec.directions.d() != target.d())
        throw std::invalid_argument("fit: dimension mismatch");
    const std::size_t unknowns = fit_unknowns(ys, spec);
    if (n_train == 0) n_train = 50 * unknowns;
    if (n_test == 0) n_test = std::max<std::size_t>(1, n_train / 4);

    const Samples train = build_samples(target, ys, spec, n_train, seed, 0, options);
    const Samples test = build_samples(target, ys, spec, n_test, seed, kTestStreamOffset, options);

    const auto cols = static_cast<Eigen::Index>(unknowns);
    const double lambda = ridge * train.design.squaredNorm() / static_cast<double>(unknowns);
    Eigen::VectorXd w;
    if (lambda > 0.0) {
        Eigen::MatrixXd aug(train.design.rows() + cols, cols);
        aug << train.design, std::sqrt(lambda) * Eigen::MatrixXd::Identity(cols, cols);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(aug.rows());
        rhs.head(train.design.rows()) = train.target;
        w = aug.colPivHouseholderQr().solve(rhs);
    } else {
        const auto qr = train.design.colPivHouseholderQr();
        if (qr.rank() < cols)
            throw SingularFitError("fit: design matrix has rank " + std::to_string(qr.rank()) + " < " +
                                   std::to_string(cols) + " unknowns; use ridge > 0");
        w = qr.solve(train.target);
    }

    FitResult result;
    result.report.n_train = n_train;
    result.report.n_test = n_test;
    result.report.ridge = ridge;
    result.report.seed = seed;
    result.report.train_rmse = relative_rmse(train.design * w, train.target);
    result.report.test_rmse = relative_rmse(test.design * w, test.target);

    auto shared_spec = std::make_shared<const FeatureSpec>(spec);
    result.model.n = target.n();
    result.model.directions = std::make_shared<const DirectionSet>(ys);
    result.model.kernel = options.kernel;
    const std::size_t f = spec.dimension();
    for (std::size_t h = 0; h < ys.k_count(); ++h) {
        std::vector<double> wk(f);
        for (std::size_t j = 0; j < f; ++j) wk[j] = w(static_cast<Eigen::Index>(h * f + j));
        result.model.gs.push_back(SymmetricFunction::linear(shared_spec, std::move(wk)));
    }
    return result;
}

TargetOracle planted_representable_target(std::size_t n, const DirectionSet& ys, const FeatureSpec& spec,
                                          std::uint64_t seed) {
    if (ys.d() != spec.directions.d()) throw std::invalid_argument("planted target: dimension mismatch");
    Rng rng = make_rng(seed, 0x91a7);
    std::normal_distribution<double> gauss;
    const std::size_t f = spec.dimension();
    auto shared_spec = std::make_shared<const FeatureSpec>(spec);
    AnsatzModel model;
    model.n = n;
    model.directions = std::make_shared<const DirectionSet>(ys);
    for (std::size_t k = 0; k < ys.k_count(); ++k) {
        std::vector<double> w(f);
        for (auto& v : w) v = gauss(rng);
        model.gs.push_back(SymmetricFunction::linear(shared_spec, std::move(w)));
    }
    return TargetOracle::custom(n, ys.d(), "planted",
                                [model = std::move(model)](const Configuration& x) { return evaluate_ansatz(model, x); });
}

} // namespace antisym

// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/ansatz.hpp>

#include <antisym/parallel.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>

namespace antisym {

namespace detail {

// Per-evaluation memo so K heads sharing a target, basis or feature spec
// evaluate it once.
struct EvalCache {
    const DirectionSet* basis_key = nullptr;
    std::optional<BasisEvaluation> basis;
    const void* target_key = nullptr;
    std::optional<double> psi;
    const FeatureSpec* feature_key = nullptr;
    std::vector<double> features;
    KernelOptions kernel{};
};

} // namespace detail

namespace {

const BasisEvaluation& cached_basis(detail::EvalCache& cache, const DirectionSet& ys, const Configuration& x) {
    if (!cache.basis || cache.basis_key != &ys) {
        cache.basis = evaluate_basis(ys, x, cache.kernel);
        cache.basis_key = &ys;
    }
    return *cache.basis;
}

double cached_target(detail::EvalCache& cache, const TargetOracle& target, const Configuration& x) {
    const void* key = &target.spec_json(); // stable address inside the shared implementation
    if (!cache.psi || cache.target_key != key) {
        cache.psi = target(x);
        cache.target_key = key;
    }
    return *cache.psi;
}

} // namespace

SymmetricFunction SymmetricFunction::exact(TargetOracle target, std::shared_ptr<const DirectionSet> directions,
                                           std::size_t k) {
    if (!directions || k >= directions->k_count()) throw std::invalid_argument("SymmetricFunction::exact: bad index");
    return SymmetricFunction(Exact{std::move(target), std::move(directions), k});
}

SymmetricFunction SymmetricFunction::linear(std::shared_ptr<const FeatureSpec> spec, std::vector<double> weights) {
    if (!spec || weights.size() != spec->dimension())
        throw std::invalid_argument("SymmetricFunction::linear: weight count != feature dimension");
    return SymmetricFunction(Linear{std::move(spec), std::move(weights)});
}

SymmetricFunction::Kind SymmetricFunction::kind() const noexcept {
    return std::holds_alternative<Exact>(impl_) ? Kind::exact_reconstruction : Kind::feature_model;
}

const std::vector<double>& SymmetricFunction::weights() const noexcept {
    static const std::vector<double> empty;
    if (const auto* lin = std::get_if<Linear>(&impl_)) return lin->weights;
    return empty;
}

std::shared_ptr<const FeatureSpec> SymmetricFunction::feature_spec() const noexcept {
    if (const auto* lin = std::get_if<Linear>(&impl_)) return lin->spec;
    return nullptr;
}

double SymmetricFunction::operator()(const Configuration& x) const {
    detail::EvalCache cache;
    return evaluate(x, cache);
}

double SymmetricFunction::evaluate(const Configuration& x, detail::EvalCache& cache) const {
    if (const auto* ex = std::get_if<Exact>(&impl_)) {
        const BasisEvaluation& be = cached_basis(cache, *ex->directions, x);
        const double fk = be.normalized[ex->k];
        if (fk == 0.0) return 0.0;
        return fk * cached_target(cache, ex->target, x);
    }
    const auto& lin = std::get<Linear>(impl_);
    if (cache.feature_key != lin.spec.get()) {
        cache.features = symmetric_features(*lin.spec, x);
        cache.feature_key = lin.spec.get();
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < lin.weights.size(); ++j) acc += lin.weights[j] * cache.features[j];
    return acc;
}

double evaluate_ansatz(const AnsatzModel& model, const Configuration& x) {
    if (!model.directions) throw std::invalid_argument("evaluate_ansatz: model has no directions");
    if (x.d() != model.directions->d() || (model.n != 0 && x.n() != model.n))
        throw std::invalid_argument("evaluate_ansatz: configuration shape mismatch");
    if (model.gs.size() != model.directions->k_count())
        throw std::invalid_argument("evaluate_ansatz: head count != direction count");

    detail::EvalCache cache;
    cache.kernel = model.kernel;
    const BasisEvaluation& be = cached_basis(cache, *model.directions, x);
    if (be.on_omega || be.denominator_vanished) return 0.0;

    double acc = 0.0;
    for (std::size_t k = 0; k < model.gs.size(); ++k) {
        const double fk = be.normalized[k];
        if (fk == 0.0) continue;
        acc += fk * model.gs[k].evaluate(x, cache);
    }
    return acc;
}

AnsatzModel exact_reconstruction(const TargetOracle& target, const DirectionSet& ys) {
    if (target.d() != ys.d()) throw std::invalid_argument("exact_reconstruction: dimension mismatch");

    constexpr std::size_t kProbes = 32;
    constexpr std::uint64_t kProbeSeed = 0x70b35;
    for (std::size_t t = 0; t < kProbes; ++t) {
        Rng rng = make_rng(kProbeSeed, t);
        const Configuration x = random_configuration(target.n(), target.d(), rng);
        auto perm = random_permutation(target.n(), rng);
        if (std::is_sorted(perm.begin(), perm.end())) std::swap(perm[0], perm[1]);
        const double base = target(x);
        const double moved = target(x.permuted(perm));
        const double dev = std::abs(moved - permutation_sign(perm) * base) / std::max(1.0, std::abs(base));
        if (!(dev <= 1e-10))
            throw NotAntisymmetricError("exact_reconstruction: target " + target.name() +
                                        " failed the antisymmetry spot check");
    }

    AnsatzModel model;
    model.n = target.n();
    model.directions = std::make_shared<const DirectionSet>(ys);
    model.gs.reserve(ys.k_count());
    for (std::size_t k = 0; k < ys.k_count(); ++k) model.gs.push_back(SymmetricFunction::exact(target, model.directions, k));
    return model;
}

double antisymmetry_deviation(const ConfigFunction& f, std::size_t n, std::size_t d, std::size_t trials,
                              std::uint64_t seed, std::size_t threads) {
    if (trials < 1) throw std::invalid_argument("antisymmetry check: trials must be >= 1");
    std::vector<double> dev(trials, 0.0);
    parallel_for(trials, threads, [&](std::size_t t) {
        Rng rng = make_rng(seed, t);
        const Configuration x = random_configuration(n, d, rng);
        const auto perm = random_permutation(n, rng);
        const double base = f(x);
        const double moved = f(x.permuted(perm));
        dev[t] = std::abs(moved - permutation_sign(perm) * base) / std::max(1.0, std::abs(base));
    });
    return *std::max_element(dev.begin(), dev.end());
}

double antisymmetry_check(const AnsatzModel& model, std::size_t trials, std::uint64_t seed, std::size_t threads) {
    return antisymmetry_deviation([&model](const Configuration& x) { return evaluate_ansatz(model, x); }, model.n,
                                  model.directions->d(), trials, seed, threads);
}

void write_model(const AnsatzModel& model, const std::string& direction_file, std::ostream& os) {
    if (model.gs.empty() || model.gs.front().kind() != SymmetricFunction::Kind::feature_model)
        throw std::invalid_argument("write_model: only feature models can be serialised");
    const auto spec = model.gs.front().feature_spec();
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << "directions " << direction_file << '\n';
    os << "particles " << model.n << '\n';
    os << "max_power " << spec->max_power << '\n';
    os << "pair_distances " << (spec->include_pair_distances ? 1 : 0) << '\n';
    os << "feature_directions\n";
    spec->directions.write(os);
    os << "weights " << model.gs.size() << ' ' << spec->dimension() << '\n' << std::setprecision(17);
    for (const auto& g : model.gs) {
        const auto& w = g.weights();
        for (std::size_t j = 0; j < w.size(); ++j) os << (j ? " " : "") << w[j];
        os << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

} // namespace antisym

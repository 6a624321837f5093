// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/targets.hpp>

#include <antisym/basis.hpp>
#include <antisym/determinant.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace antisym {

using nlohmann::json;

struct TargetOracle::Impl {
    TargetKind kind;
    std::size_t n, d;
    std::string name;
    std::string spec;
    ConfigFunction eval;
};

TargetOracle make_target(std::shared_ptr<const TargetOracle::Impl> impl) { return TargetOracle(std::move(impl)); }

namespace {

std::string describe(TargetKind kind, std::size_t n, std::size_t d) {
    return to_string(kind) + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
}

std::string spec_text(TargetKind kind, std::size_t n, std::size_t d, json parameters) {
    json j;
    j["kind"] = to_string(kind);
    j["n"] = n;
    j["d"] = d;
    j["parameters"] = std::move(parameters);
    return j.dump();
}

/**
 * sign(sigma) f(X_sigma) with sigma the lexicographic row order. Equal to f(X)
 * for antisymmetric f, but rounding no longer depends on the input order, so
 * the oracle is antisymmetric to the bit. Equal rows give exactly 0.
 */
template <typename F>
double in_canonical_order(const Configuration& x, F&& f) {
    std::vector<std::size_t> order(x.n());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto less = [&x](std::size_t a, std::size_t b) {
        const auto ra = x.row(a), rb = x.row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < order.size(); ++i)
        if (!less(order[i - 1], order[i])) return 0.0;
    return permutation_sign(order) * f(x.permuted(order));
}

json width_json(double w) { return std::isinf(w) ? json(nullptr) : json(w); }
double width_from_json(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace

std::string to_string(TargetKind kind) {
    switch (kind) {
    case TargetKind::vandermonde_envelope: return "vandermonde_envelope";
    case TargetKind::slater_closed_form: return "slater_closed_form";
    case TargetKind::brute_force: return "brute_force";
    case TargetKind::custom: return "custom";
    }
    return "custom";
}

TargetKind target_kind_from_string(const std::string& name) {
    if (name == "vandermonde_envelope") return TargetKind::vandermonde_envelope;
    if (name == "slater_closed_form") return TargetKind::slater_closed_form;
    if (name == "brute_force") return TargetKind::brute_force;
    if (name == "custom") return TargetKind::custom;
    throw std::invalid_argument("unknown target kind '" + name + "'");
}

double TargetOracle::operator()(const Configuration& x) const {
    if (x.n() != impl_->n || x.d() != impl_->d)
        throw std::invalid_argument("target " + impl_->name + ": configuration shape mismatch");
    return impl_->eval(x);
}

TargetKind TargetOracle::kind() const noexcept { return impl_->kind; }
std::size_t TargetOracle::n() const noexcept { return impl_->n; }
std::size_t TargetOracle::d() const noexcept { return impl_->d; }
const std::string& TargetOracle::name() const noexcept { return impl_->name; }
const std::string& TargetOracle::spec_json() const noexcept { return impl_->spec; }

TargetOracle TargetOracle::custom(std::size_t n, std::size_t d, std::string name, ConfigFunction f) {
    auto impl = std::make_shared<Impl>(Impl{TargetKind::custom, n, d, std::move(name), "{}", std::move(f)});
    return TargetOracle(std::move(impl));
}

double OrbitalSpec::operator()(std::span<const double> x) const {
    double value = 1.0;
    double sq = 0.0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        const int p = l < powers.size() ? powers[l] : 0;
        for (int e = 0; e < p; ++e) value *= x[l];
        sq += x[l] * x[l];
    }
    if (std::isfinite(width)) value *= std::exp(-sq / (2.0 * width * width));
    return value;
}

double SeedSpec::operator()(const Configuration& x) const {
    double phase_sum = phase;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < d; ++l) phase_sum += frequencies[i * d + l] * x(i, l);
    double bx = 0.0, gap_sq = 0.0;
    for (std::size_t l = 0; l < d; ++l) {
        bx += coupling_direction[l] * x(0, l);
        const double diff = x(0, l) - x(1, l);
        gap_sq += diff * diff;
    }
    const double envelope = std::exp(-x.squared_norm() / (2.0 * scale * scale));
    return envelope * std::cos(phase_sum) * (1.0 + coupling * std::tanh(bx * std::sqrt(gap_sq)));
}

SeedSpec SeedSpec::random(std::size_t n, std::size_t d, std::uint64_t seed) {
    Rng rng = make_rng(seed, 0x5eed);
    std::normal_distribution<double> normal(0.0, 1.0);
    SeedSpec s;
    s.n = n;
    s.d = d;
    s.frequencies.resize(n * d);
    for (double& v : s.frequencies) v = normal(rng);
    s.phase = std::uniform_real_distribution<double>(0.0, 6.283185307179586)(rng);
    s.coupling_direction = random_unit_vector(d, rng);
    s.coupling = 0.5;
    s.scale = 2.0;
    return s;
}

TargetOracle vandermonde_envelope_target(std::size_t n, std::vector<double> y_star, double scale) {
    double sq = 0.0;
    for (double v : y_star) sq += v * v;
    if (!(std::abs(std::sqrt(sq) - 1.0) <= 1e-12))
        throw std::invalid_argument("vandermonde_envelope_target: y_star must be a unit vector");
    if (!(scale > 0.0)) throw std::invalid_argument("vandermonde_envelope_target: scale must be positive");
    const std::size_t d = y_star.size();
    json params;
    params["y_star"] = y_star;
    params["scale"] = width_json(scale);
    auto eval = [y = std::move(y_star), scale](const Configuration& x) {
        const LogSigned core = tilde_f(y, x);
        if (core.is_zero()) return 0.0;
        const double damp = std::isinf(scale) ? 0.0 : x.squared_norm() / (2.0 * scale * scale);
        return core.sign * std::exp(core.logmag - damp);
    };
    auto impl = std::make_shared<TargetOracle::Impl>(TargetOracle::Impl{
        TargetKind::vandermonde_envelope, n, d, describe(TargetKind::vandermonde_envelope, n, d),
        spec_text(TargetKind::vandermonde_envelope, n, d, std::move(params)), std::move(eval)});
    return make_target(std::move(impl));
}

TargetOracle slater_closed_form_target(std::size_t d, std::vector<OrbitalSpec> orbitals) {
    const std::size_t n = orbitals.size();
    if (n < 2) throw std::invalid_argument("slater_closed_form_target: need at least two orbitals");
    json params;
    params["orbitals"] = json::array();
    for (const auto& o : orbitals) params["orbitals"].push_back({{"powers", o.powers}, {"width", width_json(o.width)}});
    auto eval = [orbs = std::move(orbitals)](const Configuration& x) {
        return in_canonical_order(x, [&orbs](const Configuration& c) {
            const std::size_t n = orbs.size();
            std::vector<double> m(n * n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) m[j * n + i] = orbs[i](c.row(j));
            return dense_determinant(m, n);
        });
    };
    auto impl = std::make_shared<TargetOracle::Impl>(TargetOracle::Impl{
        TargetKind::slater_closed_form, n, d, describe(TargetKind::slater_closed_form, n, d),
        spec_text(TargetKind::slater_closed_form, n, d, std::move(params)), std::move(eval)});
    return make_target(std::move(impl));
}

TargetOracle brute_force_target(SeedSpec seed) {
    if (seed.n > 8) throw std::invalid_argument("brute_force_target: N > 8 is not supported");
    if (seed.n < 2 || seed.d < 1 || seed.frequencies.size() != seed.n * seed.d ||
        seed.coupling_direction.size() != seed.d)
        throw std::invalid_argument("brute_force_target: inconsistent seed parameters");
    const std::size_t n = seed.n, d = seed.d;
    json params;
    params["frequencies"] = seed.frequencies;
    params["phase"] = seed.phase;
    params["coupling_direction"] = seed.coupling_direction;
    params["coupling"] = seed.coupling;
    params["scale"] = seed.scale;
    auto eval = [h = std::move(seed)](const Configuration& x) {
        return in_canonical_order(x, [&h](const Configuration& c) {
            return brute_force_antisymmetrize([&h](const Configuration& y) { return h(y); }, c);
        });
    };
    auto impl = std::make_shared<TargetOracle::Impl>(
        TargetOracle::Impl{TargetKind::brute_force, n, d, describe(TargetKind::brute_force, n, d),
                           spec_text(TargetKind::brute_force, n, d, std::move(params)), std::move(eval)});
    return make_target(std::move(impl));
}

double brute_force_antisymmetrize(const ConfigFunction& h, const Configuration& x) {
    const std::size_t n = x.n();
    if (n > 8) throw std::invalid_argument("brute_force_antisymmetrize: N > 8 is not supported");
    // The alternating sum vanishes identically on the coincidence set; skip the rounding residue.
    if (is_coincident(x, 0.0)) return 0.0;
    Configuration work = x;
    std::vector<std::size_t> counter(n, 0);
    int sign = 1;
    double acc = h(work);
    double terms = 1.0;
    std::size_t i = 1;
    while (i < n) {
        if (counter[i] < i) {
            work.swap_rows(i % 2 == 0 ? 0 : counter[i], i);
            sign = -sign;
            acc += sign * h(work);
            terms += 1.0;
            ++counter[i];
            i = 1;
        } else {
            counter[i] = 0;
            ++i;
        }
    }
    return acc / terms;
}

std::vector<OrbitalSpec> default_orbitals(std::size_t n, std::size_t d, double width) {
    std::vector<OrbitalSpec> out;
    std::vector<int> powers(d, 0);
    // Graded order: total degree 0, 1, 2, ...; within a degree, compositions
    // enumerated lexicographically with the first variable highest.
    for (int degree = 0; out.size() < n; ++degree) {
        std::function<void(std::size_t, int)> emit = [&](std::size_t var, int left) {
            if (out.size() >= n) return;
            if (var + 1 == d) {
                powers[var] = left;
                out.push_back({powers, width});
                return;
            }
            for (int p = left; p >= 0; --p) {
                powers[var] = p;
                emit(var + 1, left - p);
            }
        };
        emit(0, degree);
    }
    return out;
}

TargetOracle bundled_target(TargetKind kind, std::size_t n, std::size_t d, std::uint64_t seed) {
    switch (kind) {
    case TargetKind::vandermonde_envelope: {
        Rng rng = make_rng(seed, 0xabc);
        return vandermonde_envelope_target(n, random_unit_vector(d, rng), 2.0);
    }
    case TargetKind::slater_closed_form: return slater_closed_form_target(d, default_orbitals(n, d, 2.0));
    case TargetKind::brute_force: return brute_force_target(SeedSpec::random(n, d, seed));
    case TargetKind::custom: break;
    }
    throw std::invalid_argument("bundled_target: no bundled custom target");
}

TargetOracle target_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("target spec: ") + e.what());
    }
    try {
        const TargetKind kind = target_kind_from_string(j.at("kind").get<std::string>());
        const auto n = j.at("n").get<std::size_t>();
        const auto d = j.at("d").get<std::size_t>();
        const json params = j.value("parameters", json::object());
        const auto seed = params.value("seed", std::uint64_t{0});
        if (n < 2 || d < 1) throw std::invalid_argument("target spec: need n >= 2 and d >= 1");

        switch (kind) {
        case TargetKind::vandermonde_envelope: {
            if (!params.contains("y_star")) return bundled_target(kind, n, d, seed);
            auto y = params.at("y_star").get<std::vector<double>>();
            if (y.size() != d) throw std::invalid_argument("target spec: y_star length != d");
            const double scale = params.contains("scale") ? width_from_json(params.at("scale")) : 2.0;
            return vandermonde_envelope_target(n, std::move(y), scale);
        }
        case TargetKind::slater_closed_form: {
            if (!params.contains("orbitals")) {
                const double width = params.contains("width") ? width_from_json(params.at("width")) : 2.0;
                return slater_closed_form_target(d, default_orbitals(n, d, width));
            }
            std::vector<OrbitalSpec> orbs;
            for (const auto& o : params.at("orbitals"))
                orbs.push_back({o.at("powers").get<std::vector<int>>(),
                                o.contains("width") ? width_from_json(o.at("width"))
                                                    : std::numeric_limits<double>::infinity()});
            if (orbs.size() != n) throw std::invalid_argument("target spec: orbital count != n");
            return slater_closed_form_target(d, std::move(orbs));
        }
        case TargetKind::brute_force: {
            if (!params.contains("frequencies")) return bundled_target(kind, n, d, seed);
            SeedSpec s;
            s.n = n;
            s.d = d;
            s.frequencies = params.at("frequencies").get<std::vector<double>>();
            s.phase = params.value("phase", 0.0);
            s.coupling_direction = params.at("coupling_direction").get<std::vector<double>>();
            s.coupling = params.value("coupling", 0.5);
            s.scale = params.value("scale", 2.0);
            return brute_force_target(std::move(s));
        }
        case TargetKind::custom: break;
        }
        throw std::invalid_argument("target spec: custom targets cannot be loaded from a file");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("target spec: ") + e.what());
    }
}

} // namespace antisym

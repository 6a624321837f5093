// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/slater.hpp>

#include <antisym/parallel.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace antisym {

namespace {

void check_index(const DirectionSet& ys, std::size_t k, const Configuration& x) {
    if (k >= ys.k_count()) throw std::invalid_argument("direction index out of range");
    if (ys.d() != x.d()) throw std::invalid_argument("direction/configuration dimension mismatch");
}

// f_k(X)^2 Psi(X) in log domain.
LogSigned phi_k_log(const TargetOracle& target, const DirectionSet& ys, std::size_t k, const Configuration& x) {
    const BasisEvaluation be = evaluate_basis(ys, x);
    if (be.on_omega || be.denominator_vanished || be.raw[k].is_zero()) return LogSigned::zero();
    const LogSigned psi = LogSigned::from_real(target(x));
    if (psi.is_zero()) return LogSigned::zero();
    return {psi.sign, 2.0 * (be.raw[k].logmag - be.log_norm) + psi.logmag};
}

} // namespace

std::vector<double> OrbitalMatrix::orbital_values() const {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(permutation[i], i);
    return out;
}

double OrbitalMatrix::sparse_determinant() const noexcept {
    double det = permutation_sign;
    for (std::size_t i = 0; i < n; ++i) det *= (*this)(permutation[i], i);
    return det;
}

double phi_k(const TargetOracle& target, const DirectionSet& ys, std::size_t k, const Configuration& x) {
    check_index(ys, k, x);
    return phi_k_log(target, ys, k, x).to_real();
}

OrbitalMatrix build_orbital_matrix(const TargetOracle& target, const DirectionSet& ys, std::size_t k,
                                   const Configuration& x) {
    check_index(ys, k, x);
    const std::size_t n = x.n();
    OrbitalMatrix m;
    m.n = n;
    m.direction_index = k;
    m.entries.assign(n * n, 0.0);

    const SortParity sp = inversion_parity(project(ys[k], x));
    m.permutation = sp.permutation;
    m.permutation_sign = sp.sign;
    m.tied = sp.has_ties;
    if (m.tied) return m;

    const LogSigned sorted_phi = phi_k_log(target, ys, k, x.permuted(m.permutation));
    if (sorted_phi.is_zero()) return m;

    const double root = std::exp(sorted_phi.logmag / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) m.entries[m.permutation[i] * n + i] = root;
    m.entries[m.permutation[0] * n] = sorted_phi.sign * root;
    return m;
}

double matrix_symmetry_audit(const TargetOracle& target, const DirectionSet& ys, std::size_t k,
                             const Configuration& x, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("matrix_symmetry_audit: trials must be >= 1");
    const std::size_t n = x.n();
    const OrbitalMatrix base = build_orbital_matrix(target, ys, k, x);

    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = make_rng(seed, t);
        const std::size_t j = static_cast<std::size_t>(rng() % n);
        // Random permutation of the other particles; j stays in row j.
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) others.push_back(i);
        const auto shuffle = random_permutation(others.size(), rng);
        std::vector<std::size_t> sigma(n);
        sigma[j] = j;
        for (std::size_t a = 0, slot = 0; a < n; ++a) {
            if (a == j) continue;
            sigma[a] = others[shuffle[slot++]];
        }
        const OrbitalMatrix moved = build_orbital_matrix(target, ys, k, x.permuted(sigma));

        for (std::size_t col = 0; col < n; ++col) {
            const double before = base(j, col);
            const double after = moved(j, col);
            worst = std::max(worst, std::abs(before - after));
        }
    }
    return worst;
}

DecompositionResult decompose(const TargetOracle& target, const DirectionSet& ys, const Configuration& x,
                              std::size_t threads) {
    if (ys.d() != x.d() || target.d() != x.d() || target.n() != x.n())
        throw std::invalid_argument("decompose: shape mismatch");
    DecompositionResult out;
    out.per_determinant.assign(ys.k_count(), 0.0);
    parallel_for(ys.k_count(), threads, [&](std::size_t k) {
        out.per_determinant[k] = build_orbital_matrix(target, ys, k, x).sparse_determinant();
    });
    for (double v : out.per_determinant) out.total += v;
    out.target_value = target(x);
    out.residual = std::abs(out.total - out.target_value) / std::max(1.0, std::abs(out.target_value));
    return out;
}

void write_decomposition(const TargetOracle& target, const DirectionSet& ys, const Configuration& x,
                         std::ostream& os) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(17);
    double total = 0.0;
    for (std::size_t k = 0; k < ys.k_count(); ++k) {
        const OrbitalMatrix m = build_orbital_matrix(target, ys, k, x);
        const double det = m.sparse_determinant();
        total += det;
        os << "determinant " << k << '\n' << "permutation";
        for (std::size_t p : m.permutation) os << ' ' << p + 1;
        os << '\n' << "orbitals";
        for (double v : m.orbital_values()) os << ' ' << v;
        os << '\n' << "det " << det << '\n' << "end\n";
    }
    const double psi = target(x);
    os << "total " << total << '\n';
    os << "target " << psi << '\n';
    os << "residual " << std::abs(total - psi) / std::max(1.0, std::abs(psi)) << '\n';
    os.flags(flags);
    os.precision(prec);
}

} // namespace antisym

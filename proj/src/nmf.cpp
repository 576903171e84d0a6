// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/nmf.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hfret/errors.hpp"
#include "hfret/kernels.hpp"
#include "hfret/rng.hpp"

namespace hfret {

namespace {

constexpr double kEps = 1e-12;

void fill_uniform_open01(Matrix& m, Rng& rng) {
    double* p = m.data();
    for (std::size_t i = 0; i < m.size(); ++i)
        p[i] = rng.uniform_open01();
}

void check_nonnegative_finite(const Matrix& v, const char* what) {
    const double* p = v.data();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(p[i]) || p[i] < 0.0)
            throw std::invalid_argument(std::string(what) + ": entries must be finite and >= 0");
    }
}

#ifndef NDEBUG
bool all_nonnegative(const Matrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.data()[i] < 0.0)
            return false;
    return true;
}
#endif

// Multiplicative updates cannot revive an all-zero basis column; refill
// with eps so downstream projections stay well defined.
void floor_zero_columns(Matrix& w) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
        double maxv = 0.0;
        for (std::size_t r = 0; r < w.rows(); ++r)
            maxv = std::max(maxv, w(r, c));
        if (maxv == 0.0)
            for (std::size_t r = 0; r < w.rows(); ++r)
                w(r, c) = kEps;
    }
}

} // namespace

NmfResult nmf_factorize(const Matrix& v, std::size_t rank, std::size_t max_iters,
                        double tol, std::uint64_t seed) {
    const std::size_t k = v.rows();
    const std::size_t n = v.cols();
    if (rank == 0 || rank > std::min(k, n))
        throw RankTooLarge("nmf: rank must satisfy 1 <= R <= min(K, N)");
    if (max_iters == 0 || tol < 0.0)
        throw std::invalid_argument("nmf: max_iters must be positive and tol >= 0");
    check_nonnegative_finite(v, "nmf: V");

    Rng rng(seed);
    NmfResult res;
    res.basis = Matrix(k, rank);
    res.coefficients = Matrix(rank, n);
    fill_uniform_open01(res.basis, rng);
    fill_uniform_open01(res.coefficients, rng);
    Matrix& w = res.basis;
    Matrix& h = res.coefficients;

    double objective = frobenius_sq_diff(v, multiply(w, h));
    if (!std::isfinite(objective))
        throw NonFiniteObjective("nmf: objective not finite at initialization");
    res.objective.push_back(objective);

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // H <- H .* (W'V) ./ (W'W H + eps)
        Matrix wt_v = multiply_at_b(w, v);
        Matrix wtw_h = multiply(multiply_at_b(w, w), h);
        kernels::mul_ratio(h.data(), wt_v.data(), wtw_h.data(), kEps, h.size());
        assert(all_nonnegative(h));

        // W <- W .* (V H') ./ (W H H' + eps)
        Matrix v_ht = multiply_a_bt(v, h);
        Matrix w_hht = multiply(w, multiply_a_bt(h, h));
        kernels::mul_ratio(w.data(), v_ht.data(), w_hht.data(), kEps, w.size());
        assert(all_nonnegative(w));

        const double prev = objective;
        objective = frobenius_sq_diff(v, multiply(w, h));
        if (!std::isfinite(objective))
            throw NonFiniteObjective("nmf: objective not finite at sweep " + std::to_string(iter));
        if (objective > prev + 1e-10)
            throw NumericError("nmf: objective increased at sweep " + std::to_string(iter));
        res.objective.push_back(objective);
        if (prev <= 0.0)
            break;
        if ((prev - objective) / prev < tol)
            break;
    }

    floor_zero_columns(w);
    return res;
}

NmfProjection nmf_project(std::span<const double> histogram, const Matrix& basis,
                          std::size_t max_iters, double tol, std::uint64_t seed) {
    const std::size_t k = basis.rows();
    const std::size_t rank = basis.cols();
    if (histogram.size() != k)
        throw DimensionMismatch("nmf_project: histogram dimension " +
                                std::to_string(histogram.size()) + " != basis rows " +
                                std::to_string(k));
    if (max_iters == 0 || tol < 0.0)
        throw std::invalid_argument("nmf_project: max_iters must be positive and tol >= 0");

    // Fixed per-projection quantities.
    Matrix wtw = multiply_at_b(basis, basis); // R x R
    std::vector<double> wt_h(rank);
    for (std::size_t r = 0; r < rank; ++r)
        wt_h[r] = kernels::dot(basis.col(r), histogram.data(), k);

    Rng rng(seed);
    NmfProjection res;
    res.coefficients.resize(rank);
    for (double& c : res.coefficients)
        c = rng.uniform_open01();

    std::vector<double> reconstructed(k), denom(rank);
    auto objective_now = [&] {
        std::fill(reconstructed.begin(), reconstructed.end(), 0.0);
        for (std::size_t r = 0; r < rank; ++r)
            kernels::axpy(res.coefficients[r], basis.col(r), reconstructed.data(), k);
        return kernels::l2sqr(histogram.data(), reconstructed.data(), k);
    };

    double objective = objective_now();
    if (!std::isfinite(objective))
        throw NonFiniteObjective("nmf_project: objective not finite at initialization");
    res.objective.push_back(objective);

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // denom = W'W c
        for (std::size_t r = 0; r < rank; ++r)
            denom[r] = kernels::dot(wtw.col(r), res.coefficients.data(), rank);
        kernels::mul_ratio(res.coefficients.data(), wt_h.data(), denom.data(), kEps, rank);

        const double prev = objective;
        objective = objective_now();
        if (!std::isfinite(objective))
            throw NonFiniteObjective("nmf_project: objective not finite");
        res.objective.push_back(objective);
        if (prev <= 0.0)
            break;
        if ((prev - objective) / prev < tol)
            break;
    }
    return res;
}

double reconstruction_error(const Matrix& v, const Matrix& w, const Matrix& h) {
    if (w.cols() != h.rows() || v.rows() != w.rows() || v.cols() != h.cols())
        throw DimensionMismatch("reconstruction_error: shapes do not conform");
    return frobenius_sq_diff(v, multiply(w, h));
}

} // namespace hfret

// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstddef>

// Double-precision vector kernels behind the inner loops (k-means
// assignment, NMF updates, kNN graph distances, cosine scores).
// Scalar reference implementations are always available; on x86-64 an
// AVX2+FMA variant is compiled in and selected at runtime when the CPU
// supports it. Backends are equivalence-tested against each other.

namespace hfret::kernels {

enum class Backend { Scalar, Avx2 };

namespace scalar {
double dot(const double* x, const double* y, std::size_t n) noexcept;
double l2sqr(const double* x, const double* y, std::size_t n) noexcept;
// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;
// x[i] *= num[i] / (den[i] + eps)
void mul_ratio(double* x, const double* num, const double* den, double eps,
               std::size_t n) noexcept;
} // namespace scalar

#ifdef HFRET_WITH_AVX2
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n) noexcept;
double l2sqr(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;
void mul_ratio(double* x, const double* num, const double* den, double eps,
               std::size_t n) noexcept;
} // namespace avx2
#endif

bool backend_supported(Backend b) noexcept;
// Selects the backend for all dispatched calls; returns false (and
// leaves the selection unchanged) if the CPU does not support it.
bool set_backend(Backend b) noexcept;
Backend active_backend() noexcept;
const char* backend_name() noexcept;

double dot(const double* x, const double* y, std::size_t n) noexcept;
double l2sqr(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double a, const double* x, double* y, std::size_t n) noexcept;
void mul_ratio(double* x, const double* num, const double* den, double eps,
               std::size_t n) noexcept;

} // namespace hfret::kernels

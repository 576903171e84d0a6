// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/kernels.hpp"

namespace hfret::kernels {

namespace {

struct Vtable {
    Backend backend;
    const char* name;
    double (*dot)(const double*, const double*, std::size_t) noexcept;
    double (*l2sqr)(const double*, const double*, std::size_t) noexcept;
    void (*axpy)(double, const double*, double*, std::size_t) noexcept;
    void (*mul_ratio)(double*, const double*, const double*, double, std::size_t) noexcept;
};

constexpr Vtable kScalarTable{Backend::Scalar, "scalar",    scalar::dot,
                              scalar::l2sqr,   scalar::axpy, scalar::mul_ratio};

#ifdef HFRET_WITH_AVX2
constexpr Vtable kAvx2Table{Backend::Avx2, "avx2",     avx2::dot,
                            avx2::l2sqr,   avx2::axpy, avx2::mul_ratio};
#endif

bool cpu_has_avx2() noexcept {
#if defined(HFRET_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Vtable& active_table() noexcept {
#ifdef HFRET_WITH_AVX2
    static Vtable table = cpu_has_avx2() ? kAvx2Table : kScalarTable;
#else
    static Vtable table = kScalarTable;
#endif
    return table;
}

} // namespace

bool backend_supported(Backend b) noexcept {
    if (b == Backend::Scalar)
        return true;
    return cpu_has_avx2();
}

bool set_backend(Backend b) noexcept {
    if (!backend_supported(b))
        return false;
#ifdef HFRET_WITH_AVX2
    active_table() = (b == Backend::Avx2) ? kAvx2Table : kScalarTable;
#else
    active_table() = kScalarTable;
#endif
    return true;
}

Backend active_backend() noexcept { return active_table().backend; }

const char* backend_name() noexcept { return active_table().name; }

double dot(const double* x, const double* y, std::size_t n) noexcept {
    return active_table().dot(x, y, n);
}

double l2sqr(const double* x, const double* y, std::size_t n) noexcept {
    return active_table().l2sqr(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) noexcept {
    active_table().axpy(a, x, y, n);
}

void mul_ratio(double* x, const double* num, const double* den, double eps,
               std::size_t n) noexcept {
    active_table().mul_ratio(x, num, den, eps, n);
}

} // namespace hfret::kernels

#pragma once

#include <cstddef>
#include <cstdint>

namespace ogc::kernels {

/// y[i] <- (y[i] + c * x[i]) mod p for i < n. Requires p < 2^31 and all of
/// x[i], y[i], c already reduced mod p.
using AxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);

bool cpu_has_avx2();

/// AVX2 when the CPU supports it, unless OGC_FORCE_SCALAR is set.
AxpyFn select_axpy();
const char* selected_kernel_name();

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace ogc::kernels

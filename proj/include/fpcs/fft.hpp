#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "fpcs/error.hpp"

namespace fpcs::detail {

/// In-place iterative radix-2 FFT, forward convention sum_j a_j e^{-2pi i jk/n}.
/// Inverse applies the conjugate kernel and the 1/n factor. Twiddles are taken
/// directly from polar() so rounding does not accumulate across a stage.
inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw invalid_input("fft: size must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w =
                    std::polar(1.0, base * static_cast<double>(k));
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) {
            x *= inv_n;
        }
    }
}

/// Angular wavenumbers k_j = 2 pi j' / L with j' = j for j < n/2, j - n else
/// (FFT bin ordering).
inline std::vector<double> fft_wavenumbers(std::size_t n, double length) {
    std::vector<double> k(n);
    const double dk = 2.0 * std::numbers::pi / length;
    for (std::size_t j = 0; j < n; ++j) {
        const auto sj = static_cast<std::ptrdiff_t>(j);
        const auto half = static_cast<std::ptrdiff_t>(n / 2);
        k[j] = dk * static_cast<double>(sj < half ? sj : sj - static_cast<std::ptrdiff_t>(n));
    }
    return k;
}

}  // namespace fpcs::detail

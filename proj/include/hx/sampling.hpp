#ifndef HX_SAMPLING_HPP
#define HX_SAMPLING_HPP

#include <random>

#include "hx/algebra.hpp"

namespace hx {

/// Uniform unit on the imaginary sphere via normalized Gaussians.
inline ImaginaryUnit random_imaginary_unit(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
        HyperNum v(dim);
        for (int i = 1; i < dim; ++i) v[i] = g(rng);
        const double n = norm(v);
        if (n > 1e-9) return ImaginaryUnit(v * (1.0 / n));
    }
}

inline HyperNum random_hypernum(int dim, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    HyperNum v(dim);
    for (int i = 0; i < dim; ++i) v[i] = g(rng);
    return v;
}

inline SlicePoint random_slice_point(int dim, std::mt19937_64& rng,
                                     double x_lo, double x_hi,
                                     double y_lo, double y_hi) {
    std::uniform_real_distribution<double> ux(x_lo, x_hi), uy(y_lo, y_hi);
    const double y = uy(rng);
    return SlicePoint(ux(rng), y < 0.0 ? -y : y, random_imaginary_unit(dim, rng));
}

} // namespace hx

#endif

#ifndef GFW_RANDOM_STATES_HPP
#define GFW_RANDOM_STATES_HPP

#include <cstdint>
#include <random>

#include "gfw/pauli.hpp"

namespace gfw {

// Haar-style pure state: normalized complex Gaussian vector.
inline StateVector make_random_pure(const Ordering& ord, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(ord.dim());
    for (int i = 0; i < ord.dim(); ++i) v(i) = Cx(gauss(gen), gauss(gen));
    return normalized(StateVector{v, ord});
}

// Mixed state from a normalized Wishart product G G^dag.
inline DensityMatrix make_random_density(const Ordering& ord, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = ord.dim();
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Cx(gauss(gen), gauss(gen));
    Eigen::MatrixXcd w = g * g.adjoint();
    return {w / w.trace().real(), ord};
}

}  // namespace gfw

#endif

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lanfa {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: dimension mismatches, bad parameters, unusable files.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A function or norm was requested outside its mathematical domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A shift z fell too close to an eigenvalue for a resolvent-type formula.
class SingularShiftError : public Error {
public:
    SingularShiftError(const std::string& msg, double ritz)
        : Error(msg), ritz_value(ritz) {}
    double ritz_value;
};

/// Quadrature or iterative process failed to converge / produced non-finite values.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

namespace rng {

/// Counter-based generator: a SplitMix64 finalizer applied to seed/counter.
/// Stateless, so any element of a stream can be generated independently;
/// ports in other languages reproduce the same streams.
inline std::uint64_t hash64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Uniform double in (0,1]; never returns exactly 0 (safe for log in Box-Muller).
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>((hash64(seed, counter) >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on counters (2c, 2c+1).
inline double gaussian(std::uint64_t seed, std::uint64_t counter) {
    const double u1 = uniform(seed, 2 * counter);
    const double u2 = uniform(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Vector of iid standard normals; `stream` offsets the counter space so
/// several independent vectors can share one seed.
inline Vector gaussian_vector(std::uint64_t seed, Index n, std::uint64_t stream = 0) {
    Vector v(n);
    for (Index i = 0; i < n; ++i)
        v[i] = gaussian(seed, stream * 0x100000000ULL + static_cast<std::uint64_t>(i));
    return v;
}

} // namespace rng

} // namespace lanfa

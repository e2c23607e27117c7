#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "distspec/distance.hpp"
#include "distspec/graph.hpp"

namespace distspec {

/// Relative factor for sign classification: a value v counts as zero when
/// |v| <= kSignTolerance * n * max|value|.
inline constexpr double kSignTolerance = 1e-8;

/// Relative factor used only to group nearly equal values for display.
inline constexpr double kDisplayClusterTolerance = 1e-7;

class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Eigenvalues sorted non-increasing.
template <typename Scalar>
class BasicSpectrum {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    BasicSpectrum() = default;

    explicit BasicSpectrum(Vector values) : values_(std::move(values))
    {
        std::stable_sort(values_.data(), values_.data() + values_.size(), std::greater<Scalar>());
    }

    Eigen::Index size() const noexcept { return values_.size(); }
    Scalar operator[](Eigen::Index k) const { return values_(k); }
    const Vector& values() const noexcept { return values_; }

    Scalar largest() const { return values_(0); }
    Scalar smallest() const { return values_(values_.size() - 1); }
    Scalar sum() const { return values_.sum(); }
    Scalar abs_sum() const { return values_.cwiseAbs().sum(); }
    Scalar max_abs() const { return values_.size() ? values_.cwiseAbs().maxCoeff() : Scalar(0); }

    Scalar sign_tolerance() const
    {
        return Scalar(kSignTolerance) * Scalar(values_.size()) * max_abs();
    }

    /// (value, multiplicity) groups for printing. Never used for classification.
    std::vector<std::pair<Scalar, int>> clusters() const
    {
        std::vector<std::pair<Scalar, int>> out;
        const Scalar tol = Scalar(kDisplayClusterTolerance) * std::max(Scalar(1), max_abs());
        for (Eigen::Index k = 0; k < values_.size(); ++k) {
            if (!out.empty() && std::abs(out.back().first - values_(k)) <= tol)
                ++out.back().second;
            else
                out.emplace_back(values_(k), 1);
        }
        return out;
    }

private:
    Vector values_;
};

using Spectrum = BasicSpectrum<double>;

template <typename Scalar>
struct SymmetricEigensystem {
    BasicSpectrum<Scalar> values;
    /// Column k is a unit eigenvector for values[k].
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
};

namespace detail {

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix is not square: " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
}

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace detail

/**
 * All eigenvalues of a real symmetric matrix.
 *
 * Householder reduction to tridiagonal form followed by implicit symmetric QR
 * with Wilkinson shifts. The iteration order is fixed, so repeated calls on the
 * same input give bit-identical output.
 */
template <typename Derived>
BasicSpectrum<typename Derived::Scalar> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    detail::require_symmetric(m);
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<detail::DenseMatrix<Scalar>> solver(m.derived(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("symmetric eigensolver did not converge on a " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.rows()) + " matrix");
    return BasicSpectrum<Scalar>(solver.eigenvalues());
}

template <typename Derived>
SymmetricEigensystem<typename Derived::Scalar> symmetric_eigensystem(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    detail::require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<detail::DenseMatrix<Scalar>> solver(m.derived(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("symmetric eigensolver did not converge on a " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.rows()) + " matrix");
    // Eigen returns ascending order; flip both values and vectors.
    return {BasicSpectrum<Scalar>(solver.eigenvalues().reverse()), solver.eigenvectors().rowwise().reverse()};
}

/// Sum of singular values; for a symmetric matrix these are the |eigenvalues|.
template <typename Derived>
typename Derived::Scalar singular_value_sum(const Eigen::MatrixBase<Derived>& m)
{
    return symmetric_eigenvalues(m).abs_sum();
}

Spectrum distance_spectrum(const DistanceMatrix& d);
Spectrum distance_spectrum(const Graph& g);

/// Distance spectral radius; 0 for the one-vertex graph.
double spectral_radius(const Graph& g);
double distance_energy(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g);
double graph_energy(const Graph& g);

/// Result of a sign classification that may hit numerically zero values.
struct SignCount {
    int count = 0;
    /// Some value sat inside the zero band and could not be confirmed as an
    /// exact zero; the count is then a best guess.
    bool boundary = false;
};

/// Values strictly above the sign tolerance. Anything inside the band is
/// reported as boundary since the spectrum alone cannot tell it from zero.
SignCount count_positive_d_eigenvalues(const Spectrum& s);

/// Same count, but near-zero values are confirmed against the exact integer
/// nullity of D; if the band population matches the nullity no boundary is raised.
SignCount count_positive_d_eigenvalues(const Spectrum& s, const DistanceMatrix& d);

struct LeastEigenvalueCheck {
    bool holds = false;
    bool boundary = false;
};

/// Decides lambda_min(A) >= -2, settling values within tolerance of -2 by the
/// exact nullity of A + 2I.
LeastEigenvalueCheck least_adjacency_eigenvalue_at_least_minus_two(const Graph& g, const Spectrum& adjacency);

/// Unit Perron vector of D(G) with all entries positive.
Eigen::VectorXd perron_vector(const Graph& g);

/// D-spectrum of an r-regular graph of diameter <= 2 read off its adjacency
/// spectrum: 2n - r - 2 together with -lambda_k - 2 for k >= 2.
Spectrum regular_diam2_distance_spectrum(const Graph& g);

/// Closed form for K_{p,q}: p+q-2 +- sqrt(p^2 - pq + q^2), and -2 with multiplicity p+q-2.
Spectrum complete_bipartite_distance_spectrum(int p, int q);

}  // namespace distspec

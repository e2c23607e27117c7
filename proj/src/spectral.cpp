#include "distspec/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "distspec/exact_rank.hpp"

namespace distspec {

Spectrum distance_spectrum(const DistanceMatrix& d)
{
    return symmetric_eigenvalues(d.cast<double>());
}

Spectrum distance_spectrum(const Graph& g)
{
    return distance_spectrum(distance_matrix(g));
}

double spectral_radius(const Graph& g)
{
    return distance_spectrum(g).largest();
}

double distance_energy(const Graph& g)
{
    return distance_spectrum(g).abs_sum();
}

Spectrum adjacency_spectrum(const Graph& g)
{
    return symmetric_eigenvalues(g.adjacency_matrix<double>());
}

double graph_energy(const Graph& g)
{
    return adjacency_spectrum(g).abs_sum();
}

namespace {

struct Band {
    int above = 0;
    int inside = 0;
};

Band classify_around(const Spectrum& s, double centre, double tol)
{
    Band b;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s[k] > centre + tol)
            ++b.above;
        else if (s[k] >= centre - tol)
            ++b.inside;
    }
    return b;
}

}  // namespace

SignCount count_positive_d_eigenvalues(const Spectrum& s)
{
    const Band b = classify_around(s, 0.0, s.sign_tolerance());
    return {b.above, b.inside > 0};
}

SignCount count_positive_d_eigenvalues(const Spectrum& s, const DistanceMatrix& d)
{
    const Band b = classify_around(s, 0.0, s.sign_tolerance());
    if (b.inside == 0) return {b.above, false};
    const auto nullity = exact_nullity(d.matrix());
    return {b.above, !(nullity && *nullity == b.inside)};
}

LeastEigenvalueCheck least_adjacency_eigenvalue_at_least_minus_two(const Graph& g, const Spectrum& adjacency)
{
    const double tol = kSignTolerance * static_cast<double>(adjacency.size()) * std::max(1.0, adjacency.max_abs());
    const double least = adjacency.smallest();
    if (least > -2.0 + tol) return {true, false};
    if (least < -2.0 - tol) return {false, false};

    // Every value in the band around -2 must be exactly -2 for the test to be decided.
    const Band b = classify_around(adjacency, -2.0, tol);
    IntMatrix shifted = g.adjacency_matrix<int>();
    shifted.diagonal().array() += 2;
    const auto nullity = exact_nullity(shifted);
    return {true, !(nullity && *nullity == b.inside)};
}

Eigen::VectorXd perron_vector(const Graph& g)
{
    if (g.order() < 2) throw GraphError("Perron vector needs at least two vertices");
    const auto d = distance_matrix(g);
    const auto system = symmetric_eigensystem(d.cast<double>());
    Eigen::VectorXd x = system.vectors.col(0);
    if (x.sum() < 0) x = -x;
    if ((x.array() <= 0.0).any())
        throw std::logic_error("Perron vector has a non-positive entry; eigensolver result is inconsistent");
    return x;
}

Spectrum regular_diam2_distance_spectrum(const Graph& g)
{
    if (!is_regular(g)) throw GraphError("shortcut spectrum needs a regular graph");
    const int n = g.order();
    if (n > 1 && distance_matrix(g).diameter() > 2)
        throw GraphError("shortcut spectrum needs diameter at most two");
    const int r = g.degree(0);
    const Spectrum a = adjacency_spectrum(g);
    Eigen::VectorXd values(n);
    values(0) = 2.0 * n - r - 2.0;
    for (int k = 1; k < n; ++k) values(k) = -a[k] - 2.0;
    if (n == 1) values(0) = 0.0;
    return Spectrum(std::move(values));
}

Spectrum complete_bipartite_distance_spectrum(int p, int q)
{
    if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite graph needs p, q >= 1");
    const int n = p + q;
    const double centre = n - 2.0;
    const double radius = std::sqrt(static_cast<double>(p) * p - static_cast<double>(p) * q + static_cast<double>(q) * q);
    Eigen::VectorXd values = Eigen::VectorXd::Constant(n, -2.0);
    values(0) = centre + radius;
    values(1) = centre - radius;
    return Spectrum(std::move(values));
}

}  // namespace distspec

#pragma once

#include <vector>

#include <Eigen/Core>

#include "distspec/graph.hpp"

namespace distspec {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// All-pairs hop counts of a connected graph, with per-vertex row sums.
class DistanceMatrix {
public:
    explicit DistanceMatrix(IntMatrix d);

    int order() const noexcept { return static_cast<int>(d_.rows()); }
    int operator()(int i, int j) const { return d_(i, j); }
    const IntMatrix& matrix() const noexcept { return d_; }

    /// D_i = sum_j d_ij.
    const std::vector<long long>& row_sums() const noexcept { return row_sums_; }
    bool equal_row_sums() const;

    int diameter() const;
    std::vector<int> eccentricities() const;
    long long wiener() const;

    /// sum over ordered pairs of d_ij^2, i.e. the trace of D^2.
    long long sum_of_squares() const;

    template <typename Scalar>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> cast() const
    {
        return d_.cast<Scalar>();
    }

private:
    IntMatrix d_;
    std::vector<long long> row_sums_;
};

/// BFS from every vertex. Throws DisconnectedGraphError naming an unreached pair.
DistanceMatrix distance_matrix(const Graph& g);

int diameter(const Graph& g);
std::vector<int> eccentricities(const Graph& g);
long long wiener(const Graph& g);

}  // namespace distspec

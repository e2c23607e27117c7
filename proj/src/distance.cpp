#include "distspec/distance.hpp"

#include <algorithm>
#include <numeric>

namespace distspec {

DistanceMatrix::DistanceMatrix(IntMatrix d) : d_(std::move(d)), row_sums_(d_.rows(), 0)
{
    for (Eigen::Index i = 0; i < d_.rows(); ++i)
        for (Eigen::Index j = 0; j < d_.cols(); ++j) row_sums_[i] += d_(i, j);
}

bool DistanceMatrix::equal_row_sums() const
{
    return std::adjacent_find(row_sums_.begin(), row_sums_.end(), std::not_equal_to<>()) == row_sums_.end();
}

int DistanceMatrix::diameter() const
{
    return d_.size() == 0 ? 0 : d_.maxCoeff();
}

std::vector<int> DistanceMatrix::eccentricities() const
{
    std::vector<int> ecc(d_.rows());
    for (Eigen::Index i = 0; i < d_.rows(); ++i) ecc[i] = d_.row(i).maxCoeff();
    return ecc;
}

long long DistanceMatrix::wiener() const
{
    return std::accumulate(row_sums_.begin(), row_sums_.end(), 0LL) / 2;
}

long long DistanceMatrix::sum_of_squares() const
{
    return d_.cast<long long>().array().square().sum();
}

DistanceMatrix distance_matrix(const Graph& g)
{
    const int n = g.order();
    IntMatrix d = IntMatrix::Constant(n, n, -1);
    std::vector<int> frontier, next;
    for (int s = 0; s < n; ++s) {
        d(s, s) = 0;
        frontier.assign(1, s);
        int level = 0;
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (int u : frontier)
                for (int v : g.neighbors(u))
                    if (d(s, v) < 0) {
                        d(s, v) = level;
                        next.push_back(v);
                    }
            frontier.swap(next);
        }
        for (int v = 0; v < n; ++v)
            if (d(s, v) < 0) throw DisconnectedGraphError(s, v);
    }
    return DistanceMatrix(std::move(d));
}

int diameter(const Graph& g)
{
    return distance_matrix(g).diameter();
}

std::vector<int> eccentricities(const Graph& g)
{
    return distance_matrix(g).eccentricities();
}

long long wiener(const Graph& g)
{
    return distance_matrix(g).wiener();
}

}  // namespace distspec

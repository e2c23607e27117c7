#include "distspec/exact_rank.hpp"

#include <utility>
#include <vector>

namespace distspec {

namespace {

__extension__ typedef __int128 Wide;

bool mul_checked(Wide a, Wide b, Wide& out) { return !__builtin_mul_overflow(a, b, &out); }
bool sub_checked(Wide a, Wide b, Wide& out) { return !__builtin_sub_overflow(a, b, &out); }

}  // namespace

std::optional<int> exact_rank(const IntMatrix& m)
{
    const auto rows = static_cast<int>(m.rows());
    const auto cols = static_cast<int>(m.cols());
    std::vector<std::vector<Wide>> a(rows, std::vector<Wide>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j);

    int rank = 0;
    Wide prev_pivot = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        const Wide p = a[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                // a_ij <- (p * a_ij - a_i,col * a_rank,j) / prev_pivot, exact division.
                Wide lhs, rhs, diff;
                if (!mul_checked(p, a[i][j], lhs) || !mul_checked(a[i][col], a[rank][j], rhs) ||
                    !sub_checked(lhs, rhs, diff))
                    return std::nullopt;
                a[i][j] = diff / prev_pivot;
            }
            a[i][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

std::optional<int> exact_nullity(const IntMatrix& m)
{
    const auto r = exact_rank(m);
    if (!r) return std::nullopt;
    return static_cast<int>(m.cols()) - *r;
}

}  // namespace distspec

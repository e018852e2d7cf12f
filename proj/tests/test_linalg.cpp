#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

namespace {

using Rational = boost::multiprecision::cpp_rational;

SparseMatrix fromDense(const std::vector<std::vector<std::int64_t>>& dense) {
    SparseMatrix m;
    m.columns = dense.empty() ? 0 : dense.front().size();
    for (const auto& row : dense) {
        SparseMatrix::Row r;
        for (std::uint32_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0) {
                r.emplace_back(c, row[c]);
            }
        }
        m.rows.push_back(std::move(r));
    }
    return m;
}

// Dense Gaussian elimination over exact rationals.
std::size_t oracleRank(const std::vector<std::vector<std::int64_t>>& dense) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : dense) {
        a.emplace_back(row.begin(), row.end());
    }
    std::size_t rank = 0;
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) {
                a[r][k] -= f * a[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::rationals().name() == "Q");
    CHECK(FieldSpec::prime(2).name() == "GF(2)");
    CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647U);
    CHECK_THROWS_AS(FieldSpec::prime(4), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::prime(1), InvalidArgument);
}

TEST_CASE("rank depends on the characteristic") {
    const auto m = fromDense({{2, 0}, {0, 3}});
    CHECK(rank(m, Q) == 2);
    CHECK(rank(m, F2) == 1);
    CHECK(rank(m, FieldSpec::prime(3)) == 1);
    CHECK(rank(m, FieldSpec::prime(5)) == 2);
    CHECK(rank(fromDense({{1, 1}, {1, -1}}), F2) == 1);
    CHECK(rank(fromDense({{1, 1}, {1, -1}}), Q) == 2);
    CHECK(rank(SparseMatrix{}, Q) == 0);
}

TEST_CASE("random integer matrices match a rational oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + rng() % 7;
        const std::size_t c = 1 + rng() % 7;
        std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(c));
        for (auto& row : d) {
            for (auto& x : row) {
                x = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % 7) - 3 : 0;
            }
        }
        // Plant dependent rows now and then.
        if (r >= 2 && rng() % 2 == 0) {
            for (std::size_t k = 0; k < c; ++k) {
                d[r - 1][k] = 2 * d[0][k] - d[r - 2][k];
            }
        }
        const auto m = fromDense(d);
        CHECK(rank(m, Q) == oracleRank(d));
        CHECK(rankRationalBig(m) == oracleRank(d));
    }
}

TEST_CASE("large entries fall back to big integers") {
    const std::int64_t big = std::int64_t{1} << 40;
    const std::vector<std::vector<std::int64_t>> d = {
        {big + 1, big - 3, 7, big},
        {big - 5, big + 11, big, 3},
        {13, big, big + 17, big - 1},
        {2 * (big + 1) - (big - 5), 2 * (big - 3) - (big + 11), 14 - big, 2 * big - 3},
    };
    const auto m = fromDense(d);
    CHECK(oracleRank(d) == 3);
    CHECK(rank(m, Q) == 3);
    CHECK(rankRationalBig(m) == 3);
}

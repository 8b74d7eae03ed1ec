#include "mcde/error.hpp"
#include "mcde/rank_index.hpp"
#include "mcde/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mcde;

namespace {

void check_invariants(const DimensionIndex& idx, std::span<const double> column) {
    const std::size_t n = column.size();
    REQUIRE(idx.size() == n);

    std::vector<std::uint32_t> sorted_ids = idx.row_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    for (std::size_t i = 0; i < n; ++i) REQUIRE(sorted_ids[i] == i);

    for (std::size_t j = 1; j < n; ++j) {
        REQUIRE(column[idx.row_ids[j - 1]] <= column[idx.row_ids[j]]);
        REQUIRE(idx.cum_corrections[j - 1] <= idx.cum_corrections[j]);
    }
    const double rank_sum = std::accumulate(idx.adjusted_ranks.begin(), idx.adjusted_ranks.end(), 0.0);
    CHECK(rank_sum == static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
    CHECK(idx.cum_corrections.back() == oracle::tie_sum(column));
}

}  // namespace

TEST_CASE("index of a column without ties") {
    const std::vector<double> col = {0.3, 0.1, 0.2};
    const auto idx = index_column(col);
    CHECK(idx.row_ids == std::vector<std::uint32_t>{1, 2, 0});
    CHECK(idx.adjusted_ranks == std::vector<double>{0, 1, 2});
    CHECK(idx.cum_corrections == std::vector<double>{0, 0, 0});
}

TEST_CASE("tie group at the last position") {
    const std::vector<double> col = {0.5, 0.5, 0.1};
    const auto idx = index_column(col);
    CHECK(idx.row_ids[0] == 2);
    CHECK(((idx.row_ids[1] == 0 && idx.row_ids[2] == 1) ||
           (idx.row_ids[1] == 1 && idx.row_ids[2] == 0)));
    CHECK(idx.adjusted_ranks == std::vector<double>{0, 1.5, 1.5});
    CHECK(idx.cum_corrections == std::vector<double>{0, 6, 6});
}

TEST_CASE("constant column is one tie group") {
    const std::vector<double> col(4, 7.25);
    const auto idx = index_column(col);
    CHECK(idx.adjusted_ranks == std::vector<double>(4, 1.5));
    CHECK(idx.cum_corrections.back() == 60.0);
    CHECK(idx.correction_before(0) == 0.0);
}

TEST_CASE("single row") {
    const std::vector<double> col = {3.0};
    const auto idx = index_column(col);
    CHECK(idx.row_ids == std::vector<std::uint32_t>{0});
    CHECK(idx.adjusted_ranks == std::vector<double>{0});
    CHECK(idx.cum_corrections == std::vector<double>{0});
}

TEST_CASE("adjusted ranks and corrections match the counting oracle") {
    CounterRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 300));
        const auto levels = rng.uniform_int(1, 2 * n);
        std::vector<double> col(n);
        for (auto& v : col) v = static_cast<double>(rng.uniform_int(0, levels)) * 0.37 - 5.0;
        const auto idx = index_column(col);
        check_invariants(idx, col);

        const auto expected = oracle::average_ranks(col);
        for (std::size_t j = 0; j < n; ++j) {
            const auto row = idx.row_ids[j];
            REQUIRE(idx.adjusted_ranks[j] == expected[row]);
            REQUIRE(idx.cum_corrections[j] == oracle::tie_sum_up_to(col, col[row]));
        }
    }
}

TEST_CASE("within-tie order does not change ranks or corrections") {
    // Same multiset of values in two different row orders.
    std::vector<double> a = {2, 1, 2, 3, 1, 2, 2, 5};
    std::vector<double> b = a;
    std::reverse(b.begin(), b.end());
    const auto ia = index_column(a);
    const auto ib = index_column(b);
    CHECK(ia.adjusted_ranks == ib.adjusted_ranks);
    CHECK(ia.cum_corrections == ib.cum_corrections);
}

TEST_CASE("tie order is decorrelated across columns with identical ties") {
    // Two binary columns with the same value pattern but different content
    // elsewhere must not share one within-tie order.
    std::vector<double> a(200, 0.0);
    std::vector<double> b(200, 0.0);
    a[0] = 1.0;
    b[1] = 1.0;
    const auto ia = index_column(a);
    const auto ib = index_column(b);
    std::size_t same = 0;
    for (std::size_t j = 0; j < 199; ++j) same += ia.row_ids[j] == ib.row_ids[j];
    CHECK(same < 20);
}

TEST_CASE("RankIndex builds every column and projects without copying") {
    const Dataset ds({{3, 1, 2}, {1, 1, 1}, {9, 8, 7}});
    const RankIndex index(ds, 3);
    CHECK(index.rows() == 3);
    CHECK(index.dims() == 3);
    CHECK(index.dim(2).row_ids == std::vector<std::uint32_t>{2, 1, 0});

    const std::vector<std::size_t> dims = {2, 0};
    const auto sub = index.project(dims);
    CHECK(sub.dims() == 2);
    CHECK(&sub.dim(0) == &index.dim(2));
    CHECK(&sub.dim(1) == &index.dim(0));

    const std::vector<std::size_t> dup = {0, 0};
    CHECK_THROWS_AS(index.project(dup), ArgumentError);
    CHECK_THROWS_AS(index.dim(3), ArgumentError);
}

TEST_CASE("serial and threaded construction agree") {
    CounterRng rng(3);
    std::vector<std::vector<double>> cols(6, std::vector<double>(500));
    for (auto& c : cols)
        for (auto& v : c) v = std::floor(rng.uniform() * 40.0);
    const Dataset ds(cols);
    const RankIndex serial(ds, 1);
    const RankIndex threaded(ds, 4);
    for (std::size_t j = 0; j < ds.cols(); ++j) {
        CHECK(serial.dim(j).row_ids == threaded.dim(j).row_ids);
        CHECK(serial.dim(j).adjusted_ranks == threaded.dim(j).adjusted_ranks);
        CHECK(serial.dim(j).cum_corrections == threaded.dim(j).cum_corrections);
    }
}

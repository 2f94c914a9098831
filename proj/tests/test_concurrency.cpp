#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <thread>

#include "test_util.hpp"

using namespace massign;
using namespace testutil;

TEST_CASE("graded-basis memo: many readers observe one shared fill") {
    const GrassmannSpec spec{7, 3};
    constexpr int kThreads = 8;
    std::vector<std::shared_ptr<const GradedBasis>> seen(kThreads);
    std::vector<std::thread> pool;
    std::atomic<int> gate{0};
    for (int t = 0; t < kThreads; ++t)
        pool.emplace_back([&, t] {
            gate.fetch_add(1);
            while (gate.load() < kThreads) {}
            for (long long deg = 0; deg <= top_degree(spec); ++deg) {
                auto gb = graded_basis(spec, deg);
                CHECK(static_cast<unsigned long long>(gb->rank()) == q_binomial(spec.d, spec.ell, deg));
            }
            seen[static_cast<std::size_t>(t)] = graded_basis(spec, 6);
        });
    for (auto& th : pool) th.join();
    for (int t = 1; t < kThreads; ++t) CHECK(seen[static_cast<std::size_t>(t)].get() == seen[0].get());
}

TEST_CASE("dickson memo under concurrent access") {
    constexpr int kThreads = 8;
    std::vector<std::shared_ptr<const DicksonFamily>> seen(kThreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < kThreads; ++t)
        pool.emplace_back([&, t] {
            auto fam = dickson_family(4);
            CHECK(fam->coeffs.size() == 5);
            seen[static_cast<std::size_t>(t)] = fam;
        });
    for (auto& th : pool) th.join();
    for (int t = 1; t < kThreads; ++t) CHECK(seen[static_cast<std::size_t>(t)].get() == seen[0].get());
}

TEST_CASE("parallel sweeps match a serial baseline") {
    std::vector<Tuple4> grid;
    for (int d = 2; d <= 6; ++d)
        for (int ell = 1; ell <= d - 1; ++ell)
            for (int j = 1; j <= 3; ++j) grid.push_back(Tuple4{d, ell, std::min(2, ell), j});

    std::vector<Verdict> serial;
    serial.reserve(grid.size());
    for (const Tuple4& t : grid) serial.push_back(check(t, Method::both).verdict);

    std::vector<Verdict> parallel(grid.size(), Verdict::inapplicable);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
                parallel[i] = check(grid[i], Method::both).verdict;
        });
    for (auto& th : pool) th.join();
    CHECK(parallel == serial);
}

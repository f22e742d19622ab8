// Timing comparison of the serial reference kernels against the OpenMP ones:
// GF(2) elimination and the F_p elimination used by the flat oracle.
#include "z2gg/exact.hpp"
#include "z2gg/gf2.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace z2gg;

namespace {


template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 3000;
    std::mt19937_64 rng(12345);

    gf2::Matrix m(n, n + 64);
    for (int r = 0; r < m.rows(); ++r) {
        auto* p = m.row_ptr(r);
        for (int w = 0; w < m.words_per_row(); ++w) p[w] = rng();
    }
    int rank_serial = 0, rank_parallel = 0;
    double ts = timed([&] { rank_serial = gf2::rank(m, gf2::Kernel::Serial); });
    double tp = timed([&] { rank_parallel = gf2::rank(m, gf2::Kernel::Parallel); });
    std::printf("gf2 eliminate %dx%d    serial %.3fs   parallel %.3fs   speedup %.2fx  (rank %d/%d)\n",
                n, n + 64, ts, tp, ts / tp, rank_serial, rank_parallel);

    int nm = n / 2;
    exact::ModMatrix mm;
    mm.rows = mm.cols = nm;
    mm.p = 2147483647u;
    mm.a.resize(std::size_t(nm) * nm);
    for (auto& x : mm.a) x = std::uint32_t(rng() % mm.p);
    int rs = 0, rp = 0;
    ts = timed([&] { rs = exact::modp_rank(mm, gf2::Kernel::Serial); });
    tp = timed([&] { rp = exact::modp_rank(mm, gf2::Kernel::Parallel); });
    std::printf("modp eliminate %dx%d   serial %.3fs   parallel %.3fs   speedup %.2fx  (rank %d/%d)\n",
                nm, nm, ts, tp, ts / tp, rs, rp);
    return rank_serial == rank_parallel && rs == rp ? 0 : 1;
}

#include <chrono>
#include <iostream>
#include <random>

#include "curvedop/linalg.hpp"

// Compares the serial reference elimination against the OpenMP row-update
// path on structured random rational matrices. Both must agree exactly.

using namespace curvedop;
using Clock = std::chrono::steady_clock;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, double fill) {
    SparseMatrix m(rows, cols);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (u(rng) < fill)
                m.add(r, c, make_rational(num(rng), den(rng)));
    return m;
}

double time_ms(const std::function<int()>& f, int& out) {
    auto t0 = Clock::now();
    out = f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int size = argc > 1 ? std::atoi(argv[1]) : 160;
    double fill = argc > 2 ? std::atof(argv[2]) : 0.08;
    std::mt19937 rng(7u);
    std::cout << "size fill rank serial_ms parallel_ms speedup\n";
    for (int trial = 0; trial < 3; ++trial) {
        SparseMatrix m = random_matrix(rng, size, size + 16, fill);
        int r1 = 0, r2 = 0;
        double s = time_ms([&] { return rank_serial(m); }, r1);
        double p = time_ms([&] { return rank_parallel(m); }, r2);
        if (r1 != r2) {
            std::cerr << "rank mismatch between serial and parallel paths\n";
            return 1;
        }
        std::cout << size << " " << fill << " " << r1 << " " << s << " " << p << " "
                  << (p > 0 ? s / p : 0.0) << "\n";
    }
    return 0;
}

// Timing comparison of the serial reference enumerators against the
// OpenMP kernels, verifying that both produce identical results.

#include "bsnake/tableaux.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bsnake;

namespace {

template <class F>
double time_s(F f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_qchar(const char* label, int rank, const char* text) {
    Algebra alg = Algebra::type_b(rank);
    Monomial m = Monomial::parse(text);
    for (const auto& o : x_sequence(alg, m)) path_set(alg, o); // warm the caches
    QCharacter serial, parallel;
    double ts = time_s([&] { serial = snake_qchar_serial(alg, m); });
    double tp = time_s([&] { parallel = snake_qchar(alg, m); });
    std::printf("%-28s %8zu terms  serial %7.3f s  parallel %7.3f s  x%.2f  %s\n", label,
                serial.term_count(), ts, tp, tp > 0 ? ts / tp : 0.0,
                serial == parallel ? "equal" : "MISMATCH");
}

void bench_tableaux(const char* label, int rank, const SkewDiagram& d) {
    Algebra alg = Algebra::type_b(rank);
    std::vector<Tableau> serial, parallel;
    double ts = time_s([&] { serial = enum_tableaux_serial(alg, d); });
    double tp = time_s([&] { parallel = enum_tableaux(alg, d); });
    std::printf("%-28s %8zu tabs   serial %7.3f s  parallel %7.3f s  x%.2f  %s\n", label,
                serial.size(), ts, tp, tp > 0 ? ts / tp : 0.0,
                serial == parallel ? "equal" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, parallel kernels fall back to serial\n");
#endif
    bench_qchar("B3 spin quadruple", 3, "Y[3,1] Y[3,3] Y[3,5] Y[3,7]");
    bench_qchar("B3 middle-node chain", 3, "Y[2,0] Y[2,8] Y[2,16] Y[2,24]");
    bench_qchar("B4 mixed pair", 4, "Y[2,0] Y[3,6]");
    bench_tableaux("B2 staircase 16 boxes", 2, SkewDiagram{{{-2, 1}, {-2, 1}, {-4, 0}, {-5, -3}}});
    bench_tableaux("B3 three tall columns", 3, SkewDiagram{{{-6, 0}, {-8, -2}, {-10, -4}}});
    return 0;
}

// Times the serial reference sweep against the OpenMP sweep on the default
// model space and checks that both produce the same report.

#include <omp.h>

#include <cstdlib>
#include <iostream>

#include "jlab/sweep.hpp"

using namespace jlab;

int main(int argc, char** argv) {
    SearchBounds bounds;
    bounds.orientations = {Orientation::XDominant, Orientation::YDominant};
    bounds.r_min = 2;
    bounds.r_max = argc > 1 ? std::atoi(argv[1]) : 3;
    bounds.s_min = 1;
    bounds.s_max = 2;
    bounds.n_min = 1;
    bounds.n_max = 2;
    bounds.coefficients = {GaussRat(1), GaussRat(-1), GaussRat(2)};
    bounds.tag_degree = 2;

    CandidateEnumeration enumeration(bounds);
    std::cout << "candidates: " << enumeration.total() << "\n";

    double t_serial = -omp_get_wtime();
    SweepReport serial = nzc_sweep_serial(bounds);
    t_serial += omp_get_wtime();

    int threads = omp_get_max_threads();
    double t_parallel = -omp_get_wtime();
    SweepReport parallel = nzc_sweep(bounds, threads);
    t_parallel += omp_get_wtime();

    bool same = serial == parallel;
    std::cout << "reports identical: " << (same ? "yes" : "NO") << "\n";
    std::cout << "NZC hits: " << serial.nzc_holds() << "\n";
    std::cout << threads << " threads\n";
    std::cout << "serial   : " << t_serial << " s\n";
    std::cout << "parallel : " << t_parallel << " s\n";
    std::cout << "speedup  : " << t_serial / t_parallel << "\n";
    std::cout << "efficiency: " << (t_serial / t_parallel) / double(threads) << "\n";
    return same ? 0 : 1;
}

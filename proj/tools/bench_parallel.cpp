// Compares the serial reference paths against the OpenMP kernels on a
// medium-size instance and checks that both produce identical output.
//
// Usage: bench_parallel [L_enum] [L_cterm]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "eisct/cterm.hpp"

using namespace eisct;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int L_enum = argc > 1 ? std::atoi(argv[1]) : 16;
    int L_cterm = argc > 2 ? std::atoi(argv[2]) : 12;

    CartanDatum d = build_cartan(SimpleType::A, 2);
    std::cout << "instance: A2 affine, enumerate L = " << L_enum << ", cterm L = " << L_cterm
              << "\n";

    auto t0 = Clock::now();
    auto serial = enumerate_elements(d, L_enum, false);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto par = enumerate_elements(d, L_enum, true);
    double tp = seconds_since(t0);
    bool same = serial.size() == par.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i] == par[i] && serial[i].word() == par[i].word();
    std::cout << "enumerate: " << serial.size() << " elements, serial " << ts << " s, openmp "
              << tp << " s, speedup " << ts / tp << "x, identical " << (same ? "yes" : "NO")
              << "\n";
    if (!same) return 1;

    Character chi = Character::constant(d, Rat(-3));
    TorusData h;
    AutomorphismData m;
    m.places.push_back({1, 1});
    ZetaFunction Z;

    t0 = Clock::now();
    CTermTable st = constant_term(d, chi, h, m, Z, L_cterm, Rat(3), CtermMode::Convergence, false);
    ts = seconds_since(t0);
    t0 = Clock::now();
    CTermTable pt = constant_term(d, chi, h, m, Z, L_cterm, Rat(3), CtermMode::Convergence, true);
    tp = seconds_since(t0);
    same = st.entries.size() == pt.entries.size();
    for (std::size_t i = 0; same && i < st.entries.size(); ++i)
        same = st.entries[i].term == pt.entries[i].term && st.entries[i].word == pt.entries[i].word;
    same = same && st.partial_sums_exact == pt.partial_sums_exact;
    std::cout << "cterm:     " << st.entries.size() << " terms, serial " << ts << " s, openmp "
              << tp << " s, speedup " << ts / tp << "x, identical " << (same ? "yes" : "NO")
              << "\n";
    std::cout << "partial sum at L = " << L_cterm << ": " << st.partial_sums.back() << "\n";
    return same ? 0 : 1;
}

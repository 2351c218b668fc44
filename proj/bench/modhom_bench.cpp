// Serial reference vs OpenMP path on a cyclic table and two suites.

#include <chrono>
#include <iostream>

#include "modhom/homology.hpp"
#include "modhom/verify.hpp"

using namespace modhom;

template <typename F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
    std::cout << "workers " << worker_count() << "\n";

    const ModulusPair p(2, 1, {2, 3});
    const auto degs = multidegree_window(p, -3, 3, 0, 3);
    std::size_t serial_cells = 0, parallel_cells = 0;
    const double ts = seconds([&] { serial_cells = cyclic_table(p, degs, CyclicVariant::HP, 0, 8, true, Execution::Serial).size(); });
    const double tp = seconds([&] { parallel_cells = cyclic_table(p, degs, CyclicVariant::HP, 0, 8, true, Execution::Parallel).size(); });
    std::cout << "cyclic_table " << serial_cells << " cells  serial " << ts << " s  parallel " << tp << " s\n";

    SuiteConfig cfg;
    cfg.samples = 300;
    for (const char* suite : {"identities", "closure"}) {
        SuiteReport s, q;
        const double a = seconds([&] { s = run_suite(suite, cfg, Execution::Serial); });
        const double b = seconds([&] { q = run_suite(suite, cfg, Execution::Parallel); });
        std::cout << suite << "  serial " << a << " s  parallel " << b << " s  identical "
                  << (to_json(s) == to_json(q) ? "yes" : "no") << "\n";
    }
    return 0;
}

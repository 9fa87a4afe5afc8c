// Benchmark comparing the serial reference paths against the OpenMP ones for
// the two data-parallel stages: kernel construction and the shift-function
// enumeration. Results must agree; timings are informational.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gfw/phase_space.hpp"

using namespace gfw;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

StateVector paper_state(const FieldSpec& spec, const Ordering& ord) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.d);
    v(ord.index_of[0]) = 1.0;
    v(ord.index_of[1]) = 1.0;
    return normalized(StateVector{v, ord});
}

void bench_kernel(const FieldSpec& spec, const RotationSet& rot, const Ordering& ord) {
    auto t0 = std::chrono::steady_clock::now();
    KernelSet serial = build_kernel(rot, ord, false);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    KernelSet parallel = build_kernel(rot, ord, true);
    double tp = seconds_since(t0);
    double dev = 0.0;
    for (size_t i = 0; i < serial.delta.size(); ++i)
        dev = std::max(dev, max_abs(serial.delta[i].mat - parallel.delta[i].mat));
    std::printf("kernel    d=%2d  serial %8.3fs  openmp %8.3fs  max|diff| %.1e\n", spec.d, ts,
                tp, dev);
}

void bench_enumeration(const FieldSpec& spec, const RotationSet& rot, const Ordering& ord) {
    StateVector psi = paper_state(spec, ord);
    auto t0 = std::chrono::steady_clock::now();
    DistinctWignerReport serial = count_distinct_wigner(psi, rot, false);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    DistinctWignerReport parallel = count_distinct_wigner(psi, rot, true);
    double tp = seconds_since(t0);
    bool same = serial.distinct == parallel.distinct &&
                serial.representatives == parallel.representatives &&
                serial.class_sizes == parallel.class_sizes;
    std::printf("enumerate d=%2d  serial %8.3fs  openmp %8.3fs  distinct %d  agree %s\n", spec.d,
                ts, tp, serial.distinct, same ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    {
        Field f = make_field(3, 2);
        Ordering ord = make_ordering(*f, OrderingStrategy::PrimitivePower);
        bench_kernel(*f, canonical_rotation_set_odd(*f), ord);
    }
    {
        Field f = make_field(2, 4);
        Ordering ord = make_ordering(*f, OrderingStrategy::PrimitivePower);
        Basis pb = polynomial_basis(*f);
        bench_kernel(*f, canonical_rotation_set_even(*f, pb), ord);
    }
    {
        Field f = make_field(2, 2);
        Ordering ord = make_ordering(*f, OrderingStrategy::PrimitivePower);
        Basis sd = catalog_bases(*f).back();
        bench_enumeration(*f, canonical_rotation_set_even(*f, sd), ord);
    }
    {
        Field f = make_field(2, 3);
        Ordering ord = make_ordering(*f, OrderingStrategy::PrimitivePower);
        Basis sd = catalog_bases(*f).back();
        bench_enumeration(*f, canonical_rotation_set_even(*f, sd), ord);
    }
    return 0;
}

// Minimal library walkthrough: build an input set, derive the critical
// scale, run the prediction with envelope errors, and print the bounds.

#include <cstdio>

#include "higgsrg/bounds.hpp"
#include "higgsrg/predictor.hpp"
#include "higgsrg/relations.hpp"

int main() {
    using namespace higgsrg;

    const input_set in = input_set::defaults();

    const double tc = critical_scale(in);
    const double tc_err = critical_scale_error(in);
    std::printf("critical scale:   t_c = %.6f +/- %.6f\n", tc, tc_err);
    std::printf("critical energy:  E_c = %.4e GeV\n", tc_to_energy(tc, in.mZ.value));

    const prediction_report r = predict(in);
    std::printf("top Yukawa:       gt(0) = %.6f, gt(t_c) = %.6f\n", r.gt0, r.gt_tc);
    std::printf("quartic coupling: lambda(0) = %.6f +/- %.6f\n", r.lambda0, r.lambda0_err);
    std::printf("Higgs mass:       mH = %.3f +/- %.3f GeV\n", r.mh_gev, r.mh_err_gev);

    const bounds_report b = compute_bounds(in);
    std::printf("mass window:      [%.2f, %.2f] GeV\n", b.mh_lower_gev, b.mh_upper_gev);

    // The same pipeline with the electroweak-fit top mass.
    const prediction_report ew = predict(input_set::defaults(top_mode::ewfit));
    std::printf("ewfit top mode:   mH = %.3f +/- %.3f GeV\n", ew.mh_gev, ew.mh_err_gev);
    return 0;
}

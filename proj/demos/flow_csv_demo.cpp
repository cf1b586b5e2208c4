// Writes a short coupling trajectory as CSV to stdout: the gauge and top
// sector run from the reference scale up to the critical scale.

#include <iostream>

#include "higgsrg/relations.hpp"
#include "higgsrg/rgflow.hpp"

int main() {
    using namespace higgsrg;

    const input_set in = input_set::defaults();

    coupling_state y0;
    y0.g1 = in.g1.value;
    y0.g2 = in.g2.value;
    y0.g3 = in.g3.value;
    y0.gt = gt_initial(in.mT.value, in.mW.value, in.g2.value);

    active_set act;
    act.lambda = false;

    integrator_options opts;
    opts.step_size = 1.0e-2;

    const double tc = critical_scale(in);
    const flow_trajectory traj = integrate(y0, tc, opts, act);
    write_csv(traj, in.mZ.value, 100, std::cout);
    return 0;
}

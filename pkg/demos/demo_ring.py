"""1000-landmark benchmark around a closed ellipse.

Samples 1000 landmarks uniformly in an annulus, runs every bearing
estimator in parallel with gain 5 and random initializations, and reports
when the worst landmark error crosses the 1e-2 rad threshold, measured in
laps of the ellipse.

The slowest landmarks are the ones whose estimates get captured by the
moving mirror attractor; they ride it until it re-merges with the true
bearing, which puts the worst-case convergence a little past half a lap.
"""

from pathlib import Path

import numpy as np

from robearing import harness

OUT = Path(__file__).parent / "output"


def main():
    s = harness.load_preset("ring_1000")
    for seed in (1, 2, 3):
        report = harness.run_ring_benchmark(s, seed=seed)
        laps = report.laps_to_convergence
        shown = "never" if laps is None else f"{laps:.3f} laps"
        print(f"seed {seed}: worst |e| < {s.convergence.tol:g} rad after {shown}; "
              f"final worst |e| = {np.max(np.abs(report.err_final)):.2e} rad")
        if seed == 1:
            paths = harness.emit_outputs(report, OUT, s.output, svg=True)
            print(f"  artifacts: {', '.join(str(p) for p in paths.values())}")

    print("\nMean errors cross the threshold far earlier than the max; the "
          "error-band panel of the SVG shows the 2.5-97.5 percentile "
          "envelope collapsing well before the worst landmark is done.")


if __name__ == "__main__":
    main()

"""The mirror attractor under straight-line motion.

When the agent moves along a straight line, the bearing estimator has two
attractors: the true landmark and its reflection across the motion axis
(range measurements cannot tell the two apart). Started far from the true
bearing, the estimate settles on the reflection, and the residual bearing
error equals twice the angle between the landmark direction and the
motion direction.
"""

import math
from pathlib import Path

import numpy as np

from robearing import geometry, harness

OUT = Path(__file__).parent / "output"


def main():
    s = harness.load_preset("straight_theta-170")
    report = harness.run_scenario(s)

    lm = report.landmarks[0]
    mirror = geometry.mirror_point(lm, report.p0, report.u0)
    y_final = float(np.hypot(*(lm - report.p_final)))
    l_final = report.p_final + y_final * np.array(
        [math.cos(report.theta_final[0]), math.sin(report.theta_final[0])]
    )
    alpha = geometry.mirror_error_alpha(lm, report.p_final, report.u0)

    print(f"true landmark:        ({lm[0]:.3f}, {lm[1]:.3f})")
    print(f"mirror image:         ({mirror[0]:.3f}, {mirror[1]:.3f})")
    print(f"final estimate:       ({l_final[0]:.3f}, {l_final[1]:.3f})")
    print(f"distance to mirror:   {np.hypot(*(l_final - mirror)):.2e} m")
    print(f"final wrapped error:  {report.err_final[0]:.4f} rad")
    print(f"predicted residual:   {geometry.wrap_angle(alpha):.4f} rad "
          "(twice the landmark/motion angle)")

    paths = harness.emit_outputs(report, OUT, s.output, svg=True)
    print(f"artifacts: {', '.join(str(p) for p in paths.values())}")


if __name__ == "__main__":
    main()

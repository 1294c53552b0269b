"""Print every multiplier construction for the two standard quadratics."""

import math

from poincare import PolarQuadratic, compare, verify
from poincare.multiplier import METHODS

CASES = {
    "x^2 - 2x + 2": PolarQuadratic(math.sqrt(2.0), math.pi / 4),
    "x^2 - 2cos(2pi/7)x + 1": PolarQuadratic(1.0, 2 * math.pi / 7),
}

for label, pq in CASES.items():
    print(f"== {label}")
    for name, build in METHODS.items():
        cert = build(pq)
        print(f"{name:>15}: g = {cert.g}")
        print(f"{'':>15}  g f = {cert.product}   verified={verify(cert)}")
    rep = compare(pq)
    print(f"c_R = {[round(float(x), 6) for x in rep.c_R]}  c_M = {[round(float(x), 6) for x in rep.c_M]}  equal={rep.equal}")
    print()

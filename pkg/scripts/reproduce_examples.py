#!/usr/bin/env python3
"""Recompute the worked examples end to end and print the reports.

Covers the three flag-domain analyses (the rank-two cases in both
orientations plus the symplectic rank-two case), the matching numeric
certificates, and the period-domain reports for weight 3 with Hodge
numbers (1,1,1,1) and weight 2 with (2,1,2).
"""

import json

from flagdomains import (
    DefiningFunction,
    HodgeNumbers,
    build_root_system,
    check_pseudoconcavity,
    from_cartan_matrix,
    fundamental_rep,
    grading,
    levi_analyze,
    period_report,
    root,
    verify_fixed_point,
    verify_sl2_cayley_forms,
)
from flagdomains.rootsys import LieType


def show(title, payload):
    print(f"== {title}")
    print(json.dumps(payload, sort_keys=True, indent=2))
    print()


def main():
    a2 = build_root_system(LieType("A", 2))
    show("su(2,1) picture: A2 with grading (1,1)",
         check_pseudoconcavity(a2, grading((1, 1))).to_json_dict())

    so5 = from_cartan_matrix([[2, -1], [-2, 2]])
    show("so(5) labeling: grading (1,0)",
         check_pseudoconcavity(so5, grading((1, 0))).to_json_dict())

    c2 = build_root_system(LieType("C", 2))
    show("sp(4) picture: C2 with grading (1,1)",
         check_pseudoconcavity(c2, grading((1, 1))).to_json_dict())

    rep = fundamental_rep(a2)
    show("fixed-point certificate, A2 witness (1,1), eps=0.1",
         verify_fixed_point(rep, grading((1, 1)), root((1, 1)), 0.1).to_json_dict())
    rep = fundamental_rep(so5)
    show("fixed-point certificate, so(5) witness (2,1), eps=0.1",
         verify_fixed_point(rep, grading((1, 0)), root((2, 1)), 0.1).to_json_dict())

    show("period domain, weight 3, h = (1,1,1,1)",
         period_report(HodgeNumbers.from_descending(3, [1, 1, 1, 1])))
    show("period domain, weight 2, h = (2,1,2)",
         period_report(HodgeNumbers.from_descending(2, [2, 1, 2])))

    for kind in ("I", "II"):
        show(f"sl2 Cayley closed forms, type {kind}",
             verify_sl2_cayley_forms(kind).to_json_dict())

    import numpy as np

    ball = DefiningFunction.from_callable(
        3, lambda z: float(np.sum(np.abs(z) ** 2).real) - 1.0, [1, 0, 0]
    )
    show("Levi form on the unit sphere from inside", levi_analyze(ball).to_json_dict())


if __name__ == "__main__":
    main()

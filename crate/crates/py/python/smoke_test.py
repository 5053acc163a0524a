"""Smoke test for the circumquad extension module.

Build and install first, e.g. ``maturin develop -m crates/py/Cargo.toml``,
or point PYTHONPATH at a directory holding the built ``circumquad`` library.
"""

import math
import sys
from fractions import Fraction

import circumquad


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    square = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    sol = circumquad.solve(square)
    check(abs(sol.ratio - 1.0) < 1e-9, "square is its own minimum quadrilateral")
    check(sol.contains_k and max(sol.midpoint_residuals) < 1e-8, "midpoint certificate")

    pentagon = [(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)]
    sol = circumquad.solve(pentagon, circumquad.SolverOptions(coarse_grid=120))
    check(abs(sol.ratio - 3 / math.sqrt(5)) < 1e-5, "pentagon ratio 3/sqrt(5)")

    brute = circumquad.brute_force(pentagon, 120)
    check(circumquad.polygon_area(brute) >= sol.area_q - 1e-9, "solver no worse than brute force")

    report = circumquad.witness(pentagon)
    check(report.certified_factor <= 1 - 2.6e-7, f"case {report.case_id} certifies the factor")
    check(report.details()["outer_ball_ok"] is True, "normalized quadrilateral inside 3B")

    tri = circumquad.witness([(0, 0), (3, 0), (1, 2)])
    check(tri.case_id == "DEGENERATE_TRIANGLE", "triangle case")

    comparisons = circumquad.certify()
    check(len(comparisons) == 8 and all(c.proven for c in comparisons), "constants certified at 128 bits")
    perturbed = circumquad.certify(c1="1.0001")
    check(not all(c.proven for c in perturbed), "perturbed c1 is refused")
    try:
        circumquad.witness(pentagon, c1="1.0001")
        check(False, "uncertified constants raise")
    except circumquad.CertificationError:
        check(True, "uncertified constants raise")

    check(circumquad.zeta(3, 0, Fraction(-3, 2)) == "2973/340", "zeta(3, 0, -3/2)")
    check(circumquad.zeta_bound(3, 0) == "2973/340", "closed-form zeta bound")

    branch, _, area = circumquad.lemma_octagon_quad(
        ("-3/2", 0), (0, "-3/2"), ("3/2", "-2/5"), (0, "3/2"), 3, "1/10"
    )
    check((branch, area) == ("U_TOP", "35/4"), "corner-cut example")

    try:
        circumquad.solve([(0, 0), (1, 1), (2, 2)])
        check(False, "flat body raises")
    except circumquad.DegenerateBodyError:
        check(True, "flat body raises")

    bodies = circumquad.gen_corpus("random", count=3, seed=1)
    check(len(bodies) == 3 and all(len(b) >= 3 for b in bodies), "corpus generation")
    print("all smoke checks passed")


if __name__ == "__main__":
    main()

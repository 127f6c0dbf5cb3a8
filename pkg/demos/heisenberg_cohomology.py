"""Cohomology of the Heisenberg algebra and the primary class of its
central extension.

The Heisenberg algebra h3 sits in the central extension

    0 -> R z -> h3 -> R^2 -> 0

of the abelian plane.  Its Betti numbers with trivial coefficients are
(1, 2, 2, 1): degree one sees the two functionals killing the center, and
degree two keeps the two classes not reached by coboundaries.

Every linear section of the projection has the same curvature z (the shifts
are central and the plane is abelian), so the primary class of the identity
functional on the center is the area class of the plane with coefficient 1,
for every section.
"""

import random
from fractions import Fraction

from liechar import (
    Section, chern_weil, classes_equal, cohomology_space, section_curvature,
    trivial_representation,
)
from liechar.catalog import heisenberg_workspace


def main():
    ws = heisenberg_workspace()
    ext = ws.extensions["heis"]
    h3 = ws.algebras["h3"]

    print("Betti numbers of h3 (trivial coefficients):")
    triv_h3 = trivial_representation(h3, 1)
    for degree in range(4):
        space = cohomology_space(h3, triv_h3, degree)
        print(f"  H^{degree}: dim Z = {len(space.cocycle_basis)}, "
              f"dim B = {len(space.coboundary_basis)}, dim H = {space.h_dim}")

    print("\ncurvature of the standard lift and of random lifts:")
    triv = ws.representations["triv"]
    f1 = ws.polynomials["f1"]
    rng = random.Random(1)
    classes = []
    for trial in range(4):
        shifts = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)]
        sec = Section(ext, [[1, 0], [0, 1], shifts])
        curv = section_curvature(ext, sec)
        print(f"  lift with central shifts {[str(s) for s in shifts]}: "
              f"R(e1,e2) = {curv.entry((0, 1))[0]} z")
        classes.append(chern_weil(ext, f1, sec, triv))

    print("\nprimary classes of the identity functional, per section:")
    for cls in classes:
        print(f"  degree {cls.degree}, coordinates {[str(c) for c in cls.coordinates]}")
    head = classes[0]
    agree = all(
        classes_equal(head.representative, other.representative, head.h_space)
        for other in classes[1:]
    )
    print("all pairwise equal in H^2:", agree)


if __name__ == "__main__":
    main()

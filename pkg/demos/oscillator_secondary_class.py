"""The oscillator algebra: a split extension with a nonzero secondary class.

The oscillator algebra is the semidirect product of the Heisenberg algebra
h3 = span(p, q, z), [p, q] = z, with a line acting by the rotation
derivation Dp = q, Dq = -p, Dz = 0.  Projecting onto the line gives the
extension

    0 -> h3 -> oscillator -> R -> 0.

Both distinguished sections below are flat (zero curvature), so every
primary characteristic class of the extension vanishes.  The secondary
class attached to the pair of sections does not: it equals 1 in
H^1(R, R) = R, and this script recomputes it step by step.
"""

from liechar import (
    SymMultiMap, chern_weil, is_invariant, secondary_class, section_curvature,
)
from liechar.catalog import oscillator_workspace


def main():
    ws = oscillator_workspace()
    ext = ws.extensions["osc"]
    s0, sz = ws.sections["s0"], ws.sections["sz"]
    fz = ws.polynomials["fz"]
    triv = ws.representations["triv"]

    print("extension:", ext)
    print("basis of the total algebra:", ext.total.basis_names)

    print("\nstep 1: both sections are flat")
    for name, sec in (("s0", s0), ("sz", sz)):
        curv = section_curvature(ext, sec)
        print(f"  curvature of {name} is zero: {curv.is_zero()}")

    print("\nstep 2: fz (the functional dual to z) is invariant for the")
    print("rotation action induced by either section, but not for the full")
    print("adjoint action of the total algebra (ad(p) moves q to z):")
    print("  section policy, s0:", is_invariant(fz, ext, triv, "section", s0))
    print("  section policy, sz:", is_invariant(fz, ext, triv, "section", sz))
    print("  strict policy:     ", is_invariant(fz, ext, triv, "strict"))

    print("\nstep 3: the primary class of fz vanishes (flat sections)")
    primary = chern_weil(ext, fz, s0, triv)
    print("  representative is zero:", primary.representative.is_zero())

    print("\nstep 4: the secondary class of (s0, sz) is the point where the")
    print("two sections differ, fed through fz: (sz - s0)(w) = z and")
    print("fz(z) = 1, integrated over the unit interval.")
    cls = secondary_class(ext, fz, s0, sz, triv)
    print(f"  degree: {cls.degree}")
    print(f"  H-space dimension: {cls.h_space.h_dim}")
    print(f"  coordinates: {[str(c) for c in cls.coordinates]}")

    print("\nthe pair of flat sections is distinguished by a class that the")
    print("primary construction cannot see.")

    # degree-1 maps with vanishing curvature composite form the line R*fz;
    # any rescaling scales the class accordingly
    half = SymMultiMap(ext.kernel, 1, 1, {(0,): [0], (1,): [0], (2,): ["1/2"]})
    print("\nrescaling fz by 1/2 halves the class:",
          [str(c) for c in secondary_class(ext, half, s0, sz, triv).coordinates])


if __name__ == "__main__":
    main()

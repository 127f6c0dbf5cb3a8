"""Cohomology spaces, Bott-Lecomte cochains, and characteristic classes.

H^p(g, V) is computed from exact matrices of the Chevalley-Eilenberg
differential: the cocycle space is the nullspace of d on degree p, the
coboundary space the column space of d on degree p-1 (zero for p = 0), both
with deterministic echelon bases, so coordinates of classes are reproducible.

For an extension with kernel n and an invariant symmetric map f of degree p,
the relative cochain of n+1 sections is the simplex integral

    Delta_f(s_0..s_n) = int_{D_n} f  applied to
                        (a_1 ^ ... ^ a_n ^ R_t ^ ... ^ R_t)  dt,

with a_i = s_i - s_0, R_t the curvature of the interpolating section, and
p - n copies of R_t; the result has degree 2p - n.  For n = 0 no integration
happens and Delta_f(s) is f applied to p copies of the section curvature.
The primary (Chern-Weil) class of f is (1/p!) [Delta_f(s)], independent of
the section; the secondary class of an admissible f (both section curvature
composites vanish) is [Delta_f(s_a, s_b)] in degree 2p - 1.

verify_main_theorem checks the simplex-face boundary identity

    (k - n + 1) d(Delta_f(s_0..s_n)) = sum_i (-1)^i Delta_f(.. s_i omitted ..)

exactly, and reports which global sign makes both sides agree.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cochains import (Cochain, SymMultiMap, ce_differential, compose_sym,
                       increasing_tuples)
from .extensions import (Extension, InvalidSection, InvarianceWarning, Section,
                         is_invariant, param_curvature, param_section,
                         section_curvature, section_difference, validate_section)
from .liealg import LieAlgebra, Representation
from .linalg import column_space_basis, nullspace, solve_linear
from .scalars import as_poly, integrate_poly_simplex

__all__ = [
    "CohomologySpace",
    "CharacteristicClass",
    "TheoremReport",
    "DegreeError",
    "NotACocycle",
    "NotClosed",
    "NotAdmissible",
    "NotInvariant",
    "differential_matrix",
    "cohomology_space",
    "classes_equal",
    "delta_f",
    "chern_weil",
    "secondary_class",
    "verify_main_theorem",
]


class DegreeError(ValueError):
    """Degrees of the inputs cannot be combined as requested."""


class NotACocycle(ValueError):
    """A cochain expected to be closed is not."""


class NotClosed(ValueError):
    """A computed representative fails d = 0 (invariance violation or corrupt data)."""


class NotAdmissible(ValueError):
    """A secondary class needs both section-curvature composites to vanish."""


class NotInvariant(ValueError):
    """The symmetric map fails the configured invariance policy."""


def _flatten(w: Cochain):
    return [x for key in increasing_tuples(w.source.dim, w.degree)
            for x in w.values[key]]


def _unflatten(vec, algebra: LieAlgebra, degree: int, target_dim: int) -> Cochain:
    keys = increasing_tuples(algebra.dim, degree)
    values = {}
    pos = 0
    for key in keys:
        values[key] = tuple(vec[pos:pos + target_dim])
        pos += target_dim
    return Cochain(algebra, degree, target_dim, values)


def differential_matrix(algebra: LieAlgebra, rep: Representation, degree: int):
    """Matrix of d: C^degree -> C^{degree+1} in the flattened tuple-major bases."""
    keys = increasing_tuples(algebra.dim, degree)
    m = rep.space_dim
    cols = []
    for key in keys:
        for c in range(m):
            values = {k: [Fraction(0)] * m for k in keys}
            row = list(values[key])
            row[c] = Fraction(1)
            values[key] = row
            w = Cochain(algebra, degree, m, values)
            cols.append(_flatten(ce_differential(w, rep)))
    nrows = comb(algebra.dim, degree + 1) * m
    return [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]


class CohomologySpace:
    """Z^p, B^p and H^p data with deterministic bases and class coordinates."""

    def __init__(self, algebra: LieAlgebra, rep: Representation, degree: int):
        if degree < 0:
            raise ValueError("cohomology degree must be non-negative")
        self.algebra = algebra
        self.rep = rep
        self.degree = degree
        m = rep.space_dim
        dim_c = comb(algebra.dim, degree) * m
        dim_c_up = comb(algebra.dim, degree + 1) * m
        if dim_c == 0:
            zvecs = []
        elif dim_c_up == 0:
            zvecs = [[Fraction(1) if i == j else Fraction(0) for j in range(dim_c)]
                     for i in range(dim_c)]
        else:
            zvecs = nullspace(differential_matrix(algebra, rep, degree), ncols=dim_c)
        if degree == 0 or dim_c == 0 or comb(algebra.dim, degree - 1) == 0:
            bvecs = []
        else:
            bvecs = column_space_basis(differential_matrix(algebra, rep, degree - 1))
        hvecs = []
        for z in zvecs:
            span = bvecs + hvecs
            if not span:
                if any(x != 0 for x in z):
                    hvecs.append(z)
                continue
            mat = [[col[i] for col in span] for i in range(dim_c)]
            if solve_linear(mat, z) is None:
                hvecs.append(z)
        self._zvecs = zvecs
        self._bvecs = bvecs
        self._hvecs = hvecs
        self.h_dim = len(zvecs) - len(bvecs)
        self.cocycle_basis = [
            _unflatten(v, algebra, degree, m) for v in zvecs]
        self.coboundary_basis = [
            _unflatten(v, algebra, degree, m) for v in bvecs]
        self.class_projection = self._projection_matrix()

    def _coords_vec(self, vec):
        span = self._bvecs + self._hvecs
        if not span:
            if any(x != 0 for x in vec):
                raise NotACocycle("cochain is not in the cocycle space")
            return ()
        mat = [[col[i] for col in span] for i in range(len(vec))]
        x = solve_linear(mat, vec)
        if x is None:
            raise NotACocycle("cochain is not in the cocycle space")
        return tuple(x[len(self._bvecs):])

    def _projection_matrix(self):
        cols = [self._coords_vec(z) for z in self._zvecs]
        return [[cols[j][i] for j in range(len(cols))] for i in range(self.h_dim)]

    def coordinates_of(self, w: Cochain):
        """H-coordinates of a cocycle; NotACocycle if d w != 0."""
        if (w.degree != self.degree or w.target_dim != self.rep.space_dim
                or w.source.dim != self.algebra.dim):
            raise ValueError("cochain shape does not match this cohomology space")
        if not ce_differential(w, self.rep).is_zero():
            raise NotACocycle("differential of the cochain is nonzero")
        return self._coords_vec(_flatten(w))

    def __repr__(self):
        return (f"CohomologySpace(degree={self.degree}, z={len(self._zvecs)}, "
                f"b={len(self._bvecs)}, h={self.h_dim})")


def cohomology_space(algebra: LieAlgebra, rep: Representation, degree: int) -> CohomologySpace:
    if algebra.dim != rep.algebra.dim:
        raise ValueError("representation is over a different algebra")
    return CohomologySpace(algebra, rep, degree)


def classes_equal(a: Cochain, b: Cochain, space: CohomologySpace) -> bool:
    """True iff a - b is a coboundary; both inputs must be cocycles."""
    for w in (a, b):
        if not ce_differential(w, space.rep).is_zero():
            raise NotACocycle("differential of an input is nonzero")
    diff = _flatten(a - b)
    if not space._bvecs:
        return all(x == 0 for x in diff)
    mat = [[col[i] for col in space._bvecs] for i in range(len(diff))]
    return solve_linear(mat, diff) is not None


@dataclass
class CharacteristicClass:
    """A cocycle representative with its coordinates in a cohomology space."""

    degree: int
    representative: Cochain
    coordinates: tuple
    h_space: CohomologySpace


def _check_invariance(f, ext, rep, mode, sections):
    if mode == "section":
        return all(is_invariant(f, ext, rep, "section", s) for s in sections)
    return is_invariant(f, ext, rep, mode)


def delta_f(ext: Extension, f: SymMultiMap, sections, rep: Representation,
            mode: str = "section") -> Cochain:
    """The relative cochain of n+1 sections: degree 2p - n, exact rational values.

    Emits InvarianceWarning (and proceeds) when f fails the configured
    invariance policy; raises DegreeError when f has fewer slots than there
    are section differences, and InvalidSection on a bad section.
    """
    sections = list(sections)
    if not sections:
        raise ValueError("need at least one section")
    for idx, sec in enumerate(sections):
        if not validate_section(ext, sec):
            raise InvalidSection(f"section {idx} fails q . sigma = id")
    if f.source.dim != ext.kernel.dim:
        raise ValueError("dimension mismatch: f is not defined on the kernel")
    if f.target_dim != rep.space_dim:
        raise ValueError("dimension mismatch: f does not map into the module")
    p = f.degree
    n = len(sections) - 1
    if p < n:
        raise DegreeError(
            f"map of degree {p} cannot absorb {n} section differences")
    if not _check_invariance(f, ext, rep, mode, sections):
        warnings.warn(InvarianceWarning(
            "symmetric map fails the configured invariance condition; "
            "the computed cochain need not be closed"))
    if n == 0:
        if p == 0:
            return Cochain(ext.base, 0, f.target_dim, {(): f.entry(())})
        curv = section_curvature(ext, sections[0])
        return compose_sym(f, [curv] * p)
    alphas = [
        section_difference(ext, sections[i], sections[0]).to_poly(n)
        for i in range(1, n + 1)
    ]
    args = list(alphas)
    if p > n:
        curv_t = param_curvature(ext, param_section(ext, sections))
        args.extend([curv_t] * (p - n))
    integrand = compose_sym(f, args)
    return integrand.map_values(lambda s: integrate_poly_simplex(as_poly(s, n)))


def chern_weil(ext: Extension, f: SymMultiMap, sec: Section, rep: Representation,
               mode: str = "section") -> CharacteristicClass:
    """Primary class (1/p!) [Delta_f(sec)] in H^{2p}(base, V).

    Requires f invariant under the configured policy; the representative is
    verified closed (NotClosed signals corrupt input).
    """
    if not _check_invariance(f, ext, rep, mode, [sec]):
        raise NotInvariant("symmetric map fails the configured invariance condition")
    p = f.degree
    core = delta_f(ext, f, [sec], rep, mode)
    representative = core.scale(Fraction(1, factorial(p)))
    if not ce_differential(representative, rep).is_zero():
        raise NotClosed("representative is not closed")
    space = cohomology_space(ext.base, rep, 2 * p)
    coords = space.coordinates_of(representative)
    return CharacteristicClass(2 * p, representative, coords, space)


def secondary_class(ext: Extension, f: SymMultiMap, sec_a: Section, sec_b: Section,
                    rep: Representation, mode: str = "section") -> CharacteristicClass:
    """Secondary class [Delta_f(sec_a, sec_b)] in H^{2p-1}(base, V).

    Admissibility requires f applied to p copies of either section curvature
    to vanish (NotAdmissible otherwise); f must satisfy the configured
    invariance policy for both sections.
    """
    p = f.degree
    if p < 1:
        raise DegreeError("secondary classes need a map of degree at least 1")
    for name, sec in (("first", sec_a), ("second", sec_b)):
        if not validate_section(ext, sec):
            raise InvalidSection(f"{name} section fails q . sigma = id")
        composite = compose_sym(f, [section_curvature(ext, sec)] * p)
        if not composite.is_zero():
            raise NotAdmissible(
                f"f applied to the {name} section curvature is nonzero")
    if not _check_invariance(f, ext, rep, mode, [sec_a, sec_b]):
        raise NotInvariant("symmetric map fails the configured invariance condition")
    representative = delta_f(ext, f, [sec_a, sec_b], rep, mode)
    if not ce_differential(representative, rep).is_zero():
        raise NotClosed("relative cochain of an admissible map is not closed")
    space = cohomology_space(ext.base, rep, 2 * p - 1)
    coords = space.coordinates_of(representative)
    return CharacteristicClass(2 * p - 1, representative, coords, space)


@dataclass
class TheoremReport:
    """Both sides of the boundary identity and how they compare.

    sign is +1 when lhs == rhs, -1 when lhs == -rhs, 0 when both sides vanish
    (no sign information), and None when the sides differ beyond a sign, in
    which case ``difference`` holds lhs - rhs.
    """

    lhs: Cochain
    rhs: Cochain
    equal: bool
    sign: int | None
    difference: Cochain | None


def verify_main_theorem(ext: Extension, f: SymMultiMap, sections,
                        rep: Representation, mode: str = "section") -> TheoremReport:
    """Compare (k-n+1) d(Delta_f(all sections)) with the alternating sum of
    the Delta_f over each omitted section, exactly."""
    sections = list(sections)
    n = len(sections) - 1
    if n < 1:
        raise ValueError("the identity needs at least two sections")
    k = f.degree
    if k < n:
        raise DegreeError(f"map of degree {k} cannot absorb {n} section differences")
    full = delta_f(ext, f, sections, rep, mode)
    lhs = ce_differential(full, rep).scale(Fraction(k - n + 1))
    rhs = None
    for i in range(n + 1):
        omitted = sections[:i] + sections[i + 1:]
        term = delta_f(ext, f, omitted, rep, mode)
        if i % 2:
            term = -term
        rhs = term if rhs is None else rhs + term
    equal = lhs == rhs
    if lhs.is_zero() and rhs.is_zero():
        sign = 0
    elif equal:
        sign = 1
    elif lhs == rhs.scale(Fraction(-1)):
        sign = -1
    else:
        sign = None
    difference = None if equal else lhs - rhs
    return TheoremReport(lhs, rhs, equal, sign, difference)

"""Finite-dimensional Lie algebras by structure constants.

An algebra stores ``structure[i][j][k]``, the e_k-coefficient of [e_i, e_j].
Antisymmetry is enforced structurally and the Jacobi identity is validated at
construction, so downstream operators may assume validity; pass
``validate=False`` only to build intentionally broken tables for diagnostics.

Constructions used throughout: abelian algebras, the Heisenberg algebras
h_{2m+1}, semidirect products h x| a by derivations, and the oscillator
algebra h_3 x| R with the rotation derivation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .linalg import mat_mul, mat_vec, vec_is_zero, vec_sub, zeros

__all__ = [
    "LieAlgebra",
    "Representation",
    "algebra_from_brackets",
    "check_jacobi",
    "bracket",
    "ad_matrix",
    "is_derivation",
    "semidirect_product",
    "abelian",
    "heisenberg",
    "heisenberg3",
    "oscillator",
    "standard_algebra",
    "check_representation",
    "trivial_representation",
    "adjoint_representation",
]


class LieAlgebra:
    """Lie algebra with a named basis and rational structure constants."""

    __slots__ = ("dim", "basis_names", "structure")

    def __init__(self, basis_names, structure, validate: bool = True):
        names = tuple(str(n) for n in basis_names)
        if len(set(names)) != len(names):
            raise ValueError("basis names must be unique")
        d = len(names)
        if len(structure) != d or any(
            len(plane) != d or any(len(row) != d for row in plane)
            for plane in structure
        ):
            raise ValueError("structure constants must be dim x dim x dim")
        table = tuple(
            tuple(tuple(Fraction(c) for c in row) for row in plane)
            for plane in structure
        )
        for i in range(d):
            for j in range(i, d):
                for k in range(d):
                    if table[i][j][k] != -table[j][i][k]:
                        raise ValueError(
                            f"structure constants not antisymmetric at "
                            f"({names[i]},{names[j]},{names[k]})"
                        )
        self.dim = d
        self.basis_names = names
        self.structure = table
        if validate:
            bad = check_jacobi(self)
            if bad:
                i, j, k, defect = bad[0]
                raise ValueError(
                    f"Jacobi identity fails at ({names[i]},{names[j]},{names[k]}): "
                    f"defect {defect}"
                )

    def bracket_basis(self, i: int, j: int):
        """[e_i, e_j] as a coefficient tuple."""
        return self.structure[i][j]

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.basis_names == other.basis_names
                and self.structure == other.structure)

    __hash__ = None

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def algebra_from_brackets(basis_names, brackets, validate: bool = True) -> LieAlgebra:
    """Build an algebra from sparse data {(i, j): {k: coeff}} for i < j."""
    names = tuple(basis_names)
    d = len(names)
    structure = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for (i, j), coeffs in brackets.items():
        if not 0 <= i < j < d:
            raise ValueError(f"bracket indices ({i},{j}) must satisfy 0 <= i < j < dim")
        for k, c in coeffs.items():
            k = int(k)
            if not 0 <= k < d:
                raise ValueError(f"bracket coefficient index {k} out of range")
            structure[i][j][k] = Fraction(c)
            structure[j][i][k] = -Fraction(c)
    return LieAlgebra(names, structure, validate=validate)


def check_jacobi(alg: LieAlgebra):
    """All basis triples i<j<k violating Jacobi, with the defect vector.

    The defect is [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j];
    an empty report means the table is a Lie algebra.
    """
    d = alg.dim
    c = alg.structure
    violations = []
    for i, j, k in combinations(range(d), 3):
        defect = [Fraction(0)] * d
        for a, b, z in ((i, j, k), (j, k, i), (k, i, j)):
            for l in range(d):
                cab = c[a][b][l]
                if cab:
                    for m in range(d):
                        if c[l][z][m]:
                            defect[m] += cab * c[l][z][m]
        if not vec_is_zero(defect):
            violations.append((i, j, k, tuple(defect)))
    return violations


def bracket(alg: LieAlgebra, x, y):
    """Bilinear extension of the structure constants to coefficient vectors."""
    d = alg.dim
    if len(x) != d or len(y) != d:
        raise ValueError("dimension mismatch")
    out = [Fraction(0)] * d
    c = alg.structure
    for i in range(d):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(d):
            yj = y[j]
            if yj == 0:
                continue
            row = c[i][j]
            for k in range(d):
                if row[k]:
                    out[k] = out[k] + xi * yj * row[k]
    return out


def ad_matrix(alg: LieAlgebra, x):
    """Matrix of ad(x): y -> [x, y] in the basis of alg."""
    d = alg.dim
    cols = [bracket(alg, x, _unit(d, j)) for j in range(d)]
    return [[cols[j][k] for j in range(d)] for k in range(d)]


def _unit(d, i):
    v = [Fraction(0)] * d
    v[i] = Fraction(1)
    return v


def is_derivation(alg: LieAlgebra, mat) -> bool:
    """True iff D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    d = alg.dim
    if len(mat) != d or any(len(row) != d for row in mat):
        raise ValueError("dimension mismatch")
    cols = [[mat[r][j] for r in range(d)] for j in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            lhs = mat_vec(mat, alg.bracket_basis(i, j))
            rhs = [a + b for a, b in zip(bracket(alg, cols[i], _unit(d, j)),
                                         bracket(alg, _unit(d, i), cols[j]))]
            if not vec_is_zero(vec_sub(lhs, rhs)):
                return False
    return True


def semidirect_product(h: LieAlgebra, a: LieAlgebra, action) -> LieAlgebra:
    """h x| a with a acting on h by the given derivation matrices.

    The bracket is [(x,r),(y,s)] = ([x,y] + r.Dy - s.Dx, [r,s]_a) extended
    bilinearly, where r.D = sum_j r_j action[j].  The action matrices must be
    derivations of h and a representation of a; both are checked eagerly.
    The product is re-validated at construction.
    """
    dh, da = h.dim, a.dim
    action = [[[Fraction(c) for c in row] for row in mat] for mat in action]
    if len(action) != da or any(
        len(mat) != dh or any(len(row) != dh for row in mat) for mat in action
    ):
        raise ValueError("action must supply one dim(h) x dim(h) matrix per basis element of a")
    for j, mat in enumerate(action):
        if not is_derivation(h, mat):
            raise ValueError(f"action matrix for {a.basis_names[j]} is not a derivation of h")
    for i in range(da):
        for j in range(i + 1, da):
            comm = [[sum(action[i][r][k] * action[j][k][s] -
                         action[j][r][k] * action[i][k][s] for k in range(dh))
                     for s in range(dh)] for r in range(dh)]
            expect = zeros(dh, dh)
            for k in range(da):
                ck = a.structure[i][j][k]
                if ck:
                    for r in range(dh):
                        for s in range(dh):
                            expect[r][s] += ck * action[k][r][s]
            if comm != expect:
                raise ValueError(
                    f"action is not a representation of a: fails on "
                    f"({a.basis_names[i]},{a.basis_names[j]})"
                )
    names = h.basis_names + a.basis_names
    d = dh + da
    structure = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(dh):
        for j in range(dh):
            for k in range(dh):
                structure[i][j][k] = h.structure[i][j][k]
    for i in range(da):
        for j in range(da):
            for k in range(da):
                structure[dh + i][dh + j][dh + k] = a.structure[i][j][k]
    for j in range(da):
        for i in range(dh):
            for k in range(dh):
                c = action[j][k][i]
                structure[dh + j][i][k] = c
                structure[i][dh + j][k] = -c
    return LieAlgebra(names, structure, validate=True)


def abelian(dim: int, names=None) -> LieAlgebra:
    if names is None:
        names = tuple(f"e{i + 1}" for i in range(dim))
    zero = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    return LieAlgebra(names, zero, validate=False)


def heisenberg(m: int) -> LieAlgebra:
    """Heisenberg algebra of dimension 2m+1: [p_i, q_i] = z, z central."""
    if m < 1:
        raise ValueError("heisenberg(m) needs m >= 1")
    names = tuple(f"p{i + 1}" for i in range(m)) + \
        tuple(f"q{i + 1}" for i in range(m)) + ("z",)
    brackets = {(i, m + i): {2 * m: 1} for i in range(m)}
    return algebra_from_brackets(names, brackets)


def heisenberg3() -> LieAlgebra:
    """Three-dimensional Heisenberg algebra, basis (p, q, z), [p, q] = z."""
    return algebra_from_brackets(("p", "q", "z"), {(0, 1): {2: 1}})


def oscillator() -> LieAlgebra:
    """h3 x| R with the rotation derivation Dp = q, Dq = -p, Dz = 0.

    Basis order (p, q, z, w) with w spanning the acting line.
    """
    rotation = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    return semidirect_product(heisenberg3(), abelian(1, ("w",)), [rotation])


def standard_algebra(name: str, dim: int | None = None) -> LieAlgebra:
    """Named constructions: abelian(d), heisenberg3, oscillator."""
    if name == "abelian":
        if dim is None:
            raise ValueError("abelian needs a dimension")
        return abelian(dim)
    if name == "heisenberg3":
        return heisenberg3()
    if name == "oscillator":
        return oscillator()
    raise ValueError(f"unknown algebra name {name!r}")


class Representation:
    """Linear action of an algebra: one space_dim x space_dim matrix per basis element."""

    __slots__ = ("algebra", "space_dim", "matrices")

    def __init__(self, algebra: LieAlgebra, space_dim: int, matrices, validate: bool = True):
        mats = [
            [[Fraction(c) for c in row] for row in mat]
            for mat in matrices
        ]
        if len(mats) != algebra.dim or any(
            len(mat) != space_dim or any(len(row) != space_dim for row in mat)
            for mat in mats
        ):
            raise ValueError("representation needs one space_dim x space_dim matrix per basis element")
        self.algebra = algebra
        self.space_dim = space_dim
        self.matrices = mats
        if validate:
            bad = check_representation(self)
            if bad:
                i, j, _ = bad[0]
                names = algebra.basis_names
                raise ValueError(
                    f"representation property fails on ({names[i]},{names[j]})"
                )

    def __repr__(self):
        return f"Representation(dim={self.algebra.dim} -> gl({self.space_dim}))"


def check_representation(rep: Representation):
    """Pairs i<j where rho([e_i,e_j]) != [rho(e_i), rho(e_j)], with defects."""
    alg, mats = rep.algebra, rep.matrices
    violations = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            comm = _mat_sub(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i]))
            expect = zeros(rep.space_dim, rep.space_dim)
            for k in range(alg.dim):
                c = alg.structure[i][j][k]
                if c:
                    for r in range(rep.space_dim):
                        for s in range(rep.space_dim):
                            expect[r][s] += c * mats[k][r][s]
            defect = _mat_sub(comm, expect)
            if any(any(x != 0 for x in row) for row in defect):
                violations.append((i, j, defect))
    return violations


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def trivial_representation(algebra: LieAlgebra, space_dim: int = 1) -> Representation:
    return Representation(
        algebra, space_dim,
        [zeros(space_dim, space_dim) for _ in range(algebra.dim)],
        validate=False,
    )


def adjoint_representation(algebra: LieAlgebra) -> Representation:
    mats = [ad_matrix(algebra, _unit(algebra.dim, i)) for i in range(algebra.dim)]
    return Representation(algebra, algebra.dim, mats, validate=False)

"""Finite-dimensional associative algebras given by structure constants.

Semisimplicity is decided by the characteristic-zero trace-form criterion:
the radical is the kernel of T(x, y) = tr(L_x L_y) on the left regular
representation.  Over Q this verdict is unchanged by extending scalars to C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import List, Optional, Sequence, Tuple

from .linalg import ONE, ZERO, Q, dense_rank, echelonize, fmt_rational, nullspace, qq, solve

Matrix = List[List[Q]]


class NoIdentity(ValueError):
    pass


class ActionError(ValueError):
    """The given matrices do not define a module."""


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum((A[i][t] * B[t][j] for t in range(k)), ZERO) for j in range(m)] for i in range(n)]


def _identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _flat(M: Matrix) -> List[Q]:
    return [x for row in M for x in row]


class FiniteAlgebra:
    """Algebra with basis b_0..b_{d-1} and b_i b_j = sum_k table[i][j][k] b_k."""

    def __init__(self, table: Sequence[Sequence[Sequence]], labels: Optional[Sequence[str]] = None):
        self.d = len(table)
        for row in table:
            if len(row) != self.d or any(len(c) != self.d for c in row):
                raise ValueError("structure tensor must be d x d x d")
        self.table = [[[qq(x) for x in table[i][j]] for j in range(self.d)] for i in range(self.d)]
        self.labels = list(labels) if labels else [f"b{i}" for i in range(self.d)]

    # -- arithmetic ----------------------------------------------------------
    def mul(self, x: Sequence, y: Sequence) -> List[Q]:
        out = [ZERO] * self.d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] += c * t
        return out

    def unit(self, i: int) -> List[Q]:
        return [ONE if j == i else ZERO for j in range(self.d)]

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x*y; column j is x*b_j."""
        cols = [self.mul(x, self.unit(j)) for j in range(self.d)]
        return [[cols[j][i] for j in range(self.d)] for i in range(self.d)]

    def right_matrix(self, x: Sequence) -> Matrix:
        cols = [self.mul(self.unit(j), x) for j in range(self.d)]
        return [[cols[j][i] for j in range(self.d)] for i in range(self.d)]

    def is_associative(self) -> bool:
        for i, j, k in iproduct(range(self.d), repeat=3):
            bi, bj, bk = self.unit(i), self.unit(j), self.unit(k)
            if self.mul(self.mul(bi, bj), bk) != self.mul(bi, self.mul(bj, bk)):
                return False
        return True

    def change_basis(self, S: Matrix) -> "FiniteAlgebra":
        """Algebra in the basis c_i = sum_j S[j][i] b_j (S invertible)."""
        d = self.d
        cols = [[S[r][i] for r in range(d)] for i in range(d)]
        table = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = self.mul(cols[i], cols[j])
                x = solve(S, prod, d)
                if x is None:
                    raise ValueError("change of basis matrix is singular")
                row.append(x)
            table.append(row)
        return FiniteAlgebra(table)

    def as_dict(self) -> dict:
        return {
            "dimension": self.d,
            "labels": self.labels,
            "structure_constants": [[[fmt_rational(x) for x in c] for c in row] for row in self.table],
        }


# ---------------------------------------------------------------------------
# analysis


def find_identity(A: FiniteAlgebra) -> Optional[List[Q]]:
    """The two-sided identity, solved from e*b_i = b_i = b_i*e; None if absent."""
    d = A.d
    rows, rhs = [], []
    for i in range(d):
        for k in range(d):
            rows.append([A.table[t][i][k] for t in range(d)])   # (e*b_i)_k
            rhs.append(ONE if k == i else ZERO)
            rows.append([A.table[i][t][k] for t in range(d)])   # (b_i*e)_k
            rhs.append(ONE if k == i else ZERO)
    if d == 0:
        return None
    return solve(rows, rhs, d)


def trace_form(A: FiniteAlgebra) -> Matrix:
    Ls = [A.left_matrix(A.unit(i)) for i in range(A.d)]
    T = []
    for i in range(A.d):
        T.append([])
        for j in range(A.d):
            M = _mat_mul(Ls[i], Ls[j])
            T[i].append(sum((M[k][k] for k in range(A.d)), ZERO))
    return T


@dataclass
class SemisimpleVerdict:
    semisimple: bool
    radical_dim: int
    trace_form_rank: int
    radical_basis: List[List[Q]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "semisimple": self.semisimple,
            "radical_dim": self.radical_dim,
            "trace_form_rank": self.trace_form_rank,
        }


def is_semisimple(A: FiniteAlgebra) -> SemisimpleVerdict:
    if find_identity(A) is None:
        raise NoIdentity("semisimplicity test needs a unital algebra")
    T = trace_form(A)
    rad = nullspace(T, A.d)
    return SemisimpleVerdict(not rad, len(rad), A.d - len(rad), rad)


def is_commutative(A: FiniteAlgebra) -> bool:
    return all(A.table[i][j] == A.table[j][i] for i in range(A.d) for j in range(i + 1, A.d))


def center_contains(A: FiniteAlgebra, z: Sequence) -> bool:
    z = [qq(x) for x in z]
    return all(A.mul(z, A.unit(i)) == A.mul(A.unit(i), z) for i in range(A.d))


# ---------------------------------------------------------------------------
# spectra of multiplication operators


def minimal_polynomial(M: Matrix) -> List[Q]:
    """Monic minimal polynomial, coefficients from constant term upward."""
    n = len(M)
    powers = [_identity(n)]
    flats = []
    while True:
        F = _flat(powers[-1])
        # is the newest power a combination of the earlier ones?
        rows = flats + [F]
        if dense_rank(rows) < len(rows):
            k = len(flats)
            cols = [[flats[j][r] for j in range(k)] for r in range(n * n)]
            x = solve(cols, F, k)
            return [-c for c in x] + [ONE]
        flats.append(F)
        powers.append(_mat_mul(powers[-1], M))


def _divisors(n: int) -> List[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_eval(coeffs: Sequence[Q], x: Q) -> Q:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_div_linear(coeffs: List[Q], r: Q) -> List[Q]:
    """Quotient of the polynomial by (x - r), assuming r is a root."""
    out = [ZERO] * (len(coeffs) - 1)
    acc = ZERO
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * r + coeffs[i]
        out[i - 1] = acc
    return out


def rational_roots(coeffs: Sequence[Q]) -> Tuple[List[Tuple[Q, int]], List[Q]]:
    """Rational roots with multiplicity and the remaining cofactor."""
    coeffs = [qq(c) for c in coeffs]
    roots: List[Tuple[Q, int]] = []
    while len(coeffs) > 1 and not coeffs[0]:
        coeffs = coeffs[1:]
        if roots and roots[-1][0] == 0:
            roots[-1] = (ZERO, roots[-1][1] + 1)
        else:
            roots.append((ZERO, 1))
    if len(coeffs) > 1:
        lcm = 1
        for c in coeffs:
            lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in coeffs]
        candidates = sorted({Q(s * p, q) for p in _divisors(ints[0]) for q in _divisors(ints[-1])
                             for s in (1, -1)})
        for r in candidates:
            mult = 0
            while len(coeffs) > 1 and _poly_eval(coeffs, r) == 0:
                coeffs = _poly_div_linear(coeffs, r)
                mult += 1
            if mult:
                roots.append((r, mult))
    roots.sort(key=lambda t: t[0])
    return roots, coeffs


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _irreducible_degrees(coeffs: Sequence[Q]) -> List[int]:
    if len(coeffs) <= 1:
        return []
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)], x)
    degs = []
    for fac, mult in poly.factor_list()[1]:
        degs.extend([fac.degree()] * mult)
    return sorted(degs)


@dataclass
class EigenReport:
    minimal_polynomial: List[Q]
    roots: List[Tuple[Q, int]]
    residual_degrees: List[int]
    central: bool

    @property
    def eigenvalues(self) -> List[Q]:
        return [r for r, _ in self.roots]

    def as_dict(self) -> dict:
        return {
            "minimal_polynomial": [fmt_rational(c) for c in self.minimal_polynomial],
            "roots": [{"value": fmt_rational(r), "multiplicity": m} for r, m in self.roots],
            "residual_factor_degrees": self.residual_degrees,
            "central": self.central,
        }


def rational_eigenvalues(A: FiniteAlgebra, z: Sequence) -> EigenReport:
    """Rational roots of the minimal polynomial of left multiplication by z."""
    z = [qq(x) for x in z]
    central = center_contains(A, z)
    mp = minimal_polynomial(A.left_matrix(z))
    roots, rest = rational_roots(mp)
    return EigenReport(mp, roots, _irreducible_degrees(rest), central)


# ---------------------------------------------------------------------------
# modules


def check_action(A: FiniteAlgebra, mats: Sequence[Matrix]) -> None:
    """Raise ActionError unless b_i -> mats[i] is a unital algebra map."""
    if len(mats) != A.d:
        raise ActionError("need one matrix per basis element")
    k = len(mats[0]) if mats else 0
    for i, j in iproduct(range(A.d), repeat=2):
        lhs = _mat_mul(mats[i], mats[j])
        rhs = [[sum((A.table[i][j][t] * mats[t][r][c] for t in range(A.d)), ZERO)
                for c in range(k)] for r in range(k)]
        if lhs != rhs:
            raise ActionError(f"rho(b{i}) rho(b{j}) != rho(b{i} b{j})")
    e = find_identity(A)
    if e is not None:
        img = [[sum((e[t] * mats[t][r][c] for t in range(A.d)), ZERO) for c in range(k)] for r in range(k)]
        if img != _identity(k):
            raise ActionError("identity does not act as the identity")


def full_matrix_test(A: FiniteAlgebra, mats: Sequence[Matrix]) -> str:
    """``"simple"`` when the image of A is all of End(U), else ``"undetermined"``."""
    mats = [[[qq(x) for x in row] for row in M] for M in mats]
    check_action(A, mats)
    k = len(mats[0]) if mats else 0
    if k == 0:
        return "undetermined"
    image = dense_rank([_flat(M) for M in mats])
    return "simple" if image == k * k else "undetermined"


def _span_rank(vectors: Sequence[Sequence]) -> Tuple[int, List[List[Q]]]:
    E = echelonize({j: qq(x) for j, x in enumerate(v) if x} for v in vectors)
    d = len(vectors[0]) if vectors else 0
    basis = [[row.get(j, ZERO) for j in range(d)] for row in E.rows]
    return E.rank, basis


def _is_nilpotent_ideal(A: FiniteAlgebra, basis: List[List[Q]]) -> bool:
    power = basis
    for _ in range(A.d + 1):
        if not power:
            return True
        prods = [A.mul(x, y) for x in power for y in basis]
        _, power = _span_rank([p for p in prods if any(p)] or [[ZERO] * A.d])
        power = [v for v in power if any(v)]
    return not power


def brute_force_radical(A: FiniteAlgebra, bound: int = 1) -> int:
    """Dimension of the sum of the nilpotent two-sided ideals generated by
    the elements with integer coordinates in [-bound, bound].

    A cross-check for the trace-form verdict that uses only multiplication:
    it finds the whole radical whenever the radical is spanned by such
    small elements, which holds for the bundled corpus.
    """
    d = A.d
    units = [A.unit(i) for i in range(d)]
    found: List[List[Q]] = []
    for coords in iproduct(range(-bound, bound + 1), repeat=d):
        if not any(coords):
            continue
        x = [Q(c) for c in coords]
        gens = [x] + [A.mul(b, x) for b in units] + [A.mul(x, b) for b in units]
        gens += [A.mul(A.mul(b, x), c) for b in units for c in units]
        _, ideal = _span_rank(gens)
        if _is_nilpotent_ideal(A, ideal):
            found.extend(ideal)
    if not found:
        return 0
    rank, basis = _span_rank(found)
    if not _is_nilpotent_ideal(A, basis):
        raise AssertionError("sum of nilpotent ideals is not nilpotent")
    return rank


# ---------------------------------------------------------------------------
# a small corpus of algebras


def one_dim() -> FiniteAlgebra:
    return FiniteAlgebra([[[1]]], ["e"])


def dual_numbers() -> FiniteAlgebra:
    """Q[x]/(x^2) in the basis 1, x."""
    return FiniteAlgebra([[[1, 0], [0, 1]], [[0, 1], [0, 0]]], ["1", "x"])


def split_quadratic() -> FiniteAlgebra:
    """Q[x]/(x^2 - 1) in the basis 1, x."""
    return FiniteAlgebra([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], ["1", "x"])


def rationals_squared() -> FiniteAlgebra:
    """Q x Q with componentwise product."""
    return FiniteAlgebra([[[1, 0], [0, 0]], [[0, 0], [0, 1]]], ["e1", "e2"])


def truncated_polynomial(k: int) -> FiniteAlgebra:
    """Q[x]/(x^k) in the basis 1, x, ..., x^(k-1)."""
    table = [[[ONE if (i + j < k and t == i + j) else ZERO for t in range(k)]
              for j in range(k)] for i in range(k)]
    return FiniteAlgebra(table, [f"x^{i}" for i in range(k)])


def matrix_units(n: int) -> FiniteAlgebra:
    """M_n(Q) in the basis E_ij (row-major)."""
    d = n * n
    table = []
    for a in range(d):
        i, j = divmod(a, n)
        row = []
        for b in range(d):
            k, l = divmod(b, n)
            c = [ZERO] * d
            if j == k:
                c[i * n + l] = ONE
            row.append(c)
        table.append(row)
    return FiniteAlgebra(table, [f"E{i}{j}" for i in range(n) for j in range(n)])


def upper_triangular() -> FiniteAlgebra:
    """Upper triangular 2x2 matrices, basis E11, E12, E22."""
    idx = {(0, 0): 0, (0, 1): 1, (1, 1): 2}
    table = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            c = [ZERO] * 3
            if j == k:
                c[idx[(i, l)]] = ONE
            row.append(c)
        table.append(row)
    return FiniteAlgebra(table, ["E11", "E12", "E22"])


def product_algebra(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    d = A.d + B.d
    table = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(A.d):
        for j in range(A.d):
            table[i][j][:A.d] = A.table[i][j]
    for i in range(B.d):
        for j in range(B.d):
            table[A.d + i][A.d + j][A.d:] = B.table[i][j]
    return FiniteAlgebra(table, A.labels + B.labels)


CORPUS = {
    "one-dim": one_dim,
    "dual-numbers": dual_numbers,
    "split-quadratic": split_quadratic,
    "rationals-squared": rationals_squared,
    "matrix-units-2": lambda: matrix_units(2),
    "truncated-poly-3": lambda: truncated_polynomial(3),
    "upper-triangular-2": upper_triangular,
    "dual-times-Q": lambda: product_algebra(dual_numbers(), one_dim()),
}

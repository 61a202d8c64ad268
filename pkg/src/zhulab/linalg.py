"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts mapping an ordered basis key to a nonzero rational.
An :class:`Echelon` keeps a subspace in reduced row-echelon form with respect
to a caller-supplied total order on keys; since the RREF of a subspace under a
fixed order is unique, every construction path (any input order, any number of
worker threads) yields the same rows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

try:  # gmpy2 rationals are a drop-in, much faster replacement for Fraction
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

Key = Hashable
Vec = Dict[Key, "Q"]

ZERO = Q(0)
ONE = Q(1)


class OrderingError(ValueError):
    """Raised when a truncation predicate is incompatible with the key order."""


def qq(x) -> "Q":
    """Coerce an int, Fraction, string "p/q" or rational into the scalar type."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Fraction):
        return Q(x.numerator, x.denominator)
    return Q(x)


def parse_rational(text: str) -> "Q":
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    num, sep, den = s.partition("/")
    try:
        p = int(num.strip())
        q = int(den.strip()) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q <= 0:
        raise ValueError(f"malformed rational {text!r}: denominator must be positive")
    return Q(p, q)


def fmt_rational(x) -> str:
    x = qq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binom(p: int, i: int) -> int:
    """Generalized binomial p(p-1)...(p-i+1)/i!, valid for negative ``p``."""
    if i < 0:
        return 0
    if p >= 0:
        return math.comb(p, i)
    return (-1) ** i * math.comb(i - p - 1, i)


# ---------------------------------------------------------------------------
# sparse vector helpers


def add_to(acc: Vec, v: Vec, c=ONE) -> Vec:
    """In place ``acc += c*v``; returns ``acc``."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def scale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def combine(*terms: Tuple[object, Vec]) -> Vec:
    out: Vec = {}
    for c, v in terms:
        add_to(out, v, qq(c))
    return out


def sub(u: Vec, v: Vec) -> Vec:
    return add_to(dict(u), v, -ONE)


# ---------------------------------------------------------------------------
# echelon forms


def _identity(k):
    return k


class Echelon:
    """A subspace held in reduced row-echelon form.

    ``order`` maps a key to a sort key; the pivot of a row is its smallest key.
    Rows are normalized so every pivot coefficient is 1 and pivot columns are
    zero in every other row.
    """

    def __init__(self, order: Callable[[Key], object] = _identity):
        self.order = order
        self._rows: Dict[Key, Vec] = {}
        self._cols: Dict[Key, set] = {}

    # -- queries ------------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Key]:
        return sorted(self._rows, key=self.order)

    @property
    def rows(self) -> List[Vec]:
        return [dict(self._rows[p]) for p in self.pivots]

    def is_pivot(self, key: Key) -> bool:
        return key in self._rows

    def reduce(self, v: Vec) -> Vec:
        """Canonical coset representative of ``v`` (supported on non-pivots)."""
        out = dict(v)
        for k in [k for k in v if k in self._rows]:
            c = out.get(k)
            if c:
                add_to(out, self._rows[k], -c)
        return out

    def contains(self, v: Vec) -> Tuple[bool, Vec]:
        r = self.reduce(v)
        return (not r), r

    def support(self) -> set:
        keys = set()
        for row in self._rows.values():
            keys.update(row)
        return keys

    # -- construction -------------------------------------------------------
    def insert(self, v: Vec) -> bool:
        """Add ``v`` to the span; returns True when the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r, key=self.order)
        inv = ONE / r[piv]
        r = {k: x * inv for k, x in r.items()}
        # clear the new pivot column from existing rows
        for p in list(self._cols.get(piv, ())):
            row = self._rows[p]
            c = row[piv]
            for k, x in r.items():
                y = row.get(k, ZERO) - c * x
                if y:
                    if k not in row:
                        self._cols.setdefault(k, set()).add(p)
                    row[k] = y
                elif k in row:
                    del row[k]
                    self._cols[k].discard(p)
        self._rows[piv] = r
        for k in r:
            self._cols.setdefault(k, set()).add(piv)
        return True

    def extend(self, vectors: Iterable[Vec]) -> "Echelon":
        for v in vectors:
            self.insert(v)
        return self

    def copy(self) -> "Echelon":
        e = Echelon(self.order)
        e._rows = {p: dict(r) for p, r in self._rows.items()}
        e._cols = {k: set(s) for k, s in self._cols.items()}
        return e

    def __eq__(self, other) -> bool:
        if not isinstance(other, Echelon):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"Echelon(rank={self.rank})"


def echelonize(vectors: Iterable[Vec], order: Callable[[Key], object] = _identity) -> Echelon:
    return Echelon(order).extend(vectors)


def contains(E: Echelon, v: Vec) -> Tuple[bool, Vec]:
    return E.contains(v)


def intersect_truncated(E: Echelon, keep: Callable[[Key], bool]) -> Echelon:
    """Basis of the vectors of span(E) supported only on kept keys.

    Requires every rejected key of the support to precede every kept key in
    ``E.order``; then exactly the rows whose pivot is kept span the result.
    """
    support = E.support()
    rejected = [E.order(k) for k in support if not keep(k)]
    kept = [E.order(k) for k in support if keep(k)]
    if rejected and kept and max(rejected) > min(kept):
        raise OrderingError("rejected keys must precede kept keys in the echelon order")
    out = Echelon(E.order)
    for p in E.pivots:
        if keep(p):
            row = dict(E._rows[p])
            out._rows[p] = row
            for k in row:
                out._cols.setdefault(k, set()).add(p)
    return out


def quotient_reps(ambient: Sequence[Key], E: Echelon) -> List[Key]:
    """Non-pivot keys of ``ambient``; their cosets form a basis of the quotient."""
    return [k for k in ambient if not E.is_pivot(k)]


# ---------------------------------------------------------------------------
# small dense helpers used by the algebra module


def dense_rank(rows: Sequence[Sequence]) -> int:
    return echelonize(
        ({j: qq(x) for j, x in enumerate(row) if x} for row in rows)
    ).rank


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List["Q"]]:
    """Basis of {x : rows . x = 0} as dense lists."""
    E = echelonize({j: qq(x) for j, x in enumerate(row) if x} for row in rows)
    piv = set(E.pivots)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for p in E.pivots:
            row = E._rows[p]
            x[p] = -row.get(f, ZERO)
        basis.append(x)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Optional[List["Q"]]:
    """One solution of rows . x = rhs, or None when inconsistent."""
    aug = []
    for row, b in zip(rows, rhs):
        v = {j: qq(x) for j, x in enumerate(row) if x}
        if b:
            v[ncols] = qq(b)
        aug.append(v)
    E = echelonize(aug)
    if E.is_pivot(ncols):
        return None
    x = [ZERO] * ncols
    for p in E.pivots:
        x[p] = E._rows[p].get(ncols, ZERO)
    return x

"""Truncated vertex operator algebras and the mode engine.

Two presentations are bundled: the rank one Heisenberg (free boson) VOA and
the universal Virasoro VOA at a fixed rational central charge, optionally
divided by the ideal generated by a singular vector.

Basis keys are partitions stored as non-increasing tuples: ``(n1, ..., nk)``
stands for ``g(-n1)...g(-nk)|0>`` (or the highest-weight vector of a module),
so the weight of a key is ``sum(key)``.

The field of an arbitrary state acts through the iterate formula

    (a_p b)_m = sum_i (-1)^i C(p,i) (a_{p-i} b_{m+i} - (-1)^p b_{p+m-i} a_i)

applied to the leading PBW factor ``a_p`` of the state, so only the action of
the generating field ``a`` on the target space has to be known.
"""

from __future__ import annotations

import threading
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .linalg import ONE, Echelon, Q, Vec, add_to, binom, qq

HEISENBERG = "heisenberg-rank1"
VIRASORO = "virasoro"
KINDS = (HEISENBERG, VIRASORO)

Mono = Tuple[int, ...]

VACUUM: Mono = ()


class CutoffExceeded(ValueError):
    """A result would live above the retained weight; raise the cutoff."""


def weight(key: Mono) -> int:
    return sum(key)


def vkey_order(key: Mono):
    """Higher weight first; within a weight, larger parts first."""
    return (-sum(key), tuple(-p for p in key))


def partitions(w: int, min_part: int = 1, max_part: Optional[int] = None) -> Iterator[Mono]:
    """Partitions of ``w`` into parts >= min_part, largest parts first."""
    if max_part is None:
        max_part = w
    if w == 0:
        yield ()
        return
    for first in range(min(w, max_part), min_part - 1, -1):
        for rest in partitions(w - first, min_part, first):
            yield (first,) + rest


def components(v: Vec) -> Dict[int, Vec]:
    """Split a vector into its homogeneous components, by weight."""
    out: Dict[int, Vec] = {}
    for k, c in v.items():
        out.setdefault(sum(k), {})[k] = c
    return dict(sorted(out.items()))


def max_weight(v: Vec) -> int:
    return max((sum(k) for k in v), default=-1)


def _insert_part(mono: Mono, n: int) -> Mono:
    i = 0
    while i < len(mono) and mono[i] >= n:
        i += 1
    return mono[:i] + (n,) + mono[i:]


# ---------------------------------------------------------------------------
# generator actions on highest-weight modules


class HeisenbergAction:
    """alpha(j) on the Fock space with alpha(0) acting by ``lam``."""

    gen = "a"
    gen_weight = 1
    min_part = 1

    def __init__(self, lam=0):
        self.lam = qq(lam)

    def apply(self, j: int, mono: Mono) -> Vec:
        if j < 0:
            return {_insert_part(mono, -j): ONE}
        if j == 0:
            return {mono: self.lam} if self.lam else {}
        count = mono.count(j)
        if not count:
            return {}
        i = mono.index(j)
        return {mono[:i] + mono[i + 1:]: Q(j * count)}


class VirasoroAction:
    """L(j) on a highest-weight module by normal ordering.

    ``min_part=2`` gives the vacuum module (L(-1) kills the highest-weight
    vector), ``min_part=1`` the Verma module.
    """

    gen = "L"
    gen_weight = 2

    def __init__(self, c, h=0, min_part: int = 1):
        self.c = qq(c)
        self.h = qq(h)
        self.min_part = min_part
        self._cache: Dict[Tuple[int, Mono], Vec] = {}

    def apply(self, j: int, mono: Mono) -> Vec:
        key = (j, mono)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._apply(j, mono)
            self._cache[key] = hit
        return hit

    def _apply(self, j: int, mono: Mono) -> Vec:
        if j == 0:
            e = self.h + sum(mono)
            return {mono: e} if e else {}
        if not mono:
            if j > 0 or -j < self.min_part:
                return {}
            return {(-j,): ONE}
        n1, rest = mono[0], mono[1:]
        if -j >= n1:
            return {(-j,) + mono: ONE}
        # L(j)L(-n1) = L(-n1)L(j) + (j+n1)L(j-n1) + delta_{j,n1} c (j^3-j)/12
        out: Vec = {}
        for m2, x in self.apply(j, rest).items():
            add_to(out, self.apply(-n1, m2), x)
        if j + n1:
            add_to(out, self.apply(j - n1, rest), Q(j + n1))
        if j == n1:
            add_to(out, {rest: ONE}, self.c * Q(j ** 3 - j, 12))
        return out


def apply_vec(action, j: int, v: Vec) -> Vec:
    out: Vec = {}
    for m, x in v.items():
        add_to(out, action.apply(j, m), x)
    return out


# ---------------------------------------------------------------------------
# the mode engine


class FieldEngine:
    """Computes u_k w for u a PBW state of the VOA and w a target basis vector.

    ``action`` supplies the generator modes on the target space; ``reducer``
    (optional) maps a homogeneous target vector of weight <= ``reduce_upto``
    to its canonical representative modulo an ideal.
    """

    def __init__(self, kind: str, action, reducer: Optional[Callable[[Vec], Vec]] = None,
                 reduce_upto: int = -1, cache: bool = True):
        self.kind = kind
        self.action = action
        self.reducer = reducer
        self.reduce_upto = reduce_upto
        self.gen_weight = 1 if kind == HEISENBERG else 2
        self._cache: Optional[Dict[Tuple[Mono, int, Mono], Vec]] = {} if cache else None
        self._lock = threading.Lock()

    def _p(self, n1: int) -> int:
        # alpha(-n) = (alpha(-1)|0>)_{-n};  L(-n) = omega_{1-n}
        return -n1 if self.kind == HEISENBERG else 1 - n1

    def _gen_index(self, i: int) -> int:
        return i if self.kind == HEISENBERG else i - 1

    def _reduce(self, v: Vec, level: int) -> Vec:
        if self.reducer is not None and v and level <= self.reduce_upto:
            return self.reducer(v)
        return v

    def a_mode(self, i: int, v: Vec) -> Vec:
        """Mode a_i of the generating state a (alpha(-1)|0> or omega)."""
        out = apply_vec(self.action, self._gen_index(i), v)
        if out:
            out = self._reduce(out, sum(next(iter(out))))
        return out

    def mode(self, u: Mono, k: int, w: Mono) -> Vec:
        level = sum(u) + sum(w) - k - 1
        if level < 0:
            return {}
        if not u:
            return {w: ONE} if k == -1 else {}
        key = (u, k, w)
        if self._cache is not None:
            hit = self._cache.get(key)
            if hit is not None:
                return hit
        res = self._compute(u, k, w, level)
        if self._cache is not None:
            with self._lock:
                self._cache.setdefault(key, res)
        return res

    def mode_vec(self, u: Mono, k: int, v: Vec) -> Vec:
        out: Vec = {}
        for w, x in v.items():
            add_to(out, self.mode(u, k, w), x)
        return out

    def _compute(self, u: Mono, k: int, w: Mono, level: int) -> Vec:
        n1, b = u[0], u[1:]
        if not b and n1 == self.gen_weight:
            # u is the generating state itself
            return self.a_mode(k, {w: ONE})
        p = self._p(n1)
        res: Vec = {}
        wb, ww = sum(b), sum(w)
        i = 0
        while wb + ww - k - i - 1 >= 0:
            c = binom(p, i)
            if c:
                x = self.mode(b, k + i, w)
                if x:
                    add_to(res, self.a_mode(p - i, x), Q((-1) ** i * c))
            i += 1
        sign = -((-1) ** (p % 2))
        i = 0
        while self.gen_weight + ww - i - 1 >= 0:
            c = binom(p, i)
            if c:
                x = self.a_mode(i, {w: ONE})
                if x:
                    add_to(res, self.mode_vec(b, p + k - i, x), Q(sign * (-1) ** i * c))
            i += 1
        return self._reduce(res, level)

    def cache_size(self) -> int:
        return len(self._cache) if self._cache is not None else 0


# ---------------------------------------------------------------------------
# presentations


class IdealClosure:
    """Ideal generated by singular vectors, built level by level on demand.

    Positive modes kill each generator and the zero mode acts by a scalar, so
    the ideal is spanned by negative-mode descendants: level w is spanned by
    the generators of weight w and g(-j) applied to a basis of level w - j.
    """

    def __init__(self, generators: Sequence[Vec], cutoff: int, action):
        self.generators = [dict(g) for g in generators if g]
        self.cutoff = cutoff
        self.action = action
        self.echelon = Echelon(vkey_order)
        self._levels: Dict[int, List[Vec]] = {}
        self._built = -1
        self._lock = threading.RLock()

    def ensure(self, w: int):
        w = min(w, self.cutoff)
        if w <= self._built:
            return
        with self._lock:
            for lvl in range(self._built + 1, w + 1):
                cands = [g for g in self.generators if max_weight(g) == lvl]
                cands += [apply_vec(self.action, -j, v) for j in range(1, lvl + 1)
                          for v in self._levels.get(lvl - j, ())]
                self._levels[lvl] = [x for x in cands if x and self.echelon.insert(x)]
                self._built = lvl

    def reduce(self, v: Vec) -> Vec:
        if not v:
            return v
        self.ensure(max_weight(v))
        with self._lock:
            return self.echelon.reduce(v)

    def is_pivot(self, k: Mono) -> bool:
        self.ensure(sum(k))
        return self.echelon.is_pivot(k)

    def dim(self, w: int) -> int:
        self.ensure(w)
        return len(self._levels.get(w, ()))


class VOA:
    """A truncated VOA presentation (``VoaPresentation``).

    ``cutoff`` is the largest weight any public operation may return.
    """

    def __init__(self, kind: str, cutoff: int, central_charge=None,
                 quotient: Optional[IdealClosure] = None, cache: bool = True):
        if kind not in KINDS:
            raise ValueError(f"unknown presentation kind {kind!r}")
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.kind = kind
        self.cutoff = cutoff
        if kind == HEISENBERG:
            self.central_charge = ONE
            self.action = HeisenbergAction(0)
        else:
            if central_charge is None:
                raise ValueError("virasoro presentation needs a central charge")
            self.central_charge = qq(central_charge)
            self.action = VirasoroAction(self.central_charge, 0, min_part=2)
        self.quotient = quotient
        reducer = quotient.reduce if quotient is not None else None
        upto = quotient.cutoff if quotient is not None else -1
        self.engine = FieldEngine(kind, self.action, reducer, upto, cache=cache)

    # -- static data ---------------------------------------------------------
    @property
    def gen(self) -> str:
        return self.action.gen

    @property
    def gen_weight(self) -> int:
        return self.action.gen_weight

    @property
    def min_part(self) -> int:
        return self.action.min_part

    @property
    def vacuum(self) -> Vec:
        return {VACUUM: ONE}

    @property
    def omega(self) -> Vec:
        if self.kind == HEISENBERG:
            return {(1, 1): Q(1, 2)}
        return {(2,): ONE}

    @property
    def generator_state(self) -> Vec:
        return {(self.gen_weight,): ONE}

    def describe(self) -> dict:
        d = {"kind": self.kind, "cutoff": self.cutoff}
        if self.kind == VIRASORO:
            d["central_charge"] = self.central_charge
        d["quotient"] = self.quotient is not None
        return d

    def with_cutoff(self, cutoff: int) -> "VOA":
        """Same presentation with another cutoff (the ideal is rebuilt)."""
        base = VOA(self.kind, cutoff, self.central_charge if self.kind == VIRASORO else None)
        if self.quotient is None:
            return base
        return base.quotient_by(*self.quotient.generators)

    def quotient_by(self, *singular: Vec) -> "VOA":
        """Quotient by the ideal generated by one or more singular vectors."""
        if self.quotient is not None:
            raise ValueError("presentation is already a quotient")
        for s in singular:
            if not verify_singular(self, s):
                raise ValueError("vector is not singular")
        ideal = ideal_closure(self, list(singular), self.cutoff)
        return VOA(self.kind, self.cutoff, self.central_charge, quotient=ideal)

    # -- bases -----------------------------------------------------------------
    def _check(self, w: int):
        if w > self.cutoff:
            raise CutoffExceeded(f"weight {w} exceeds cutoff {self.cutoff}")

    def enumerate_basis(self, w: int) -> List[Mono]:
        """All PBW monomials of weight ``w`` of the universal presentation."""
        self._check(w)
        if w < 0:
            return []
        return list(partitions(w, self.min_part))

    def basis(self, w: int) -> List[Mono]:
        """Basis of V_w: PBW monomials, or coset representatives for a quotient."""
        monos = self.enumerate_basis(w)
        if self.quotient is None:
            return monos
        return [m for m in monos if not self.quotient.is_pivot(m)]

    def basis_upto(self, N: int) -> List[Mono]:
        out: List[Mono] = []
        for w in range(N + 1):
            out.extend(self.basis(w))
        return out

    def dim(self, w: int) -> int:
        return len(self.basis(w))

    def reduce(self, v: Vec) -> Vec:
        if self.quotient is None:
            return v
        return self.quotient.reduce(v)

    # -- modes -----------------------------------------------------------------
    def generator_mode_apply(self, m: int, v: Vec, g: Optional[str] = None) -> Vec:
        if g is not None and g != self.gen:
            raise ValueError(f"generator {g!r} not in {self.kind} presentation")
        for w in components(v):
            self._check(w - m)
        out = apply_vec(self.action, m, v)
        return self.reduce(out) if out else out

    def field_mode(self, u: Vec, k: int, v: Vec) -> Vec:
        """u_k v, bilinear in both arguments."""
        cu, cv = components(u), components(v)
        for wu in cu:
            for wv in cv:
                if wu + wv - k - 1 > self.cutoff:
                    raise CutoffExceeded(
                        f"u_{k} v lands in weight {wu + wv - k - 1} > cutoff {self.cutoff}")
        out: Vec = {}
        eng = self.engine
        for um, x in u.items():
            for vm, y in v.items():
                add_to(out, eng.mode(um, k, vm), x * y)
        return out

    def translate(self, u: Vec) -> Vec:
        """L(-1)u = omega_0 u."""
        return self.field_mode(self.omega, 0, u)

    def L0(self, u: Vec) -> Vec:
        return {k: x * sum(k) for k, x in u.items() if sum(k)}


# ---------------------------------------------------------------------------
# singular vectors and ideals


def verify_singular(P: VOA, s: Vec) -> bool:
    """True iff the homogeneous vector ``s`` is killed by the positive modes.

    For Virasoro L(1), L(2) generate the positive part; for the Heisenberg
    algebra the positive modes alpha(j) all commute, so every alpha(j) with
    0 < j <= wt s is tested (and alpha(0), which kills the vacuum module).
    """
    if not s:
        return True
    if len(components(s)) != 1:
        raise ValueError("singular vectors must be homogeneous")
    act = VOA(P.kind, max(P.cutoff, max_weight(s)),
              P.central_charge if P.kind == VIRASORO else None).action
    if P.kind == VIRASORO:
        modes = (1, 2)
    else:
        modes = range(0, max_weight(s) + 1)
    return all(not apply_vec(act, j, s) for j in modes)


def ideal_closure(P: VOA, s, N: int) -> IdealClosure:
    """Ideal generated by the singular vector(s) ``s`` in weights <= N (lazy)."""
    gens = [s] if isinstance(s, dict) else list(s)
    universal = VOA(P.kind, N, P.central_charge if P.kind == VIRASORO else None)
    return IdealClosure(gens, N, universal.action)

"""Truncated ideals O_n(V), O_{n,m}(V) and the quotients A_n(V), A_{n,m}(V).

Ideals mix weights, so ``O cap V_{<=N}`` is obtained by echelonizing the
generators inside a larger working space (keys ordered higher weight first)
and keeping the rows whose pivot has weight <= N.  Generators are enumerated
from homogeneous basis vectors whose total weight is at most a cap ``K``; the
cap is grown along a schedule and the truncated dimensions are reported per
cap together with a stabilization flag.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import ONE, Echelon, Vec, intersect_truncated, sub
from .products import ProductCache, o_shift_gen
from .voa import VOA, Mono, vkey_order

log = logging.getLogger(__name__)

O_N = "O_n"
O_NM = "O_nm"


class ClosureViolation(ValueError):
    """A product of representatives left the representative span."""


def default_schedule(N: int) -> List[int]:
    return [N + 2, N + 4, N + 6]


def default_p_cap(n: int, m: int) -> int:
    return max(n, m) + 1


def required_cutoff(N: int, n: int, m: Optional[int] = None, p_cap: Optional[int] = None,
                    schedule: Optional[Sequence[int]] = None) -> int:
    """Working cutoff large enough for every product the builders form.

    u *_{m,p}^n v has weight at most wt u + wt v + m + n - p; generators nest
    two such products and the checks multiply up to three truncated vectors.
    """
    m = n if m is None else m
    p_cap = default_p_cap(n, m) if p_cap is None else p_cap
    K = max(schedule) if schedule else default_schedule(N)[-1]
    return max(K, 3 * N) + 2 * (n + m + p_cap) + 2


def _basis_by_weight(P: VOA, upto: int) -> Dict[int, List[Mono]]:
    return {w: P.basis(w) for w in range(upto + 1)}


def _pairs(B: Dict[int, List[Mono]], lo: int, hi: int):
    """Basis pairs (u, v) with lo < wt u + wt v <= hi, canonical order."""
    for t in range(max(lo + 1, 0), hi + 1):
        for wu in range(t + 1):
            for u in B.get(wu, ()):
                for v in B.get(t - wu, ()):
                    yield u, v


def _triples(B: Dict[int, List[Mono]], t: int):
    for wa in range(t + 1):
        for wb in range(t - wa + 1):
            wc = t - wa - wb
            for a in B.get(wa, ()):
                for b in B.get(wb, ()):
                    for c in B.get(wc, ()):
                        yield a, b, c


def _mapped(fn, items, threads: int):
    items = list(items)
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


@dataclass
class SpanFamily:
    """Generator family of O_n (kind ``O_n``) or O_{n,m} (kind ``O_nm``).

    ``generators(lo, hi)`` yields the generators whose input weight lies in
    (lo, hi]; growing the cap therefore only adds new generators.
    """

    P: VOA
    kind: str
    n: int
    m: int
    p_cap: int = 0
    aux_cap: Optional[int] = None
    threads: int = 1
    cache: ProductCache = None

    def __post_init__(self):
        if self.cache is None:
            self.cache = ProductCache(self.P)
        self._inner: Dict[Tuple, List[Tuple[int, Vec]]] = {}

    @property
    def label(self) -> str:
        if self.kind == O_N:
            return f"O_{self.n}"
        return f"O_{{{self.n},{self.m}}}"

    def describe(self) -> dict:
        d = {"ideal": self.kind, "n": self.n}
        if self.kind == O_NM:
            d.update(m=self.m, p_cap=self.p_cap, aux_cap=self.aux_cap)
        return d

    # -- O_n and O' --------------------------------------------------------
    def _prime(self, lo: int, hi: int, n: int, m: int) -> List[Vec]:
        P, C = self.P, self.cache
        B = _basis_by_weight(P, hi)
        pairs = list(_pairs(B, lo, hi))
        out = _mapped(lambda uv: C.circ_nm({uv[0]: ONE}, {uv[1]: ONE}, n, m), pairs, self.threads)
        for w in range(max(lo + 1, 0), hi + 1):
            for u in B[w]:
                out.append(o_shift_gen(P, {u: ONE}, n, m))
        return out

    # -- O'' ----------------------------------------------------------------
    def _assoc_defects(self, t: int, p1: int, p2: int, p3: int) -> List[Vec]:
        """(a *_{p1,p2}^{p3} b) *_{m,p1}^{p3} c - a *_{m,p2}^{p3} (b *_{m,p1}^{p2} c)."""
        C, m = self.cache, self.m
        B = _basis_by_weight(self.P, t)

        def defect(abc):
            a, b, c = ({x: ONE} for x in abc)
            lhs = C.star_tri(C.star_tri(a, b, p1, p2, p3), c, m, p1, p3)
            rhs = C.star_tri(a, C.star_tri(b, c, m, p1, p2), m, p2, p3)
            return sub(lhs, rhs)

        return _mapped(defect, _triples(B, t), self.threads)

    # -- O''' ---------------------------------------------------------------
    def _left_ideal_products(self, t: int, p: int) -> List[Vec]:
        """x *_p^n y for y an O_p generator, total input weight t."""
        C, n = self.cache, self.n
        B = _basis_by_weight(self.P, t)
        out = []
        for wx in range(t + 1):
            ys = self._o_p_exact(p, t - wx)
            for x in B[wx]:
                xv = {x: ONE}
                out.extend(_mapped(lambda y: C.star_tri(xv, y, p, p, n), ys, self.threads))
        return out

    def _o_p_exact(self, p: int, t: int) -> List[Vec]:
        """O_p generators with input weight exactly t."""
        key = ("op", p, t)
        if key not in self._inner:
            gens = self._prime(t - 1, t, p, p)
            self._inner[key] = gens
        return self._inner[key]

    def _independent_inner(self, tag, t_max: int, make: Callable[[int], List[Vec]]):
        """Inner vectors (with input weight) that were independent on insertion."""
        store = self._inner.setdefault(tag, [])
        done = self._inner.setdefault(tag + ("done",), [-1])
        if not hasattr(self, "_inner_E"):
            self._inner_E = {}
        E = self._inner_E.setdefault(tag, Echelon(vkey_order))
        for t in range(done[0] + 1, t_max + 1):
            for v in make(t):
                if E.insert(v):
                    store.append((t, v))
            done[0] = t
        return [(t, v) for t, v in store if t <= t_max]

    def _outer(self, inner: List[Tuple[int, Vec]], lo: int, hi: int, fn) -> List[Vec]:
        """fn(inner, z) for basis z with lo < t + wt z <= hi (inner ``t``)."""
        B = _basis_by_weight(self.P, hi)
        tasks = []
        for t, y in inner:
            for wz in range(max(lo + 1 - t, 0), hi - t + 1):
                for z in B.get(wz, ()):
                    tasks.append((y, z))
        return _mapped(lambda yz: fn(yz[0], {yz[1]: ONE}), tasks, self.threads)

    # -- assembled ----------------------------------------------------------
    def generators(self, lo: int, hi: int) -> List[Vec]:
        if self.kind == O_N:
            return self._prime(lo, hi, self.n, self.n)
        n, m, C = self.n, self.m, self.cache
        out = self._prime(lo, hi, n, m)
        aux_hi = hi if self.aux_cap is None else min(hi, self.aux_cap)
        aux_lo = lo if self.aux_cap is None else min(lo, self.aux_cap)
        if aux_hi <= aux_lo:
            return out
        ps = range(self.p_cap + 1)
        for p1, p2, p3 in iproduct(ps, ps, ps):
            inner = self._independent_inner(
                ("assoc", p1, p2, p3), aux_hi,
                lambda t, p1=p1, p2=p2, p3=p3: self._assoc_defects(t, p1, p2, p3))
            out.extend(self._outer(inner, aux_lo, aux_hi,
                                   lambda d, u, p3=p3: C.star_tri(u, d, m, p3, n)))
        for p in ps:
            inner = self._independent_inner(
                ("left", p), aux_hi, lambda t, p=p: self._left_ideal_products(t, p))
            out.extend(self._outer(inner, aux_lo, aux_hi,
                                   lambda y, z, p=p: C.star_tri(y, z, m, p, n)))
        return out


def span_o_n(P: VOA, n: int, threads: int = 1, cache: ProductCache = None) -> SpanFamily:
    return SpanFamily(P, O_N, n, n, threads=threads, cache=cache)


def span_o_nm(P: VOA, n: int, m: int, p_cap: Optional[int] = None,
              aux_cap: Optional[int] = None, threads: int = 1,
              cache: ProductCache = None) -> SpanFamily:
    if p_cap is None:
        p_cap = default_p_cap(n, m)
    return SpanFamily(P, O_NM, n, m, p_cap=p_cap, aux_cap=aux_cap, threads=threads, cache=cache)


# ---------------------------------------------------------------------------
# truncated quotients


@dataclass
class TruncatedQuotient:
    """V_{<=N} / (S(K) cap V_{<=N}) for a growing cap schedule."""

    P: VOA
    family: SpanFamily
    N: int
    echelon: Echelon
    truncated: Echelon
    reps: List[Mono]
    report: List[Tuple[int, List[int]]] = field(default_factory=list)
    extra: List[Vec] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.reps)

    @property
    def dims(self) -> List[int]:
        """Dimension of the image of V_{<=k}, k = 0..N, at the largest cap."""
        return self.report[-1][1]

    @property
    def stabilized(self) -> bool:
        return len(self.report) >= 3 and self.report[-1][1] == self.report[-2][1] == self.report[-3][1]

    def reduce(self, v: Vec) -> Vec:
        return self.echelon.reduce(v)

    def in_span(self, v: Vec) -> bool:
        return not self.echelon.reduce(v)

    def coords(self, v: Vec) -> Optional[List]:
        """Coordinates on the representatives, or None if the class is not
        (yet) expressible inside V_{<=N}."""
        r = self.echelon.reduce(v)
        if any(sum(k) > self.N for k in r):
            return None
        return [r.get(k, 0) for k in self.reps]

    def vector(self, coords: Sequence) -> Vec:
        out: Vec = {}
        for k, c in zip(self.reps, coords):
            if c:
                out[k] = c
        return out

    def as_dict(self) -> dict:
        return {
            "family": self.family.describe(),
            "N": self.N,
            "caps": [{"K": K, "dims": d} for K, d in self.report],
            "stabilized": self.stabilized,
            "dimension": self.dim,
            "representatives": [list(r) for r in self.reps],
        }


def truncated_quotient(P: VOA, family: SpanFamily, N: int,
                       schedule: Optional[Sequence[int]] = None,
                       extra: Iterable[Vec] = ()) -> TruncatedQuotient:
    """Truncated quotient of V by the span of ``family`` (plus ``extra``)."""
    if schedule is None:
        schedule = default_schedule(N)
    schedule = list(schedule)
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("cap schedule must be strictly increasing")
    ambient = P.basis_upto(N)
    E = Echelon(vkey_order)
    extra = list(extra)
    E.extend(extra)
    report = []
    lo = -1
    for K in schedule:
        gens = family.generators(lo, K)
        E.extend(gens)
        lo = K
        T = intersect_truncated(E, lambda k: sum(k) <= N)
        dims = []
        for k in range(N + 1):
            size = sum(1 for b in ambient if sum(b) <= k)
            dims.append(size - sum(1 for p in T.pivots if sum(p) <= k))
        report.append((K, dims))
        log.info("%s cap %d: dims %s (%d generators)", family.label, K, dims, len(gens))
    T = intersect_truncated(E, lambda k: sum(k) <= N)
    reps = [b for b in ambient if not T.is_pivot(b)]
    return TruncatedQuotient(P, family, N, E, T, reps, report, extra)


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class Check:
    """Outcome of one named identity check over many instances.

    An instance is ``undecided`` when the residue after reduction still has
    components above the truncation weight, where the span is not certified.
    """

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    undecided: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures and not self.undecided

    def record(self, verdict: str, witness=None):
        self.checked += 1
        if verdict == "out":
            self.failures.append(str(witness))
            del self.failures[5:]
        elif verdict == "undecided":
            self.undecided += 1

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "undecided": self.undecided, "skipped": self.skipped,
                "failures": list(self.failures)}


def membership(Q: TruncatedQuotient, v: Vec) -> str:
    """``in`` / ``out`` / ``undecided`` for v in the ideal behind Q."""
    r = Q.reduce(v)
    if not r:
        return "in"
    if max(sum(k) for k in r) <= Q.N:
        return "out"
    return "undecided"


def check_inclusion(E_inner: Echelon, E_outer: Echelon, name: str = "inclusion") -> Check:
    """Every row of ``E_inner`` must reduce to zero against ``E_outer``."""
    chk = Check(name)
    for row in E_inner.rows:
        chk.checked += 1
        ok, res = E_outer.contains(row)
        if not ok and len(chk.failures) < 5:
            chk.failures.append(str(sorted(row.items(), key=lambda t: vkey_order(t[0]))))
    if E_inner.rank == 0:
        chk.checked = 1
    return chk


# ---------------------------------------------------------------------------
# algebra and bimodule structure on truncated quotients


@dataclass
class FiniteAlgebraData:
    """Structure constants of *_n on the coset representatives.

    ``table[i][j]`` is None where the product of two representatives cannot be
    written inside V_{<=N} (the truncation is then only a partial algebra).
    """

    n: int
    quotient: TruncatedQuotient
    table: List[List[Optional[List]]]
    identity: Optional[List]
    checks: List[Check] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.quotient.reps)

    @property
    def closed(self) -> bool:
        return all(c is not None for row in self.table for c in row)

    def to_algebra(self):
        from .algebra import FiniteAlgebra
        from .expr import format_vector

        if not self.closed:
            raise ClosureViolation("truncated algebra is not closed under *_n; raise N")
        gen = self.quotient.P.gen
        labels = [format_vector({r: ONE}, gen) for r in self.quotient.reps]
        return FiniteAlgebra(self.table, labels)

    def as_dict(self) -> dict:
        from .linalg import fmt_rational

        def enc(c):
            return None if c is None else [fmt_rational(x) for x in c]

        return {
            "n": self.n,
            "quotient": self.quotient.as_dict(),
            "closed": self.closed,
            "identity": enc(self.identity),
            "structure_constants": [[enc(c) for c in row] for row in self.table],
            "checks": [c.as_dict() for c in self.checks],
        }


def _unit_vec(k: Mono) -> Vec:
    return {k: ONE}


def algebra_on_quotient(P: VOA, n: int, N: int, schedule: Optional[Sequence[int]] = None,
                        threads: int = 1, strict: bool = False,
                        quotient: Optional[TruncatedQuotient] = None) -> FiniteAlgebraData:
    """Truncated A_n(V) with *_n structure constants and well-definedness guards."""
    cache = ProductCache(P)
    Q = quotient or truncated_quotient(P, span_o_n(P, n, threads=threads, cache=cache), N, schedule)
    reps = Q.reps
    table = []
    for a in reps:
        row = []
        for b in reps:
            c = Q.coords(cache.star_n(_unit_vec(a), _unit_vec(b), n))
            if c is None and strict:
                raise ClosureViolation(f"product of {a} and {b} leaves V_<={N}")
            row.append(c)
        table.append(row)
    identity = Q.coords(P.vacuum)
    guard = Check("well-defined")
    for g in Q.truncated.rows:
        for r in reps:
            rv = _unit_vec(r)
            guard.record(membership(Q, cache.star_n(g, rv, n)), ("g*r", r))
            guard.record(membership(Q, cache.star_n(rv, g, n)), ("r*g", r))
    unit = Check("unit")
    for r in reps:
        rv = _unit_vec(r)
        unit.record(membership(Q, sub(cache.star_n(P.vacuum, rv, n), rv)), ("1*r", r))
        unit.record(membership(Q, sub(cache.star_n(rv, P.vacuum, n), rv)), ("r*1", r))
    return FiniteAlgebraData(n, Q, table, identity, [guard, unit])


def partial_checks(data: FiniteAlgebraData, P: VOA) -> List[Check]:
    """Commutativity, associativity and centrality of [omega] wherever the
    truncated products are defined."""
    Q = data.quotient
    d = data.dim
    T = data.table
    comm, assoc, central = Check("commutative"), Check("associative"), Check("omega-central")
    for i in range(d):
        for j in range(d):
            if T[i][j] is not None and T[j][i] is not None:
                comm.record("in" if T[i][j] == T[j][i] else "out", (i, j))

    def mul(x, y):
        out = [0] * d
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                if xi and yj:
                    if T[i][j] is None:
                        return None
                    for k, t in enumerate(T[i][j]):
                        out[k] += xi * yj * t
        return out

    units = [[ONE if k == i else 0 for k in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                ij = T[i][j]
                jk = T[j][k]
                if ij is None or jk is None:
                    continue
                lhs, rhs = mul(ij, units[k]), mul(units[i], jk)
                if lhs is None or rhs is None:
                    continue
                assoc.record("in" if lhs == rhs else "out", (i, j, k))
    w = Q.coords(P.omega)
    if w is not None:
        for i in range(d):
            lhs, rhs = mul(w, units[i]), mul(units[i], w)
            if lhs is not None and rhs is not None:
                central.record("in" if lhs == rhs else "out", i)
    return [comm, assoc, central]


@dataclass
class BimoduleData:
    n: int
    m: int
    quotient: TruncatedQuotient
    left_algebra: TruncatedQuotient
    right_algebra: TruncatedQuotient
    left: List[List[Optional[List]]]
    right: List[List[Optional[List]]]
    checks: List[Check] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return all(c is not None for t in (self.left, self.right) for row in t for c in row)

    def as_dict(self) -> dict:
        from .linalg import fmt_rational

        def enc(c):
            return None if c is None else [fmt_rational(x) for x in c]

        return {
            "n": self.n,
            "m": self.m,
            "quotient": self.quotient.as_dict(),
            "left_algebra": self.left_algebra.as_dict(),
            "right_algebra": self.right_algebra.as_dict(),
            "closed": self.closed,
            "left_action": [[enc(c) for c in row] for row in self.left],
            "right_action": [[enc(c) for c in row] for row in self.right],
            "checks": [c.as_dict() for c in self.checks],
        }


def build_quotients(P: VOA, n: int, m: int, N: int, schedule=None, p_cap=None, aux_cap=None,
                    threads: int = 1, cache: ProductCache = None):
    """Truncated A_n, A_m and A_{n,m} sharing one product cache."""
    cache = cache or ProductCache(P)
    if aux_cap is None:
        aux_cap = (list(schedule) if schedule else default_schedule(N))[0]
    An = truncated_quotient(P, span_o_n(P, n, threads=threads, cache=cache), N, schedule)
    Am = An if m == n else truncated_quotient(P, span_o_n(P, m, threads=threads, cache=cache), N, schedule)
    fam = span_o_nm(P, n, m, p_cap=p_cap, aux_cap=aux_cap, threads=threads, cache=cache)
    Anm = truncated_quotient(P, fam, N, schedule)
    return An, Am, Anm


def bimodule_on_quotient(P: VOA, n: int, m: int, N: int, schedule=None, p_cap=None,
                         aux_cap=None, threads: int = 1, quotients=None) -> BimoduleData:
    """Left A_n and right A_m actions on the truncated A_{n,m}."""
    cache = ProductCache(P)
    An, Am, Anm = quotients or build_quotients(P, n, m, N, schedule, p_cap, aux_cap, threads, cache)
    left = [[Anm.coords(cache.star_tri(_unit_vec(a), _unit_vec(x), m, n, n)) for x in Anm.reps]
            for a in An.reps]
    right = [[Anm.coords(cache.star_tri(_unit_vec(x), _unit_vec(b), m, m, n)) for b in Am.reps]
             for x in Anm.reps]

    def L(a, x):
        return cache.star_tri(a, x, m, n, n)

    def R(x, b):
        return cache.star_tri(x, b, m, m, n)

    commute = Check("actions-commute (tensors)")
    commute_raw = Check("actions-commute (vectors)")
    unit = Check("unit")
    guard = Check("well-defined")
    for x in Anm.reps:
        xv = _unit_vec(x)
        unit.record(membership(Anm, sub(L(P.vacuum, xv), xv)), ("1.x", x))
        unit.record(membership(Anm, sub(R(xv, P.vacuum), xv)), ("x.1", x))
        for a in An.reps:
            av = _unit_vec(a)
            for b in Am.reps:
                v = sub(R(L(av, xv), _unit_vec(b)), L(av, R(xv, _unit_vec(b))))
                verdict = membership(Anm, v)
                if verdict == "undecided":
                    # residue above V_<=N: not decidable at this truncation
                    commute_raw.skipped += 1
                else:
                    commute_raw.record(verdict, (a, x, b))
    d = len(Anm.reps)

    def act(coeffs, table_row):
        # sum_k coeffs[k] * table_row(k); None when an entry leaves the truncation
        out = [0] * d
        for k, ck in enumerate(coeffs):
            if ck:
                t = table_row(k)
                if t is None:
                    return None
                for j, tj in enumerate(t):
                    out[j] += ck * tj
        return out

    for ia, a in enumerate(An.reps):
        for ix, x in enumerate(Anm.reps):
            for ib, b in enumerate(Am.reps):
                ax, xb = left[ia][ix], right[ix][ib]
                lhs = None if ax is None else act(ax, lambda k: right[k][ib])
                rhs = None if xb is None else act(xb, lambda k: left[ia][k])
                if lhs is None or rhs is None:
                    commute.skipped += 1
                    continue
                commute.record("in" if lhs == rhs else "out", (a, x, b))
    for g in Anm.truncated.rows:
        for a in An.reps:
            guard.record(membership(Anm, L(_unit_vec(a), g)), ("a.g", a))
        for b in Am.reps:
            guard.record(membership(Anm, R(g, _unit_vec(b))), ("g.b", b))
    for g in An.truncated.rows:
        for x in Anm.reps:
            guard.record(membership(Anm, L(g, _unit_vec(x))), ("O_n.x", x))
    for g in Am.truncated.rows:
        for x in Anm.reps:
            guard.record(membership(Anm, R(_unit_vec(x), g)), ("x.O_m", x))
    return BimoduleData(n, m, Anm, An, Am, left, right, [commute, commute_raw, unit, guard])


def psi_check(P: VOA, n: int, p: int, m: int, N: int, schedule=None, p_cap=None,
              aux_cap=None, threads: int = 1) -> List[Check]:
    """psi(u (x) v) = u *_{m,p}^n v is balanced over A_p and an A_n-A_m map."""
    cache = ProductCache(P)
    sched = list(schedule) if schedule else default_schedule(N)
    aux = aux_cap if aux_cap is not None else sched[0]

    def quo(kind, a, b):
        fam = (span_o_n(P, a, threads=threads, cache=cache) if kind == O_N
               else span_o_nm(P, a, b, p_cap=p_cap, aux_cap=aux, threads=threads, cache=cache))
        return truncated_quotient(P, fam, N, sched)

    Anm, Anp, Apm = quo(O_NM, n, m), quo(O_NM, n, p), quo(O_NM, p, m)
    An, Ap, Am = quo(O_N, n, n), quo(O_N, p, p), quo(O_N, m, m)

    def psi(u, v):
        return cache.star_tri(u, v, m, p, n)

    balanced, left_hom, right_hom = Check("balanced"), Check("left-hom"), Check("right-hom")
    for u in Anp.reps:
        uv = _unit_vec(u)
        for v in Apm.reps:
            vv = _unit_vec(v)
            for a in Ap.reps:
                av = _unit_vec(a)
                lhs = psi(cache.star_tri(uv, av, p, p, n), vv)
                rhs = psi(uv, cache.star_tri(av, vv, m, p, p))
                balanced.record(membership(Anm, sub(lhs, rhs)), (u, a, v))
            for a in An.reps:
                av = _unit_vec(a)
                lhs = cache.star_tri(av, psi(uv, vv), m, n, n)
                rhs = psi(cache.star_tri(av, uv, p, n, n), vv)
                left_hom.record(membership(Anm, sub(lhs, rhs)), (a, u, v))
            for b in Am.reps:
                bv = _unit_vec(b)
                lhs = cache.star_tri(psi(uv, vv), bv, m, m, n)
                rhs = psi(uv, cache.star_tri(vv, bv, m, m, p))
                right_hom.record(membership(Anm, sub(lhs, rhs)), (u, v, b))
    return [balanced, left_hom, right_hom]


# ---------------------------------------------------------------------------
# C_2 and C_1 spans


@dataclass
class CofinitenessReport:
    name: str
    N: int
    echelon: Echelon
    codims: List[int]

    def as_dict(self) -> dict:
        return {"name": self.name, "N": self.N, "codimension_by_weight": self.codims}


def _codims(P: VOA, E: Echelon, N: int) -> List[int]:
    return [P.dim(w) - sum(1 for p in E.pivots if sum(p) == w) for w in range(N + 1)]


def c2_span(P: VOA, N: int) -> CofinitenessReport:
    """Span of u_{-2} v inside V_{<=N}."""
    E = Echelon(vkey_order)
    for wu in range(N + 1):
        for wv in range(N - wu):
            for u in P.basis(wu):
                for v in P.basis(wv):
                    E.insert(P.field_mode({u: ONE}, -2, {v: ONE}))
    return CofinitenessReport("C2", N, E, _codims(P, E, N))


def c1_span(P: VOA, N: int) -> CofinitenessReport:
    """Span of u_{-1} v and L(-1)u for u, v of positive weight, inside V_{<=N}."""
    E = Echelon(vkey_order)
    for wu in range(1, N + 1):
        for u in P.basis(wu):
            if wu + 1 <= N:
                E.insert(P.translate({u: ONE}))
            for wv in range(1, N - wu + 1):
                for v in P.basis(wv):
                    E.insert(P.field_mode({u: ONE}, -1, {v: ONE}))
    return CofinitenessReport("C1", N, E, _codims(P, E, N))

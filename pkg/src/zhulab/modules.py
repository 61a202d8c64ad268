"""Fock and Verma modules, the graded operators o_t and o_{n,m}, and the
module-side identity checks.

A module level ``s`` has the basis of partitions of ``s`` (parts >= 1),
standing for g(-n1)...g(-nk)v on the highest-weight vector v.  States of the
VOA act through the same iterate recursion as on the vacuum module, only the
generator action differs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import ONE, Echelon, Q, Vec, add_to, nullspace, qq
from .products import o_shift_gen, star_n, star_tri
from .voa import (HEISENBERG, VIRASORO, VOA, CutoffExceeded, FieldEngine, HeisenbergAction,
                  Mono, VirasoroAction, components, partitions, vkey_order)

FOCK = "fock"
VERMA = "verma"

Matrix = List[List[Q]]


@dataclass
class GradedMap:
    """Matrix of a map M(source) -> M(target); rows index the target basis."""

    source: int
    target: int
    matrix: Matrix

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        if other.target != self.source:
            raise ValueError("levels do not compose")
        return GradedMap(other.source, self.target, matmul(self.matrix, other.matrix))

    def is_zero(self) -> bool:
        return all(not x for row in self.matrix for x in row)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Q(0)) for j in range(cols)]
            for i in range(len(A))]


class AdmissibleModule:
    """Fock module M(1, lam) or Verma module M(c, h), levels 0..N."""

    def __init__(self, V: VOA, kind: str, N: int, lam=None, h=None):
        if kind == FOCK:
            if V.kind != HEISENBERG:
                raise ValueError("fock modules belong to the Heisenberg presentation")
            self.lam = qq(lam if lam is not None else 0)
            self.lowest = self.lam * self.lam / 2
            action = HeisenbergAction(self.lam)
        elif kind == VERMA:
            if V.kind != VIRASORO:
                raise ValueError("verma modules belong to the Virasoro presentation")
            self.h = qq(h if h is not None else 0)
            self.lowest = self.h
            action = VirasoroAction(V.central_charge, self.h, min_part=1)
        else:
            raise ValueError(f"unknown module kind {kind!r}")
        if N < 0:
            raise ValueError("N must be nonnegative")
        self.V = V
        self.kind = kind
        self.N = N
        self.engine = FieldEngine(V.kind, action)

    def describe(self) -> dict:
        d = {"kind": self.kind, "levels": self.N, "lowest_weight": self.lowest,
             "dims": [self.dim(s) for s in range(self.N + 1)]}
        if self.kind == FOCK:
            d["lambda"] = self.lam
        else:
            d["c"] = self.V.central_charge
            d["h"] = self.h
        return d

    def basis(self, s: int) -> List[Mono]:
        if s < 0 or s > self.N:
            return []
        return list(partitions(s, 1))

    def dim(self, s: int) -> int:
        return len(self.basis(s))

    @property
    def top(self) -> Vec:
        return {(): ONE}

    def module_mode(self, u: Vec, k: int, w: Vec) -> Vec:
        """u_k w; bilinear, raises when a result level exceeds N."""
        out: Vec = {}
        for um, x in u.items():
            for wm, y in w.items():
                lvl = sum(um) + sum(wm) - k - 1
                if lvl > self.N:
                    raise CutoffExceeded(f"u_{k} w lands in level {lvl} > {self.N}")
                add_to(out, self.engine.mode(um, k, wm), x * y)
        return out

    def o_map(self, u: Vec, t: int, s: int) -> GradedMap:
        """o_t(u) = u_{wt u - 1 - t} as a matrix M(s) -> M(s + t)."""
        src = self.basis(s)
        tgt = self.basis(s + t)
        if s + t > self.N:
            raise CutoffExceeded(f"level {s + t} exceeds {self.N}")
        index = {m: i for i, m in enumerate(tgt)}
        M = [[Q(0)] * len(src) for _ in tgt]
        for r, ur in components(u).items():
            for j, w in enumerate(src):
                for key, x in self.module_mode(ur, r - 1 - t, {w: ONE}).items():
                    M[index[key]][j] += x
        return GradedMap(s, s + t, M)

    def o_nm_map(self, v: Vec, n: int, m: int) -> GradedMap:
        """o_{n,m}(v) = v_{wt v - 1 + m - n}: M(m) -> M(n)."""
        return self.o_map(v, n - m, m)

    def zero_mode(self, u: Vec, s: int = 0) -> GradedMap:
        return self.o_map(u, 0, s)


def fock(V: VOA, lam, N: int) -> AdmissibleModule:
    return AdmissibleModule(V, FOCK, N, lam=lam)


def verma(V: VOA, h, N: int) -> AdmissibleModule:
    return AdmissibleModule(V, VERMA, N, h=h)


# ---------------------------------------------------------------------------
# checks


@dataclass
class IdentityReport:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def record(self, ok: bool, witness):
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(str(witness))

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": list(self.failures)}


def _basis_upto(V: VOA, cap: int) -> List[Mono]:
    return V.basis_upto(min(cap, V.cutoff))


def check_zhu_action(W: AdmissibleModule, cap: int = 4, levels: int = 2) -> List[IdentityReport]:
    """o(u)o(v) = o(u*v) on M(0) and o((L(-1)+L(0))v) = 0 on levels <= ``levels``."""
    V = W.V
    mult = IdentityReport("o(u)o(v)=o(u*v)")
    kill = IdentityReport("o(L(-1)v+L(0)v)=0")
    B = _basis_upto(V, cap)
    zero = {b: W.zero_mode({b: ONE}) for b in B}
    for u in B:
        for v in B:
            lhs = zero[u] @ zero[v]
            rhs = W.zero_mode(star_n(V, {u: ONE}, {v: ONE}, 0))
            mult.record(lhs.matrix == rhs.matrix, (u, v))
    for v in B:
        g = o_shift_gen(V, {v: ONE}, 0, 0)
        for s in range(min(levels, W.N) + 1):
            kill.record(W.zero_mode(g, s).is_zero(), (v, s))
    return [mult, kill]


def check_composition(W: AdmissibleModule, n: int, p: int, m: int, cap: int = 3) -> IdentityReport:
    """o_{n-p}(u) o_{p-m}(v) = o_{n-m}(u *_{m,p}^n v) on M(m)."""
    V = W.V
    rep = IdentityReport(f"composition(n={n},p={p},m={m})")
    B = _basis_upto(V, cap)
    right = {b: W.o_map({b: ONE}, p - m, m) for b in B}
    left = {b: W.o_map({b: ONE}, n - p, p) for b in B}
    for u in B:
        for v in B:
            lhs = left[u] @ right[v]
            rhs = W.o_map(star_tri(V, {u: ONE}, {v: ONE}, m, p, n), n - m, m)
            rep.record(lhs.matrix == rhs.matrix, (u, v))
    return rep


def check_grading(W: AdmissibleModule, cap: int = 4) -> IdentityReport:
    """a_k M(s) lands in M(wt a + s - k - 1)."""
    rep = IdentityReport("grading")
    B = _basis_upto(W.V, cap)
    for u in B:
        r = sum(u)
        for s in range(W.N + 1):
            for w in W.basis(s):
                for k in range(r + s - 1 - W.N, r + s):
                    out = W.module_mode({u: ONE}, k, {w: ONE})
                    rep.record(all(sum(key) == r + s - k - 1 for key in out), (u, k, w))
    return rep


@dataclass
class OmegaCandidate:
    """Per-level kernel bases; a superset of Omega_n (finitely many probes)."""

    n: int
    probe_cap: int
    kernels: Dict[int, List[Vec]]

    @property
    def dims(self) -> List[int]:
        return [len(self.kernels[s]) for s in sorted(self.kernels)]

    def as_dict(self) -> dict:
        return {"n": self.n, "probe_cap": self.probe_cap, "candidate": True,
                "dims_by_level": self.dims}


def omega_n(W: AdmissibleModule, n: int, probe_cap: int) -> OmegaCandidate:
    """Common kernel of the probed u_k with k > wt u - 1 + n, level by level."""
    B = _basis_upto(W.V, probe_cap)
    kernels = {}
    for s in range(W.N + 1):
        src = W.basis(s)
        rows: List[List[Q]] = []
        for u in B:
            r = sum(u)
            # u_k maps M(s) to M(r + s - k - 1), nonzero only if that level is >= 0
            for k in range(r + n, r + s):
                M = W.o_map({u: ONE}, r - 1 - k, s).matrix
                rows.extend(M)
        null = nullspace(rows, len(src))
        kernels[s] = [{src[i]: x for i, x in enumerate(vec) if x} for vec in null]
    return OmegaCandidate(n, probe_cap, kernels)


def o_nm_kills(W: AdmissibleModule, gens: Sequence[Vec], n: int, m: int) -> IdentityReport:
    """o_{n,m}(g) = 0 for every listed generator g of O_{n,m}."""
    rep = IdentityReport(f"o_{{{n},{m}}}(O)=0")
    for i, g in enumerate(gens):
        rep.record(W.o_nm_map(g, n, m).is_zero(), i)
    return rep


# ---------------------------------------------------------------------------
# generalized Verma module from the bimodules


@dataclass
class TensorLevel:
    """A_{n,m} (x)_{A_m} U at truncation.

    ``dims[k]`` is the dimension of the image of (V_{<=k} reps) (x) U modulo
    the balanced relations that could be formed inside V_{<=N}.  Missing
    relations only enlarge these numbers; up to weight ``saturated`` every
    relation against the generators of A_m is present.
    """

    n: int
    dims: List[int]
    saturated: int
    relations: int
    skipped: int

    @property
    def dim(self) -> Optional[int]:
        if self.saturated < 0:
            return None
        return self.dims[min(self.saturated, len(self.dims) - 1)]

    def as_dict(self) -> dict:
        return {"n": self.n, "dimension": self.dim, "saturated_weight": self.saturated,
                "dims_by_weight": self.dims, "relations": self.relations,
                "skipped": self.skipped}


def top_level_action(W: AdmissibleModule, reps: Sequence[Mono]) -> Dict[Mono, Matrix]:
    """Matrices of o(a) on M(0) for the listed A_0 representatives."""
    return {a: W.zero_mode({a: ONE}).matrix for a in reps}


def verma_from_bimodule(Am, Anm_by_level: Dict[int, "object"], U: Dict[Mono, Matrix],
                        m: int, gen_cap: int = 1) -> List[TensorLevel]:
    """A_{n,m} (x)_{A_m} U for each supplied truncated A_{n,m}.

    ``Am`` and each value of ``Anm_by_level`` are truncated quotients; ``U``
    maps every representative of A_m to its action matrix.  Relations are
    (x * a) (x) u - x (x) (a u) for representatives x, a; those whose product
    leaves the truncation are skipped and counted.  ``gen_cap`` bounds the
    weight of a generating set of A_m (1 for the free boson at m = 0).
    """
    from .linalg import intersect_truncated
    from .products import ProductCache

    d = len(next(iter(U.values()))) if U else 0
    out = []
    for n in sorted(Anm_by_level):
        Q_ = Anm_by_level[n]
        if not Q_.stabilized or not Am.stabilized:
            raise ValueError("truncated quotients must be stabilized")
        cache = ProductCache(Q_.P)
        reps = Q_.reps
        E = Echelon(lambda key: (vkey_order(key[0]), key[1]))
        nrel = skipped = 0
        for x in reps:
            for a in Am.reps:
                c = Q_.coords(cache.star_tri({x: ONE}, {a: ONE}, m, m, n))
                if c is None:
                    skipped += 1
                    continue
                A = U[a]
                for e in range(d):
                    row: Vec = {}
                    for r, ck in zip(reps, c):
                        if ck:
                            add_to(row, {(r, e): ck})
                    for f in range(d):
                        if A[f][e]:
                            add_to(row, {(x, f): -A[f][e]})
                    nrel += 1
                    E.insert(row)
        dims = []
        for k in range(Q_.N + 1):
            low = intersect_truncated(E, lambda key, k=k: sum(key[0]) <= k)
            size = d * sum(1 for r in reps if sum(r) <= k)
            dims.append(size - low.rank)
        out.append(TensorLevel(n, dims, Q_.N - n - gen_cap, nrel, skipped))
    return out


def ideal_acts_nontrivially(An, An_1, U: Dict[Mono, Matrix]) -> Tuple[bool, int]:
    """Necessary condition for an A_n-module not to factor through A_{n-1}.

    ``An``/``An_1`` are truncated quotients with O_n inside O_{n-1}, ``U`` maps
    the representatives of A_n to action matrices.  Returns whether some
    truncated element of O_{n-1} acts by a nonzero matrix, and how many
    elements were tested.  Sufficiency would need all of O_{n-1}, which the
    truncation cannot reach.
    """
    tested = 0
    for g in An_1.truncated.rows:
        c = An.coords(g)
        if c is None:
            continue
        tested += 1
        acc = None
        for rep, x in zip(An.reps, c):
            if not x:
                continue
            M = U[rep]
            acc = [[x * e for e in row] for row in M] if acc is None else \
                [[a + x * e for a, e in zip(ra, rm)] for ra, rm in zip(acc, M)]
        if acc is not None and any(e for row in acc for e in row):
            return True, tested
    return False, tested

"""Named check suites, one per acceptance criterion.

Each suite takes a :class:`Config` and a thread count and returns a report
dict with a ``passed`` flag and a list of named checks.  Generic suites run on
the configured presentation; the Lee-Yang, free boson and corpus suites fix
their own data and say so in the report.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List

from .algebra import (CORPUS, brute_force_radical, center_contains,
                      is_commutative, is_semisimple, rational_eigenvalues)
from .config import Config
from .expr import parse_vector
from .linalg import ONE, Q, Vec, add_to, binom, fmt_rational, sub
from .modules import (check_composition, check_grading, check_zhu_action, fock,
                      top_level_action, verma, verma_from_bimodule)
from .products import ProductCache
from .quotients import (Check, algebra_on_quotient, bimodule_on_quotient, build_quotients,
                        check_inclusion, partial_checks, psi_check, required_cutoff,
                        span_o_n, span_o_nm, truncated_quotient)
from .voa import HEISENBERG, VIRASORO, VOA, verify_singular

log = logging.getLogger(__name__)

LEE_YANG_C = Q(-22, 5)
LEE_YANG_VECTOR = "L(-2)L(-2)|0> - 3/5 L(-4)|0>"


def _check(name: str, ok: bool, **detail) -> dict:
    d = {"name": name, "passed": bool(ok)}
    d.update(detail)
    return d


def _from(c) -> dict:
    """Check / IdentityReport -> plain dict."""
    return c.as_dict()


def _finish(suite: str, cfg: Config, checks: List[dict], **extra) -> dict:
    out = {"suite": suite, "config": cfg.effective(), "checks": checks,
           "passed": bool(checks) and all(c["passed"] for c in checks)}
    out.update(extra)
    return out


def _universal(cfg: Config, cutoff: int) -> VOA:
    return VOA(cfg.kind, cutoff, cfg.central_charge)


def _module(cfg: Config, V: VOA, N: int):
    if V.kind == HEISENBERG:
        return fock(V, cfg.lam, N)
    return verma(V, cfg.h, N)


# ---------------------------------------------------------------------------
# mode engine axioms


def suite_axioms(cfg: Config, threads: int = 1) -> dict:
    N = 8 if cfg.cutoff is None else cfg.cutoff
    P = cfg.presentation(N)
    wcap, mcap = 4, 3
    B = P.basis_upto(min(wcap, N))
    # every target inside the truncation; instances whose intermediate states
    # leave it are counted, not checked
    targets = P.basis_upto(N)
    vec = lambda k: {k: ONE}

    grading = Check("grading")
    for u in B:
        for v in P.basis_upto(N):
            for m in range(-mcap, mcap + 1):
                lvl = sum(u) + sum(v) - m - 1
                if lvl > N:
                    continue
                out = P.field_mode(vec(u), m, vec(v))
                grading.record("in" if all(sum(k) == lvl for k in out) else "out", (u, m, v))

    creation = Check("creation")
    for u in B:
        for n in range(0, mcap + 1):
            creation.record("in" if not P.field_mode(vec(u), n, P.vacuum) else "out", (u, n))
        creation.record("in" if P.field_mode(vec(u), -1, P.vacuum) == P.reduce(vec(u)) else "out", u)

    derivative = Check("derivative")
    for u in B:
        if sum(u) + 1 > N:
            continue
        tu = P.translate(vec(u))
        for w in P.basis_upto(N - 2):
            for k in range(-mcap, mcap + 1):
                if sum(u) + sum(w) - k > N:
                    continue
                lhs = P.field_mode(tu, k, vec(w)) if tu else {}
                rhs = {}
                add_to(rhs, P.field_mode(vec(u), k - 1, vec(w)), Q(-k))
                derivative.record("in" if not sub(lhs, rhs) else "out", (u, k, w))

    commutator = Check("commutator")
    skipped = 0
    for u in B:
        for v in B:
            ru, rv = sum(u), sum(v)
            brackets = {}
            for w in targets:
                rw = sum(w)
                for m in range(-mcap, mcap + 1):
                    for k in range(-mcap, mcap + 1):
                        if max(rv + rw - k - 1, ru + rw - m - 1, ru + rv + rw - m - k - 2) > N:
                            skipped += 1
                            continue
                        lhs = sub(P.field_mode(vec(u), m, P.field_mode(vec(v), k, vec(w))),
                                  P.field_mode(vec(v), k, P.field_mode(vec(u), m, vec(w))))
                        rhs: Vec = {}
                        for i in range(0, ru + rv):
                            c = binom(m, i)
                            if not c:
                                continue
                            if i not in brackets:
                                brackets[i] = P.field_mode(vec(u), i, vec(v))
                            if brackets[i]:
                                add_to(rhs, P.field_mode(brackets[i], m + k - i, vec(w)), Q(c))
                        commutator.record("in" if not sub(lhs, rhs) else "out", (u, m, v, k, w))

    memo = Check("memoization")
    bare = cfg.presentation(N)
    bare.engine._cache = None
    for u in B:
        for w in targets:
            for k in range(-mcap, mcap + 1):
                if sum(u) + sum(w) - k - 1 > N:
                    continue
                a = P.field_mode(vec(u), k, vec(w))
                b = bare.field_mode(vec(u), k, vec(w))
                memo.record("in" if a == b else "out", (u, k, w))

    checks = [_from(c) for c in (grading, creation, derivative, commutator, memo)]
    return _finish("axioms", cfg.with_overrides(cutoff=N), checks, presentation=P.describe(),
                   commutator_instances_beyond_cutoff=skipped)


# ---------------------------------------------------------------------------
# module identities


def suite_zhu_action(cfg: Config, threads: int = 1) -> dict:
    V = _universal(cfg, 10)
    W = _module(cfg, V, 2)
    reps = check_zhu_action(W, cap=4, levels=2)
    checks = [_from(r) for r in reps] + [_from(check_grading(W, cap=4))]
    return _finish("zhu-action", cfg, checks, module=W.describe())


def suite_composition(cfg: Config, threads: int = 1) -> dict:
    V = _universal(cfg, 12)
    W = _module(cfg, V, 2)
    checks = [_from(check_composition(W, n, p, m, cap=3))
              for n in range(3) for p in range(3) for m in range(3)]
    return _finish("composition", cfg, checks, module=W.describe())


# ---------------------------------------------------------------------------
# ideals and quotients


def suite_inclusions(cfg: Config, threads: int = 1) -> dict:
    N = 3 if cfg.cutoff is None else cfg.cutoff
    sched = cfg.schedule
    aux = N if cfg.aux_cap is None else cfg.aux_cap
    P = cfg.presentation(required_cutoff(N, 2, 2, cfg.p_cap, sched))
    cache = ProductCache(P)
    On = {n: truncated_quotient(P, span_o_n(P, n, threads=threads, cache=cache), N, sched)
          for n in range(3)}
    Onm = {}
    for nm in [(0, 0), (1, 1), (1, 0), (2, 1)]:
        fam = span_o_nm(P, nm[0], nm[1], p_cap=cfg.p_cap, aux_cap=aux, threads=threads, cache=cache)
        Onm[nm] = truncated_quotient(P, fam, N, sched)
    checks = []
    for n in (1, 2):
        c = check_inclusion(On[n].truncated, On[n - 1].echelon, f"O_{n} in O_{n - 1}")
        checks.append(_from(c))
    for n in (0, 1):
        c = check_inclusion(On[n].truncated, Onm[(n, n)].echelon, f"O_{n} in O_{{{n},{n}}}")
        checks.append(_from(c))
        checks.append(_check(f"dims A_{n} = A_{{{n},{n}}}", On[n].dims == Onm[(n, n)].dims,
                             dims=[On[n].dims, Onm[(n, n)].dims]))
    for n, m in [(1, 1), (2, 1)]:
        c = check_inclusion(Onm[(n, m)].truncated, Onm[(n - 1, m - 1)].echelon,
                            f"O_{{{n},{m}}} in O_{{{n - 1},{m - 1}}}")
        checks.append(_from(c))
    quotients = {f"O_{n}": q.as_dict() for n, q in On.items()}
    quotients.update({f"O_{{{n},{m}}}": q.as_dict() for (n, m), q in Onm.items()})
    for name, q in quotients.items():
        checks.append(_check(f"{name} stabilized", q["stabilized"]))
    return _finish("inclusions", cfg.with_overrides(cutoff=N), checks, quotients=quotients)


def _algebra_checks(data, P: VOA) -> List[dict]:
    checks = [_from(c) for c in data.checks]
    checks += [_from(c) for c in partial_checks(data, P)]
    e = [ONE if i == 0 else 0 for i in range(data.dim)]
    checks.append(_check("identity is [1]", data.quotient.reps[:1] == [()] and data.identity == e))
    checks.append(_check("stabilized", data.quotient.stabilized))
    return checks


def suite_heisenberg_zhu(cfg: Config, threads: int = 1) -> dict:
    N = 4
    own = Config(kind=HEISENBERG, cutoff=N)
    P = own.presentation(required_cutoff(N, 0))
    data = algebra_on_quotient(P, 0, N, threads=threads)
    checks = _algebra_checks(data, P)
    checks.insert(0, _check("dims k+1", data.quotient.dims == [k + 1 for k in range(N + 1)],
                            dims=data.quotient.dims))
    return _finish("heisenberg-zhu", own, checks, algebra=data.as_dict())


def semisimple_report(P: VOA, n: int, N: int, schedule=None, threads: int = 1) -> dict:
    """Truncated A_n(P): dimension, trace-form verdict and spectrum of [omega]."""
    data = algebra_on_quotient(P, n, N, schedule=schedule, threads=threads)
    out = {"n": n, "dim": data.dim, "closed": data.closed,
           "stabilized": data.quotient.stabilized, "quotient": data.quotient.as_dict(),
           "checks": [c.as_dict() for c in data.checks]}
    if not data.closed:
        out["semisimple"] = None
        return out
    A = data.to_algebra()
    verdict = is_semisimple(A)
    z = data.quotient.coords(P.omega)
    eig = rational_eigenvalues(A, z)
    out.update(
        semisimple=verdict.semisimple,
        radical_dim=verdict.radical_dim,
        trace_form_rank=verdict.trace_form_rank,
        associative=A.is_associative(),
        commutative=is_commutative(A),
        omega_central=center_contains(A, z),
        omega_eigenvalues=[fmt_rational(r) for r, _ in sorted(eig.roots, key=lambda t: -t[0])],
        omega_minimal_polynomial=[fmt_rational(c) for c in eig.minimal_polynomial],
        residual_degrees=eig.residual_degrees,
        algebra=A.as_dict(),
    )
    return out


def suite_lee_yang(cfg: Config, threads: int = 1) -> dict:
    N = 4
    own = Config(kind=VIRASORO, central_charge=LEE_YANG_C, quotient=[LEE_YANG_VECTOR], cutoff=N)
    U = VOA(VIRASORO, required_cutoff(N, 0), LEE_YANG_C)
    s = parse_vector(LEE_YANG_VECTOR, U)
    checks = [_check("singular", verify_singular(U, s))]
    P = U.quotient_by(s)
    rep = semisimple_report(P, 0, N, threads=threads)
    checks.append(_check("dim 2", rep["dim"] == 2, dim=rep["dim"]))
    checks.append(_check("stabilized", rep["stabilized"]))
    checks.append(_check("closed", rep["closed"]))
    checks.append(_check("semisimple", rep.get("semisimple") is True))
    checks.append(_check("omega eigenvalues 0, -1/5",
                         sorted(rep.get("omega_eigenvalues", [])) == sorted(["0", "-1/5"]),
                         found=rep.get("omega_eigenvalues")))
    checks.extend(rep["checks"])
    return _finish("lee-yang", own, checks, report=rep)


def suite_semisimple_corpus(cfg: Config, threads: int = 1) -> dict:
    expected = {"dual-numbers": False, "split-quadratic": True, "matrix-units-2": True}
    checks, table = [], {}
    for name in sorted(CORPUS):
        A = CORPUS[name]()
        v = is_semisimple(A)
        row = {"dim": A.d, "semisimple": v.semisimple, "radical_dim": v.radical_dim,
               "trace_form_rank": v.trace_form_rank}
        if A.d <= 4:
            bf = brute_force_radical(A)
            row["brute_force_radical_dim"] = bf
            checks.append(_check(f"{name}: trace form agrees with brute force", bf == v.radical_dim))
        if name in expected:
            checks.append(_check(f"{name}: semisimple = {expected[name]}", v.semisimple == expected[name]))
        table[name] = row
    checks.append(_check("matrix-units-2: trace form rank 4",
                         table["matrix-units-2"]["trace_form_rank"] == 4))
    return _finish("semisimple-corpus", cfg, checks, corpus=table)


def suite_bimodule(cfg: Config, threads: int = 1) -> dict:
    N = 3
    own = Config(kind=HEISENBERG, cutoff=N)
    P = own.presentation(required_cutoff(N, 1, 1))
    checks, details = [], {}
    cache = ProductCache(P)
    for n, m in [(1, 0), (1, 1)]:
        qs = build_quotients(P, n, m, N, aux_cap=N, threads=threads, cache=cache)
        data = bimodule_on_quotient(P, n, m, N, quotients=qs)
        for c in data.checks:
            d = _from(c)
            d["name"] = f"A_{{{n},{m}}} {d['name']}"
            checks.append(d)
        checks.append(_check(f"A_{{{n},{m}}} stabilized",
                             all(q.stabilized for q in qs)))
        if n == m:
            alg = algebra_on_quotient(P, n, N, quotient=qs[0])
            same = (data.quotient.reps == alg.quotient.reps and data.left == alg.table
                    and data.right == alg.table)
            checks.append(_check(f"A_{{{n},{n}}} actions = regular action of A_{n}", same))
        details[f"{n},{m}"] = data.as_dict()
    for c in psi_check(P, 1, 0, 0, N, aux_cap=N, threads=threads):
        d = _from(c)
        d["name"] = f"psi(1,0,0) {d['name']}"
        checks.append(d)
    return _finish("bimodule", own, checks, bimodules=details)


def suite_verma_bimodule(cfg: Config, threads: int = 1) -> dict:
    N = 5
    own = Config(kind=HEISENBERG, cutoff=N)
    P = own.presentation(required_cutoff(N, 2, 0))
    cache = ProductCache(P)
    A0 = truncated_quotient(P, span_o_n(P, 0, threads=threads, cache=cache), N)
    W = fock(P, cfg.lam, 2)
    U = top_level_action(W, A0.reps)
    alg = algebra_on_quotient(P, 0, N, quotient=A0)
    action = Check("U is an A_0-module")
    for i, a in enumerate(A0.reps):
        for j, b in enumerate(A0.reps):
            c = alg.table[i][j]
            if c is None:
                continue
            lhs = U[a][0][0] * U[b][0][0]
            rhs = sum((x * U[r][0][0] for x, r in zip(c, A0.reps) if x), Q(0))
            action.record("in" if lhs == rhs else "out", (a, b))
    Anm = {n: truncated_quotient(P, span_o_nm(P, n, 0, aux_cap=N, threads=threads, cache=cache), N)
           for n in range(3)}
    levels = verma_from_bimodule(A0, Anm, U, 0)
    checks = [_from(action)]
    for lv in levels:
        checks.append(_check(f"level {lv.n}: dim = p({lv.n})", lv.dim == W.dim(lv.n),
                             found=lv.dim, expected=W.dim(lv.n)))
    return _finish("verma-bimodule", own, checks, levels=[lv.as_dict() for lv in levels],
                   quotients={str(n): q.as_dict() for n, q in Anm.items()})


SUITES: Dict[str, Callable[[Config, int], dict]] = {
    "axioms": suite_axioms,
    "zhu-action": suite_zhu_action,
    "composition": suite_composition,
    "inclusions": suite_inclusions,
    "heisenberg-zhu": suite_heisenberg_zhu,
    "lee-yang": suite_lee_yang,
    "semisimple-corpus": suite_semisimple_corpus,
    "bimodule": suite_bimodule,
    "verma-bimodule": suite_verma_bimodule,
}


def run_suite(name: str, cfg: Config, threads: int = 1) -> dict:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](cfg, threads)

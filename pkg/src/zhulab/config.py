"""Run configuration.

One ``key = value`` pair per line; ``#`` starts a comment; blank lines are
ignored.  Recognized keys::

    voa.kind            heisenberg-rank1 | virasoro          (required)
    voa.central_charge  rational, virasoro only             (required there)
    quotient            vector expression; may repeat
    cutoff              truncation N of the quotients        (default 4)
    caps.schedule       comma separated increasing caps K    (default N+2,N+4,N+6)
    caps.p_cap          auxiliary level cap                  (default max(n,m)+1)
    caps.aux_cap        total-weight cap of the O''/O''' inputs (default N)
    module.lambda       Fock alpha(0) eigenvalue             (default 3/2)
    module.h            Verma lowest weight                  (default 1/16)
    output.path         report file                          (default stdout)
    output.format       json | csv                           (default json)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from .expr import ParseError, parse_vector
from .linalg import Q, fmt_rational, parse_rational
from .voa import HEISENBERG, KINDS, VIRASORO, VOA, verify_singular

FORMATS = ("json", "csv")


class ConfigError(ValueError):
    def __init__(self, errors: List[Tuple[int, int, str]]):
        self.errors = errors
        super().__init__("; ".join(f"line {ln}, column {col}: {msg}" for ln, col, msg in errors))


@dataclass
class Config:
    kind: str = HEISENBERG
    central_charge: Optional[Q] = None
    quotient: List[str] = field(default_factory=list)
    cutoff: Optional[int] = None
    schedule: Optional[List[int]] = None
    p_cap: Optional[int] = None
    aux_cap: Optional[int] = None
    lam: Q = Q(3, 2)
    h: Q = Q(1, 16)
    output_path: Optional[str] = None
    output_format: str = "json"

    @property
    def N(self) -> int:
        return 4 if self.cutoff is None else self.cutoff

    def with_overrides(self, **kw) -> "Config":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def presentation(self, working_cutoff: int) -> VOA:
        """The configured VOA at the given working cutoff."""
        V = VOA(self.kind, working_cutoff, self.central_charge)
        if not self.quotient:
            return V
        vecs = [parse_vector(e, V) for e in self.quotient]
        return V.quotient_by(*vecs)

    def effective(self) -> dict:
        """All settings with defaults resolved, for embedding in reports."""
        N = self.N
        return {
            "voa.kind": self.kind,
            "voa.central_charge": None if self.central_charge is None else fmt_rational(self.central_charge),
            "quotient": list(self.quotient),
            "cutoff": N,
            "caps.schedule": self.schedule or [N + 2, N + 4, N + 6],
            "caps.p_cap": self.p_cap,
            "caps.aux_cap": N if self.aux_cap is None else self.aux_cap,
            "module.lambda": fmt_rational(self.lam),
            "module.h": fmt_rational(self.h),
            "output.format": self.output_format,
        }


def _int(text: str, minimum: int = 0) -> int:
    try:
        v = int(text)
    except ValueError:
        raise ValueError(f"expected an integer, found {text!r}")
    if v < minimum:
        raise ValueError(f"expected an integer >= {minimum}, found {v}")
    return v


def _rational(text: str) -> Q:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r}")


def parse_config(text: str) -> Config:
    """Parse and validate; every problem is reported with line and column."""
    cfg = Config()
    errors: List[Tuple[int, int, str]] = []
    seen = set()
    quotient_pos = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            errors.append((ln, len(line) - len(line.lstrip()) + 1, "expected 'key = value'"))
            continue
        key_part, val_part = line.split("=", 1)
        key = key_part.strip()
        col = len(key_part) + 2 + (len(val_part) - len(val_part.lstrip()))
        val = val_part.strip()
        if len(val) >= 2 and val[0] == val[-1] and val[0] in "\"'":
            val = val[1:-1]
            col += 1
        if key != "quotient" and key in seen:
            errors.append((ln, 1, f"duplicate key {key!r}"))
            continue
        seen.add(key)
        try:
            if key == "voa.kind":
                if val not in KINDS:
                    raise ValueError(f"expected one of {', '.join(KINDS)}, found {val!r}")
                cfg.kind = val
            elif key == "voa.central_charge":
                cfg.central_charge = _rational(val)
            elif key == "quotient":
                cfg.quotient.append(val)
                quotient_pos.append((ln, col))
            elif key == "cutoff":
                cfg.cutoff = _int(val)
            elif key == "caps.schedule":
                caps = [_int(x.strip()) for x in val.split(",")]
                if any(b <= a for a, b in zip(caps, caps[1:])):
                    raise ValueError("cap schedule must be strictly increasing")
                cfg.schedule = caps
            elif key == "caps.p_cap":
                cfg.p_cap = _int(val)
            elif key == "caps.aux_cap":
                cfg.aux_cap = _int(val)
            elif key == "module.lambda":
                cfg.lam = _rational(val)
            elif key == "module.h":
                cfg.h = _rational(val)
            elif key == "output.path":
                cfg.output_path = val
            elif key == "output.format":
                if val not in FORMATS:
                    raise ValueError(f"expected json or csv, found {val!r}")
                cfg.output_format = val
            else:
                errors.append((ln, len(key_part) - len(key_part.lstrip()) + 1, f"unknown key {key!r}"))
        except ValueError as e:
            errors.append((ln, col, str(e)))
    if "voa.kind" not in seen and not errors:
        errors.append((1, 1, "missing required key 'voa.kind'"))
    if cfg.kind == VIRASORO and cfg.central_charge is None and "voa.kind" in seen:
        errors.append((1, 1, "virasoro needs voa.central_charge"))
    if cfg.kind == HEISENBERG and cfg.central_charge is not None:
        errors.append((1, 1, "voa.central_charge applies to virasoro only"))
    if not errors and cfg.quotient:
        V = VOA(cfg.kind, 0, cfg.central_charge)
        for expr, (ln, col) in zip(cfg.quotient, quotient_pos):
            try:
                vec = parse_vector(expr, V.with_cutoff(64))
            except ParseError as e:
                errors.append((ln, col + e.pos, str(e)))
                continue
            except ValueError as e:
                errors.append((ln, col, str(e)))
                continue
            try:
                ok = verify_singular(V, vec)
            except ValueError as e:
                errors.append((ln, col, str(e)))
                continue
            if not ok:
                errors.append((ln, col, "quotient vector is not singular"))
    if errors:
        raise ConfigError(errors)
    return cfg


def load_config(path: str) -> Config:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ConfigError([(0, 0, f"cannot read {path}: {e.strerror}")])
    return parse_config(text)

"""Products and ideal generators of the Zhu-type algebras and bimodules.

Everything goes through :func:`res_pow`, the coefficient extraction

    Res_z (1+z)^w z^(-s) Y(u,z) v = sum_{i>=0} C(w,i) u_{i-s} v.

First arguments are split into homogeneous components (the exponent ``w``
depends on ``wt u``) and every product is bilinear.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .linalg import ONE, Q, Vec, add_to, binom
from .voa import VOA, components


def res_pow(P: VOA, u: Vec, v: Vec, w: int, s: int) -> Vec:
    """Res_z (1+z)^w z^-s Y(u,z) v for arbitrary u, v and a fixed exponent w."""
    out: Vec = {}
    if not u or not v:
        return out
    wu = max(sum(k) for k in u)
    wv = max(sum(k) for k in v)
    i = 0
    # u_{i-s} v vanishes once i - s > wt u + wt v - 1
    while i - s <= wu + wv - 1:
        c = binom(w, i)
        if c:
            add_to(out, P.field_mode(u, i - s, v), Q(c))
        elif w >= 0 and i > w:
            break
        i += 1
    return out


def _by_weight(P: VOA, u: Vec, v: Vec, shift: int, s_terms) -> Vec:
    """sum over homogeneous components u_r of u of sum_j c_j res_pow(u_r, v, r+shift, s_j)."""
    out: Vec = {}
    for r, ur in components(u).items():
        for c, s in s_terms:
            if c:
                add_to(out, res_pow(P, ur, v, r + shift, s), Q(c))
    return out


def star_n(P: VOA, a: Vec, b: Vec, n: int) -> Vec:
    """a *_n b; n = 0 is the Zhu product."""
    terms = [((-1) ** m * binom(m + n, n), n + m + 1) for m in range(n + 1)]
    return _by_weight(P, a, b, n, terms)


def circ_n(P: VOA, a: Vec, b: Vec, n: int) -> Vec:
    return _by_weight(P, a, b, n, [(1, 2 * n + 2)])


def star_tri(P: VOA, u: Vec, v: Vec, m: int, p: int, n: int) -> Vec:
    """u *_{m,p}^n v.  p = n is the left product, p = m the right product."""
    d = m + n - p
    terms = [((-1) ** i * binom(d + i, i), d + i + 1) for i in range(p + 1)]
    return _by_weight(P, u, v, m, terms)


def star_left(P: VOA, a: Vec, x: Vec, n: int, m: int) -> Vec:
    """a *bar_m^n x: left action of A_n on A_{n,m}."""
    return star_tri(P, a, x, m, n, n)


def star_right(P: VOA, x: Vec, b: Vec, n: int, m: int) -> Vec:
    """x *_m^n b: right action of A_m on A_{n,m}."""
    return star_tri(P, x, b, m, m, n)


def circ_nm(P: VOA, u: Vec, v: Vec, n: int, m: int) -> Vec:
    return _by_weight(P, u, v, m, [(1, n + m + 2)])


def o_shift_gen(P: VOA, u: Vec, n: int, m: int) -> Vec:
    """L(-1)u + (L(0) + m - n)u."""
    out = P.translate(u)
    for k, x in u.items():
        e = sum(k) + m - n
        if e:
            add_to(out, {k: x * e})
    return out


class ProductCache:
    """Memoizes products of basis monomials; vectors are expanded bilinearly.

    Used by the quotient builder, where the same basis products recur across
    thousands of generators.
    """

    def __init__(self, P: VOA):
        self.P = P
        self._tri: Dict[Tuple, Vec] = {}
        self._circ: Dict[Tuple, Vec] = {}

    def _bilinear(self, table, fn, u: Vec, v: Vec, params) -> Vec:
        out: Vec = {}
        for um, x in u.items():
            for vm, y in v.items():
                key = (um, vm) + params
                hit = table.get(key)
                if hit is None:
                    hit = fn({um: ONE}, {vm: ONE})
                    table[key] = hit
                add_to(out, hit, x * y)
        return out

    def star_tri(self, u: Vec, v: Vec, m: int, p: int, n: int) -> Vec:
        return self._bilinear(self._tri, lambda a, b: star_tri(self.P, a, b, m, p, n),
                              u, v, (m, p, n))

    def star_n(self, a: Vec, b: Vec, n: int) -> Vec:
        return self.star_tri(a, b, n, n, n)

    def circ_nm(self, u: Vec, v: Vec, n: int, m: int) -> Vec:
        return self._bilinear(self._circ, lambda a, b: circ_nm(self.P, a, b, n, m),
                              u, v, (n, m))

"""Independent reference computations used by the tests.

Nothing here imports zhulab: dense Fraction Gaussian elimination and
generating-function counts stand on their own.
"""

from fractions import Fraction


def dense_rank(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][col] != 0:
                f = M[i][col] / M[rank][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def to_dense(vectors, keys):
    return [[Fraction(int(v.get(k, 0).numerator), int(v.get(k, 0).denominator)) if k in v else Fraction(0)
             for k in keys] for v in vectors]


def in_span(vectors, v):
    keys = sorted({k for u in list(vectors) + [v] for k in u}, key=repr)
    rows = to_dense(vectors, keys)
    return dense_rank(rows + to_dense([v], keys)) == dense_rank(rows) if rows else not any(v.values())


def series_product(allowed, upto):
    """Coefficients of prod_{n in allowed} 1/(1-q^n) up to q^upto."""
    c = [1] + [0] * upto
    for n in allowed:
        for w in range(n, upto + 1):
            c[w] += c[w - n]
    return c


def partition_counts(upto, min_part=1):
    return series_product(range(min_part, upto + 1), upto)


def lee_yang_counts(upto):
    """Character of the (2,5) minimal model: parts congruent to 2 or 3 mod 5."""
    return series_product([n for n in range(1, upto + 1) if n % 5 in (2, 3)], upto)

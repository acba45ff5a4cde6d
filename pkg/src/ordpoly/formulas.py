"""Closed-form face and flag counts for multiplexes and ordinary polytopes.

All arithmetic is exact.  ``binom`` rejects a negative upper index; the
few sums that need ``C(a, b) = 0`` for negative ``a`` call ``binom0`` and say
so at the call site.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ordpoly.errors import BadParams, NonIntegerResult


@lru_cache(maxsize=None)
def binom(a, b):
    """``C(a, b)`` with ``C(a, b) = 0`` for ``b < 0`` or ``b > a``; ``a`` must be >= 0."""
    if a < 0:
        raise ValueError(f"binom({a}, {b}): negative upper index")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def binom0(a, b):
    """Like :func:`binom` but any out-of-range argument, including ``a < 0``, gives 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(total, parts):
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != total:
        raise ValueError(f"bad multinomial {total}; {parts}")
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def _check_multiplex(d, n):
    if not (n >= d >= 2):
        raise BadParams(f"need n >= d >= 2, got d={d} n={n}")


def _check_ordinary(d, k, n=None):
    if n is None:
        n = k
    if not (n >= k >= d >= 5 and d % 2 == 1):
        raise BadParams(f"need n >= k >= d = 2m+1 >= 5, got d={d} k={k} n={n}")


# --------------------------------------------------------------------------
# multiplexes

def multiplex_f(d, n, i):
    """Number of ``i``-faces of ``M^{d,n}``."""
    _check_multiplex(d, n)
    if not 0 <= i <= d - 1:
        raise BadParams(f"face dimension {i} outside 0..{d - 1}")
    return binom(d + 1, i + 1) + (n - d) * binom(d - 1, i)


def multiplex_f_vector(d, n):
    return tuple(multiplex_f(d, n, i) for i in range(d))


def _rank_set(S, d):
    S = sorted(set(S))
    if S and (S[0] < 0 or S[-1] > d - 1):
        raise BadParams(f"rank set {S} not inside 0..{d - 1}")
    return S


def simplex_flag(d, S):
    """Flag number ``f_S`` of the ``d``-simplex."""
    S = _rank_set(S, d)
    cuts = [-1] + S + [d]
    return multinomial(d + 1, [b - a for a, b in zip(cuts, cuts[1:])])


def multiplex_flag(d, n, S):
    """Flag number ``f_S`` of ``M^{d,n}`` (equivalently of the pyramid family)."""
    _check_multiplex(d, n)
    S = _rank_set(S, d)
    nxt = S[1:] + [d]
    weight = sum((s + 1) * (t - s) * (t - 1) for s, t in zip(S, nxt))
    bracket = 1 + Fraction(n - d, (d + 1) * d * (d - 1)) * weight
    value = simplex_flag(d, S) * bracket
    if value.denominator != 1:
        raise NonIntegerResult(f"f_{S}(M^{{{d},{n}}}) = {value}")
    return int(value)


def multiplex_f0i(d, n, i):
    """``f_{0,i}`` of ``M^{d,n}`` for ``1 <= i <= d-1``."""
    _check_multiplex(d, n)
    if not 1 <= i <= d - 1:
        raise BadParams(f"i={i} outside 1..{d - 1}")
    return (n + 1) * binom(d, i) + (d - 2) * (n - d) * binom(d - 2, i - 1)


def multiplex_h(d, n):
    _check_multiplex(d, n)
    return tuple(1 if i in (0, d) else 1 + (n - d) for i in range(d + 1))


def simplex_face_count(d, n, i):
    """Number of ``i``-faces of ``M^{d,n}`` that are simplices (``n > d``)."""
    if not (n > d >= 2):
        raise BadParams(f"need n > d >= 2, got d={d} n={n}")
    # d = 2 gives C(-1, .); those terms vanish (polygons have no nonsimplex proper faces)
    return (binom(d + 1, i + 1) - binom0(d - 3, i - 3)
            + (n - d) * (binom(d - 1, i) - binom0(d - 3, i - 2)))


def nonsimplex_face_count(d, n, i):
    if not (n > d >= 2):
        raise BadParams(f"need n > d >= 2, got d={d} n={n}")
    return binom0(d - 3, i - 3) + (n - d) * binom0(d - 3, i - 2)


# --------------------------------------------------------------------------
# ordinary polytopes

def toric_h5_ordinary(k, n):
    """Toric h-vector of ``P^{5,k,n}``."""
    if not n >= k >= 5:
        raise BadParams(f"need n >= k >= 5, got k={k} n={n}")
    mid = binom(n - 3, 2) - binom(n - k + 1, 2)
    return (1, n - 4, mid, mid, n - 4, 1)


def h2_ordinary(d, k, n):
    _check_ordinary(d, k, n)
    return binom(n - d + 2, 2) - binom(n - k + 1, 2)


def dinh_N(s, t, u):
    # zero convention for every binomial here, negative upper index included
    return (binom0(u - t, t) * binom0(s - u + t, u - t)
            + binom0(u - 1 - t, t) * binom0(s - u + t, u - 1 - t))


def dinh_phi(d, k, i):
    """Number of ``i``-faces of the cyclic ``d``-polytope with ``k + 1`` vertices (odd ``d``)."""
    if not (k >= d >= 3 and d % 2 == 1):
        raise BadParams(f"need k >= d = 2m+1, got d={d} k={k}")
    if not 0 <= i <= d - 1:
        raise BadParams(f"face dimension {i} outside 0..{d - 1}")
    m = (d - 1) // 2
    if i <= m - 1:
        return binom(k + 1, i + 1)
    return sum((binom(j, d - 1 - i) + binom(d - j, d - 1 - i)) * binom(k - d + j, j)
               for j in range(m + 1))


def dinh_c(d, k, i):
    """Growth ``f_i(P^{d,k,n+1}) - f_i(P^{d,k,n})``, independent of ``n``."""
    _check_ordinary(d, k)
    if not 0 <= i <= d - 1:
        raise BadParams(f"face dimension {i} outside 0..{d - 1}")
    m = (d - 1) // 2
    if i == 0:
        return 1
    if i < m:
        return binom(k - 1, i)
    if i == m:
        return binom(k - 1, m) - binom(k - 2 - m, m)
    if i == d - 1:
        return binom(k - 2 - m, m - 1)
    N = dinh_N
    total = sum(2 * N(k - 1, j, i) - N(k - 2, j, i) for j in range(i - m, i // 2 + 1))
    total -= sum(N(k - 3, j, i - 1) for j in range(i - m, (i - 1) // 2 + 1))
    total -= sum(N(k - 3, j, i - 2) for j in range(i - m - 1, (i - 2) // 2 + 1))
    total -= sum(N(k - 3 - 2 * r, i - m - r, i - 2 * r) for r in range(i - m + 1))
    return total


def dinh_f(d, k, n, i):
    """Number of ``i``-faces of ``P^{d,k,n}``."""
    _check_ordinary(d, k, n)
    return dinh_phi(d, k, i) + (n - k) * dinh_c(d, k, i)


def dinh_f_vector(d, k, n):
    return tuple(dinh_f(d, k, n, i) for i in range(d))


def ordinary_f1(k, n):
    return binom(k + 1, 2) + (n - k) * (k - 1)


def elementary_beta(d, f0, f1, f2, f02):
    if d < 3:
        raise BadParams("beta is defined for d >= 3")
    return f02 - 3 * f2 + f1 - d * f0 + binom(d + 1, 2)


def dual_facet_vertex_bound(d, k):
    """Lower bound ``3 C(k-m-3, m-1)`` on facets through ``x_1`` in ``P^{d,k,n}``."""
    _check_ordinary(d, k)
    m = (d - 1) // 2
    return 3 * binom(k - m - 3, m - 1)


def reflected_rank_set(S):
    """``{s_r-1-s_1, .., s_r-1-s_{r-1}, s_r}`` for ``S = {s_1 < .. < s_r}``."""
    S = sorted(S)
    if not S:
        return ()
    top = S[-1]
    return tuple(sorted([top - 1 - s for s in S[:-1]] + [top]))


# --------------------------------------------------------------------------
# exact linear algebra

def exact_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return 0
    n_rows, n_cols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, n_rows):
            a = M[r][col]
            for c in range(col, n_cols):
                # exact division is the Bareiss invariant
                M[r][c] = (p * M[r][c] - a * M[rank][c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def conjecture_family(d):
    """Parameters ``(d, d + i//2, d + i)`` for ``i = 1 .. d``."""
    return [(d, d + i // 2, d + i) for i in range(1, d + 1)]

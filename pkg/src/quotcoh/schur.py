"""Littlewood-Richardson coefficients, Pieri products and Cauchy terms.

Coefficients are computed by backtracking enumeration of semistandard skew
fillings with the lattice word property, memoized on the triple of
partitions.  The Pieri rules act directly on dominant weights with possibly
negative entries; this is legitimate because both rules commute with
twisting every entry by the same determinant power, the usual normalization
that makes negative entries nonnegative.
"""

import json
from functools import lru_cache
from itertools import combinations

from .partitions import (
    as_partition,
    as_weight,
    contains,
    enumerate_in_box,
    pad,
    size,
    subpartitions,
    transpose,
)

# Shared memo table for Littlewood-Richardson coefficients.  Reads and
# single-key inserts are atomic under the GIL; worker processes simply
# replicate it.
_LR_MEMO: dict = {}
_LR_CACHE_VERSION = 1


def lr_coefficient(alpha, beta, gamma) -> int:
    """The multiplicity c^gamma_{alpha,beta} of S_gamma in S_alpha . S_beta.

    Counts fillings of the skew diagram gamma/alpha with content beta that
    are semistandard (rows weakly increase, columns strictly increase) and
    whose right-to-left, top-to-bottom reading word is a lattice word.
    Returns 0 when the sizes do not match or gamma does not contain alpha.
    """
    alpha = as_partition(alpha)
    beta = as_partition(beta)
    gamma = as_partition(gamma)
    key = (alpha, beta, gamma)
    cached = _LR_MEMO.get(key)
    if cached is not None:
        return cached
    if size(gamma) != size(alpha) + size(beta) or not contains(gamma, alpha):
        value = 0
    else:
        value = _count_tableaux(alpha, beta, gamma)
    _LR_MEMO[key] = value
    return value


def _count_tableaux(alpha, beta, gamma) -> int:
    nlab = len(beta)
    rows = len(gamma)
    alpha_p = pad(alpha, rows)

    # Cells of gamma/alpha in reading order: each row right to left, top row
    # first.  Every cell below a skew cell in the same column is again a skew
    # cell, so the strict-column prune below is exact.
    cells = []
    for r in range(rows):
        for c in range(gamma[r] - 1, alpha_p[r] - 1, -1):
            below = sum(1 for r2 in range(r + 1, rows) if gamma[r2] > c)
            cells.append((r, c, below))
    if not cells:
        return 1
    if nlab == 0:
        return 0

    remaining = list(beta)
    counts = [0] * (nlab + 1)
    vals = [[0] * gamma[0] for _ in range(rows)]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c, below = cells[idx]
        hi = vals[r][c + 1] if c + 1 < gamma[r] else nlab
        lo = vals[r - 1][c] + 1 if r > 0 and c >= alpha_p[r - 1] else 1
        total = 0
        for v in range(lo, min(hi, nlab - below) + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            vals[r][c] = v
            total += fill(idx + 1)
            vals[r][c] = 0
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return fill(0)


@lru_cache(maxsize=None)
def _lr_expand_cached(alpha, beta) -> tuple:
    total = size(alpha) + size(beta)
    max_rows = len(alpha) + len(beta)
    max_cols = (alpha[0] if alpha else 0) + (beta[0] if beta else 0)
    out = []
    for gamma in enumerate_in_box(max_rows, max_cols, total):
        c = lr_coefficient(alpha, beta, gamma)
        if c:
            out.append((gamma, c))
    return tuple(out)


def lr_expand_tensor(alpha, beta) -> dict:
    """All gamma with c^gamma_{alpha,beta} != 0, as {gamma: coefficient}."""
    return dict(_lr_expand_cached(as_partition(alpha), as_partition(beta)))


@lru_cache(maxsize=None)
def _direct_sum_cached(lam) -> tuple:
    out = []
    for alpha in subpartitions(lam):
        rest = size(lam) - size(alpha)
        for beta in enumerate_in_box(len(lam), lam[0] if lam else 0, rest):
            c = lr_coefficient(alpha, beta, lam)
            if c:
                out.append((alpha, beta, c))
    return tuple(out)


def direct_sum_expand(lam) -> list:
    """Decompose S_lam(V + W) into S_alpha(V) x S_beta(W) pieces.

    Returns the triples (alpha, beta, c^lam_{alpha,beta}) with nonzero
    coefficient.
    """
    return list(_direct_sum_cached(as_partition(lam)))


@lru_cache(maxsize=None)
def _double_bundle_cached(lam, n) -> tuple:
    if len(lam) > 2 * n:
        raise ValueError(f"{lam} has more than {2 * n} rows")
    acc: dict = {}
    for alpha, beta, c1 in _direct_sum_cached(lam):
        if len(alpha) > n or len(beta) > n:
            continue
        for gamma, c2 in _lr_expand_cached(alpha, beta):
            if len(gamma) > n:
                continue
            acc[gamma] = acc.get(gamma, 0) + c1 * c2
    return tuple(sorted(acc.items(), reverse=True))


def double_bundle_expand(lam, n: int) -> dict:
    """Decompose S_lam of a doubled rank-n bundle into rank-n pieces.

    Returns {gamma: sum_{alpha,beta} c^lam_{alpha,beta} c^gamma_{alpha,beta}}
    over partitions gamma with at most n rows.  Requires lam to have at most
    2n rows.
    """
    return dict(_double_bundle_cached(as_partition(lam), n))


def cauchy_wedge(ell: int, rank_left: int, rank_right: int) -> list:
    """Index pairs (lam^T, lam) of the ell-th exterior power of a tensor
    product of bundles of the given ranks.

    lam runs over partitions of size ell with at most rank_right rows and at
    most rank_left columns.
    """
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return [
        (transpose(lam), lam)
        for lam in enumerate_in_box(rank_right, rank_left, ell)
    ]


@lru_cache(maxsize=None)
def _pieri_wedge_cached(w, k, dualized) -> tuple:
    r = len(w)
    if not 0 <= k <= r:
        raise ValueError(f"k={k} out of range for rank {r}")
    step = -1 if dualized else 1
    out = []
    for spots in combinations(range(r), k):
        nw = list(w)
        for i in spots:
            nw[i] += step
        if all(a >= b for a, b in zip(nw, nw[1:])):
            out.append(tuple(nw))
    return tuple(sorted(out, reverse=True))


def pieri_wedge(w, k: int, dualized: bool = False) -> dict:
    """Tensor S_w with the k-th exterior power of the same bundle.

    Adds 1 to k distinct entries of w (subtracts when dualized), keeping only
    the weakly decreasing results; every summand has multiplicity 1.
    """
    return {v: 1 for v in _pieri_wedge_cached(as_weight(w), k, dualized)}


@lru_cache(maxsize=None)
def _pieri_sym_cached(w, k, dualized) -> tuple:
    r = len(w)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if r == 0:
        return ((),) if k == 0 else ()
    out = []
    stack = []

    def fill(j, left):
        if j == r:
            if left == 0:
                out.append(tuple(stack))
            return
        if dualized:
            # Drops interlace below w: w_j >= nu_j >= w_{j+1}.
            cap = left if j == r - 1 else min(left, w[j] - w[j + 1])
        else:
            # Gains interlace above w: nu_j >= w_j >= nu_{j+1}.
            cap = left if j == 0 else min(left, w[j - 1] - w[j])
        for a in range(cap + 1):
            stack.append(w[j] - a if dualized else w[j] + a)
            fill(j + 1, left - a)
            stack.pop()

    fill(0, k)
    return tuple(sorted(out, reverse=True))


def pieri_sym(w, k: int, dualized: bool = False) -> dict:
    """Tensor S_w with the k-th symmetric power of the same bundle (its dual
    when dualized).

    Summands are the dominant weights nu with |nu| = |w| + k (or |w| - k)
    interlacing w; every multiplicity is 1.
    """
    return {v: 1 for v in _pieri_sym_cached(as_weight(w), k, dualized)}


def save_lr_cache(path) -> int:
    """Persist the memo table of computed coefficients.  Returns the entry
    count."""
    entries = [
        [list(a), list(b), list(g), c] for (a, b, g), c in _LR_MEMO.items()
    ]
    doc = {"format": "quotcoh-lr-cache", "version": _LR_CACHE_VERSION,
           "entries": entries}
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh)
    return len(entries)


def load_lr_cache(path) -> int:
    """Load a previously saved memo table; silently skips unreadable or
    mismatched files.  Returns the number of entries adopted."""
    try:
        with open(path, encoding="ascii") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return 0
    if (
        not isinstance(doc, dict)
        or doc.get("format") != "quotcoh-lr-cache"
        or doc.get("version") != _LR_CACHE_VERSION
    ):
        return 0
    adopted = 0
    for a, b, g, c in doc.get("entries", []):
        _LR_MEMO[(tuple(a), tuple(b), tuple(g))] = int(c)
        adopted += 1
    return adopted

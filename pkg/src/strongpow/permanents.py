"""Exact matrix permanents and the closed-form permanent expressions for
strong power graphs.

Two independent oracles (Ryser inclusion-exclusion, permanent-minor
expansion) pin down ground truth; the closed forms are transcribed exactly as
displayed in their sources, sign conventions and all, and the verify harness
records where each matches the oracle. Nothing here "fixes" a closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SizeGuardError
from .spectral import IntMatrix
from .groups import euler_phi

RYSER_LIMIT = 24
EXPANSION_LIMIT = 10


def _comb(a: int, b: int) -> int:
    """Binomial coefficient with the vanishing convention: 0 whenever a < 0,
    b < 0, or b > a. The closed-form sums rely on out-of-range terms dying."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def permanent_ryser(m: IntMatrix) -> int:
    """Exact permanent by Ryser's inclusion-exclusion over column subsets,
    enumerated in Gray-code order so each step updates the running row sums
    by a single column. O(2^n * n); bounded at order 24."""
    n = m.n
    if n > RYSER_LIMIT:
        raise SizeGuardError(f"permanent_ryser is bounded at order {RYSER_LIMIT}, got {n}")
    if n == 0:
        return 1
    rows = m.rows
    if any(not any(row) for row in rows):
        return 0
    if any(not any(row[j] for row in rows) for j in range(n)):
        return 0
    cols = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    sums = [0] * n
    rng = range(n)
    gray = 0
    size = 0
    total = 0
    for t in range(1, 1 << n):
        bit = (t & -t).bit_length() - 1
        mask = 1 << bit
        col = cols[bit]
        if gray & mask:
            size -= 1
            for i in rng:
                sums[i] -= col[i]
        else:
            size += 1
            for i in rng:
                sums[i] += col[i]
        gray ^= mask
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    return total if n % 2 == 0 else -total


def permanent_expansion(m: IntMatrix) -> int:
    """Exact permanent by expansion along successive rows (the permanent
    analogue of cofactor expansion, without sign alternation). Independent of
    the Ryser route; bounded at order 10."""
    n = m.n
    if n > EXPANSION_LIMIT:
        raise SizeGuardError(
            f"permanent_expansion is bounded at order {EXPANSION_LIMIT}, got {n}"
        )
    rows = m.rows

    def expand(i: int, free: int) -> int:
        if i == n:
            return 1
        total = 0
        mask = free
        while mask:
            b = mask & -mask
            mask ^= b
            a = rows[i][b.bit_length() - 1]
            if a:
                total += a * expand(i + 1, free ^ b)
        return total

    return expand(0, (1 << n) - 1)


@dataclass(frozen=True)
class CliqueParams:
    """Shape parameters of a clique-plus-one-vertex graph: a clique on m+n
    vertices whose extra vertex is adjacent to n of them and non-adjacent to
    the other m. Total m+n+1 vertices; d = m+n-1.

    The strong power graph of Z_N has this shape with m = phi(N) and
    n = N - phi(N) - 1.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("clique parameters must be nonnegative")

    @property
    def d(self) -> int:
        return self.m + self.n - 1

    @classmethod
    def for_cyclic_order(cls, order: int) -> "CliqueParams":
        if order < 2:
            raise ValueError(f"cyclic order must be >= 2, got {order}")
        phi = euler_phi(order)
        return cls(m=phi, n=order - phi - 1)


def clique_plus_vertex_adjacency_permanent(p: CliqueParams) -> int:
    """Adjacency permanent of a clique-plus-one-vertex graph:

        n * sum_{r=1}^{m+n} (-1)^{r-1} (m+n-r)! *
            [C(m+n-1, r-1) + (n-1) C(m+n-2, r-1)]
    """
    m, n = p.m, p.n
    total = 0
    for r in range(1, m + n + 1):
        term = math.factorial(m + n - r) * (
            _comb(m + n - 1, r - 1) + (n - 1) * _comb(m + n - 2, r - 1)
        )
        total += -term if (r - 1) & 1 else term
    return n * total


def adjacency_permanent_formula(order: int) -> int:
    """Closed-form adjacency permanent for the strong power graph of Z_N:

        (N-phi-1) * sum_{r=1}^{N-1} (-1)^{r-1} (N-1-r)! *
            [C(N-2, r-1) + (N-2-phi) C(N-3, r-1)]
    """
    if order < 2:
        raise ValueError(f"adjacency_permanent_formula requires N >= 2, got {order}")
    phi = euler_phi(order)
    total = 0
    for r in range(1, order):
        term = math.factorial(order - 1 - r) * (
            _comb(order - 2, r - 1) + (order - 2 - phi) * _comb(order - 3, r - 1)
        )
        total += -term if (r - 1) & 1 else term
    return (order - phi - 1) * total


def clique_plus_vertex_laplacian_permanent(p: CliqueParams) -> int:
    """Laplacian permanent of a clique-plus-one-vertex graph, transcribed
    from its source's final displayed expression:

        sum_{r=1}^{m+n} (-1)^{m+n-r} (m+n-r)! F_r(d)
          + (d-m+1) * sum_{i+j=m+n} C(m,i) C(n,j) (d+2)^j (d+1)^i

    with d = m+n-1 and

        F_r(d) = sum_{i+j=r-1} C(m,i) (d+2)^j (d+1)^i *
            [n C(n-1,j) + n(n-1) C(n-2,j) - (d-m+1)(m+n-r+1) C(n,j)]
    """
    m, n = p.m, p.n
    d = p.d

    def f_r(r: int) -> int:
        acc = 0
        for i in range(r):
            j = r - 1 - i
            bracket = (
                n * _comb(n - 1, j)
                + n * (n - 1) * _comb(n - 2, j)
                - (d - m + 1) * (m + n - r + 1) * _comb(n, j)
            )
            acc += _comb(m, i) * (d + 2) ** j * (d + 1) ** i * bracket
        return acc

    total = 0
    for r in range(1, m + n + 1):
        term = math.factorial(m + n - r) * f_r(r)
        total += -term if (m + n - r) & 1 else term
    tail = 0
    for i in range(m + n + 1):
        j = m + n - i
        tail += _comb(m, i) * _comb(n, j) * (d + 2) ** j * (d + 1) ** i
    return total + (d - m + 1) * tail


def laplacian_permanent_formula(order: int) -> int:
    """Closed-form Laplacian permanent for the strong power graph of Z_N,
    transcribed literally (phi = phi(N), c = N-phi-1):

        sum_{r=1}^{N-1} (-1)^{N-r-1} (N-r-1)! F_r
          + c * sum_{i+j=N-1} C(phi,i) C(c,j) N^j (N-1)^i

        F_r = sum_{i+j=r-1} C(phi,i) N^j (N-1)^i *
            [c C(c-1,j) + c(c-1) C(c-2,j) - c(N-r) C(c,j)]
    """
    if order < 2:
        raise ValueError(f"laplacian_permanent_formula requires N >= 2, got {order}")
    phi = euler_phi(order)
    c = order - phi - 1

    def f_r(r: int) -> int:
        acc = 0
        for i in range(r):
            j = r - 1 - i
            bracket = (
                c * _comb(c - 1, j)
                + c * (c - 1) * _comb(c - 2, j)
                - c * (order - r) * _comb(c, j)
            )
            acc += _comb(phi, i) * order ** j * (order - 1) ** i * bracket
        return acc

    total = 0
    for r in range(1, order):
        term = math.factorial(order - r - 1) * f_r(r)
        total += -term if (order - r - 1) & 1 else term
    tail = 0
    for i in range(order):
        j = order - 1 - i
        tail += _comb(phi, i) * _comb(c, j) * order ** j * (order - 1) ** i
    return total + c * tail


def complete_graph_laplacian_permanent(n: int) -> int:
    """per(L(K_n)) via the alternating factorial sum

        (-1)^n n! (1 - n/1! + n^2/2! - ... + (-1)^n n^n/n!)

    evaluated over the common denominator n!, so every intermediate value is
    an exact integer: sum_{k=0}^{n} (-1)^{n-k} n^k (n!/k!)."""
    if n < 1:
        raise ValueError(f"complete_graph_laplacian_permanent requires n >= 1, got {n}")
    total = 0
    for k in range(n + 1):
        term = n ** k * (math.factorial(n) // math.factorial(k))
        total += -term if (n - k) & 1 else term
    return total

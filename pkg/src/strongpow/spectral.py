"""Laplacian assembly, exact characteristic polynomials, closed-form spectra,
and the derived invariants: algebraic connectivity, spanning-tree counts, and
Laplacian energy.

Closed-form values and definition-based oracle values are deliberately kept in
separate functions (never substituted for one another); the verify harness
compares them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SizeGuardError
from .graphs import Graph
from .groups import euler_phi

CHAR_POLY_LIMIT = 128
KIRCHHOFF_LIMIT = 64


class IntMatrix:
    """Square matrix of arbitrary-precision integers (rows of tuples)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        r = self.rows
        return all(r[i][j] == r[j][i] for i in range(self.n) for j in range(i))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({list(map(list, self.rows))!r})"


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; coeffs[k] is the coefficient of x^k."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}{xs}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class ExactSpectrum:
    """Integer eigenvalues with multiplicities, strictly decreasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for value, mult in self.pairs:
            if mult < 1:
                raise ValueError(f"multiplicity of {value} must be >= 1")
        values = [value for value, _ in self.pairs]
        if any(later >= earlier for later, earlier in zip(values[1:], values)):
            raise ValueError("eigenvalues must be strictly decreasing")

    @classmethod
    def from_pairs(cls, pairs) -> "ExactSpectrum":
        """Merge duplicate eigenvalues, drop zero multiplicities, sort."""
        acc: dict[int, int] = {}
        for value, mult in pairs:
            if mult:
                acc[value] = acc.get(value, 0) + mult
        return cls(tuple(sorted(acc.items(), reverse=True)))

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.pairs)

    def eigenvalues_desc(self) -> list[int]:
        out = []
        for value, mult in self.pairs:
            out.extend([value] * mult)
        return out

    def trace(self) -> int:
        return sum(value * mult for value, mult in self.pairs)


def laplacian(graph: Graph) -> IntMatrix:
    """L = D - A; rows sum to zero."""
    n = graph.n
    rows = []
    for u in range(n):
        mask = graph.adj[u]
        row = [0] * n
        row[u] = mask.bit_count()
        while mask:
            b = mask & -mask
            row[b.bit_length() - 1] = -1
            mask ^= b
        rows.append(row)
    return IntMatrix(rows)


def adjacency(graph: Graph) -> IntMatrix:
    n = graph.n
    rows = []
    for u in range(n):
        row = [0] * n
        mask = graph.adj[u]
        while mask:
            b = mask & -mask
            row[b.bit_length() - 1] = 1
            mask ^= b
        rows.append(row)
    return IntMatrix(rows)


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division in the update is exact over the integers, so no rationals
    appear at any point.
    """
    n = m.n
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


# --- exact characteristic polynomial -------------------------------------
#
# Faddeev-LeVerrier modulo a set of word-sized primes, recombined by CRT.
# Per prime the dominant cost is n int64 matrix products, which numpy does
# quickly; the result is exact because the product of the primes exceeds
# twice an a-priori coefficient bound. Primes sit just below 2^27 so that a
# 128-term dot product of residues stays below 2^63.

_PRIME_HIGH = (1 << 27) - 1
_prime_cache: list[int] = []


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.2e9
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes(count: int) -> list[int]:
    candidate = _prime_cache[-1] - 2 if _prime_cache else _PRIME_HIGH
    while len(_prime_cache) < count:
        if _is_prime(candidate):
            _prime_cache.append(candidate)
        candidate -= 2
    return _prime_cache[:count]


def _char_poly_mod(reduced: np.ndarray, p: int) -> list[int]:
    n = reduced.shape[0]
    m = np.eye(n, dtype=np.int64)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    diag = np.diag_indices(n)
    for k in range(1, n + 1):
        am = (reduced @ m) % p
        c = (-int(am.trace()) * pow(k, -1, p)) % p
        coeffs[n - k] = c
        m = am
        m[diag] = (m[diag] + c) % p
    return coeffs


def char_poly_exact(m: IntMatrix) -> CharPoly:
    """Monic characteristic polynomial det(xI - M) with exact integer
    coefficients. Bounded at order 128."""
    n = m.n
    if n > CHAR_POLY_LIMIT:
        raise SizeGuardError(
            f"char_poly_exact is bounded at order {CHAR_POLY_LIMIT}, got {n}"
        )
    if n == 0:
        return CharPoly((1,))
    # |coeff of x^(n-k)| <= C(n,k) * rho^k with rho >= spectral radius.
    rho = max(sum(abs(v) for v in row) for row in m.rows)
    bits = n * max(rho, 2).bit_length() + n + 4
    primes: list[int] = []
    prod = 1
    count = bits // 26 + 1
    while prod.bit_length() <= bits + 1:
        primes = _primes(count)
        prod = math.prod(primes)
        count += 2
    residues = []
    for p in primes:
        reduced = np.array([[v % p for v in row] for row in m.rows], dtype=np.int64)
        residues.append(_char_poly_mod(reduced, p))
    weights = [(prod // p) * pow(prod // p, -1, p) % prod for p in primes]
    coeffs = []
    for k in range(n + 1):
        x = sum(res[k] * w for res, w in zip(residues, weights)) % prod
        if x > prod // 2:
            x -= prod
        coeffs.append(x)
    assert coeffs[-1] == 1, "leading coefficient must be 1 for a monic result"
    return CharPoly(tuple(coeffs))


# --- closed forms ----------------------------------------------------------


def closed_form_spectrum(n: int, cyclic: bool) -> ExactSpectrum:
    """Exact Laplacian spectrum of the strong power graph of a group of
    order n: cyclic gives {0^1, n^{n-phi-1}, (n-phi-1)^1, (n-1)^{phi-1}},
    noncyclic gives {0^1, n^{n-1}}. Collisions are merged (prime n)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return ExactSpectrum(((0, 1),))
    if not cyclic:
        return ExactSpectrum.from_pairs([(0, 1), (n, n - 1)])
    phi = euler_phi(n)
    return ExactSpectrum.from_pairs(
        [(0, 1), (n, n - phi - 1), (n - phi - 1, 1), (n - 1, phi - 1)]
    )


def closed_form_char_poly(n: int) -> CharPoly:
    """Expanded x(x-n)^{n-phi-1} (x-(n-phi-1)) (x-(n-1))^{phi-1} for the
    cyclic case, n >= 2. This is the form consistent with the closed-form
    spectrum and the trace identity."""
    if n < 2:
        raise ValueError(f"closed_form_char_poly requires n >= 2, got {n}")
    phi = euler_phi(n)
    roots = [0] + [n] * (n - phi - 1) + [n - phi - 1] + [n - 1] * (phi - 1)
    coeffs = [1]
    for r in roots:
        coeffs = [0] + coeffs
        if r:
            for k in range(len(coeffs) - 1):
                coeffs[k] -= r * coeffs[k + 1]
    return CharPoly(tuple(coeffs))


def char_poly_from_spectrum(s: ExactSpectrum) -> CharPoly:
    """Monic polynomial whose roots are the spectrum's eigenvalues with
    multiplicity, ascending coefficients."""
    coeffs = [1]
    for value, mult in s.pairs:
        for _ in range(mult):
            coeffs = [0] + coeffs
            if value:
                for k in range(len(coeffs) - 1):
                    coeffs[k] -= value * coeffs[k + 1]
    return CharPoly(tuple(coeffs))


def eigenvalues_numeric(m: IntMatrix, tol: float = 1e-9) -> list[float]:
    """All eigenvalues of a symmetric integer matrix, ascending, via a dense
    symmetric eigensolver. LAPACK accuracy is far inside the stated tol for
    the matrix sizes this library builds."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not m.is_symmetric():
        raise ValueError("eigenvalues_numeric requires a symmetric matrix")
    if m.n == 0:
        return []
    return [float(v) for v in np.linalg.eigvalsh(np.array(m.rows, dtype=np.float64))]


def algebraic_connectivity(s: ExactSpectrum) -> int:
    """Second-smallest Laplacian eigenvalue counting multiplicity (0 for a
    one-vertex spectrum by convention)."""
    if not s.pairs:
        raise ValueError("empty spectrum")
    if s.n == 1:
        return 0
    smallest_value, smallest_mult = s.pairs[-1]
    if smallest_mult >= 2:
        return smallest_value
    return s.pairs[-2][0]


def spanning_tree_count_formula(n: int, cyclic: bool) -> int:
    """Closed-form spanning-tree count: n^{n-phi-2} (n-phi-1) (n-1)^{phi-1}
    for cyclic orders, n^{n-2} for noncyclic. n >= 2."""
    if n < 2:
        raise ValueError(f"spanning_tree_count_formula requires n >= 2, got {n}")
    if not cyclic:
        return n ** (n - 2)
    phi = euler_phi(n)
    if n - phi - 1 == 0:
        # disconnected (prime n or n = 2); avoids the negative exponent
        return 0
    return n ** (n - phi - 2) * (n - phi - 1) * (n - 1) ** (phi - 1)


def spanning_tree_count_kirchhoff(graph: Graph) -> int:
    """Spanning trees as the exact determinant of the Laplacian with row and
    column 0 deleted. Bounded at 64 vertices."""
    n = graph.n
    if n > KIRCHHOFF_LIMIT:
        raise SizeGuardError(
            f"spanning_tree_count_kirchhoff is bounded at {KIRCHHOFF_LIMIT} "
            f"vertices, got {n}"
        )
    if n == 0:
        raise ValueError("spanning trees of the empty graph are undefined")
    lap = laplacian(graph).rows
    minor = IntMatrix([row[1:] for row in lap[1:]])
    return det_bareiss(minor)


def laplacian_energy_from_spectrum(s: ExactSpectrum, edge_count: int, n: int) -> Fraction:
    """Definition-based Laplacian energy sum(|lambda_i - 2m/n|) in exact
    rational arithmetic."""
    if s.n != n:
        raise ValueError(f"spectrum has {s.n} eigenvalues, expected {n}")
    mean = Fraction(2 * edge_count, n)
    return sum((abs(Fraction(value) - mean) * mult for value, mult in s.pairs),
               Fraction(0))


def laplacian_energy_closed_form(n: int, cyclic: bool) -> Fraction:
    """Closed-form Laplacian energy: 2(n-1) - 4 phi(n)/n for cyclic orders,
    2(n-1) for noncyclic. Implemented verbatim; the cyclic branch is known to
    disagree with the definition-based oracle for n >= 3 (see the shipped
    known-discrepancy list), and the verify harness records that rather than
    patching it."""
    if n < 2:
        raise ValueError(f"laplacian_energy_closed_form requires n >= 2, got {n}")
    if not cyclic:
        return Fraction(2 * (n - 1))
    return Fraction(2 * (n - 1)) - Fraction(4 * euler_phi(n), n)


# --- exports ---------------------------------------------------------------


def to_matrix_market(m: IntMatrix) -> str:
    """Matrix Market coordinate text (integer field, 1-based indices); emits
    the lower triangle with the 'symmetric' qualifier when applicable."""
    symmetric = m.is_symmetric()
    entries = []
    for i, row in enumerate(m.rows):
        for j, v in enumerate(row):
            if v != 0 and (not symmetric or j <= i):
                entries.append((i + 1, j + 1, v))
    kind = "symmetric" if symmetric else "general"
    lines = [f"%%MatrixMarket matrix coordinate integer {kind}",
             f"{m.n} {m.n} {len(entries)}"]
    lines.extend(f"{i} {j} {v}" for i, j, v in entries)
    return "\n".join(lines) + "\n"


def spectrum_to_json(s: ExactSpectrum) -> str:
    """JSON list of [eigenvalue, multiplicity] pairs, eigenvalues descending."""
    return json.dumps([[value, mult] for value, mult in s.pairs])

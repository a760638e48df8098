"""Finite groups with elements indexed 0..n-1.

Two representations: cyclic groups of any order use modular arithmetic
implicitly (no table); every other group carries an explicit multiplication
table, validated on construction. Groups are immutable, so instances can be
shared freely across worker threads.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

MAX_TABLE_ORDER = 4096
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64
_ASSOCIATIVITY_SEED = 1729
_ASSOCIATIVITY_SAMPLES_PER_N2 = 10


class GroupError(ValueError):
    """Base class for group construction and validation failures."""


class InvalidOrderError(GroupError):
    """Order is nonpositive or exceeds a representation bound."""


class NotLatinSquareError(GroupError):
    """Table is malformed or some row/column is not a permutation of 0..n-1."""


class NoIdentityError(GroupError):
    """No element acts as a two-sided identity."""


class NotAssociativeError(GroupError):
    """A triple (a, b, c) violates associativity."""


class MissingInverseError(GroupError):
    """Some element has no two-sided inverse."""


class GroupSpecError(ValueError):
    """A group spec string failed to parse; `pos` is the failing offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on element indices 0..n-1.

    kind is "cyclic" (op = addition mod n, table is None) or "table"
    (op = table lookup). identity is the index of the neutral element.
    """

    n: int
    kind: str
    identity: int
    table: tuple[tuple[int, ...], ...] | None

    def op(self, a: int, b: int) -> int:
        if self.table is None:
            return (a + b) % self.n
        return self.table[a][b]

    def inverse(self, x: int) -> int:
        if self.table is None:
            return (-x) % self.n
        e = self.identity
        row = self.table[x]
        for y in range(self.n):
            if row[y] == e and self.table[y][x] == e:
                return y
        raise MissingInverseError(f"element {x} has no inverse")

    def power(self, x: int, m: int) -> int:
        """x composed with itself m times (m >= 0)."""
        if self.table is None:
            return (x * m) % self.n
        acc = self.identity
        base = x
        while m:
            if m & 1:
                acc = self.table[acc][base]
            base = self.table[base][base]
            m >>= 1
        return acc

    def elements(self) -> range:
        return range(self.n)


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group Z_n under addition mod n, for any positive order."""
    if n < 1:
        raise InvalidOrderError(f"cyclic group order must be >= 1, got {n}")
    return FiniteGroup(n=n, kind="cyclic", identity=0, table=None)


def _check_latin(table: tuple[tuple[int, ...], ...], n: int) -> None:
    full = frozenset(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquareError(f"row {i} has length {len(row)}, expected {n}")
        if frozenset(row) != full:
            raise NotLatinSquareError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(row[j] for row in table) != full:
            raise NotLatinSquareError(f"column {j} is not a permutation of 0..{n - 1}")


def _find_identity(table: tuple[tuple[int, ...], ...], n: int) -> int:
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise NoIdentityError("no two-sided identity element")


def _check_inverses(table, n: int, e: int) -> None:
    for x in range(n):
        row = table[x]
        if not any(row[y] == e and table[y][x] == e for y in range(n)):
            raise MissingInverseError(f"element {x} has no two-sided inverse")


def _check_associativity(table, n: int, exhaustive: bool) -> None:
    if exhaustive:
        rng_triples = (
            (a, b, c) for a in range(n) for b in range(n) for c in range(n)
        )
    else:
        rng = random.Random(_ASSOCIATIVITY_SEED)
        count = _ASSOCIATIVITY_SAMPLES_PER_N2 * n * n
        rng_triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(count)
        )
    for a, b, c in rng_triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociativeError(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


def make_from_table(table, force_exhaustive: bool = False) -> FiniteGroup:
    """Group from an explicit n x n multiplication table.

    Validates: Latin square, two-sided identity, two-sided inverses, and
    associativity (exhaustive for n <= 64, else a fixed-seed random sample of
    10*n^2 triples; pass force_exhaustive=True to insist on the n^3 check).
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n < 1:
        raise InvalidOrderError("table must have at least one row")
    if n > MAX_TABLE_ORDER:
        raise InvalidOrderError(f"table order {n} exceeds bound {MAX_TABLE_ORDER}")
    for i, row in enumerate(rows):
        for v in row:
            if not 0 <= v < n:
                raise NotLatinSquareError(f"row {i} has out-of-range entry {v}")
    _check_latin(rows, n)
    e = _find_identity(rows, n)
    _check_inverses(rows, n, e)
    exhaustive = force_exhaustive or n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT
    _check_associativity(rows, n, exhaustive)
    return FiniteGroup(n=n, kind="table", identity=e, table=rows)


def make_klein() -> FiniteGroup:
    """Klein four-group: xor on {0, 1, 2, 3}."""
    return make_from_table(tuple(tuple(a ^ b for b in range(4)) for a in range(4)))


def make_dihedral(k: int) -> FiniteGroup:
    """Dihedral group of order 2k: indices 0..k-1 are rotations r^i,
    k..2k-1 are reflections s*r^i."""
    if k < 1:
        raise InvalidOrderError(f"dihedral parameter must be >= 1, got {k}")
    if 2 * k > MAX_TABLE_ORDER:
        raise InvalidOrderError(f"dihedral order {2 * k} exceeds bound {MAX_TABLE_ORDER}")

    def mul(a: int, b: int) -> int:
        ra, sa = a % k, a >= k
        rb, sb = b % k, b >= k
        # s*r^i * s*r^j = r^(j-i); r^i * s*r^j = s*r^(j-i); s*r^i * r^j = s*r^(i+j)
        if not sa and not sb:
            return (ra + rb) % k
        if not sa and sb:
            return k + (rb - ra) % k
        if sa and not sb:
            return k + (ra + rb) % k
        return (rb - ra) % k

    return make_from_table(
        tuple(tuple(mul(a, b) for b in range(2 * k)) for a in range(2 * k))
    )


def make_direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product; element (x, y) is packed as x * b.n + y."""
    n = a.n * b.n
    if n > MAX_TABLE_ORDER:
        raise InvalidOrderError(f"product order {n} exceeds bound {MAX_TABLE_ORDER}")
    bn = b.n
    table = []
    for x in range(n):
        xa, xb = divmod(x, bn)
        row = []
        for y in range(n):
            ya, yb = divmod(y, bn)
            row.append(a.op(xa, ya) * bn + b.op(xb, yb))
        table.append(tuple(row))
    return make_from_table(tuple(table))


def make_symmetric(k: int) -> FiniteGroup:
    """Symmetric group S_k for k in [1, 5]; elements are the permutations of
    range(k) in lexicographic order, composed right-to-left."""
    if not 1 <= k <= 5:
        raise InvalidOrderError(f"symmetric group parameter must be in [1, 5], got {k}")
    import itertools

    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(k))] for q in perms) for p in perms
    )
    return make_from_table(table)


def element_order(g: FiniteGroup, x: int) -> int:
    """Least m >= 1 with x^m = identity."""
    if not 0 <= x < g.n:
        raise ValueError(f"element index {x} out of range for order {g.n}")
    if g.kind == "cyclic":
        return g.n // math.gcd(g.n, x)
    y = x
    m = 1
    while y != g.identity:
        y = g.table[y][x]
        m += 1
    return m


def is_cyclic(g: FiniteGroup) -> bool:
    """True when some element generates the whole group."""
    if g.kind == "cyclic":
        return True
    return any(element_order(g, x) == g.n for x in range(g.n))


def generators(g: FiniteGroup) -> frozenset[int]:
    """Elements of order exactly n (empty for noncyclic groups)."""
    if g.kind == "cyclic":
        # gcd(0, 1) == 1, so the trivial group correctly reports {0}.
        return frozenset(x for x in range(g.n) if math.gcd(x, g.n) == 1)
    return frozenset(x for x in range(g.n) if element_order(g, x) == g.n)


def euler_phi(n: int) -> int:
    """Euler totient; multiplicative, computed from the prime factorization."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def load_cayley_table_csv(path: str) -> FiniteGroup:
    """Read an n x n multiplication table from CSV (n rows of n integers)."""
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(tuple(int(cell) for cell in line.split(",")))
            except ValueError as exc:
                raise NotLatinSquareError(f"non-integer cell in {path}: {exc}") from exc
    return make_from_table(tuple(rows))


def parse_group_spec(text: str) -> FiniteGroup:
    """Parse a group spec string.

    Grammar: zn:<n> | klein | dihedral:<k> | sym:<k> | product:<spec>+<spec>
    | table:<path>. A table: form consumes the rest of the string, so inside
    a product it can only appear as the final operand.
    """
    g, pos = _parse_spec(text, 0)
    if pos != len(text):
        raise GroupSpecError(f"trailing text {text[pos:]!r}", pos)
    return g


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise GroupSpecError("expected an integer", pos)
    return int(text[pos:end]), end


def _parse_spec(text: str, pos: int) -> tuple[FiniteGroup, int]:
    if text.startswith("zn:", pos):
        n, pos = _parse_int(text, pos + 3)
        return make_cyclic(n), pos
    if text.startswith("klein", pos):
        return make_klein(), pos + 5
    if text.startswith("dihedral:", pos):
        k, pos = _parse_int(text, pos + 9)
        return make_dihedral(k), pos
    if text.startswith("sym:", pos):
        k, pos = _parse_int(text, pos + 4)
        return make_symmetric(k), pos
    if text.startswith("product:", pos):
        a, pos = _parse_spec(text, pos + 8)
        if pos >= len(text) or text[pos] != "+":
            raise GroupSpecError("expected '+' between product operands", pos)
        b, pos = _parse_spec(text, pos + 1)
        return make_direct_product(a, b), pos
    if text.startswith("table:", pos):
        path = text[pos + 6 :]
        if not path:
            raise GroupSpecError("expected a file path after 'table:'", pos + 6)
        return load_cayley_table_csv(path), len(text)
    raise GroupSpecError(f"unrecognized group spec {text[pos:]!r}", pos)


# Noncyclic groups used throughout the verification suites, keyed by the spec
# string that rebuilds them. Orders cover 4..24.
_CORPUS_SPECS = (
    "klein",
    "dihedral:3",
    "dihedral:4",
    "product:zn:2+zn:4",
    "product:zn:2+product:zn:2+zn:2",
    "product:zn:3+zn:3",
    "dihedral:5",
    "dihedral:6",
    "product:zn:2+zn:6",
    "dihedral:7",
    "product:zn:4+zn:4",
    "product:zn:2+zn:8",
    "dihedral:9",
    "product:zn:3+zn:6",
    "product:zn:2+zn:10",
    "dihedral:11",
    "sym:4",
    "product:zn:2+zn:12",
)


def noncyclic_corpus(max_order: int = 24) -> list[tuple[str, FiniteGroup]]:
    """The standard noncyclic test corpus: (spec string, group) pairs sorted
    by order, restricted to orders <= max_order."""
    groups = [(spec, parse_group_spec(spec)) for spec in _CORPUS_SPECS]
    groups = [(s, g) for s, g in groups if g.n <= max_order]
    groups.sort(key=lambda item: (item[1].n, item[0]))
    return groups

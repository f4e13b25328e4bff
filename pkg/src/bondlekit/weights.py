"""Boltzmann weight triples (phi, phi1, phi2) into Z_m and their compatibility checks.

phi is attached to classical crossings, phi1 to parallel bonds, phi2 to
anti-parallel bonds.  A triple is valid when it satisfies the 2-cocycle
condition, the two singular-move conditions, and the three bond-move
conditions; validity makes the per-coloring weight sum move-invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .algebra import AxiomReport, BondleError, FiniteBondle, Table, _freeze_table


@dataclass(frozen=True)
class BoltzmannWeights:
    """Three n x n tables into Z_m.

    ``constant`` records provenance (a, b) when phi == 0, phi1 == a, phi2 == b.
    """

    m: int
    phi: Table
    phi1: Table
    phi2: Table
    constant: Optional[tuple[int, int]] = None

    @property
    def n(self) -> int:
        return len(self.phi)

    def to_json(self) -> dict:
        doc = {
            "m": self.m,
            "phi": [list(r) for r in self.phi],
            "phi1": [list(r) for r in self.phi1],
            "phi2": [list(r) for r in self.phi2],
        }
        if self.constant is not None:
            doc["constant"] = {"a": self.constant[0], "b": self.constant[1]}
        return doc

    @staticmethod
    def from_json(doc: dict) -> "BoltzmannWeights":
        constant = None
        if doc.get("constant"):
            constant = (doc["constant"]["a"], doc["constant"]["b"])
        return new_weights(doc["m"], doc["phi"], doc["phi1"], doc["phi2"], constant)


def new_weights(
    m: int,
    phi: Sequence[Sequence[int]],
    phi1: Sequence[Sequence[int]],
    phi2: Sequence[Sequence[int]],
    constant: Optional[tuple[int, int]] = None,
) -> BoltzmannWeights:
    if m <= 0:
        raise BondleError(f"group order must be positive, got {m}")
    n = len(phi)
    # entries live in Z_m; reuse the table freezer with bound m via manual check
    for name, t in (("phi", phi), ("phi1", phi1), ("phi2", phi2)):
        if len(t) != n:
            raise BondleError(f"{name}: expected {n} rows, got {len(t)}")
        for i, row in enumerate(t):
            if len(row) != n:
                raise BondleError(f"{name}: row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not (0 <= v < m):
                    raise BondleError(f"{name}[{i}][{j}] = {v} is outside 0..{m - 1}")
    freeze = lambda t: tuple(tuple(int(v) for v in row) for row in t)
    return BoltzmannWeights(m, freeze(phi), freeze(phi1), freeze(phi2), constant)


def constant_weights(B: FiniteBondle, m: int, a: int, b: int) -> BoltzmannWeights:
    """phi == 0, phi1 == a, phi2 == b; valid for every bondle."""
    if not (0 <= a < m) or not (0 <= b < m):
        raise BondleError(f"constants a={a}, b={b} must lie in 0..{m - 1}")
    n = B.n
    zero = [[0] * n for _ in range(n)]
    ca = [[a] * n for _ in range(n)]
    cb = [[b] * n for _ in range(n)]
    return new_weights(m, zero, ca, cb, constant=(a, b))


def check_weights(B: FiniteBondle, W: BoltzmannWeights) -> AxiomReport:
    """Exhaustively verify the eight weight-compatibility conditions.

    Condition ids: cocycle, cocycle-diag, sing-a/sing-b (triple conditions from
    the two singular three-strand moves), sing-swap (two-strand move),
    bond-a/bond-b (anti-parallel three-strand moves), bond-swap (two-strand).
    The two conditions that involve only phi (sing-b, bond-b) are still checked
    generically even though they are vacuous for constant phi2.
    """
    if W.n != B.n:
        raise BondleError(f"weight tables are {W.n}x{W.n} but bondle carrier is {B.n}")
    n, m = B.n, W.m
    s, sb, r1, r2, r3 = B.star, B.starbar, B.r1, B.r2, B.r3
    f, f1, f2 = W.phi, W.phi1, W.phi2
    v: list[tuple[str, tuple[int, ...]]] = []

    for x in range(n):
        if f[x][x] % m != 0:
            v.append(("cocycle-diag", (x,)))
    for x, y, z in itertools.product(range(n), repeat=3):
        if (f[x][y] + f[s[x][y]][z] - f[x][z] - f[s[x][z]][s[y][z]]) % m != 0:
            v.append(("cocycle", (x, y, z)))

    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = -f[sb[x][y]][y] + f1[sb[x][y]][z] + f[r1[sb[x][y]][z]][y]
        rhs = f[z][y] + f1[x][s[z][y]] - f[sb[r2[x][s[z][y]]][y]][y]
        if (lhs - rhs) % m != 0:
            v.append(("sing-a", (x, y, z)))
        u = sb[y][r1[x][z]]
        lhs = f[u][x] - f[u][r1[x][z]]
        rhs = -f[sb[s[y][r2[x][z]]][z]][z] + f[y][r2[x][z]]
        if (lhs - rhs) % m != 0:
            v.append(("sing-b", (x, y, z)))
    for x, y in itertools.product(range(n), repeat=2):
        lhs = f1[x][y] + f[r1[x][y]][r2[x][y]]
        rhs = f[x][y] + f1[y][s[x][y]]
        if (lhs - rhs) % m != 0:
            v.append(("sing-swap", (x, y)))

    if r3 is not None:
        for x, y, z in itertools.product(range(n), repeat=3):
            lhs = -f[sb[x][z]][z] + f[r3[sb[x][z]][y]][z] + f2[sb[x][z]][y]
            rhs = f2[x][s[y][z]] - f[sb[r3[s[y][z]][x]][z]][z] + f[y][z]
            if (lhs - rhs) % m != 0:
                v.append(("bond-a", (x, y, z)))
            u = sb[z][r3[x][y]]
            w = sb[z][y]
            lhs = f[u][x] - f[u][r3[x][y]] + f2[x][y]
            rhs = f[w][r3[y][x]] - f[w][y] + f2[x][y]
            if (lhs - rhs) % m != 0:
                v.append(("bond-b", (x, y, z)))
        for x, y in itertools.product(range(n), repeat=2):
            lhs = -f[sb[x][r3[y][x]]][r3[y][x]] + f2[y][sb[x][r3[y][x]]]
            rhs = f2[x][y] - f[sb[r3[x][y]][y]][y]
            if (lhs - rhs) % m != 0:
                v.append(("bond-swap", (x, y)))
    return AxiomReport(tuple(v))


def _row_constant_tables(n: int, m: int) -> Iterator[Table]:
    """Tables f(x, y) = g(x), enumerated lexicographically in g."""
    for g in itertools.product(range(m), repeat=n):
        yield tuple(tuple(g[x] for _ in range(n)) for x in range(n))


def search_weights(
    B: FiniteBondle, m: int, budget: int
) -> tuple[list[BoltzmannWeights], bool]:
    """Search weight triples with phi == 0 over a structured candidate family.

    Candidates are examined in a deterministic order: the m^2 constant pairs
    first, then row-constant pairs (phi1 and phi2 each a function of the first
    argument only).  Returns (solutions, truncated); ``truncated`` is True when
    the budget ran out before the candidate family was exhausted.
    """
    n = B.n
    zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    solutions: list[BoltzmannWeights] = []
    examined = 0

    def candidates() -> Iterator[tuple[Table, Table, Optional[tuple[int, int]]]]:
        for a, b in itertools.product(range(m), repeat=2):
            ca = tuple(tuple(a for _ in range(n)) for _ in range(n))
            cb = tuple(tuple(b for _ in range(n)) for _ in range(n))
            yield ca, cb, (a, b)
        for t1 in _row_constant_tables(n, m):
            for t2 in _row_constant_tables(n, m):
                # skip the constant/constant pairs already emitted
                if len(set(r[0] for r in t1)) == 1 and len(set(r[0] for r in t2)) == 1:
                    continue
                yield t1, t2, None

    for phi1, phi2, const in candidates():
        if examined >= budget:
            return solutions, True
        examined += 1
        W = BoltzmannWeights(m, zero, phi1, phi2, constant=const)
        if check_weights(B, W).passed:
            solutions.append(W)
    return solutions, False

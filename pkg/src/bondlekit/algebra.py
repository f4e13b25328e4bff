"""Finite bondles: operation tables, constructors, and exhaustive axiom checks.

A bondle is a quandle (X, *, bar*) together with bond maps R1, R2 (parallel
bonds) and optionally R3 (anti-parallel bonds).  All structures here are
finite, with carrier {0, ..., n-1}, and every operation is stored as an
explicit n x n table so that non-affine structures are first-class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

Table = tuple[tuple[int, ...], ...]


class BondleError(ValueError):
    """Raised for malformed tables or invalid constructor parameters."""


def _freeze_table(n: int, name: str, rows: Sequence[Sequence[int]]) -> Table:
    if len(rows) != n:
        raise BondleError(f"{name}: expected {n} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BondleError(f"{name}: row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise BondleError(f"{name}[{i}][{j}] = {v} is outside 0..{n - 1}")
        out.append(tuple(int(v) for v in row))
    return tuple(out)


@dataclass(frozen=True)
class FiniteBondle:
    """Carrier {0..n-1} with tabulated operations *, bar*, R1, R2 and optional R3.

    ``affine`` records provenance (a, b, m) when the structure was built from
    the linear family x*y = ax + (1-a)y on Z_n; m is None when R3 is absent.
    """

    n: int
    star: Table
    starbar: Table
    r1: Table
    r2: Table
    r3: Optional[Table] = None
    affine: Optional[tuple[int, int, Optional[int]]] = None

    # table accessors, named after what the maps do on diagrams
    def op(self, x: int, y: int) -> int:
        return self.star[x][y]

    def opbar(self, x: int, y: int) -> int:
        return self.starbar[x][y]

    def bond1(self, x: int, y: int) -> int:
        return self.r1[x][y]

    def bond2(self, x: int, y: int) -> int:
        return self.r2[x][y]

    def bond3(self, x: int, y: int) -> int:
        if self.r3 is None:
            raise BondleError("R3 is not defined for this bondle")
        return self.r3[x][y]

    @property
    def has_r3(self) -> bool:
        return self.r3 is not None

    def to_json(self) -> dict:
        doc = {
            "n": self.n,
            "star": [list(r) for r in self.star],
            "starbar": [list(r) for r in self.starbar],
            "r1": [list(r) for r in self.r1],
            "r2": [list(r) for r in self.r2],
            "r3": [list(r) for r in self.r3] if self.r3 is not None else None,
        }
        if self.affine is not None:
            a, b, m = self.affine
            doc["affine"] = {"a": a, "b": b, "m": m}
        return doc

    @staticmethod
    def from_json(doc: dict) -> "FiniteBondle":
        affine = None
        if doc.get("affine"):
            blk = doc["affine"]
            affine = (blk["a"], blk["b"], blk.get("m"))
        return new_table_bondle(
            doc["n"],
            doc["star"],
            doc["starbar"],
            doc["r1"],
            doc["r2"],
            doc.get("r3"),
            affine=affine,
        )


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    Each violation is (axiom-id, witness); substituting the witness into the
    named axiom reproduces the inequality.
    """

    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [{"axiom": a, "witness": list(w)} for a, w in self.violations],
        }


def new_table_bondle(
    n: int,
    star: Sequence[Sequence[int]],
    starbar: Sequence[Sequence[int]],
    r1: Sequence[Sequence[int]],
    r2: Sequence[Sequence[int]],
    r3: Optional[Sequence[Sequence[int]]] = None,
    affine: Optional[tuple[int, int, Optional[int]]] = None,
) -> FiniteBondle:
    """Build a bondle from raw tables.  Checks closure only, not axioms."""
    if n <= 0:
        raise BondleError(f"carrier size must be positive, got {n}")
    return FiniteBondle(
        n=n,
        star=_freeze_table(n, "star", star),
        starbar=_freeze_table(n, "starbar", starbar),
        r1=_freeze_table(n, "r1", r1),
        r2=_freeze_table(n, "r2", r2),
        r3=_freeze_table(n, "r3", r3) if r3 is not None else None,
        affine=affine,
    )


def _odd_prime_pair(n: int) -> Optional[tuple[int, int]]:
    """Return (p, q) with n = p*q, p < q odd primes, or None."""
    d = 3
    while d * d <= n:
        if n % d == 0:
            q = n // d
            if q != d and q % 2 == 1 and _is_prime(d) and _is_prime(q):
                return (d, q)
            return None
        d += 2
    return None


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def _affine_tables(n: int, a: int, b: int, m: Optional[int]) -> dict:
    """Tables of the linear family, with no validity checks beyond invertibility of a."""
    a_inv = pow(a, -1, n)
    star = [[(a * x + (1 - a) * y) % n for y in range(n)] for x in range(n)]
    starbar = [[(a_inv * x + (1 - a_inv) * y) % n for y in range(n)] for x in range(n)]
    r1 = [[(b * x + (1 - b) * y) % n for y in range(n)] for x in range(n)]
    c2 = (b + (1 - a) * (1 - b)) % n
    r2 = [[(a * (1 - b) * x + c2 * y) % n for y in range(n)] for x in range(n)]
    r3 = None
    if m is not None:
        r3 = [[(m * x + (1 - m) * y) % n for y in range(n)] for x in range(n)]
    return {"star": star, "starbar": starbar, "r1": r1, "r2": r2, "r3": r3}


def affine_bondle(
    n: int, a: int, b: int, m: Optional[int] = None, validate: bool = True
) -> FiniteBondle:
    """Linear bondle on Z_n: x*y = ax+(1-a)y, R1 = bx+(1-b)y, R3 = mx+(1-m)y.

    With validate=True (the default) requires n = pq for distinct odd primes
    p, q, a invertible mod n, and, when m is given, the divisibility condition
    (p | m and q | m-1) or (p | m-1 and q | m) that makes R3 a bond map.
    Pass validate=False to force-build the tables (e.g. to exhibit axiom
    failures for invalid m).
    """
    if gcd(a % n, n) != 1:
        raise BondleError(f"a = {a} is not invertible mod {n}")
    if validate:
        pq = _odd_prime_pair(n)
        if pq is None:
            raise BondleError(f"n = {n} is not a product of two distinct odd primes")
        p, q = pq
        if m is not None:
            ok = (m % p == 0 and (m - 1) % q == 0) or ((m - 1) % p == 0 and m % q == 0)
            if not ok:
                raise BondleError(
                    f"m = {m} fails the divisibility condition for n = {p}*{q}: "
                    f"need ({p}|m and {q}|m-1) or ({p}|m-1 and {q}|m)"
                )
    t = _affine_tables(n, a % n, b % n, None if m is None else m % n)
    return new_table_bondle(
        n, t["star"], t["starbar"], t["r1"], t["r2"], t["r3"],
        affine=(a % n, b % n, None if m is None else m % n),
    )


def search_affine_bondles(
    n: int, with_r3: bool = True
) -> tuple[list[tuple[int, int, Optional[int]]], int]:
    """All (a, b, m) triples the affine constructor accepts for this n.

    Enumerates units a mod n, all residues b, and (when with_r3) every m
    satisfying the divisibility condition; with_r3=False yields (a, b, None)
    pairs for the R3-free structure.  Returns (triples, candidates-examined).
    """
    pq = _odd_prime_pair(n)
    if pq is None:
        raise BondleError(f"n = {n} is not a product of two distinct odd primes")
    p, q = pq
    units = [a for a in range(1, n) if gcd(a, n) == 1]
    if with_r3:
        ms: list[Optional[int]] = [
            m
            for m in range(n)
            if (m % p == 0 and (m - 1) % q == 0) or ((m - 1) % p == 0 and m % q == 0)
        ]
        checked = len(units) * n * n
    else:
        ms = [None]
        checked = len(units) * n
    triples = [(a, b, m) for a in units for b in range(n) for m in ms]
    return triples, checked


def check_quandle(B: FiniteBondle) -> AxiomReport:
    """Exhaustively verify the three quandle axioms (and bar* inversion)."""
    v: list[tuple[str, tuple[int, ...]]] = []
    n, s, sb = B.n, B.star, B.starbar
    for x in range(n):
        if s[x][x] != x:
            v.append(("idempotency", (x,)))
    for x in range(n):
        for y in range(n):
            if sb[s[x][y]][y] != x:
                v.append(("inverse-left", (x, y)))
            if s[sb[x][y]][y] != x:
                v.append(("inverse-right", (x, y)))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if s[s[x][y]][z] != s[s[x][z]][s[y][z]]:
                    v.append(("distributivity", (x, y, z)))
    return AxiomReport(tuple(v))


def check_singquandle(B: FiniteBondle) -> AxiomReport:
    """Quandle axioms plus the five parallel-bond compatibility identities."""
    v = list(check_quandle(B).violations)
    n, s, sb, r1, r2 = B.n, B.star, B.starbar, B.r1, B.r2
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if s[r1[sb[x][y]][z]][y] != r1[x][s[z][y]]:
                    v.append(("sing-1", (x, y, z)))
                if r2[sb[x][y]][z] != sb[r2[x][s[z][y]]][y]:
                    v.append(("sing-2", (x, y, z)))
                if s[sb[y][r1[x][z]]][x] != sb[s[y][r2[x][z]]][z]:
                    v.append(("sing-3", (x, y, z)))
    for x in range(n):
        for y in range(n):
            if r2[x][y] != r1[y][s[x][y]]:
                v.append(("sing-4", (x, y)))
            if s[r1[x][y]][r2[x][y]] != r2[y][s[x][y]]:
                v.append(("sing-5", (x, y)))
    return AxiomReport(tuple(v))


def check_bondle(B: FiniteBondle) -> AxiomReport:
    """Singquandle axioms plus the four anti-parallel-bond identities for R3."""
    if B.r3 is None:
        raise BondleError("check_bondle requires R3; use check_singquandle instead")
    v = list(check_singquandle(B).violations)
    n, s, sb, r3 = B.n, B.star, B.starbar, B.r3
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if r3[y][sb[x][z]] != sb[r3[s[y][z]][x]][z]:
                    v.append(("bond-6", (x, y, z)))
                if r3[x][s[y][z]] != s[r3[sb[x][z]][y]][z]:
                    v.append(("bond-7", (x, y, z)))
                if s[sb[z][r3[x][y]]][x] != s[sb[z][y]][r3[y][x]]:
                    v.append(("bond-8", (x, y, z)))
    for x in range(n):
        for y in range(n):
            if sb[r3[x][y]][y] != r3[sb[x][r3[y][x]]][y]:
                v.append(("bond-9", (x, y)))
    return AxiomReport(tuple(v))


def trivial_bondle(n: int, with_r3: bool = False) -> FiniteBondle:
    """x*y = x with identity-like bond maps; passes every axiom."""
    star = [[x for _ in range(n)] for x in range(n)]
    r1 = [[x for _ in range(n)] for x in range(n)]
    r2 = [[y for y in range(n)] for _ in range(n)]
    r3 = [[x for _ in range(n)] for x in range(n)] if with_r3 else None
    return new_table_bondle(n, star, star, r1, r2, r3)

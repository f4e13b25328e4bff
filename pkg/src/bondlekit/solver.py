"""Coloring constraint systems for bonded diagrams, with two counting engines.

``compile_system`` turns a diagram plus a bondle into one local relation per
event output: the semiarc after each passage is a table lookup on the incoming
semiarc and, for crossings, the over-strand color, or, for bonds, the partner
strand's incoming color.  ``count_colorings``/``enumerate_colorings`` solve by
backtracking with unit propagation: any relation left with one unknown color
either forces it, prunes the branch, or narrows the next guess to its
consistent candidates.  ``count_colorings_affine`` recounts solutions of the
same system by integer linear algebra (CRT over prime powers of n plus Smith
normal form) and must agree exactly with the backtracking count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .algebra import BondleError, FiniteBondle
from .diagram import ANTIPARALLEL, PARALLEL, BondedDiagram, DiagramError


@dataclass(frozen=True)
class Constraint:
    """c(out) = table[op][c(a)][c(b)]; op "copy" ignores b."""

    out: int
    op: str  # copy | star | starbar | r1 | r2 | r3
    a: int
    b: int = -1

    def evaluate(self, B: FiniteBondle, assignment) -> int:
        if self.op == "copy":
            return assignment[self.a]
        table = getattr(B, self.op)
        return table[assignment[self.a]][assignment[self.b]]


@dataclass(frozen=True)
class ConstraintSystem:
    n_vars: int
    constraints: tuple[Constraint, ...]
    bondle: FiniteBondle

    def satisfied(self, assignment) -> bool:
        return all(
            c.evaluate(self.bondle, assignment) == assignment[c.out]
            for c in self.constraints
        )


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]


def compile_system(D: BondedDiagram, B: FiniteBondle) -> ConstraintSystem:
    """One output relation per passage; semiarc i sits before event i."""
    if D.has_antiparallel_bonds and not B.has_r3:
        raise BondleError("diagram has anti-parallel bonds but the bondle lacks R3")

    over_at: dict[int, int] = {}
    under_at: dict[int, int] = {}
    bond_at: dict[int, dict[int, int]] = {}
    for i, e in enumerate(D.events):
        if e.kind == "over":
            over_at[e.ident] = i
        elif e.kind == "under":
            under_at[e.ident] = i
        else:
            bond_at.setdefault(e.ident, {})[e.role] = i

    constraints: list[Constraint] = []
    for cid, i_o in sorted(over_at.items()):
        i_u = under_at[cid]
        sign = D.events[i_o].sign
        constraints.append(Constraint(i_o + 1, "copy", i_o))
        constraints.append(
            Constraint(i_u + 1, "star" if sign > 0 else "starbar", i_u, i_o)
        )
    for bid, roles in sorted(bond_at.items()):
        i1, i2 = roles[1], roles[2]
        if D.bonds[bid] == PARALLEL:
            constraints.append(Constraint(i1 + 1, "r1", i1, i2))
            constraints.append(Constraint(i2 + 1, "r2", i1, i2))
        else:
            constraints.append(Constraint(i1 + 1, "r3", i1, i2))
            constraints.append(Constraint(i2 + 1, "r3", i2, i1))
    constraints.sort(key=lambda c: (c.out, c.a, c.b))
    return ConstraintSystem(D.n_semiarcs, tuple(constraints), B)


def _search(system: ConstraintSystem, collect: Optional[list]):
    """Backtracking with constraint propagation.  Returns the solution count.

    Variables are guessed in chain order, but after every guess all relations
    with a single remaining unknown are resolved immediately: when exactly one
    color is consistent it is forced, when none is the branch is pruned.  For
    tables that are invertible in each argument (every affine structure) this
    makes the search cost track the number of solutions rather than the raw
    branch count.
    """
    B = system.bondle
    n = B.n
    nv = system.n_vars
    constraints = system.constraints
    touching: list[list[Constraint]] = [[] for _ in range(nv)]
    for c in constraints:
        involved = {c.out, c.a} if c.op == "copy" else {c.out, c.a, c.b}
        for v in involved:
            touching[v].append(c)

    assignment: list[Optional[int]] = [None] * nv
    count = 0

    def holds(c: Constraint) -> bool:
        if c.op == "copy":
            return assignment[c.out] == assignment[c.a]
        table = getattr(B, c.op)
        return assignment[c.out] == table[assignment[c.a]][assignment[c.b]]

    def propagate(seed: int, undo: list[int]) -> bool:
        queue = list(touching[seed])
        while queue:
            c = queue.pop()
            involved = (c.out, c.a) if c.op == "copy" else (c.out, c.a, c.b)
            unknowns = [v for v in set(involved) if assignment[v] is None]
            if not unknowns:
                if not holds(c):
                    return False
                continue
            if len(unknowns) > 1:
                continue
            u = unknowns[0]
            candidates = []
            for v in range(n):
                assignment[u] = v
                if holds(c):
                    candidates.append(v)
                    if len(candidates) > 1:
                        break
            assignment[u] = None
            if not candidates:
                return False
            if len(candidates) == 1:
                assignment[u] = candidates[0]
                undo.append(u)
                queue.extend(touching[u])
        return True

    def candidates_for(u: int) -> list[int]:
        cands = []
        relations = [c for c in touching[u] if sum(
            1 for v in ({c.out, c.a} if c.op == "copy" else {c.out, c.a, c.b})
            if assignment[v] is None) == 1]
        for v in range(n):
            assignment[u] = v
            if all(holds(c) for c in relations):
                cands.append(v)
        assignment[u] = None
        return cands

    def dfs() -> None:
        nonlocal count
        # branch on the most constrained color: the unknown of a
        # single-unknown relation with the fewest consistent values
        best_u: Optional[int] = None
        best_cands: Optional[list[int]] = None
        for c in constraints:
            involved = {c.out, c.a} if c.op == "copy" else {c.out, c.a, c.b}
            unknowns = [v for v in involved if assignment[v] is None]
            if len(unknowns) != 1:
                continue
            u = unknowns[0]
            cands = candidates_for(u)
            if best_cands is None or len(cands) < len(best_cands):
                best_u, best_cands = u, cands
                if not cands:
                    return
        if best_u is None:
            k = 0
            while k < nv and assignment[k] is not None:
                k += 1
            if k == nv:
                count += 1
                if collect is not None:
                    collect.append(Coloring(tuple(assignment)))
                return
            best_u, best_cands = k, list(range(n))
        for v in best_cands:
            assignment[best_u] = v
            undo: list[int] = []
            if propagate(best_u, undo):
                dfs()
            for u in undo:
                assignment[u] = None
        assignment[best_u] = None

    dfs()
    return count


def count_colorings(D: BondedDiagram, B: FiniteBondle) -> int:
    """Exact number of satisfying semiarc colorings."""
    system = compile_system(D, B)
    return _search(system, None)


def enumerate_colorings(
    D: BondedDiagram, B: FiniteBondle, limit: Optional[int] = None
) -> tuple[list[Coloring], bool]:
    """Colorings in lexicographic assignment order, truncated at ``limit``.

    Returns (colorings, truncated).
    """
    system = compile_system(D, B)
    out: list[Coloring] = []
    _search(system, out)
    out.sort(key=lambda c: c.assignment)
    if limit is not None and len(out) > limit:
        return out[: max(limit, 0)], True
    return out, False


# --- affine fast path ---------------------------------------------------------


def _affine_rows(D: BondedDiagram, B: FiniteBondle) -> list[dict[int, int]]:
    """Integer coefficient rows of the homogeneous system M c = 0 over Z_n."""
    if B.affine is None:
        raise BondleError("count_colorings_affine requires affine provenance")
    a, b, m = B.affine
    n = B.n
    if D.has_antiparallel_bonds and m is None:
        raise BondleError("diagram has anti-parallel bonds but the bondle lacks R3")
    a_inv = pow(a, -1, n)
    coeffs = {
        "copy": (1, 0),
        "star": (a, 1 - a),
        "starbar": (a_inv, 1 - a_inv),
        "r1": (b, 1 - b),
        "r2": (a * (1 - b), b + (1 - a) * (1 - b)),
        "r3": (m, None if m is None else 1 - m),
    }
    system = compile_system(D, B)
    rows = []
    for c in system.constraints:
        alpha, beta = coeffs[c.op]
        row: dict[int, int] = {}
        row[c.out] = row.get(c.out, 0) + 1
        row[c.a] = row.get(c.a, 0) - alpha
        if c.op != "copy":
            row[c.b] = row.get(c.b, 0) - beta
        rows.append(row)
    return rows


def _prime_power_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            pe = 1
            while n % d == 0:
                pe *= d
                n //= d
            out.append(pe)
        d += 1
    if n > 1:
        out.append(n)
    return out


def _snf_diagonal(rows: list[dict[int, int]], n_vars: int) -> list[int]:
    from sympy import ZZ, Matrix
    from sympy.matrices.normalforms import smith_normal_form

    mat = Matrix(
        [[row.get(j, 0) for j in range(n_vars)] for row in rows]
    )
    snf = smith_normal_form(mat, domain=ZZ)
    return [int(snf[i, i]) for i in range(min(snf.rows, snf.cols))]


def count_colorings_affine(D: BondedDiagram, B: FiniteBondle) -> int:
    """Solution count of the compiled system by linear algebra over Z_n.

    The system is homogeneous, so over each prime-power factor q of n the
    count is the product of gcd(d_i, q) over the Smith diagonal, times q per
    unconstrained column; the CRT multiplies the per-factor counts.
    """
    rows = _affine_rows(D, B)
    n_vars = D.n_semiarcs
    if not rows:
        return B.n**n_vars
    diag = _snf_diagonal(rows, n_vars)
    free_cols = n_vars - len(diag)
    total = 1
    for q in _prime_power_factors(B.n):
        cnt = q**free_cols
        for d in diag:
            cnt *= gcd(d, q)
        total *= cnt
    return total

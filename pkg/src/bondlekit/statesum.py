"""State-sum enhancement of the coloring count.

Every coloring of a diagram accumulates an exponent in Z_m: +phi(x, y) at a
positive crossing (x the understrand color entering, y the overstrand color),
-phi(x, y) at a negative crossing (x the understrand color leaving, so that
opposite-sign pairs cancel), phi1(x, y) at a parallel bond and phi2(x, y) at
an anti-parallel bond (x, y the role-ordered incoming colors).  The state sum
collects the exponent histogram as coefficients of u^0..u^{m-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BondleError, FiniteBondle
from .diagram import PARALLEL, BondedDiagram
from .solver import Coloring, compile_system, enumerate_colorings
from .weights import BoltzmannWeights


@dataclass(frozen=True)
class StateSum:
    """Group-ring element sum(coeffs[i] * u^i) over Z_m."""

    m: int
    coeffs: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def render(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": list(self.coeffs), "rendered": render(self)}


def _event_maps(D: BondedDiagram):
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
    return over_at, under_at, bond_at


def _exponent(D: BondedDiagram, W: BoltzmannWeights, maps, col) -> int:
    over_at, under_at, bond_at = maps
    total = 0
    for cid, i_u in under_at.items():
        y = col[over_at[cid]]
        if D.events[i_u].sign > 0:
            total += W.phi[col[i_u]][y]
        else:
            total -= W.phi[col[i_u + 1]][y]
    for bid, roles in bond_at.items():
        x, y = col[roles[1]], col[roles[2]]
        if D.bonds[bid] == PARALLEL:
            total += W.phi1[x][y]
        else:
            total += W.phi2[x][y]
    return total % W.m


def weight_of_coloring(
    D: BondedDiagram, B: FiniteBondle, W: BoltzmannWeights, c: Coloring
) -> int:
    """Total exponent of one coloring in Z_m.  Rejects invalid colorings."""
    system = compile_system(D, B)
    if len(c.assignment) != system.n_vars or not system.satisfied(c.assignment):
        raise BondleError("coloring does not satisfy the diagram's constraints")
    return _exponent(D, W, _event_maps(D), c.assignment)


def state_sum(D: BondedDiagram, B: FiniteBondle, W: BoltzmannWeights) -> StateSum:
    """Exponent histogram over all colorings; total mass equals the count."""
    if W.n != B.n:
        raise BondleError(f"weight tables are {W.n}x{W.n} but bondle carrier is {B.n}")
    colorings, _ = enumerate_colorings(D, B, limit=None)
    maps = _event_maps(D)
    coeffs = [0] * W.m
    for c in colorings:
        coeffs[_exponent(D, W, maps, c.assignment)] += 1
    return StateSum(W.m, tuple(coeffs))


def render(S: StateSum) -> str:
    """Canonical polynomial string, ascending powers, zero terms omitted."""
    terms = []
    for i, a in enumerate(S.coeffs):
        if a == 0:
            continue
        if i == 0:
            terms.append(str(a))
        else:
            coeff = "" if a == 1 else str(a)
            power = "u" if i == 1 else f"u^{i}"
            terms.append(f"{coeff}{power}")
    return " + ".join(terms) if terms else "0"

"""Bonded Gauss codes for open folded-chain diagrams.

A diagram is an ordered sequence of events met while traversing the single
open chain from its free start to its free end.  Events are crossing passages
(over or under, with a sign stored per crossing) and bond passages (parallel
or anti-parallel, with an explicit role tag).  Semiarcs are the chain segments
between consecutive events, so a diagram with k events has k+1 semiarcs.

Text format (.bgc): whitespace-separated tokens, '#' comments to end of line.
  O<id>+  O<id>-   over passage of crossing <id> with that crossing's sign
  U<id>+  U<id>-   under passage
  P<id>:1 P<id>:2  parallel bond passage, role 1 or 2
  A<id>:1 A<id>:2  anti-parallel bond passage
Ids are positive integers, unique per category (crossings vs bonds).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"


class DiagramError(ValueError):
    """Raised for syntax errors or structurally invalid diagrams."""


@dataclass(frozen=True)
class Event:
    """One passage along the chain.

    kind is "over", "under", or "bond".  Crossing passages carry sign (+1/-1);
    bond passages carry the bond kind and a role tag.  Role 1 of a parallel
    bond receives the R1 output and role 2 the R2 output; at an anti-parallel
    bond role 1 maps its incoming color x to R3(x, y) and role 2 maps y to
    R3(y, x).
    """

    kind: str
    ident: int
    sign: int = 0
    bond: str = ""
    role: int = 0

    def token(self) -> str:
        if self.kind == "over":
            return f"O{self.ident}{'+' if self.sign > 0 else '-'}"
        if self.kind == "under":
            return f"U{self.ident}{'+' if self.sign > 0 else '-'}"
        letter = "P" if self.bond == PARALLEL else "A"
        return f"{letter}{self.ident}:{self.role}"


@dataclass(frozen=True)
class BondedDiagram:
    """Immutable event sequence of one open chain."""

    events: tuple[Event, ...]

    @property
    def n_semiarcs(self) -> int:
        return len(self.events) + 1

    @property
    def crossings(self) -> dict[int, int]:
        """crossing id -> sign"""
        out: dict[int, int] = {}
        for e in self.events:
            if e.kind in ("over", "under"):
                out[e.ident] = e.sign
        return out

    @property
    def bonds(self) -> dict[int, str]:
        """bond id -> kind"""
        out: dict[int, str] = {}
        for e in self.events:
            if e.kind == "bond":
                out[e.ident] = e.bond
        return out

    @property
    def has_antiparallel_bonds(self) -> bool:
        return any(k == ANTIPARALLEL for k in self.bonds.values())

    def serialize(self) -> str:
        return " ".join(e.token() for e in self.events)


_TOKEN_RE = re.compile(r"^(?:([OU])(\d+)([+-])|([PA])(\d+):([12]))$")


def parse_bgc(text: str) -> BondedDiagram:
    """Parse and validate a bonded Gauss code.  Token order is chain order."""
    events: list[Event] = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        body = line.split("#", 1)[0]
        for tok in body.split():
            mt = _TOKEN_RE.match(tok)
            if not mt:
                raise DiagramError(f"line {lineno}: bad token {tok!r}")
            if mt.group(1):
                kind = "over" if mt.group(1) == "O" else "under"
                sign = 1 if mt.group(3) == "+" else -1
                events.append(Event(kind, int(mt.group(2)), sign=sign))
            else:
                bond = PARALLEL if mt.group(4) == "P" else ANTIPARALLEL
                events.append(
                    Event("bond", int(mt.group(5)), bond=bond, role=int(mt.group(6)))
                )
    diagram = BondedDiagram(tuple(events))
    problems = validate(diagram)
    if problems:
        raise DiagramError("; ".join(problems))
    return diagram


def validate(D: BondedDiagram) -> list[str]:
    """Collect every structural violation; an empty list means valid."""
    problems: list[str] = []
    crossings: dict[int, list[Event]] = {}
    bonds: dict[int, list[Event]] = {}
    for e in D.events:
        if e.kind in ("over", "under"):
            crossings.setdefault(e.ident, []).append(e)
        else:
            bonds.setdefault(e.ident, []).append(e)
    for cid, evs in sorted(crossings.items()):
        if len(evs) != 2:
            problems.append(f"dangling crossing {cid}: seen {len(evs)} passage(s)")
            continue
        kinds = sorted(e.kind for e in evs)
        if kinds != ["over", "under"]:
            problems.append(f"crossing {cid} needs one over and one under passage")
        if evs[0].sign != evs[1].sign:
            problems.append(f"crossing {cid} has inconsistent signs")
    for bid, evs in sorted(bonds.items()):
        if len(evs) != 2:
            problems.append(f"dangling bond {bid}: seen {len(evs)} passage(s)")
            continue
        if sorted(e.role for e in evs) != [1, 2]:
            problems.append(f"bond {bid} has duplicate role")
        if evs[0].bond != evs[1].bond:
            problems.append(f"bond {bid} has inconsistent kind")
    return problems


def _fresh_crossing_ids(D: BondedDiagram, count: int) -> list[int]:
    used = set(D.crossings)
    out = []
    nxt = max(used, default=0) + 1
    for _ in range(count):
        out.append(nxt)
        nxt += 1
    return out


def insert_r1(D: BondedDiagram, position: int, sign: int) -> BondedDiagram:
    """Insert a kink (fresh under/over pair) at the given semiarc position.

    Colorings correspond one-to-one before and after, so coloring counts and
    state sums are unchanged.
    """
    if not (0 <= position <= len(D.events)):
        raise DiagramError(f"position {position} out of range 0..{len(D.events)}")
    if sign not in (1, -1):
        raise DiagramError(f"sign must be +1 or -1, got {sign}")
    (cid,) = _fresh_crossing_ids(D, 1)
    kink = (Event("under", cid, sign=sign), Event("over", cid, sign=sign))
    events = D.events[:position] + kink + D.events[position:]
    return BondedDiagram(events)


def insert_r2(D: BondedDiagram, position: int) -> BondedDiagram:
    """Poke the chain under a loop of itself at one semiarc position.

    Inserts two fresh crossings of opposite signs as the nested pattern
    U<a>+ U<b>- O<b>- O<a>+, which is always planar-realizable at a single
    site.  Invariant-preserving like insert_r1.
    """
    if not (0 <= position <= len(D.events)):
        raise DiagramError(f"position {position} out of range 0..{len(D.events)}")
    ca, cb = _fresh_crossing_ids(D, 2)
    poke = (
        Event("under", ca, sign=1),
        Event("under", cb, sign=-1),
        Event("over", cb, sign=-1),
        Event("over", ca, sign=1),
    )
    events = D.events[:position] + poke + D.events[position:]
    return BondedDiagram(events)

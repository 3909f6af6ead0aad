"""From (sequence, set) pairs to prefix chains, and back.

A pair (A, B), with A a length-k sequence over {1..n} and B a (k+1)-subset,
maps to a k-prefix chain in three moves: rotate the pair so the parking
residue becomes 1, park the sorted rotated entries into B to obtain the
larger step entries of a non-decreasing chain, then push that chain through
the position action so its i-sequence is the rotated A.  The map ``gamma``
is onto, constant on rotation orbits of pairs, and every fibre is one full
orbit of size n; counting pairs therefore counts chains:
n**k * C(n, k+1) pairs / n per fibre = n**(k-1) * C(n, k+1) chains.

``section`` produces the unique residue-1 pair of a fibre, ``fiber`` the
whole orbit, and ``verify`` cross-checks everything against exhaustive
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import apply_permutation, projection, sort_chain
from .chains import DEFAULT_CAP, Chain, enumerate_sigma
from .counting import count_formula
from .parking import ParkingInput, normalize, park, residue, shift_pair
from .perms import Permutation

__all__ = [
    "PairAB",
    "gamma",
    "section",
    "fiber",
    "count_formula",
    "verify",
    "VerifyRow",
    "VerifyReport",
]


@dataclass(frozen=True)
class PairAB:
    """A sequence A over {1..n} of length k with a (k+1)-subset B of {1..n}."""

    n: int
    a: tuple[int, ...]
    b: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        # ParkingInput enforces the shared invariants: sizes and ranges
        ParkingInput(self.n, self.a, self.b)

    @property
    def k(self) -> int:
        return len(self.a)

    @classmethod
    def from_json(cls, data: dict) -> PairAB:
        return cls(data["n"], tuple(data["a"]), frozenset(data["b"]))

    def to_json(self) -> dict:
        return {"n": self.n, "a": list(self.a), "b": sorted(self.b)}

    def residue(self) -> int:
        """The parking residue of the pair, entries of A parking into B."""
        return residue(ParkingInput(self.n, self.a, self.b))

    def shifted(self, t: int) -> PairAB:
        """Add ``t`` modulo n to every value of the pair."""
        a2, b2 = shift_pair(self.a, self.b, t, self.n)
        return PairAB(self.n, a2, b2)

    def normalized(self) -> tuple[PairAB, int]:
        """The rotation of the pair with residue 1, plus the applied shift."""
        a2, b2, t = normalize(self.a, self.b, self.n)
        return PairAB(self.n, a2, b2), t

    def orbit(self) -> list[PairAB]:
        """All n rotations of the pair; pairwise distinct."""
        return [self.shifted(t) for t in range(self.n)]


def _stable_sorter(values: tuple[int, ...]) -> Permutation:
    # p with p acting on ``values`` non-decreasing; ties keep their order
    order = sorted(range(len(values)), key=lambda t: values[t])
    return Permutation(tuple(t + 1 for t in order)).inverse()


def gamma(pair: PairAB) -> Chain:
    """The k-prefix chain attached to (A, B).

    Constant on rotation orbits; the i-sequence of the result is the
    rotated A.  Malformed pairs are rejected when the :class:`PairAB` is
    built (B must hold exactly k + 1 values of 1..n, which also forces
    k <= n - 1).
    """
    a2, b2, _ = normalize(pair.a, pair.b, pair.n)
    sorter = _stable_sorter(a2)
    entries = tuple(sorted(a2))
    taken = park(ParkingInput(pair.n, entries, b2)).spaces
    sorted_chain = Chain.from_pairs(pair.n, zip(entries, taken))
    return apply_permutation(sorted_chain, sorter.inverse())


def section(c: Chain) -> PairAB:
    """The unique residue-1 pair that ``gamma`` maps to ``c``.

    A is the i-sequence of ``c``; B collects the larger entries of the
    sorted form of ``c`` together with 1.
    """
    _, sorted_chain = sort_chain(c)
    b = frozenset(t.j for t in sorted_chain.steps) | {1}
    return PairAB(c.n, projection(c), b)


def fiber(c: Chain) -> list[PairAB]:
    """All n pairs mapping to ``c``: the rotation orbit of ``section(c)``."""
    return section(c).orbit()


@dataclass(frozen=True)
class VerifyRow:
    k: int
    formula: int
    enumerated: int
    sections_ok: bool
    fibers_ok: bool

    @property
    def counts_match(self) -> bool:
        return self.formula == self.enumerated

    @property
    def passed(self) -> bool:
        return self.counts_match and self.sections_ok and self.fibers_ok

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "formula": self.formula,
            "enumerated": self.enumerated,
            "counts_match": self.counts_match,
            "sections_ok": self.sections_ok,
            "fibers_ok": self.fibers_ok,
        }


@dataclass(frozen=True)
class VerifyReport:
    n: int
    rows: tuple[VerifyRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "rows": [row.to_json() for row in self.rows],
        }


def verify(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Cross-check the closed-form count and the fibre structure for every
    k in 0..n-1.

    Per k: the enumerated chains must match the formula count; for every
    enumerated chain the section must map back to it under ``gamma`` and
    its fibre must consist of n distinct pairs, all mapping back, with
    exactly one residue-1 pair among them.
    """
    rows = []
    for k in range(n):
        chains = enumerate_sigma(n, k, cap)
        sections_ok = True
        fibers_ok = True
        for c in chains:
            pairs = fiber(c)
            back = [gamma(p) == c for p in pairs]
            if not back[0]:
                sections_ok = False
            if not (
                len(set(pairs)) == n
                and all(back)
                and sum(p.residue() == 1 for p in pairs) == 1
            ):
                fibers_ok = False
        rows.append(VerifyRow(k, count_formula(n, k), len(chains), sections_ok, fibers_ok))
    return VerifyReport(n, tuple(rows))

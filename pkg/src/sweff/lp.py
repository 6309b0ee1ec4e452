"""Exact rational linear programming.

A dense two-phase tableau simplex over exact rationals with
Bland's smallest-index rule for both the entering and the leaving variable,
which rules out cycling on the highly degenerate homogeneous programs the
welfare-cone tests produce. The tableau runs on ``gmpy2.mpq`` when gmpy2 is
installed (same values, much less overhead) and on ``Fraction`` otherwise;
inputs and outputs are always ``Fraction``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

LE, EQ, GE = "<=", "==", ">="
_RELATIONS = (LE, EQ, GE)


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}, got {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(c if type(c) is Fraction else Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def holds(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point) if c), Fraction(0))
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


Bound = tuple[Optional[Fraction], Optional[Fraction]]


@dataclass(frozen=True)
class LinearProgram:
    """Maximize ``objective @ x`` subject to ``constraints`` and per-variable ``bounds``.

    ``bounds`` defaults to ``x >= 0`` for every variable; use ``(None, None)``
    for a free variable.
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...] = ()
    bounds: tuple[Bound, ...] | None = None

    def __post_init__(self):
        objective = tuple(Fraction(c) for c in self.objective)
        if not objective:
            raise ValueError("a linear program needs at least one variable")
        v = len(objective)
        constraints = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        for c in constraints:
            if len(c.coeffs) != v:
                raise ValueError(f"constraint has {len(c.coeffs)} coefficients, expected {v}")
        if self.bounds is None:
            bounds = ((Fraction(0), None),) * v
        else:
            bounds = tuple(
                (None if lo is None else Fraction(lo), None if hi is None else Fraction(hi))
                for lo, hi in self.bounds
            )
            if len(bounds) != v:
                raise ValueError(f"got {len(bounds)} bounds for {v} variables")
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "bounds", bounds)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, point) if c), Fraction(0))


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def verify_feasible(lp: LinearProgram, point: Sequence[Fraction]) -> bool:
    """Exact re-substitution of ``point`` into every constraint and bound."""
    if len(point) != lp.num_vars:
        raise ValueError(f"point has {len(point)} entries, program has {lp.num_vars} variables")
    point = [Fraction(x) for x in point]
    for x, (lo, hi) in zip(point, lp.bounds):
        if lo is not None and x < lo:
            return False
        if hi is not None and x > hi:
            return False
    return all(c.holds(point) for c in lp.constraints)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class _Tableau:
    """Rows are ``[a_1 .. a_k, rhs]``; ``obj`` holds reduced costs and ``-z`` last."""

    def __init__(self, rows, basis, ncols):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols
        self.obj = None

    def set_objective(self, costs):
        obj = list(costs) + [_Q(0)]
        for row, b in zip(self.rows, self.basis):
            cb = costs[b]
            if cb:
                for j, v in enumerate(row):
                    if v:
                        obj[j] -= cb * v
        self.obj = obj

    def pivot(self, r, k):
        prow = self.rows[r]
        piv = prow[k]
        if piv != 1:
            prow = [v / piv if v else v for v in prow]
            self.rows[r] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[k]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = self.obj[k]
        if f:
            obj = self.obj
            for j in nz:
                obj[j] -= f * prow[j]
        self.basis[r] = k

    def run(self, allowed) -> bool:
        """Bland-rule iterations; returns False if the objective is unbounded."""
        rows, obj = self.rows, self.obj
        while True:
            k = next((j for j in allowed if obj[j] > 0), None)
            if k is None:
                return True
            best = None
            for i, row in enumerate(rows):
                a = row[k]
                if a > 0:
                    ratio = row[-1] / a
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return False
            self.pivot(best[1], k)


def solve(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly. Deterministic: identical input, identical output."""
    v = lp.num_vars
    zero = _Q(0)
    one = _Q(1)

    # x_j = offset_j + sum(sign * column) over the columns standing for x_j
    offsets: list[Fraction] = []
    columns: list[list[tuple[int, int]]] = []
    extra_rows: list[tuple[dict[int, Fraction], str, Fraction]] = []
    ncols = 0
    for lo, hi in lp.bounds:
        lo = None if lo is None else _Q(lo)
        hi = None if hi is None else _Q(hi)
        if lo is not None:
            offsets.append(lo)
            columns.append([(ncols, 1)])
            if hi is not None:
                extra_rows.append(({ncols: one}, LE, hi - lo))
            ncols += 1
        elif hi is not None:
            offsets.append(hi)
            columns.append([(ncols, -1)])
            ncols += 1
        else:
            offsets.append(zero)
            columns.append([(ncols, 1), (ncols + 1, -1)])
            ncols += 2
    nstruct = ncols

    raw_rows = []
    for con in lp.constraints:
        coeffs: dict[int, Fraction] = {}
        rhs = _Q(con.rhs)
        for j, a in enumerate(con.coeffs):
            if a:
                a = _Q(a)
                rhs -= a * offsets[j]
                for col, sign in columns[j]:
                    coeffs[col] = coeffs.get(col, zero) + sign * a
        raw_rows.append((coeffs, con.relation, rhs))
    raw_rows.extend(extra_rows)

    normalized = []
    for coeffs, rel, rhs in raw_rows:
        if rhs < 0 or (rhs == 0 and rel == GE):
            coeffs = {j: -a for j, a in coeffs.items()}
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        normalized.append((coeffs, rel, rhs))

    n_slack = sum(1 for _, rel, _ in normalized if rel != EQ)
    n_art = sum(1 for _, rel, _ in normalized if rel != LE)
    total = nstruct + n_slack + n_art
    rows, basis = [], []
    slack = nstruct
    art = nstruct + n_slack
    artificials = []
    for coeffs, rel, rhs in normalized:
        row = [zero] * (total + 1)
        for j, a in coeffs.items():
            row[j] = a
        row[-1] = rhs
        if rel == LE:
            row[slack] = one
            basis.append(slack)
            slack += 1
        else:
            if rel == GE:
                row[slack] = -one
                slack += 1
            row[art] = one
            basis.append(art)
            artificials.append(art)
            art += 1
        rows.append(row)

    tab = _Tableau(rows, basis, total)
    if artificials:
        costs = [zero] * total
        for a in artificials:
            costs[a] = -one
        tab.set_objective(costs)
        tab.run(range(total))
        if tab.obj[-1] != 0:
            return LpOutcome(Status.INFEASIBLE)
        art_set = set(artificials)
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] in art_set:
                k = next((j for j in range(nstruct + n_slack) if tab.rows[r][j]), None)
                if k is None:
                    # redundant row
                    del tab.rows[r]
                    del tab.basis[r]
                    continue
                tab.pivot(r, k)
            r += 1
    allowed = range(nstruct + n_slack)

    costs = [zero] * total
    for j, c in enumerate(lp.objective):
        for col, sign in columns[j]:
            costs[col] += sign * _Q(c)
    tab.set_objective(costs)
    if not tab.run(allowed):
        return LpOutcome(Status.UNBOUNDED)

    values = [zero] * total
    for row, b in zip(tab.rows, tab.basis):
        values[b] = row[-1]
    point = tuple(
        _to_fraction(offsets[j] + sum((sign * values[col] for col, sign in columns[j]), zero))
        for j in range(v)
    )
    return LpOutcome(Status.OPTIMAL, lp.value_at(point), point)

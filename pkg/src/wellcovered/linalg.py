"""Exact rational linear algebra for homogeneous systems.

Coefficients are Python ints or fractions.Fraction values; both are exact
arbitrary-precision rationals (Fraction keeps gcd-reduced form with a
positive denominator, and ints are the integral case). Floats are rejected
on construction so no rounding can corrupt a solution space. Systems are
immutable; elimination always works on copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Coeff = int | Fraction


def _check_entries(values: Iterable) -> None:
    for x in values:
        if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
            raise TypeError(f"exact rational required, got {type(x).__name__}")


def _canon(x: Coeff) -> Coeff:
    """Prefer plain ints for integral values."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class LinearSystem:
    """A homogeneous linear system with one variable per vertex.

    Rows are coefficient vectors; right-hand sides are implicitly zero and
    never stored. Each row carries a free-text provenance tag.
    """

    num_vars: int
    rows: tuple[tuple[Coeff, ...], ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.tags):
            raise ValueError("one tag per row required")
        for row in self.rows:
            if len(row) != self.num_vars:
                raise ValueError(
                    f"row of length {len(row)} in a system over "
                    f"{self.num_vars} variables"
                )
            _check_entries(row)

    def __len__(self) -> int:
        return len(self.rows)


def make_system(
    num_vars: int,
    rows: Iterable[Sequence[Coeff]],
    tags: Iterable[str] | None = None,
) -> LinearSystem:
    """Convenience constructor; tags default to empty strings."""
    rows = tuple(tuple(r) for r in rows)
    if tags is None:
        tags = ("",) * len(rows)
    return LinearSystem(num_vars, rows, tuple(tags))


def empty_system(num_vars: int) -> LinearSystem:
    return LinearSystem(num_vars, (), ())


@dataclass(frozen=True)
class WeightVector:
    """A vertex-indexed rational weighting."""

    values: tuple[Coeff, ...]

    def __post_init__(self):
        _check_entries(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> Coeff:
        return self.values[i]

    def weight(self, vertices: Iterable[int]) -> Coeff:
        """Total weight of a vertex set."""
        return _canon(sum((self.values[v] for v in vertices), start=Fraction(0)))


@dataclass(frozen=True)
class Basis:
    """A list of linearly independent weightings spanning a solution space."""

    vectors: tuple[WeightVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


# ---------------------------------------------------------------------------
# elimination

# Pivoting rule everywhere: first nonzero entry in column order, rows
# scanned top-down. Deterministic; numerical stability is irrelevant over Q.


def _q(x: Coeff) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rank(s: LinearSystem) -> int:
    """Rank of the coefficient matrix over the rationals."""
    rows = [list(r) for r in s.rows if any(r)]
    nrows = len(rows)
    r = 0
    for col in range(s.num_vars):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / _q(prow[col])
        for i in range(r + 1, nrows):
            ri = rows[i]
            if ri[col]:
                f = _q(ri[col]) * inv
                for c in range(col, s.num_vars):
                    ri[c] = ri[c] - f * prow[c]
        r += 1
        if r == nrows:
            break
    return r


def extract_independent_subsystem(s: LinearSystem) -> LinearSystem:
    """A row basis made of original rows, in their original order.

    The selected rows preserve the row space and their tags; the result has
    rank(s) rows, hence at most min(num_vars, len(s)).
    """
    echelon: list[tuple[int, list[Coeff]]] = []  # (pivot col, reduced row)
    kept: list[int] = []
    for idx, row in enumerate(s.rows):
        work = list(row)
        for pc, er in echelon:
            if work[pc]:
                f = _q(work[pc]) / _q(er[pc])
                for c in range(pc, s.num_vars):
                    work[c] = work[c] - f * er[c]
        lead = next((c for c in range(s.num_vars) if work[c]), None)
        if lead is None:
            continue
        echelon.append((lead, work))
        echelon.sort(key=lambda t: t[0])
        kept.append(idx)
    return LinearSystem(
        s.num_vars,
        tuple(s.rows[i] for i in kept),
        tuple(s.tags[i] for i in kept),
    )


def _rref(s: LinearSystem) -> list[tuple[int, list[Fraction]]]:
    """Reduced row echelon form as a list of (pivot column, row) pairs."""
    rows = [[_q(x) for x in r] for r in s.rows if any(r)]
    pivots: list[tuple[int, list[Fraction]]] = []
    r = 0
    for col in range(s.num_vars):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[col]
        for c in range(col, s.num_vars):
            prow[c] *= inv
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                ri = rows[i]
                for c in range(col, s.num_vars):
                    ri[c] -= f * prow[c]
        pivots.append((col, prow))
        r += 1
        if r == len(rows):
            break
    return pivots


def null_space_basis(s: LinearSystem) -> Basis:
    """Canonical basis of the solution space of ``s``.

    One vector per free column of the reduced row echelon form, with the
    free variable set to 1 and all other free variables set to 0. The basis
    has num_vars - rank(s) vectors.
    """
    pivots = _rref(s)
    pivot_cols = {pc for pc, _ in pivots}
    vectors = []
    for free in range(s.num_vars):
        if free in pivot_cols:
            continue
        vals: list[Coeff] = [0] * s.num_vars
        vals[free] = 1
        for pc, row in pivots:
            vals[pc] = _canon(-row[free])
        vectors.append(WeightVector(tuple(vals)))
    return Basis(tuple(vectors))


def same_solution_space(a: LinearSystem, b: LinearSystem) -> bool:
    """True iff the two systems have identical solution sets.

    Row spaces coincide exactly when rank(a) = rank(b) = rank(a + b).
    """
    if a.num_vars != b.num_vars:
        raise ValueError(
            f"variable count mismatch: {a.num_vars} vs {b.num_vars}"
        )
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    union = LinearSystem(a.num_vars, a.rows + b.rows, a.tags + b.tags)
    return rank(union) == ra


def evaluate(s: LinearSystem, w: WeightVector | Sequence[Coeff]) -> bool:
    """True iff ``w`` satisfies every equation of ``s``."""
    values = tuple(w)
    _check_entries(values)
    if len(values) != s.num_vars:
        raise ValueError(
            f"weight vector of length {len(values)} for a system over "
            f"{s.num_vars} variables"
        )
    for row in s.rows:
        if sum(c * x for c, x in zip(row, values)) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# serialization


def system_to_json(s: LinearSystem) -> dict:
    """JSON-friendly dict with rows as [numerator, denominator] pairs."""
    return {
        "num_vars": s.num_vars,
        "rows": [[[_q(x).numerator, _q(x).denominator] for x in row] for row in s.rows],
        "tags": list(s.tags),
    }


def system_from_json(data: dict) -> LinearSystem:
    rows = tuple(
        tuple(_canon(Fraction(p, q)) for p, q in row) for row in data["rows"]
    )
    tags = tuple(data.get("tags") or ("",) * len(rows))
    return LinearSystem(int(data["num_vars"]), rows, tags)


def basis_to_json(b: Basis, num_vars: int | None = None) -> dict:
    if num_vars is None:
        num_vars = len(b.vectors[0]) if b.vectors else 0
    return {
        "num_vars": num_vars,
        "vectors": [
            [[_q(x).numerator, _q(x).denominator] for x in v] for v in b.vectors
        ],
    }


def basis_from_json(data: dict) -> Basis:
    return Basis(
        tuple(
            WeightVector(tuple(_canon(Fraction(p, q)) for p, q in vec))
            for vec in data["vectors"]
        )
    )


def format_equation(row: Sequence[Coeff]) -> str:
    """Render a row as a signed equation, e.g. "-x_3 + x_4 - x_5 = 0".

    Variables are 1-indexed. Unit coefficients print as bare signed terms;
    other rationals print as "p/q*x_i".
    """
    terms = []
    for i, c in enumerate(row):
        if c == 0:
            continue
        mag = abs(_q(c))
        name = f"x_{i + 1}"
        body = name if mag == 1 else f"{mag}*{name}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0 = 0"
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text + " = 0"


def system_to_text(s: LinearSystem, with_tags: bool = True) -> str:
    """Human-readable rendering, one equation per line."""
    lines = []
    for row, tag in zip(s.rows, s.tags):
        line = format_equation(row)
        if with_tags and tag:
            line += f"  # {tag}"
        lines.append(line)
    return "\n".join(lines)

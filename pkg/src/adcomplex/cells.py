"""Cells of the ω-category attached to a complex, as tables of chains.

An ``n``-cell is a double row ``(x_0^-, ..., x_n^- ; x_0^+, ..., x_n^+)`` of
positive chains with ``x_n^- = x_n^+``, ``d(x_i^±) = x_{i-1}^+ - x_{i-1}^-``
and unit augmentation at both ends.  Composition along a ``k``-boundary keeps
the rows below ``k``, takes the outer rows at ``k`` and adds the rows above.

Two argument orders appear below.  :func:`compose` is diagrammatic: the first
cell comes first.  :func:`compose_after` follows the usual ``f ∘_k g``
notation, ``g`` first, and pads lower-dimensional cells with identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .chains import Chain
from .complex import RELAXED, Complex
from .report import Report, Violation


class CompositionError(ValueError):
    """Cells that are not composable along the requested boundary."""


@dataclass(frozen=True)
class CellTable:
    ambient: Complex = field(compare=False, repr=False)
    minus: tuple[Chain, ...]
    plus: tuple[Chain, ...]

    def __post_init__(self):
        if len(self.minus) != len(self.plus) or not self.minus:
            raise ValueError("a cell table needs two nonempty rows of equal length")
        for i, (a, b) in enumerate(zip(self.minus, self.plus)):
            if a.degree != i or b.degree != i:
                raise ValueError(f"column {i} must hold chains of degree {i}")

    @property
    def dim(self) -> int:
        return len(self.minus) - 1

    @property
    def top(self) -> Chain:
        return self.minus[-1]

    def source(self, k: int | None = None) -> CellTable:
        return source_k(self, self.dim - 1 if k is None else k)

    def target(self, k: int | None = None) -> CellTable:
        return target_k(self, self.dim - 1 if k is None else k)

    def rows(self) -> tuple[tuple[Chain, ...], tuple[Chain, ...]]:
        return self.minus, self.plus

    def __str__(self) -> str:
        left = " | ".join(str(x) for x in self.minus)
        right = " | ".join(str(x) for x in self.plus)
        return f"({left} ; {right})"


def make_cell(K: Complex, minus: Sequence, plus: Sequence) -> CellTable:
    """Build a table from rows given as chains or ``{name: coeff}`` mappings."""

    def coerce(i, x):
        return x if isinstance(x, Chain) else K.chain(i, x)

    return CellTable(
        K,
        tuple(coerce(i, x) for i, x in enumerate(minus)),
        tuple(coerce(i, x) for i, x in enumerate(plus)),
    )


def is_valid_cell(c: CellTable) -> Report:
    """Check the four table conditions; reports the first violation found."""
    K = c.ambient
    n = c.dim
    for i in range(n + 1):
        for sign, x in (("-", c.minus[i]), ("+", c.plus[i])):
            if not K.is_positive(x):
                return Report.of([Violation("positive", f"x_{i}^{sign}", str(x))])
            for b in x:
                if b not in K or K.degree(b) != i:
                    return Report.of([Violation("basis", f"x_{i}^{sign}", f"{b!r} is not in degree {i}")])
    if c.minus[n] != c.plus[n]:
        return Report.of([Violation("top", f"x_{n}", f"{c.minus[n]} != {c.plus[n]}")])
    for i in range(1, n + 1):
        expected = c.plus[i - 1] - c.minus[i - 1]
        for sign, x in (("-", c.minus[i]), ("+", c.plus[i])):
            if K.d(x) != expected:
                return Report.of(
                    [Violation("boundary", f"x_{i}^{sign}", f"d = {K.d(x)}, expected {expected}")]
                )
    for sign, x in (("-", c.minus[0]), ("+", c.plus[0])):
        if K.e(x) != 1:
            return Report.of([Violation("augmentation", f"x_0^{sign}", f"e = {K.e(x)}")])
    return Report()


def source_k(c: CellTable, k: int) -> CellTable:
    if not 0 <= k <= c.dim:
        raise ValueError(f"k={k} out of range for a {c.dim}-cell")
    top = c.minus[k]
    return CellTable(c.ambient, c.minus[:k] + (top,), c.plus[:k] + (top,))


def target_k(c: CellTable, k: int) -> CellTable:
    if not 0 <= k <= c.dim:
        raise ValueError(f"k={k} out of range for a {c.dim}-cell")
    top = c.plus[k]
    return CellTable(c.ambient, c.minus[:k] + (top,), c.plus[:k] + (top,))


def identity_on(c: CellTable) -> CellTable:
    zero = Chain.zero(c.dim + 1)
    return CellTable(c.ambient, c.minus + (zero,), c.plus + (zero,))


def pad(c: CellTable, n: int) -> CellTable:
    """Iterated identity of ``c`` as an ``n``-cell."""
    while c.dim < n:
        c = identity_on(c)
    return c


def composable(u: CellTable, v: CellTable, k: int) -> int | None:
    """First level at which ``u`` then ``v`` fail to match along ``k``, or None."""
    for i in range(k):
        if u.minus[i] != v.minus[i] or u.plus[i] != v.plus[i]:
            return i
    if u.plus[k] != v.minus[k]:
        return k
    return None


def compose(u: CellTable, v: CellTable, k: int) -> CellTable:
    """``u`` followed by ``v`` along their common ``k``-boundary.

    Both cells must have the same dimension ``n >= k``; for ``n == k`` the
    cells must coincide and the composite is that cell.
    """
    if u.dim != v.dim:
        raise CompositionError(f"dimensions differ: {u.dim} and {v.dim}")
    if not 0 <= k <= u.dim:
        raise CompositionError(f"cannot compose {u.dim}-cells along level {k}")
    level = composable(u, v, k)
    if level is not None:
        raise CompositionError(f"target of the first cell and source of the second differ at level {level}")
    if k == u.dim:
        return u
    minus = u.minus[:k] + (u.minus[k],) + tuple(a + b for a, b in zip(u.minus[k + 1 :], v.minus[k + 1 :]))
    plus = u.plus[:k] + (v.plus[k],) + tuple(a + b for a, b in zip(u.plus[k + 1 :], v.plus[k + 1 :]))
    return CellTable(u.ambient, minus, plus)


compose_k = compose


def whisker_compose(u: CellTable, w: CellTable, k: int) -> CellTable:
    """``u`` followed by ``w`` along ``k``, padding the smaller cell with identities."""
    n = max(u.dim, w.dim)
    if k >= n and u.dim != w.dim:
        raise CompositionError(f"level {k} is not below both dimensions {u.dim}, {w.dim}")
    return compose(pad(u, n), pad(w, n), k)


def compose_after(f: CellTable, g: CellTable, k: int) -> CellTable:
    """``f ∘_k g``: first ``g``, then ``f``."""
    return whisker_compose(g, f, k)


def evaluate_chain(terms: Sequence[CellTable], levels: Sequence[int]) -> CellTable:
    """Evaluate ``t_0 ∘_{l_0} t_1 ∘_{l_1} ... t_m`` written without parentheses.

    Lower-index compositions bind tighter, so ``a ∘_1 b ∘_0 c`` reads
    ``a ∘_1 (b ∘_0 c)`` and ``a ∘_0 b ∘_1 c`` reads ``(a ∘_0 b) ∘_1 c``.
    """
    if len(terms) != len(levels) + 1:
        raise ValueError("need one more term than composition levels")
    if not levels:
        return terms[0]
    loosest = max(levels)
    pieces, ops = [[terms[0]]], [[]]
    for t, lvl in zip(terms[1:], levels):
        if lvl == loosest:
            pieces.append([t])
            ops.append([])
        else:
            pieces[-1].append(t)
            ops[-1].append(lvl)
    values = [evaluate_chain(p, o) for p, o in zip(pieces, ops)]
    acc = values[-1]
    for f in reversed(values[:-1]):
        acc = compose_after(f, acc, loosest)
    return acc


def invert_cell(u: CellTable, *, check_mode: bool = True) -> CellTable:
    """Strict inverse of ``u`` along its ``(n-1)``-boundary.

    Rows below ``n-1`` are kept, the two rows at ``n-1`` swap, the top is
    negated.  Only meaningful in a relaxed ambient, where the negated top
    still counts as positive.
    """
    if u.dim < 1:
        raise ValueError("0-cells have no inverse along a lower boundary")
    if check_mode and u.ambient.mode != RELAXED:
        raise ValueError("inverses are only available in a relaxed-positivity complex")
    n = u.dim
    top = -u.top
    minus = u.minus[: n - 1] + (u.plus[n - 1], top)
    plus = u.plus[: n - 1] + (u.minus[n - 1], top)
    return CellTable(u.ambient, minus, plus)


def map_cell(f, c: CellTable) -> CellTable:
    """Image of a cell under a morphism of complexes, row entry by row entry."""
    if c.ambient != f.source:
        raise ValueError("cell does not live in the source of the morphism")
    return CellTable(f.target, tuple(f(x) for x in c.minus), tuple(f(x) for x in c.plus))


def with_ambient(c: CellTable, K: Complex) -> CellTable:
    return CellTable(K, c.minus, c.plus)


def _candidates(K: Complex, degree: int, bound: int) -> list[Chain]:
    names = K.basis_in(degree)
    lo = -bound if K.mode == RELAXED else 0
    out = []
    for coeffs in itertools.product(range(lo, bound + 1), repeat=len(names)):
        out.append(Chain(degree, zip(names, coeffs)))
    return out


def enumerate_cells(K: Complex, dim: int, coeff_bound: int) -> list[CellTable]:
    """All valid ``dim``-cells whose entries have coefficients bounded by ``coeff_bound``.

    Brute force; exponential in the number of generators per degree.  In
    relaxed mode negative coefficients down to ``-coeff_bound`` are allowed.
    Identities (zero top rows) are included.
    """
    if dim < 0 or coeff_bound < 0:
        raise ValueError("dim and coeff_bound must be nonnegative")
    cache = {i: _candidates(K, i, coeff_bound) for i in range(dim + 1)}
    out: list[CellTable] = []

    def fits(x: Chain) -> bool:
        return x.max_abs() <= coeff_bound and K.is_positive(x)

    def descend(i: int, minus: list[Chain], plus: list[Chain]) -> None:
        # rows above i are fixed; choose column i - 1
        if i == 0:
            if K.e(minus[0]) == 1 and K.e(plus[0]) == 1:
                out.append(CellTable(K, tuple(minus), tuple(plus)))
            return
        dx = K.d(minus[0])
        for lo in cache[i - 1]:
            hi = lo + dx
            if not fits(hi):
                continue
            if i - 1 == 0 and K.e(lo) != 1:
                continue
            descend(i - 1, [lo] + minus, [hi] + plus)

    for top in cache[dim]:
        descend(dim, [top], [top])
    return out

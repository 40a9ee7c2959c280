"""Augmented directed complexes with a finite basis.

A :class:`Complex` stores a graded basis, the differential on basis elements
of positive degree and the augmentation on degree-0 basis elements.  In
``basis`` mode the positive elements are the nonnegative combinations of the
basis; ``relaxed`` mode declares every chain positive (used to make every
table invertible when exercising cylinder formulas).
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .chains import Chain, DegreeError, linear_sum
from .names import join_arity
from .report import Report, Violation

BASIS = "basis"
RELAXED = "relaxed"
MODES = (BASIS, RELAXED)


class ComplexError(ValueError):
    """Structurally malformed complex data (unknown names, wrong degrees)."""


class Complex:
    """A finitely based augmented directed complex.

    ``basis`` is a sequence indexed by degree (or a mapping degree -> names).
    ``d`` maps each generator of positive degree to its boundary, given as a
    :class:`Chain` or a ``{name: int}`` mapping; omitted generators have zero
    boundary.  ``e`` maps degree-0 generators to integers, defaulting to 1.
    """

    __slots__ = ("_basis", "_degree", "_d", "_e", "mode")

    def __init__(
        self,
        basis: Sequence[Sequence[str]] | Mapping[int, Sequence[str]] = (),
        d: Mapping[str, Chain | Mapping[str, int]] | None = None,
        e: Mapping[str, int] | None = None,
        mode: str = BASIS,
    ):
        if isinstance(basis, Mapping):
            top = max((int(k) for k in basis), default=-1)
            basis = [basis.get(n, basis.get(str(n), ())) for n in range(top + 1)]
        layers = [tuple(layer) for layer in basis]
        while layers and not layers[-1]:
            layers.pop()
        if mode not in MODES:
            raise ComplexError(f"unknown positivity mode {mode!r}")

        degree: dict[str, int] = {}
        for n, layer in enumerate(layers):
            for name in layer:
                if not isinstance(name, str) or not name:
                    raise ComplexError(f"basis names must be nonempty strings, got {name!r}")
                if name in degree:
                    raise ComplexError(f"duplicate basis element {name!r}")
                degree[name] = n

        d = dict(d or {})
        e = dict(e or {})
        boundaries: dict[str, Chain] = {}
        for name, chain in d.items():
            if name not in degree:
                raise ComplexError(f"differential given for unknown element {name!r}")
            n = degree[name]
            if n == 0:
                if chain:
                    raise ComplexError(f"degree-0 element {name!r} cannot have a differential")
                continue
            if not isinstance(chain, Chain):
                chain = Chain(n - 1, chain)
            if chain.degree != n - 1:
                raise ComplexError(f"d({name}) has degree {chain.degree}, expected {n - 1}")
            for y in chain:
                if degree.get(y) != n - 1:
                    raise ComplexError(f"d({name}) mentions {y!r}, not a basis element of degree {n - 1}")
            boundaries[name] = chain
        for name, n in degree.items():
            if n > 0 and name not in boundaries:
                boundaries[name] = Chain.zero(n - 1)

        aug: dict[str, int] = {}
        for name, value in e.items():
            if degree.get(name) != 0:
                raise ComplexError(f"augmentation given for {name!r}, not a degree-0 basis element")
            if not isinstance(value, int) or isinstance(value, bool):
                raise ComplexError(f"augmentation of {name!r} must be an integer")
            aug[name] = value
        for name in layers[0] if layers else ():
            aug.setdefault(name, 1)

        self._basis = tuple(layers)
        self._degree = degree
        self._d = boundaries
        self._e = aug
        self.mode = mode

    # -- structure ---------------------------------------------------------

    @property
    def basis(self) -> tuple[tuple[str, ...], ...]:
        return self._basis

    def basis_in(self, n: int) -> tuple[str, ...]:
        return self._basis[n] if 0 <= n < len(self._basis) else ()

    def names(self) -> Iterable[str]:
        for layer in self._basis:
            yield from layer

    def __contains__(self, name: str) -> bool:
        return name in self._degree

    def __len__(self) -> int:
        return len(self._degree)

    def degree(self, name: str) -> int:
        try:
            return self._degree[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a basis element") from None

    @property
    def dim(self) -> int:
        """Top nonempty degree, -1 for the zero complex."""
        return len(self._basis) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self._basis)

    @property
    def arity(self) -> int:
        return join_arity(self.names())

    def generator(self, name: str) -> Chain:
        return Chain.generator(self.degree(name), name)

    def boundary_of(self, name: str) -> Chain:
        if self.degree(name) == 0:
            raise DegreeError(f"{name!r} has degree 0 and no differential")
        return self._d[name]

    def augmentation_of(self, name: str) -> int:
        if self.degree(name) != 0:
            raise DegreeError(f"{name!r} is not of degree 0")
        return self._e[name]

    @property
    def boundaries(self) -> Mapping[str, Chain]:
        return dict(self._d)

    @property
    def augmentations(self) -> Mapping[str, int]:
        return dict(self._e)

    # -- linear maps -------------------------------------------------------

    def d(self, x: Chain) -> Chain:
        if x.degree < 1:
            raise DegreeError("the differential is defined on chains of degree >= 1")
        return linear_sum(x.degree - 1, ((n, self._d[b]) for b, n in x.items()))

    def e(self, x: Chain) -> int:
        if x.degree != 0:
            raise DegreeError("the augmentation is defined on 0-chains")
        return sum(n * self._e[b] for b, n in x.items())

    def is_positive(self, x: Chain) -> bool:
        return self.mode == RELAXED or x.is_positive()

    def chain(self, degree: int, coeffs: Mapping[str, int]) -> Chain:
        x = Chain(degree, coeffs)
        for b in x:
            if self._degree.get(b) != degree:
                raise ComplexError(f"{b!r} is not a basis element of degree {degree}")
        return x

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self.mode == other.mode
            and self._degree == other._degree
            and self._d == other._d
            and self._e == other._e
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Complex(counts={self.counts()}, mode={self.mode!r})"

    def with_mode(self, mode: str) -> Complex:
        return Complex(self._basis, self._d, self._e, mode)

    def rename(self, mapping: Mapping[str, str]) -> Complex:
        """Rename basis elements; names missing from ``mapping`` are kept."""

        def r(name):
            return mapping.get(name, name)

        return Complex(
            [[r(b) for b in layer] for layer in self._basis],
            {r(b): Chain(ch.degree, {r(y): n for y, n in ch.items()}) for b, ch in self._d.items()},
            {r(b): v for b, v in self._e.items()},
            self.mode,
        )

    def restrict(self, names: Iterable[str]) -> Complex:
        keep = set(names)
        return Complex(
            [[b for b in layer if b in keep] for layer in self._basis],
            {b: ch for b, ch in self._d.items() if b in keep},
            {b: v for b, v in self._e.items() if b in keep},
            self.mode,
        )


def validate(K: Complex) -> Report:
    """Check ``d∘d = 0`` and ``e∘d = 0`` generator by generator."""
    bad = []
    for n in range(1, K.dim + 1):
        for b in K.basis_in(n):
            db = K.boundary_of(b)
            if n >= 2:
                dd = K.d(db)
                if dd:
                    bad.append(Violation("d^2=0", b, f"d(d({b})) = {dd}"))
            else:
                ed = K.e(db)
                if ed:
                    bad.append(Violation("e∘d=0", b, f"e(d({b})) = {ed}"))
    return Report.of(bad)


def d_minus(K: Complex, x: Chain) -> Chain:
    return K.d(x).neg_part()


def d_plus(K: Complex, x: Chain) -> Chain:
    return K.d(x).pos_part()


@dataclass(frozen=True)
class AtomTable:
    table: "CellTable"  # noqa: F821
    is_cell: bool


def atom(K: Complex, b: str) -> AtomTable:
    """The table of ``b``: iterate ``d^-`` down the minus row, ``d^+`` down the plus row."""
    from .cells import CellTable

    n = K.degree(b)
    minus = [K.generator(b)]
    plus = [K.generator(b)]
    for _ in range(n):
        minus.append(d_minus(K, minus[-1]))
        plus.append(d_plus(K, plus[-1]))
    minus.reverse()
    plus.reverse()
    table = CellTable(K, tuple(minus), tuple(plus))
    return AtomTable(table, K.e(minus[0]) == 1 and K.e(plus[0]) == 1)


def is_unital(K: Complex) -> tuple[bool, list[str]]:
    """Whether every atom has augmentation 1 at both ends; returns the failures."""
    failing = [b for b in K.names() if not atom(K, b).is_cell]
    return not failing, failing


@dataclass(frozen=True)
class LoopFreeResult:
    ok: bool
    order: tuple[str, ...] | None = None
    cycle: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def loop_free_edges(K: Complex) -> list[tuple[str, str]]:
    """Edges ``y -> x`` for ``y`` in supp d^-x and ``x -> z`` for ``z`` in supp d^+x."""
    edges = []
    for n in range(1, K.dim + 1):
        for x in K.basis_in(n):
            dx = K.boundary_of(x)
            edges.extend((y, x) for y in sorted(dx.neg_part().support))
            edges.extend((x, z) for z in sorted(dx.pos_part().support))
    return edges


def is_strongly_loop_free(K: Complex) -> LoopFreeResult:
    """Decide strong loop-freeness by acyclicity of the generated relation.

    On success the result carries a linear order in which every edge points
    forward; otherwise an explicit cycle ``(v0, v1, ..., v0)``.
    """
    preds: dict[str, set[str]] = {b: set() for b in K.names()}
    for src, dst in loop_free_edges(K):
        preds[dst].add(src)
    sorter = graphlib.TopologicalSorter({b: sorted(p) for b, p in preds.items()})
    try:
        order = tuple(sorter.static_order())
    except graphlib.CycleError as exc:
        cycle = tuple(exc.args[1])
        return LoopFreeResult(False, cycle=cycle)
    return LoopFreeResult(True, order=order)


def subcomplex(K: Complex, names: Iterable[str]):
    """Restrict ``K`` to a set of generators closed under boundary supports.

    Returns the subcomplex and its inclusion morphism (a rigid monomorphism).
    """
    from .morphisms import Morphism

    keep = set(names)
    for b in keep:
        if b not in K:
            raise ComplexError(f"{b!r} is not a basis element")
    for b in sorted(keep):
        if K.degree(b) > 0:
            escaped = sorted(K.boundary_of(b).support - keep)
            if escaped:
                raise ComplexError(f"not closed under d: {escaped[0]!r} in the support of d({b}) is missing")
    S = K.restrict(keep)
    inclusion = Morphism(S, K, {b: S.generator(b) for b in S.names()})
    return S, inclusion


def relax_positivity(K: Complex) -> Complex:
    return K if K.mode == RELAXED else K.with_mode(RELAXED)

"""Cylinders ``(x, y, α)`` in ν(K): typing, vertical composition and inverses.

An ``n``-cylinder consists of two ``n``-cells ``x`` and ``y`` and, for each
``0 <= k <= n``, two ``(k+1)``-cells ``α_k^-`` and ``α_k^+`` with
``α_n^- = α_n^+``, subject to

    s(α_k^ε) = α_{k-1}^+ ∘_{k-1} ... ∘_1 α_0^+ ∘_0 x_k^ε
    t(α_k^ε) = y_k^ε ∘_0 α_0^- ∘_1 ... ∘_{k-1} α_{k-1}^-

where ``x_k^-``, ``x_k^+`` are the iterated source and target of ``x``.
Compositions here use the ``f ∘_k g`` order (``g`` first) and unparenthesized
chains are read with :func:`~adcomplex.cells.evaluate_chain`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cells import (
    CellTable,
    CompositionError,
    compose_after,
    evaluate_chain,
    identity_on,
    invert_cell,
    is_valid_cell,
    map_cell,
    source_k,
    target_k,
)
from .complex import RELAXED, Complex, atom
from .morphisms import Morphism
from .names import tensor_name
from .products import tensor_mor
from .report import Report, Violation

MINUS, PLUS = "-", "+"


class CylinderError(ValueError):
    pass


@dataclass(frozen=True)
class Cylinder:
    ambient: Complex = field(compare=False, repr=False)
    x: CellTable
    y: CellTable
    minus: tuple[CellTable, ...]
    plus: tuple[CellTable, ...]

    @property
    def dim(self) -> int:
        return self.x.dim

    def alpha(self, k: int, eps: str) -> CellTable:
        return (self.minus if eps == MINUS else self.plus)[k]

    @property
    def principal(self) -> CellTable:
        return self.minus[-1]


def _end(c: CellTable, k: int, eps: str) -> CellTable:
    return source_k(c, k) if eps == MINUS else target_k(c, k)


def expected_source(alpha_plus, x: CellTable, k: int, eps: str) -> CellTable:
    """``α_{k-1}^+ ∘_{k-1} ... ∘_0 x_k^ε`` for a sequence ``alpha_plus``."""
    terms = [alpha_plus[j] for j in range(k - 1, -1, -1)] + [_end(x, k, eps)]
    return evaluate_chain(terms, list(range(k - 1, -1, -1)))


def expected_target(alpha_minus, y: CellTable, k: int, eps: str) -> CellTable:
    """``y_k^ε ∘_0 α_0^- ∘_1 ... ∘_{k-1} α_{k-1}^-``."""
    terms = [_end(y, k, eps)] + [alpha_minus[j] for j in range(k)]
    return evaluate_chain(terms, list(range(k)))


def is_valid_cylinder(c: Cylinder) -> Report:
    bad = []
    n = c.dim
    if c.y.dim != n:
        return Report.of([Violation("shape", "y", f"dimension {c.y.dim}, expected {n}")])
    if len(c.minus) != n + 1 or len(c.plus) != n + 1:
        return Report.of([Violation("shape", "alpha", f"need {n + 1} components of each sign")])
    for label, cell in (("x", c.x), ("y", c.y)):
        for v in is_valid_cell(cell).violations:
            bad.append(Violation("cell", label, str(v)))
    for k in range(n + 1):
        for eps in (MINUS, PLUS):
            a = c.alpha(k, eps)
            name = f"alpha_{k}^{eps}"
            if a.dim != k + 1:
                bad.append(Violation("shape", name, f"dimension {a.dim}, expected {k + 1}"))
                continue
            for v in is_valid_cell(a).violations:
                bad.append(Violation("cell", name, str(v)))
    if bad:
        return Report.of(bad)
    if c.minus[n] != c.plus[n]:
        bad.append(Violation("principal", f"alpha_{n}", "minus and plus components differ"))
    for k in range(n + 1):
        for eps in (MINUS, PLUS):
            a = c.alpha(k, eps)
            name = f"alpha_{k}^{eps}"
            for side, want in (("source", expected_source), ("target", expected_target)):
                rows = c.plus if side == "source" else c.minus
                end = c.x if side == "source" else c.y
                try:
                    expected = want(rows, end, k, eps)
                except CompositionError as exc:
                    bad.append(Violation(side, name, f"whiskered chain not composable: {exc}"))
                    continue
                got = source_k(a, k) if side == "source" else target_k(a, k)
                if got != expected:
                    bad.append(Violation(side, name, f"{got} != {expected}"))
    return Report.of(bad)


def vertical_identity(x: CellTable) -> Cylinder:
    """``(x, x, α)`` with ``α_k^- = id(s_k x)`` and ``α_k^+ = id(t_k x)``."""
    report = is_valid_cell(x)
    if not report.ok:
        raise CylinderError(f"not a valid cell: {report}")
    n = x.dim
    minus = tuple(identity_on(source_k(x, k)) for k in range(n + 1))
    plus = tuple(identity_on(target_k(x, k)) for k in range(n + 1))
    return Cylinder(x.ambient, x, x, minus, plus)


def vertical_compose(d: Cylinder, c: Cylinder) -> Cylinder:
    """``d ∘_v c`` for ``c = (x, y, α)`` and ``d = (y, z, β)``.

    ``a_k^ε = b_{k-1}^+ ∘_{k-1} ... ∘_0 α_k^ε``,
    ``b_k^ε = β_k^ε ∘_0 a_0^- ∘_1 ... ∘_{k-1} a_{k-1}^-`` and
    ``γ_k^ε = b_k^ε ∘_k a_k^ε``.
    """
    if c.dim != d.dim:
        raise CylinderError(f"dimensions differ: {c.dim} and {d.dim}")
    if c.y != d.x:
        raise CylinderError("the end cell of the first cylinder is not the start of the second")
    n = c.dim
    a = {MINUS: [], PLUS: []}
    b = {MINUS: [], PLUS: []}
    for k in range(n + 1):
        for eps in (MINUS, PLUS):
            terms = [b[PLUS][j] for j in range(k - 1, -1, -1)] + [c.alpha(k, eps)]
            a[eps].append(evaluate_chain(terms, list(range(k - 1, -1, -1))))
        for eps in (MINUS, PLUS):
            terms = [d.alpha(k, eps)] + [a[MINUS][j] for j in range(k)]
            b[eps].append(evaluate_chain(terms, list(range(k))))
    gamma = {
        eps: tuple(compose_after(b[eps][k], a[eps][k], k) for k in range(n + 1)) for eps in (MINUS, PLUS)
    }
    return Cylinder(c.ambient, c.x, d.y, gamma[MINUS], gamma[PLUS])


def _inverse_component(c: Cylinder, k: int, eps: str) -> CellTable:
    if c.ambient.mode == RELAXED:
        return invert_cell(c.alpha(k, eps))
    candidate = invert_cell(c.alpha(k, eps), check_mode=False)
    if not is_valid_cell(candidate).ok:
        raise CylinderError(f"alpha_{k}^{eps} has no positive inverse")
    return candidate


def is_invertible_cylinder(c: Cylinder) -> bool:
    """Whether every ``α_k^ε`` has a strict inverse in the ambient."""
    try:
        for k in range(c.dim + 1):
            for eps in (MINUS, PLUS):
                _inverse_component(c, k, eps)
    except CylinderError:
        return False
    return True


def invert_cylinder(c: Cylinder) -> Cylinder:
    """The inverse ``(y, x, β)`` of an invertible cylinder.

    With ``ᾱ`` the inverse of ``α``: ``β_{k,k} = ᾱ_k^ε``,
    ``β_{k,i} = ᾱ_i^+ ∘_i β_{k,i+1} ∘_i ᾱ_i^-`` and ``β_k^ε = β_{k,0}``.
    """
    n = c.dim
    inv = {(k, eps): _inverse_component(c, k, eps) for k in range(n + 1) for eps in (MINUS, PLUS)}
    comps = {MINUS: [], PLUS: []}
    for k in range(n + 1):
        for eps in (MINUS, PLUS):
            beta = inv[k, eps]
            for i in range(k - 1, -1, -1):
                beta = compose_after(inv[i, PLUS], compose_after(beta, inv[i, MINUS], i), i)
            comps[eps].append(beta)
    return Cylinder(c.ambient, c.y, c.x, tuple(comps[MINUS]), tuple(comps[PLUS]))


def is_identity_cylinder(c: Cylinder) -> bool:
    return c == vertical_identity(c.x)


# -- cylinders from products --------------------------------------------------


def cell_morphism(z: CellTable) -> Morphism:
    """The morphism ``disk(m) -> K`` classifying an ``m``-cell ``z`` of ν(K)."""
    from .shapes import disk

    m = z.dim
    D = disk(m)
    mapping = {f"cell_{m}": z.top}
    for k in range(m):
        mapping[f"src_{k}"] = z.minus[k]
        mapping[f"tgt_{k}"] = z.plus[k]
    return Morphism(D, z.ambient, mapping)


def universal_cylinder(n: int) -> Cylinder:
    """The cylinder ``cell_1 ⊗ cell_n`` in ``disk(1)⊗disk(n)``."""
    from .products import tensor
    from .shapes import disk

    P = tensor(disk(1), disk(n))

    def at(a: str, b: str) -> CellTable:
        return atom(P, tensor_name(a, b)).table

    top = f"cell_{n}"
    x, y = at("src_0", top), at("tgt_0", top)
    minus = tuple(at("cell_1", f"src_{k}") for k in range(n)) + (at("cell_1", top),)
    plus = tuple(at("cell_1", f"tgt_{k}") for k in range(n)) + (at("cell_1", top),)
    return Cylinder(P, x, y, minus, plus)


def product_cylinder(f: CellTable, z: CellTable) -> Cylinder:
    """The cylinder ``f ⊗ z`` in ν(K⊗L) for a 1-cell ``f`` of ν(K) and a cell ``z`` of ν(L)."""
    if f.dim != 1:
        raise CylinderError("the first factor must be a 1-cell")
    u = universal_cylinder(z.dim)
    h = tensor_mor(cell_morphism(f), cell_morphism(z))
    return map_cylinder(h, u)


def map_cylinder(h: Morphism, c: Cylinder) -> Cylinder:
    return Cylinder(
        h.target,
        map_cell(h, c.x),
        map_cell(h, c.y),
        tuple(map_cell(h, a) for a in c.minus),
        tuple(map_cell(h, a) for a in c.plus),
    )

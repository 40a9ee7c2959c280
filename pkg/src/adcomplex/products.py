"""Tensor product and join of complexes, their action on morphisms, the
strength ``K⊗(L⋆M) -> (K⊗L)⋆M`` and the ``op``/``co`` dualities."""

from __future__ import annotations

from typing import Iterator

from .chains import Chain
from .complex import BASIS, RELAXED, Complex
from .morphisms import Morphism, compose, identity
from .names import join_name, tensor_name
from .report import Report, Violation

TENSOR = "tensor"
JOIN = "join"
PRODUCTS = (TENSOR, JOIN)


def _mode(K: Complex, L: Complex) -> str:
    return RELAXED if RELAXED in (K.mode, L.mode) else BASIS


# -- tensor ------------------------------------------------------------------


def _tensor_pairs(K: Complex, L: Complex, n: int) -> Iterator[tuple[str, str]]:
    for i in range(n + 1):
        for a in K.basis_in(i):
            for b in L.basis_in(n - i):
                yield a, b


def tensor(K: Complex, L: Complex) -> Complex:
    """``K⊗L`` with ``d(x⊗y) = dx⊗y + (-1)^|x| x⊗dy`` and ``e(x⊗y) = e(x)e(y)``."""
    top = K.dim + L.dim
    basis = [[tensor_name(a, b) for a, b in _tensor_pairs(K, L, n)] for n in range(top + 1)]
    d = {}
    e = {}
    for n in range(top + 1):
        for a, b in _tensor_pairs(K, L, n):
            name = tensor_name(a, b)
            if n == 0:
                e[name] = K.augmentation_of(a) * L.augmentation_of(b)
                continue
            i = K.degree(a)
            acc: dict[str, int] = {}
            if i > 0:
                for x, c in K.boundary_of(a).items():
                    key = tensor_name(x, b)
                    acc[key] = acc.get(key, 0) + c
            if n - i > 0:
                sign = -1 if i % 2 else 1
                for y, c in L.boundary_of(b).items():
                    key = tensor_name(a, y)
                    acc[key] = acc.get(key, 0) + sign * c
            d[name] = Chain(n - 1, acc)
    return Complex(basis, d, e, _mode(K, L))


def tensor_unit() -> Complex:
    """The integers in degree 0; the same data as the 0-disk."""
    return Complex([["cell_0"]], e={"cell_0": 1})


def tensor_chain(x: Chain, y: Chain) -> Chain:
    acc: dict[str, int] = {}
    for a, m in x.items():
        for b, n in y.items():
            key = tensor_name(a, b)
            acc[key] = acc.get(key, 0) + m * n
    return Chain(x.degree + y.degree, acc)


def tensor_mor(f: Morphism, g: Morphism) -> Morphism:
    source = tensor(f.source, g.source)
    target = tensor(f.target, g.target)
    mapping = {}
    for n in range(source.dim + 1):
        for a, b in _tensor_pairs(f.source, g.source, n):
            mapping[tensor_name(a, b)] = tensor_chain(f.image(a), g.image(b))
    return Morphism(source, target, mapping)


# -- join --------------------------------------------------------------------

# ``None`` marks the empty slot, of degree -1.


def _deg(K: Complex, a: str | None) -> int:
    return -1 if a is None else K.degree(a)


def _join_pairs(K: Complex, L: Complex, n: int) -> Iterator[tuple[str | None, str | None]]:
    for i in range(-1, n + 1):
        j = n - 1 - i
        left = [None] if i == -1 else K.basis_in(i)
        right = [None] if j == -1 else L.basis_in(j)
        for a in left:
            for b in right:
                if a is None and b is None:
                    continue
                yield a, b


def _jname(K: Complex, a: str | None, L: Complex, b: str | None) -> str:
    return join_name(a, K.arity, b, L.arity)


def _join_boundary(K: Complex, z: str | None) -> list[tuple[str | None, int]]:
    """``dz`` with ``dz = e(z)∅`` in degree 0 and ``d∅ = 0``."""
    if z is None:
        return []
    if K.degree(z) == 0:
        return [(None, K.augmentation_of(z))]
    return list(K.boundary_of(z).items())


def join(K: Complex, L: Complex) -> Complex:
    """``K⋆L``: generators ``a⋆b``, ``a⋆∅``, ``∅⋆b`` in degree ``|a|+1+|b|``.

    ``d(x⋆y) = dx⋆y + (-1)^(|x|+1) x⋆dy`` and ``e(x⋆∅) = e(x)``,
    ``e(∅⋆y) = e(y)``.
    """
    top = K.dim + L.dim + 1
    basis = []
    d = {}
    e = {}
    for n in range(top + 1):
        layer = []
        for a, b in _join_pairs(K, L, n):
            name = _jname(K, a, L, b)
            layer.append(name)
            if n == 0:
                e[name] = K.augmentation_of(a) if b is None else L.augmentation_of(b)
                continue
            i = _deg(K, a)
            acc: dict[str, int] = {}
            for x, c in _join_boundary(K, a):
                if x is None and b is None:
                    continue
                key = _jname(K, x, L, b)
                acc[key] = acc.get(key, 0) + c
            sign = 1 if (i + 1) % 2 == 0 else -1
            for y, c in _join_boundary(L, b):
                if a is None and y is None:
                    continue
                key = _jname(K, a, L, y)
                acc[key] = acc.get(key, 0) + sign * c
            d[name] = Chain(n - 1, acc)
        basis.append(layer)
    return Complex(basis, d, e, _mode(K, L))


def join_unit() -> Complex:
    """The zero complex."""
    return Complex()


def _join_chain(K: Complex, x: Chain | None, L: Complex, y: Chain | None) -> dict[str, int]:
    # None stands for the chain 1·∅
    xs = [(None, 1)] if x is None else list(x.items())
    ys = [(None, 1)] if y is None else list(y.items())
    acc: dict[str, int] = {}
    for a, m in xs:
        for b, n in ys:
            key = _jname(K, a, L, b)
            acc[key] = acc.get(key, 0) + m * n
    return acc


def join_mor(f: Morphism, g: Morphism) -> Morphism:
    source = join(f.source, g.source)
    target = join(f.target, g.target)
    mapping = {}
    for n in range(source.dim + 1):
        for a, b in _join_pairs(f.source, g.source, n):
            x = None if a is None else f.image(a)
            y = None if b is None else g.image(b)
            mapping[_jname(f.source, a, g.source, b)] = Chain(
                n, _join_chain(f.target, x, g.target, y)
            )
    return Morphism(source, target, mapping)


def product(kind: str, K: Complex, L: Complex) -> Complex:
    if kind == TENSOR:
        return tensor(K, L)
    if kind == JOIN:
        return join(K, L)
    raise ValueError(f"unknown product {kind!r}")


def product_mor(kind: str, f: Morphism, g: Morphism) -> Morphism:
    if kind == TENSOR:
        return tensor_mor(f, g)
    if kind == JOIN:
        return join_mor(f, g)
    raise ValueError(f"unknown product {kind!r}")


def product_pairs(kind: str, K: Complex, L: Complex) -> dict[str, tuple[str | None, str | None]]:
    """Name of each product generator -> the pair of factor generators."""
    out = {}
    if kind == TENSOR:
        for n in range(K.dim + L.dim + 1):
            for a, b in _tensor_pairs(K, L, n):
                out[tensor_name(a, b)] = (a, b)
    elif kind == JOIN:
        for n in range(K.dim + L.dim + 2):
            for a, b in _join_pairs(K, L, n):
                out[_jname(K, a, L, b)] = (a, b)
    else:
        raise ValueError(f"unknown product {kind!r}")
    return out


# -- unit constraint and strength --------------------------------------------


def left_unitor(K: Complex) -> Morphism:
    """``Z⊗K -> K``, ``cell_0⊗x ↦ x``."""
    Z = tensor_unit()
    (pt,) = Z.basis_in(0)
    return Morphism(tensor(Z, K), K, {tensor_name(pt, b): K.generator(b) for b in K.names()})


def strength_sigma(K: Complex, L: Complex, M: Complex) -> Morphism:
    """``σ: K⊗(L⋆M) -> (K⊗L)⋆M``.

    ``x⊗(∅⋆z) ↦ e(x)·(∅⋆z)`` (zero unless ``|x| = 0``) and
    ``x⊗(y⋆z) ↦ (x⊗y)⋆z`` when ``y`` is a generator.
    """
    LM = join(L, M)
    KL = tensor(K, L)
    source = tensor(K, LM)
    target = join(KL, M)
    pairs = product_pairs(JOIN, L, M)
    mapping = {}
    for n in range(source.dim + 1):
        for x, w in _tensor_pairs(K, LM, n):
            y, z = pairs[w]
            name = tensor_name(x, w)
            if y is None:
                ex = K.augmentation_of(x) if K.degree(x) == 0 else 0
                mapping[name] = Chain(n, {_jname(KL, None, M, z): ex})
            else:
                mapping[name] = target.generator(_jname(KL, tensor_name(x, y), M, z))
    return Morphism(source, target, mapping)


def _compare(check: str, f: Morphism, g: Morphism) -> list[Violation]:
    if f.source != g.source or f.target != g.target:
        return [Violation(check, "*", "the two composites have different endpoints")]
    return [
        Violation(check, b, f"{f.image(b)} != {g.image(b)}")
        for b in f.source.names()
        if f.image(b) != g.image(b)
    ]


def check_strength_triangles(K: Complex, L: Complex, M: Complex, T: Complex) -> Report:
    """Both coherence triangles of the strength of ``-⋆T``, generator by generator.

    Associativity: ``σ_{K⊗L,M,T} = σ_{K,L⊗M,T} ∘ (K⊗σ_{L,M,T})`` on
    ``K⊗L⊗(M⋆T)``.  Unit: ``(λ⋆T) ∘ σ_{Z,K,T} = λ`` on ``Z⊗(K⋆T)``.
    """
    bad = []
    lhs = strength_sigma(tensor(K, L), M, T)
    rhs = compose(strength_sigma(K, tensor(L, M), T), tensor_mor(identity(K), strength_sigma(L, M, T)))
    bad += _compare("associativity", lhs, rhs)

    Z = tensor_unit()
    unit_lhs = compose(join_mor(left_unitor(K), identity(T)), strength_sigma(Z, K, T))
    unit_rhs = left_unitor(join(K, T))
    bad += _compare("unit", unit_lhs, unit_rhs)
    return Report.of(bad)


# -- dualities ---------------------------------------------------------------


def _resign(K: Complex, sign_of) -> Complex:
    d = {b: sign_of(K.degree(b)) * ch for b, ch in K.boundaries.items()}
    return Complex(K.basis, d, K.augmentations, K.mode)


def dual_op(K: Complex) -> Complex:
    """Reverse odd-dimensional cells: ``d`` picks up ``(-1)^n`` in degree ``n``."""
    return _resign(K, lambda n: -1 if n % 2 else 1)


def dual_co(K: Complex) -> Complex:
    """Reverse even-dimensional cells: ``d`` picks up ``(-1)^(n+1)`` in degree ``n``."""
    return _resign(K, lambda n: 1 if n % 2 else -1)


DUALS = {"op": dual_op, "co": dual_co}


def anti_monoidal_swap(K: Complex, L: Complex, kind: str = TENSOR, duality: str = "op") -> Morphism:
    """``(K⊙L)^D -> L^D⊙K^D`` given by ``x⊙y ↦ y⊙x`` with coefficient +1."""
    dual = DUALS[duality]
    source = dual(product(kind, K, L))
    target = product(kind, dual(L), dual(K))
    mapping = {}
    for name, (a, b) in product_pairs(kind, K, L).items():
        if kind == TENSOR:
            image = tensor_name(b, a)
        else:
            image = _jname(L, b, K, a)
        mapping[name] = target.generator(image)
    return Morphism(source, target, mapping)

"""Morphisms of augmented directed complexes, given on basis elements."""

from __future__ import annotations

from typing import Mapping

from .chains import Chain, DegreeError, linear_sum
from .complex import BASIS, Complex, ComplexError
from .report import Report, Violation


class MorphismError(ValueError):
    pass


class Morphism:
    """A degree-preserving linear map ``source -> target``.

    ``mapping`` sends basis names of the source to chains of the target (or
    ``{name: coeff}`` dicts).  Generators left out are sent to zero.
    """

    __slots__ = ("source", "target", "_map")

    def __init__(self, source: Complex, target: Complex, mapping: Mapping[str, Chain | Mapping[str, int]]):
        images: dict[str, Chain] = {}
        for name, img in mapping.items():
            if name not in source:
                raise MorphismError(f"{name!r} is not a basis element of the source")
            n = source.degree(name)
            if isinstance(img, Chain):
                if img.degree != n:
                    raise DegreeError(f"{name!r} has degree {n} but its image has degree {img.degree}")
                for b in img:
                    if b not in target or target.degree(b) != n:
                        raise MorphismError(f"image of {name!r} mentions {b!r}, not a target generator of degree {n}")
            else:
                try:
                    img = target.chain(n, img)
                except ComplexError as exc:
                    raise MorphismError(f"image of {name!r}: {exc}") from None
            images[name] = img
        for name in source.names():
            images.setdefault(name, Chain.zero(source.degree(name)))
        self.source = source
        self.target = target
        self._map = images

    def __call__(self, x: Chain) -> Chain:
        return linear_sum(x.degree, ((n, self._map[b]) for b, n in x.items()))

    def image(self, name: str) -> Chain:
        return self._map[name]

    @property
    def mapping(self) -> dict[str, Chain]:
        return dict(self._map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self._map == other._map

    __hash__ = None

    def __repr__(self) -> str:
        return f"Morphism({self.source!r} -> {self.target!r})"


def validate_morphism(f: Morphism) -> Report:
    """List every failure of compatibility with d, e and positivity."""
    K, L = f.source, f.target
    bad = []
    for b in K.names():
        n = K.degree(b)
        img = f.image(b)
        if not L.is_positive(img):
            bad.append(Violation("positivity", b, f"f({b}) = {img}"))
        if n == 0:
            if L.e(img) != K.augmentation_of(b):
                bad.append(Violation("augmentation", b, f"e(f({b})) = {L.e(img)} != {K.augmentation_of(b)}"))
        else:
            lhs = f(K.boundary_of(b))
            rhs = L.d(img)
            if lhs != rhs:
                bad.append(Violation("differential", b, f"f(d{b}) = {lhs} but d(f{b}) = {rhs}"))
    return Report.of(bad)


def is_rigid_mono(f: Morphism) -> bool:
    """Basis elements go injectively to basis elements, with coefficient 1."""
    seen = set()
    for b in f.source.names():
        img = f.image(b)
        if len(img) != 1:
            return False
        (name, n), = img.items()
        if n != 1 or name in seen:
            return False
        seen.add(name)
    return f.source.mode == BASIS and f.target.mode == BASIS


def basis_image(f: Morphism) -> dict[str, str]:
    """For a rigid monomorphism, the underlying injection of basis names."""
    if not is_rigid_mono(f):
        raise MorphismError("not a rigid monomorphism")
    return {b: next(iter(f.image(b))) for b in f.source.names()}


def identity(K: Complex) -> Morphism:
    return Morphism(K, K, {b: K.generator(b) for b in K.names()})


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g ∘ f``."""
    if f.target != g.source:
        raise MorphismError("target of f differs from source of g")
    return Morphism(f.source, g.target, {b: g(f.image(b)) for b in f.source.names()})


def from_names(source: Complex, target: Complex, mapping: Mapping[str, str]) -> Morphism:
    """Morphism sending each source generator to a single target generator."""
    return Morphism(source, target, {b: target.generator(mapping.get(b, b)) for b in source.names()})


def is_isomorphism(f: Morphism) -> bool:
    """A rigid monomorphism that is onto the target basis, with valid inverse."""
    if not is_rigid_mono(f) or len(f.source) != len(f.target):
        return False
    inv = {v: k for k, v in basis_image(f).items()}
    back = from_names(f.target, f.source, inv)
    return validate_morphism(f).ok and validate_morphism(back).ok

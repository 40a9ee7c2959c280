"""Pushouts along rigid monomorphisms and pushout-products of rigid monos."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain
from .complex import BASIS, Complex, subcomplex
from .morphisms import Morphism, MorphismError, basis_image, is_rigid_mono
from .products import JOIN, TENSOR, product, product_pairs


class PushoutError(ValueError):
    pass


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    return name


def pushout(f: Morphism, u: Morphism) -> tuple[Complex, Morphism, Morphism]:
    """Pushout of ``L <-f- K -u-> M`` for rigid monomorphisms ``f`` and ``u``.

    The basis of ``N`` is the basis of ``L`` together with the generators of
    ``M`` outside the image of ``u``.  Those keep their names unless the name
    is already used in ``L``, in which case primes are appended.  Returns
    ``(N, v, g)`` with ``v: L -> N`` and ``g: M -> N``.
    """
    if f.source != u.source:
        raise PushoutError("the two legs do not share their source")
    for leg, label in ((f, "f"), (u, "u")):
        if not is_rigid_mono(leg):
            raise PushoutError(f"leg {label} is not a rigid monomorphism")
    L, M = f.target, u.target
    f_b = basis_image(f)
    u_inv = {m: k for k, m in basis_image(u).items()}

    taken = set(L.names())
    rename: dict[str, str] = {}
    for m in M.names():
        if m in u_inv:
            rename[m] = f_b[u_inv[m]]
        else:
            fresh = _fresh(m, taken)
            taken.add(fresh)
            rename[m] = fresh

    top = max(L.dim, M.dim)
    basis = [list(L.basis_in(n)) for n in range(top + 1)]
    d = dict(L.boundaries)
    e = dict(L.augmentations)
    for m in M.names():
        if m in u_inv:
            continue
        n = M.degree(m)
        basis[n].append(rename[m])
        if n == 0:
            e[rename[m]] = M.augmentation_of(m)
        else:
            d[rename[m]] = Chain(n - 1, {rename[y]: c for y, c in M.boundary_of(m).items()})
    N = Complex(basis, d, e, BASIS)
    v = Morphism(L, N, {b: N.generator(b) for b in L.names()})
    g = Morphism(M, N, {m: N.generator(rename[m]) for m in M.names()})
    return N, v, g


@dataclass(frozen=True)
class PushoutProduct:
    """Inclusion of the pushout-product domain into ``B⊙D``.

    ``complement`` lists the generators of ``B⊙D`` outside the domain, in
    basis order.
    """

    inclusion: Morphism
    complement: tuple[str, ...]

    @property
    def domain(self) -> Complex:
        return self.inclusion.source

    @property
    def codomain(self) -> Complex:
        return self.inclusion.target


def pushout_product(i: Morphism, j: Morphism, kind: str = TENSOR) -> PushoutProduct:
    """``i □ j`` for rigid monos ``i: A -> B`` and ``j: C -> D``.

    Realized as the subcomplex of ``B⊙D`` generated by ``B⊙j(C) ∪ i(A)⊙D``,
    plus ``B⋆∅ ∪ ∅⋆D`` for the join.
    """
    if kind not in (TENSOR, JOIN):
        raise ValueError(f"unknown product {kind!r}")
    for leg, label in ((i, "i"), (j, "j")):
        if not is_rigid_mono(leg):
            raise MorphismError(f"{label} is not a rigid monomorphism")
    B, D = i.target, j.target
    in_A = set(basis_image(i).values())
    in_C = set(basis_image(j).values())
    P = product(kind, B, D)
    keep = []
    for name, (b, dd) in product_pairs(kind, B, D).items():
        if b is None or dd is None or b in in_A or dd in in_C:
            keep.append(name)
    _, inclusion = subcomplex(P, keep)
    kept = set(keep)
    complement = tuple(b for b in P.names() if b not in kept)
    return PushoutProduct(inclusion, complement)

"""Standard complexes: disks and their boundaries, paths, orientals, lax cubes,
the collapse maps ``D_{n-1}⊗D_1 -> D_n`` and the formal presentation of the
free-standing reversible cell."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .complex import Complex, subcomplex
from .morphisms import Morphism, compose, identity
from .names import tensor_name
from .products import join, tensor, tensor_mor, tensor_unit


def _check(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"dimension must be a nonnegative integer, got {n!r}")


def disk(n: int) -> Complex:
    """The free complex on the globular ``n``-disk.

    Generators ``src_k``, ``tgt_k`` for ``k < n`` and ``cell_n``; every
    generator of degree ``k >= 1`` has boundary ``tgt_{k-1} - src_{k-1}``.
    """
    _check(n)
    basis = [[f"src_{k}", f"tgt_{k}"] for k in range(n)] + [[f"cell_{n}"]]
    d = {}
    for k in range(1, n + 1):
        dk = {f"tgt_{k - 1}": 1, f"src_{k - 1}": -1}
        names = [f"cell_{n}"] if k == n else [f"src_{k}", f"tgt_{k}"]
        for b in names:
            d[b] = dk
    return Complex(basis, d)


def boundary(n: int) -> Complex:
    """``disk(n)`` without its top generator; empty for ``n = 0``."""
    return sphere_inclusion(n).source


def sphere_inclusion(n: int) -> Morphism:
    _check(n)
    D = disk(n)
    _, inc = subcomplex(D, [b for b in D.names() if b != f"cell_{n}"])
    return inc


def path(n: int) -> Complex:
    """Objects ``v_0 .. v_n`` and arrows ``f_i : v_{i-1} -> v_i``."""
    _check(n)
    objects = [f"v_{i}" for i in range(n + 1)]
    arrows = [f"f_{i}" for i in range(1, n + 1)]
    d = {f"f_{i}": {f"v_{i}": 1, f"v_{i - 1}": -1} for i in range(1, n + 1)}
    return Complex([objects, arrows] if arrows else [objects], d)


def point(name: str) -> Complex:
    return Complex([[name]])


def oriental(n: int) -> Complex:
    """Iterated join ``v_0 ⋆ v_1 ⋆ ... ⋆ v_n`` of points.

    A generator is a word with a vertex or ``∅`` in each slot; the vertices
    present form the underlying simplex.
    """
    _check(n)
    return reduce(join, (point(f"v_{i}") for i in range(n + 1)))


def cube(n: int) -> Complex:
    """The ``n``-fold tensor power of ``disk(1)``; ``cube(0)`` is the tensor unit."""
    _check(n)
    if n == 0:
        return tensor_unit()
    return reduce(tensor, [disk(1)] * n)


def collapse_map(n: int) -> Morphism:
    """``disk(n-1)⊗disk(1) -> disk(n)``, collapsing both ends to points.

    ``a⊗src_0``, ``a⊗tgt_0`` go to ``src_0``, ``tgt_0`` when ``|a| = 0`` and
    to zero otherwise; ``a⊗cell_1`` goes to the generator of ``disk(n)`` one
    degree up (``src_k -> src_{k+1}``, ``tgt_k -> tgt_{k+1}``,
    ``cell_{n-1} -> cell_n``).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"collapse_map needs n >= 1, got {n!r}")
    A, I, D = disk(n - 1), disk(1), disk(n)
    source = tensor(A, I)
    mapping = {}
    for a in A.names():
        k = A.degree(a)
        for end in ("src_0", "tgt_0"):
            mapping[tensor_name(a, end)] = D.generator(end) if k == 0 else {}
        kind = a.split("_")[0]
        up = f"cell_{n}" if kind == "cell" else f"{kind}_{k + 1}"
        mapping[tensor_name(a, "cell_1")] = D.generator(up)
    return Morphism(source, D, mapping)


def cube_to_disk(n: int) -> Morphism:
    """``cube(n) -> disk(n)`` sending the top generator to ``cell_n``."""
    _check(n)
    if n <= 1:
        return Morphism(cube(n), disk(n), {b: disk(n).generator(b) for b in disk(n).names()})
    return compose(collapse_map(n), tensor_mor(cube_to_disk(n - 1), identity(disk(1))))


# -- formal presentation of the reversible cell ------------------------------


@dataclass(frozen=True)
class Generator:
    name: str
    dim: int
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name} : {self.source} => {self.target} @ {self.dim}"


@dataclass(frozen=True)
class PresentationDump:
    """Formal generators with source/target expressions over earlier ones.

    ``x`` and ``y`` name the boundary of the principal cell and are not
    generators themselves.
    """

    n: int
    generators: tuple[Generator, ...]
    boundary: tuple[str, str] = ("x", "y")

    def __str__(self) -> str:
        return "".join(f"{g}\n" for g in self.generators)

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.generators:
            out[g.dim] = out.get(g.dim, 0) + 1
        return out


def _indexed(base: str, word: tuple[str, ...]) -> str:
    return base if not word else f"{base}_{{{','.join(word)}}}"


def reversible_presentation(n: int, max_dim: int) -> PresentationDump:
    """Generators of the free-standing reversible ``n``-cell up to ``max_dim``.

    In dimension ``i > n`` there are ``2^(i-n)`` cells ``r_w`` and as many
    ``rbar_w``, indexed by sign words ``w`` of length ``i - n``.  With ``p``
    the prefix of ``w`` and ``c = ∘_{i-2}``:
    ``r_{p,-} : rbar_p c r_p => id(s(r_p))``,
    ``r_{p,+} : r_p c rbar_p => id(t(r_p))`` and ``rbar_{p,±}`` reversed.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"a reversible cell needs n >= 1, got {n!r}")
    if max_dim < n:
        raise ValueError("max_dim must be at least n")
    gens = [Generator("r", n, "x", "y"), Generator("rbar", n, "y", "x")]
    ends = {(): ("x", "y")}
    for i in range(n + 1, max_dim + 1):
        new_ends = {}
        for prefix in itertools.product("-+", repeat=i - n - 1):
            r, rbar = _indexed("r", prefix), _indexed("rbar", prefix)
            src, tgt = ends[prefix]
            level = i - 2
            loops = {
                "-": (f"{rbar} ∘_{level} {r}", f"id({src})"),
                "+": (f"{r} ∘_{level} {rbar}", f"id({tgt})"),
            }
            for sign in "-+":
                word = prefix + (sign,)
                there, back = loops[sign]
                gens.append(Generator(_indexed("r", word), i, there, back))
                new_ends[word] = (there, back)
            for sign in "-+":
                word = prefix + (sign,)
                there, back = loops[sign]
                gens.append(Generator(_indexed("rbar", word), i, back, there))
        ends = new_ends
    return PresentationDump(n, tuple(gens))

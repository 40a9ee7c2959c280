"""Integer chains over a named basis.

A chain is a finite formal sum ``sum n_b * b`` of basis identifiers that all
live in one degree.  Chains are immutable; every operation returns a new one.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class DegreeError(ValueError):
    """Raised when chains of different degrees are combined."""


class Chain:
    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        acc: dict[str, int] = {}
        for name, n in coeffs:
            if not isinstance(n, int) or isinstance(n, bool):
                raise TypeError(f"coefficient of {name!r} must be an int, got {n!r}")
            acc[name] = acc.get(name, 0) + n
        self.degree = degree
        self._coeffs = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def zero(cls, degree: int) -> Chain:
        return cls(degree)

    @classmethod
    def generator(cls, degree: int, name: str, n: int = 1) -> Chain:
        return cls(degree, {name: n})

    # mapping-like access

    def __getitem__(self, name: str) -> int:
        return self._coeffs.get(name, 0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def as_dict(self) -> dict[str, int]:
        return dict(self._coeffs)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # group structure

    def _check(self, other: Chain) -> None:
        if not isinstance(other, Chain):
            raise TypeError(f"expected a Chain, got {type(other).__name__}")
        if other.degree != self.degree:
            raise DegreeError(f"cannot combine chains of degrees {self.degree} and {other.degree}")

    def __add__(self, other: Chain) -> Chain:
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return Chain(self.degree, out)

    def __neg__(self) -> Chain:
        return Chain(self.degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: Chain) -> Chain:
        self._check(other)
        return self + (-other)

    def __mul__(self, n: int) -> Chain:
        if not isinstance(n, int):
            return NotImplemented
        return Chain(self.degree, {k: n * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    # order structure

    def pos_part(self) -> Chain:
        return Chain(self.degree, {k: v for k, v in self._coeffs.items() if v > 0})

    def neg_part(self) -> Chain:
        return Chain(self.degree, {k: -v for k, v in self._coeffs.items() if v < 0})

    def is_positive(self) -> bool:
        return all(v > 0 for v in self._coeffs.values())

    def max_abs(self) -> int:
        return max((abs(v) for v in self._coeffs.values()), default=0)

    # value semantics

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Chain({self.degree}, {dict(sorted(self._coeffs.items()))!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for name, n in sorted(self._coeffs.items()):
            sign = "-" if n < 0 else "+"
            mag = "" if abs(n) == 1 else f"{abs(n)}*"
            parts.append((sign, f"{mag}{name}"))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def add(a: Chain, b: Chain) -> Chain:
    return a + b


def scale(n: int, x: Chain) -> Chain:
    return n * x


def pos_part(x: Chain) -> Chain:
    """The positive part: coefficients > 0 kept, the rest dropped."""
    return x.pos_part()


def neg_part(x: Chain) -> Chain:
    """The negative part, with signs flipped, so ``x == pos_part(x) - neg_part(x)``."""
    return x.neg_part()


def is_positive(x: Chain) -> bool:
    return x.is_positive()


def linear_sum(degree: int, terms: Iterable[tuple[int, Chain]]) -> Chain:
    acc: dict[str, int] = {}
    for n, ch in terms:
        if ch.degree != degree:
            raise DegreeError(f"term of degree {ch.degree} in a sum of degree {degree}")
        for k, v in ch.items():
            acc[k] = acc.get(k, 0) + n * v
    return Chain(degree, acc)

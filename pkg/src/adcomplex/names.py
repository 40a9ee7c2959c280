"""Canonical basis names for tensor and join products.

Product names are flat words: ``a⊗b⊗c`` rather than ``(a⊗b)⊗c``, and
``a⋆∅⋆c`` for joins, so iterated products are associative on the nose.  A
word of one operator appearing inside a word of the other is parenthesized,
e.g. ``(a⊗b)⋆c``.  Atomic names may not contain the reserved characters.
"""

from __future__ import annotations

TENSOR = "⊗"
JOIN = "⋆"
EMPTY = "∅"
RESERVED = frozenset(TENSOR + JOIN + EMPTY + "()")


def is_atomic(name: str) -> bool:
    return bool(name) and not (set(name) & RESERVED)


def split_top(name: str) -> tuple[str | None, list[str]]:
    """Split ``name`` at its top-level operator.

    Returns ``(op, parts)`` with ``op`` one of ``TENSOR``, ``JOIN`` or ``None``
    for a name that is not a product word.  Parenthesized parts are unwrapped.
    """
    depth = 0
    op = None
    cuts = []
    for i, ch in enumerate(name):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {name!r}")
        elif depth == 0 and ch in (TENSOR, JOIN):
            if op is not None and ch != op:
                raise ValueError(f"mixed top-level operators in {name!r}")
            op = ch
            cuts.append(i)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {name!r}")
    if op is None:
        if name.startswith("(") and name.endswith(")"):
            return split_top(name[1:-1])
        return None, [name]
    parts = []
    start = 0
    for i in cuts + [len(name)]:
        parts.append(_unwrap(name[start:i]))
        start = i + 1
    return op, parts


def _unwrap(part: str) -> str:
    if part.startswith("(") and part.endswith(")"):
        depth = 0
        for i, ch in enumerate(part):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(part) - 1:
                return part
        return part[1:-1]
    return part


def _factors(name: str, op: str) -> list[str]:
    top, parts = split_top(name)
    return parts if top == op else [name]


def _render(parts: list[str], op: str) -> str:
    if len(parts) == 1:
        return parts[0]
    out = []
    for p in parts:
        top, _ = split_top(p)
        out.append(f"({p})" if top is not None and top != op else p)
    return op.join(out)


def tensor_name(a: str, b: str) -> str:
    return _render(_factors(a, TENSOR) + _factors(b, TENSOR), TENSOR)


def join_name(a: str | None, a_arity: int, b: str | None, b_arity: int) -> str:
    """Name of ``a⋆b``; ``None`` stands for the empty slot of a factor.

    The empty slot of a factor whose names are ``k``-fold join words is ``k``
    copies of ``∅``, which keeps ``(x⋆∅)⋆∅`` and ``x⋆(∅⋆∅)`` identical.
    """
    left = [EMPTY] * a_arity if a is None else _factors(a, JOIN)
    right = [EMPTY] * b_arity if b is None else _factors(b, JOIN)
    parts = left + right
    if all(p == EMPTY for p in parts):
        raise ValueError("the empty word is not a basis element")
    return _render(parts, JOIN)


def join_arity(names) -> int:
    """Number of join factors a complex with these basis names came from.

    Zero for a complex without generators (the unit of the join).
    """
    for name in names:
        top, parts = split_top(name)
        return len(parts) if top == JOIN else 1
    return 0

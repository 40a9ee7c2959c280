"""Command-line front end.

Exit status: 0 on success, 1 when a check or construction fails on
well-formed input, 2 when an input cannot be read or parsed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io, shapes
from .cells import enumerate_cells
from .colimits import PushoutError, pushout, pushout_product
from .complex import Complex, atom, is_strongly_loop_free, is_unital, validate
from .cylinders import (
    CylinderError,
    invert_cylinder,
    is_identity_cylinder,
    is_valid_cylinder,
    vertical_compose,
)
from .morphisms import MorphismError, validate_morphism
from .products import (
    DUALS,
    PRODUCTS,
    check_strength_triangles,
    join_unit,
    product,
    strength_sigma,
    tensor_unit,
)

OK, FAILED, BAD_INPUT = 0, 1, 2

SHAPES = {
    "disk": shapes.disk,
    "boundary": shapes.boundary,
    "path": shapes.path,
    "oriental": shapes.oriental,
    "cube": shapes.cube,
    "tensor-unit": lambda n: tensor_unit(),
    "join-unit": lambda n: join_unit(),
}


class Failure(Exception):
    """A semantic failure: report the message and exit with status 1."""


def format_counts(K: Complex) -> str:
    return " ".join(str(c) for c in K.counts()) if K.dim >= 0 else "empty"


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_complex(K: Complex, out: str | None) -> None:
    if out is not None:
        _write(io.dumps(io.complex_to_doc(K)), out)
    print(format_counts(K))


def _load_valid_morphism(path: str):
    f = io.load_morphism(path)
    report = validate_morphism(f)
    if not report.ok:
        raise Failure(f"{path}: not a morphism\n{report}")
    return f


# -- commands ----------------------------------------------------------------


def cmd_validate(args) -> int:
    K = io.load_complex(args.file)
    status = OK
    report = validate(K)
    print(f"chain complex: {report}")
    status |= not report.ok
    if args.unital:
        ok, failing = is_unital(K)
        print("unital: ok" if ok else f"unital: no atom augmentation 1 at {', '.join(failing)}")
        status |= not ok
    if args.strong_loop_free:
        res = is_strongly_loop_free(K)
        print("strongly loop-free: ok" if res.ok else f"strongly loop-free: cycle {' -> '.join(res.cycle)}")
        status |= not res.ok
    return FAILED if status else OK


def cmd_product(args) -> int:
    K = product(args.kind, io.load_complex(args.a), io.load_complex(args.b))
    _emit_complex(K, args.output)
    return OK


def cmd_shape(args) -> int:
    _emit_complex(SHAPES[args.name](args.n), args.output)
    return OK


def cmd_inclusion(args) -> int:
    f = shapes.sphere_inclusion(args.n)
    _write(io.dumps(io.morphism_to_doc(f)), args.output)
    return OK


def cmd_presentation(args) -> int:
    _write(str(shapes.reversible_presentation(args.n, args.max_dim)), None)
    return OK


def cmd_pushout(args) -> int:
    f = _load_valid_morphism(args.f)
    u = _load_valid_morphism(args.g)
    try:
        N, _, _ = pushout(f, u)
    except PushoutError as exc:
        raise Failure(str(exc)) from None
    fresh = [b for b in N.names() if b not in f.target]
    _emit_complex(N, args.output)
    print(f"added: {' '.join(fresh) if fresh else '(none)'}")
    return OK


def cmd_pp(args) -> int:
    i = _load_valid_morphism(args.i)
    j = _load_valid_morphism(args.j)
    try:
        res = pushout_product(i, j, args.kind)
    except MorphismError as exc:
        raise Failure(str(exc)) from None
    if args.output is not None:
        _write(io.dumps(io.morphism_to_doc(res.inclusion)), args.output)
    print(f"domain: {format_counts(res.domain)} ({len(res.domain)} generators)")
    print(f"codomain: {format_counts(res.codomain)} ({len(res.codomain)} generators)")
    print(f"complement: {' '.join(res.complement) if res.complement else '(none)'}")
    return OK


def cmd_atom(args) -> int:
    K = io.load_complex(args.file)
    if args.gen not in K:
        raise Failure(f"{args.gen!r} is not a basis element")
    a = atom(K, args.gen)
    print(a.table)
    if not a.is_cell:
        print("not a cell: augmentation of an end differs from 1")
        return FAILED
    return OK


def cmd_cells(args) -> int:
    K = io.load_complex(args.file)
    if args.dim < 0 or args.coeff_bound < 0:
        raise Failure("--dim and --coeff-bound must be nonnegative")
    found = enumerate_cells(K, args.dim, args.coeff_bound)
    for c in found:
        print(c)
    print(f"{len(found)} cells")
    return OK


def cmd_dual(args) -> int:
    which = "op" if args.op else "co"
    _emit_complex(DUALS[which](io.load_complex(args.file)), args.output)
    return OK


def cmd_strength_check(args) -> int:
    K, L, M = (io.load_complex(p) for p in (args.k, args.l, args.m))
    T = io.load_complex(args.t) if args.t else M
    status = OK
    sigma = validate_morphism(strength_sigma(K, L, M))
    print("sigma is a chain map" if sigma.ok else f"sigma fails:\n{sigma}")
    status |= not sigma.ok
    tri = check_strength_triangles(K, L, M, T)
    print("triangles commute" if tri.ok else f"triangles fail:\n{tri}")
    status |= not tri.ok
    return FAILED if status else OK


def cmd_cyl_invert(args) -> int:
    c = io.load_cylinder(args.file)
    report = is_valid_cylinder(c)
    if not report.ok:
        raise Failure(f"not a cylinder\n{report}")
    try:
        inv = invert_cylinder(c)
    except (CylinderError, ValueError) as exc:
        raise Failure(str(exc)) from None
    checks = {
        "valid": is_valid_cylinder(inv).ok,
        "inverse after": is_identity_cylinder(vertical_compose(inv, c)),
        "inverse before": is_identity_cylinder(vertical_compose(c, inv)),
    }
    if args.output is not None:
        _write(io.dumps(io.cylinder_to_doc(inv)), args.output)
    for name, ok in checks.items():
        print(f"{name}: {'ok' if ok else 'FAILED'}")
    return OK if all(checks.values()) else FAILED


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adc", description="Augmented directed complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check d∘d = 0 and e∘d = 0, optionally more")
    p.add_argument("file")
    p.add_argument("--unital", action="store_true")
    p.add_argument("--strong-loop-free", action="store_true")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("product", help="tensor product or join of two complexes")
    p.add_argument("kind", choices=PRODUCTS)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_product)

    p = sub.add_parser("shape", help="write a standard complex")
    p.add_argument("name", choices=sorted(SHAPES))
    p.add_argument("n", type=int, nargs="?", default=0, help="dimension (ignored by the units)")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_shape)

    p = sub.add_parser("inclusion", help="write the boundary inclusion into disk(n)")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_inclusion)

    p = sub.add_parser("presentation", help="generators of the free-standing reversible n-cell")
    p.add_argument("n", type=int)
    p.add_argument("max_dim", type=int)
    p.set_defaults(run=cmd_presentation)

    p = sub.add_parser("pushout", help="pushout of two rigid monomorphisms with a common source")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_pushout)

    p = sub.add_parser("pp", help="pushout-product of two rigid monomorphisms")
    p.add_argument("kind", choices=PRODUCTS)
    p.add_argument("i")
    p.add_argument("j")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_pp)

    p = sub.add_parser("atom", help="table of a basis element")
    p.add_argument("file")
    p.add_argument("gen")
    p.set_defaults(run=cmd_atom)

    p = sub.add_parser("cells", help="enumerate cells with bounded coefficients")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, required=True)
    p.set_defaults(run=cmd_cells)

    p = sub.add_parser("dual", help="op or co dual of a complex")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--op", action="store_true")
    group.add_argument("--co", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("strength-check", help="check the strength K⊗(L⋆M) -> (K⊗L)⋆M")
    p.add_argument("k")
    p.add_argument("l")
    p.add_argument("m")
    p.add_argument("t", nargs="?", help="join factor for the triangles (default: m)")
    p.set_defaults(run=cmd_strength_check)

    p = sub.add_parser("cyl-invert", help="invert a cylinder and verify both composites")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_cyl_invert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.run(args)
    except (io.FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (Failure, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())


import pytest

from adcomplex import (
    CellTable,
    CompositionError,
    atom,
    compose,
    compose_after,
    enumerate_cells,
    evaluate_chain,
    identity,
    identity_on,
    invert_cell,
    is_unital,
    is_valid_cell,
    make_cell,
    map_cell,
    relax_positivity,
    source_k,
    target_k,
    tensor,
    whisker_compose,
)
from adcomplex.cells import pad
from adcomplex.cylinders import universal_cylinder
from adcomplex.shapes import collapse_map, cube, cube_to_disk, disk, oriental, path, sphere_inclusion

from oracles import brute_cells


def table_key(c: CellTable):
    return (tuple(frozenset(x.items()) for x in c.minus), tuple(frozenset(x.items()) for x in c.plus))


def lax_square():
    return atom(tensor(disk(1), disk(1)), "cell_1⊗cell_1").table


def test_validity_reports():
    D1 = disk(1)
    assert is_valid_cell(atom(disk(2), "cell_2").table).ok
    doubled = make_cell(D1, [{"src_0": 2}, {"cell_1": 2}], [{"tgt_0": 2}, {"cell_1": 2}])
    assert [v.check for v in is_valid_cell(doubled).violations] == ["augmentation"]
    point = make_cell(D1, [{"src_0": 1}], [{"src_0": 1}])
    assert is_valid_cell(identity_on(point)).ok
    negative = make_cell(D1, [{"tgt_0": 1}, {"cell_1": -1}], [{"src_0": 1}, {"cell_1": -1}])
    assert [v.check for v in is_valid_cell(negative).violations] == ["positive"]
    assert is_valid_cell(CellTable(relax_positivity(D1), negative.minus, negative.plus)).ok
    unequal = make_cell(D1, [{"src_0": 1}, {"cell_1": 1}], [{"tgt_0": 1}, {}])
    assert [v.check for v in is_valid_cell(unequal).violations] == ["top"]
    wrong_d = make_cell(D1, [{"src_0": 1}, {"cell_1": 1}], [{"src_0": 1}, {"cell_1": 1}])
    assert [v.check for v in is_valid_cell(wrong_d).violations] == ["boundary"]


def test_malformed_tables():
    with pytest.raises(ValueError):
        CellTable(disk(1), (), ())
    with pytest.raises(ValueError):
        make_cell(disk(1), [{"cell_1": 1}], [{"cell_1": 1}])


def test_truncation():
    sq = lax_square()
    s0 = source_k(sq, 0)
    assert s0.dim == 0 and str(s0.top) == "src_0⊗src_0"
    assert str(target_k(sq, 0).top) == "tgt_0⊗tgt_0"
    assert source_k(sq, 2) == sq == target_k(sq, 2)
    assert sq.source() == source_k(sq, 1)
    w = atom(disk(1), "cell_1").table
    for k in range(2):
        assert target_k(identity_on(w), k) == target_k(w, k)
    with pytest.raises(ValueError):
        source_k(sq, 3)


def test_identities_are_valid():
    for K in (disk(0), disk(1), tensor(disk(1), disk(1))):
        for b in K.names():
            c = atom(K, b).table
            assert is_valid_cell(identity_on(c)).ok
            assert is_valid_cell(pad(c, c.dim + 3)).ok


def test_path_composite():
    P = path(2)
    f, g = atom(P, "f_1").table, atom(P, "f_2").table
    gf = compose(f, g, 0)
    assert gf == compose_after(g, f, 0)
    assert str(gf) == "(v_0 | f_1 + f_2 ; v_2 | f_1 + f_2)"
    assert is_valid_cell(gf).ok
    with pytest.raises(CompositionError, match="level 0"):
        compose(g, f, 0)


def test_composition_errors():
    P = path(2)
    f = atom(P, "f_1").table
    with pytest.raises(CompositionError):
        compose(f, identity_on(f), 0)
    with pytest.raises(CompositionError):
        compose(f, f, 2)
    assert compose(f, f, 1) == f


def test_whiskering_against_manual_padding():
    u = universal_cylinder(2)
    a0, a1 = u.plus[0], u.plus[1]
    x = source_k(u.x, 2)
    inner = whisker_compose(x, a0, 0)
    assert inner == compose(x, pad(a0, 2), 0)
    outer = compose_after(a1, inner, 1)
    assert outer == compose(pad(inner, 2), a1, 1)
    assert is_valid_cell(outer).ok
    point = atom(disk(1), "src_0").table
    arrow = atom(disk(1), "cell_1").table
    assert whisker_compose(point, arrow, 0) == compose(identity_on(point), arrow, 0)
    with pytest.raises(CompositionError):
        whisker_compose(arrow, point, 0)


def _bracketings(terms, levels):
    """Every binary bracketing of the chain that composes, as evaluated tables."""
    if not levels:
        yield terms[0]
        return
    for split in range(len(levels)):
        for left in _bracketings(terms[: split + 1], levels[:split]):
            for right in _bracketings(terms[split + 1 :], levels[split + 1 :]):
                try:
                    yield compose_after(left, right, levels[split])
                except CompositionError:
                    continue


@pytest.mark.parametrize("n", [1, 2, 3])
def test_whiskered_chains_do_not_depend_on_bracketing(n):
    c = universal_cylinder(n)
    for k in range(1, n + 1):
        for eps, end in (("-", source_k), ("+", target_k)):
            desc_terms = [c.plus[j] for j in range(k - 1, -1, -1)] + [end(c.x, k)]
            desc_levels = list(range(k - 1, -1, -1))
            asc_terms = [end(c.y, k)] + [c.minus[j] for j in range(k)]
            asc_levels = list(range(k))
            for terms, levels in ((desc_terms, desc_levels), (asc_terms, asc_levels)):
                value = evaluate_chain(terms, levels)
                results = list(_bracketings(terms, levels))
                assert results, "no bracketing composes"
                assert all(r == value for r in results)


def test_inverse():
    R = relax_positivity(tensor(disk(1), disk(1)))
    sq = CellTable(R, lax_square().minus, lax_square().plus)
    inv = invert_cell(sq)
    assert str(inv.top) == "-cell_1⊗cell_1"
    assert is_valid_cell(inv).ok
    assert compose(sq, inv, 1) == identity_on(source_k(sq, 1))
    assert compose(inv, sq, 1) == identity_on(target_k(sq, 1))
    assert invert_cell(inv) == sq
    w = identity_on(source_k(sq, 1))
    assert invert_cell(w) == w
    with pytest.raises(ValueError):
        invert_cell(lax_square())
    with pytest.raises(ValueError):
        invert_cell(source_k(sq, 0))


def test_small_enumerations():
    assert len(enumerate_cells(disk(0), 0, 1)) == 1
    arrows = enumerate_cells(disk(1), 1, 1)
    assert len(arrows) == 3
    assert sum(1 for c in arrows if c.top) == 1
    paths = {str(c.top) for c in enumerate_cells(path(2), 1, 1)}
    assert paths == {"0", "f_1", "f_2", "f_1 + f_2"}
    with pytest.raises(ValueError):
        enumerate_cells(disk(1), -1, 1)


@pytest.mark.parametrize(
    "K,n,bound,relaxed",
    [
        (disk(1), 1, 2, False),
        (path(2), 1, 2, False),
        (disk(2), 2, 1, False),
        (disk(1), 1, 1, True),
        (path(2), 1, 1, True),
        (oriental(2), 2, 1, False),
    ],
)
def test_enumeration_matches_brute_force(K, n, bound, relaxed):
    if relaxed:
        K = relax_positivity(K)
    got = enumerate_cells(K, n, bound)
    assert all(is_valid_cell(c).ok for c in got)
    keys = [table_key(c) for c in got]
    assert len(set(keys)) == len(keys)
    assert set(keys) == set(brute_cells(K, n, bound, relaxed))


def test_enumeration_is_deterministic():
    K = tensor(disk(1), disk(1))
    assert enumerate_cells(K, 2, 1) == enumerate_cells(K, 2, 1)


def test_map_cell():
    D = disk(2)
    c = atom(D, "cell_2").table
    assert map_cell(identity(D), c) == c
    inc = sphere_inclusion(2)
    for b in inc.source.names():
        assert map_cell(inc, atom(inc.source, b).table) == atom(D, b).table
    with pytest.raises(ValueError):
        map_cell(inc, c)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_principal_cells_collapse(n):
    A = collapse_map(n).source
    top = A.basis_in(A.dim)[0]
    assert map_cell(collapse_map(n), atom(A, top).table) == atom(disk(n), f"cell_{n}").table
    C = cube(n)
    assert map_cell(cube_to_disk(n), atom(C, C.basis_in(n)[0]).table) == atom(disk(n), f"cell_{n}").table


def test_atoms_of_unital_shapes_are_cells():
    for K in (disk(3), path(3), oriental(3), cube(3), tensor(disk(1), disk(2))):
        assert is_unital(K)[0]
        for b in K.names():
            assert is_valid_cell(atom(K, b).table).ok

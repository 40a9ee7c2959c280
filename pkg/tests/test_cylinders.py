import pytest

from adcomplex import (
    CellTable,
    Cylinder,
    CylinderError,
    atom,
    compose,
    invert_cylinder,
    is_invertible_cylinder,
    is_valid_cylinder,
    product_cylinder,
    relax_positivity,
    tensor,
    vertical_compose,
    vertical_identity,
)
from adcomplex.cells import invert_cell, make_cell
from adcomplex.cylinders import cell_morphism, is_identity_cylinder, map_cylinder, universal_cylinder
from adcomplex.morphisms import validate_morphism
from adcomplex.products import tensor_mor
from adcomplex.shapes import disk, path


def relaxed(c: CellTable, K) -> CellTable:
    return CellTable(K, c.minus, c.plus)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_universal_cylinder_is_valid(n):
    assert is_valid_cylinder(universal_cylinder(n)).ok


def test_vertical_identity():
    for K, b in ((disk(0), "cell_0"), (disk(2), "cell_2"), (tensor(disk(1), disk(1)), "cell_1⊗cell_1")):
        x = atom(K, b).table
        c = vertical_identity(x)
        assert is_valid_cylinder(c).ok
        assert is_invertible_cylinder(c)
        assert invert_cylinder(c) == c
    with pytest.raises(CylinderError):
        vertical_identity(make_cell(disk(1), [{"src_0": 2}], [{"src_0": 2}]))


def test_perturbed_cylinder_is_rejected():
    c = universal_cylinder(1)
    a = c.plus[0]
    bumped = make_cell(a.ambient, a.minus[:-1] + (a.top + a.ambient.generator("cell_1⊗src_0"),), a.plus[:-1] + (a.top + a.ambient.generator("cell_1⊗src_0"),))
    broken = Cylinder(c.ambient, c.x, c.y, c.minus, (bumped,) + c.plus[1:])
    report = is_valid_cylinder(broken)
    assert not report.ok
    assert any(v.element == "alpha_0^+" for v in report.violations)


def test_typing_failure_names_the_equation():
    c = universal_cylinder(1)
    swapped = Cylinder(c.ambient, c.x, c.y, (c.plus[0], c.minus[1]), (c.minus[0], c.plus[1]))
    report = is_valid_cylinder(swapped)
    assert {(v.check, v.element) for v in report.violations} >= {("source", "alpha_1^-")}


def test_cell_morphism():
    z = atom(tensor(disk(1), disk(1)), "cell_1⊗cell_1").table
    f = cell_morphism(z)
    assert validate_morphism(f).ok
    assert f.image("cell_2") == z.top


def test_stacked_cylinders_in_path_times_arrow():
    P = path(2)
    f1, f2 = atom(P, "f_1").table, atom(P, "f_2").table
    z = atom(disk(1), "cell_1").table
    c1, c2 = product_cylinder(f1, z), product_cylinder(f2, z)
    both = vertical_compose(c2, c1)
    assert is_valid_cylinder(both).ok
    assert both == product_cylinder(compose(f1, f2, 0), z)
    for eps in "-+":
        assert both.alpha(0, eps) == compose(c1.alpha(0, eps), c2.alpha(0, eps), 0)


def test_unit_laws():
    c = product_cylinder(atom(path(1), "f_1").table, atom(disk(2), "cell_2").table)
    assert vertical_compose(vertical_identity(c.y), c) == c
    assert vertical_compose(c, vertical_identity(c.x)) == c


def test_vertical_compose_errors():
    z = atom(disk(1), "cell_1").table
    c = product_cylinder(atom(path(2), "f_1").table, z)
    with pytest.raises(CylinderError):
        vertical_compose(c, c)
    other = product_cylinder(atom(path(2), "f_2").table, atom(disk(1), "src_0").table)
    with pytest.raises(CylinderError):
        vertical_compose(other, c)


def test_dimension_zero_inverse_is_the_inverse_arrow():
    R = relax_positivity(tensor(disk(1), disk(0)))
    u = universal_cylinder(0)
    c = Cylinder(R, relaxed(u.x, R), relaxed(u.y, R), (relaxed(u.minus[0], R),), (relaxed(u.plus[0], R),))
    inv = invert_cylinder(c)
    assert inv.minus[0] == invert_cell(c.minus[0])
    assert inv.x == c.y and inv.y == c.x


def test_relaxed_inverse_of_the_universal_two_cylinder():
    K = relax_positivity(disk(1))
    L = relax_positivity(disk(2))
    f = relaxed(atom(disk(1), "cell_1").table, K)
    z = relaxed(atom(disk(2), "cell_2").table, L)
    c = product_cylinder(f, z)
    inv = invert_cylinder(c)
    assert is_valid_cylinder(inv).ok
    assert is_identity_cylinder(vertical_compose(inv, c))
    assert is_identity_cylinder(vertical_compose(c, inv))
    assert invert_cylinder(inv) == c


def test_basis_mode_invertibility():
    c = universal_cylinder(1)
    assert not is_invertible_cylinder(c)
    with pytest.raises(CylinderError, match="alpha_0"):
        invert_cylinder(c)
    point = atom(disk(1), "src_0").table
    assert is_invertible_cylinder(vertical_identity(point))


def test_map_cylinder_preserves_validity():
    f = atom(path(2), "f_2").table
    z = atom(disk(1), "cell_1").table
    c = product_cylinder(f, z)
    u = universal_cylinder(1)
    assert map_cylinder(tensor_mor(cell_morphism(f), cell_morphism(z)), u) == c


def test_product_cylinder_needs_an_arrow():
    z = atom(disk(1), "cell_1").table
    with pytest.raises(CylinderError):
        product_cylinder(atom(disk(2), "cell_2").table, z)

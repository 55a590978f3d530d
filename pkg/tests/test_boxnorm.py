import pytest

from equivar import boxnorm, groups, gsets, mackey
from equivar.mackey import mackey_iso, realize


def test_box_of_constant_z_is_constant_z():
    zp = mackey.constant_Z()
    bx = realize(boxnorm.box(zp, zp))
    cert = mackey_iso(bx, realize(zp))
    assert cert.status == "isomorphic"


def test_norm_pipeline_m3():
    _, d3 = boxnorm.norm_constant_z(3)
    assert d3.invariants() == [(1, []), (1, []), (2, []), (2, [])]
    assert mackey.check_mackey_axiom(d3)


def test_norm_pipeline_m9():
    _, d9 = boxnorm.norm_constant_z(9)
    assert d9.invariants() == [(1, []), (1, []), (2, []), (2, []),
                               (3, []), (3, [])]


def test_norm_pipeline_requires_odd_m():
    with pytest.raises(AssertionError):
        boxnorm.norm_constant_z(4)


def test_restriction_of_norm():
    p3, _ = boxnorm.norm_constant_z(3)
    d6 = groups.dihedral(3)
    # to D_2: constant Z
    r_d2 = realize(boxnorm.restrict_presentation(p3, d6.d2(1)))
    assert mackey_iso(r_d2, realize(mackey.constant_Z())).status == "isomorphic"
    # to mu_3: the Burnside functor of C_3
    r_mu3 = realize(boxnorm.restrict_presentation(p3, d6.mu(3)))
    c3 = groups.cyclic(3)
    a_mu3 = realize(mackey.representable(c3, gsets.trivial_gset(c3, 1)))
    assert mackey_iso(r_mu3, a_mu3).status == "isomorphic"


def test_conjugated_norm_agrees():
    d6 = groups.dihedral(3)
    zp = mackey.constant_Z()
    _, d3 = boxnorm.norm_constant_z(3)
    g1 = d6.rotation(2)
    zt = d6.zeta_tau_subgroup()
    assert d6.conjugate_subgroup(g1, d6.d2(1)) == zt
    czp = boxnorm.conjugate_presentation(zp, d6, d6.d2(1), zt, g1)
    normed_c = boxnorm.norm_mackey(czp, d6, zt)
    assert mackey_iso(realize(normed_c), d3).status == "isomorphic"


def test_geometric_fixed_points_of_norm():
    _, d3 = boxnorm.norm_constant_z(3)
    d6 = groups.dihedral(3)
    phi = boxnorm.geometric_fixed_points(d3, d6.mu(3))
    cert = mackey_iso(phi, realize(mackey.constant_Z()))
    assert cert.status == "isomorphic"


NORM_REPRESENTABLE_CASES = [
    ("dihedral", 3, "d2", 1), ("dihedral", 3, "d2", 2),
    ("dihedral", 3, "mu", 2), ("dihedral", 5, "d2", 2),
    ("dihedral", 7, "d2", 2), ("cyclic", 6, "c2", 2),
]


@pytest.mark.parametrize("kind,n,sub,npts", NORM_REPRESENTABLE_CASES)
def test_norm_of_representable_is_representable_of_coinduction(
        kind, n, sub, npts):
    if kind == "dihedral":
        g = groups.dihedral(n)
        h = g.d2(1) if sub == "d2" else g.mu(n)
    else:
        g = groups.cyclic(n)
        h = next(cls.representative for cls in g.subgroup_classes()
                 if len(cls.representative) == 2)
    assert g.n // len(h) <= 7
    hgrp, _ = g.subgroup_as_group(h)
    t = gsets.trivial_gset(hgrp, npts)
    normed = boxnorm.norm_mackey(mackey.representable(hgrp, t), g, h)
    target = mackey.representable(g, gsets.coinduce(g, h, t))
    cert = mackey_iso(realize(normed), realize(target))
    assert cert.status == "isomorphic"

from equivar import groups, gsets


def test_orbit_gset_and_fixed_points():
    d6 = groups.dihedral(3)
    x = gsets.orbit_gset(d6, d6.d2(1))
    assert x.n == 3
    assert len(x.fixed_points(d6.d2(1))) == 1
    assert len(x.fixed_points((d6.identity,))) == 3
    assert len(x.fixed_points(d6.mu(3))) == 0


def test_table_of_marks_d2():
    assert gsets.table_of_marks(groups.dihedral(1)) == [[2, 0], [1, 1]]


def test_table_of_marks_triangular():
    for g in (groups.dihedral(3), groups.cyclic(6), groups.symmetric(3)):
        tm = gsets.table_of_marks(g)
        n = len(tm)
        # classes are ordered by size, so the table is lower triangular
        # with positive diagonal (hence the marks map is injective)
        for i in range(n):
            assert tm[i][i] > 0
            for j in range(i + 1, n):
                assert tm[i][j] == 0


def test_restriction_of_orbit():
    d6 = groups.dihedral(3)
    x = gsets.orbit_gset(d6, d6.d2(1))
    r = x.restrict(d6.d2(1))
    t = r.iso_type()
    assert sorted(t.counts.values()) == [1, 1]  # D_2/D_2 + D_2/e


def test_coinduce_counts():
    g = groups.dihedral(3)
    h = g.d2(1)
    hgrp, _ = g.subgroup_as_group(h)
    x = gsets.coinduce(g, h, gsets.trivial_gset(hgrp, 2))
    assert x.n == 2 ** 3
    # multiplicative fixed point formula agrees with materialization
    for cls in g.subgroup_classes():
        k = cls.representative
        assert len(x.fixed_points(k)) == gsets.coinduction_fixed_point_count(
            g, h, gsets.trivial_gset(hgrp, 2), k)


def test_coinduce_orbit_structure_p3():
    # Map^{D_2}(D_6, {a,b}): 2 fixed, 2 orbits D_6/D_2, 0 free
    g = groups.dihedral(3)
    h = g.d2(1)
    hgrp, _ = g.subgroup_as_group(h)
    x = gsets.coinduce(g, h, gsets.trivial_gset(hgrp, 2))
    orbits = x.orbits()
    sizes = sorted(len(o) for o in orbits)
    assert sizes == [1, 1, 3, 3]


def test_gset_product():
    g = groups.dihedral(3)
    a = gsets.orbit_gset(g, g.d2(1))
    b = gsets.orbit_gset(g, g.mu(3))
    p = a.product(b)
    assert p.n == 6
    assert len(p.orbits()) == 1

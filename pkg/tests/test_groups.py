from equivar import groups


def test_dihedral_basic_structure():
    d6 = groups.dihedral(3)
    assert d6.order == 6
    assert d6.element_order(d6.reflection(1)) == 2
    assert d6.element_order(d6.rotation(1)) == 3
    # tau^2 = zeta^m = (tau zeta)^2 = e
    t, z = d6.tau, d6.zeta
    assert d6.mul[t][t] == d6.identity
    assert d6.element_order(z) == 3
    tz = d6.mul[t][z]
    assert d6.mul[tz][tz] == d6.identity


def test_dihedral_is_memoized():
    assert groups.dihedral(3) is groups.dihedral(3)
    assert groups.dihedral(1) is groups.dihedral(1)


def test_subgroup_classes_odd_prime():
    # for odd prime p: classes e, D_2, mu_p, D_2p
    for p in (3, 5, 7):
        g = groups.dihedral(p)
        assert len(g.subgroup_classes()) == 4
        names = {g.subgroup_name(c.representative) for c in g.subgroup_classes()}
        assert names == {"mu_1", "D_2", "mu_%d" % p, "D_%d" % (2 * p)}


def test_subgroup_class_counts_m9():
    g = groups.dihedral(9)
    names = [g.subgroup_name(c.representative) for c in g.subgroup_classes()]
    assert sorted(names) == sorted(
        ["mu_1", "D_2", "mu_3", "D_6", "mu_9", "D_18"])


def test_double_cosets_dihedral():
    d6 = groups.dihedral(3)
    assert len(d6.double_cosets(d6.d2(1), d6.d2(1))) == 2
    d14 = groups.dihedral(7)
    assert len(d14.double_cosets(d14.d2(1), d14.d2(1))) == 4  # (p + 1) / 2


def test_weyl_groups():
    d6 = groups.dihedral(3)
    w, _ = d6.weyl_group(d6.mu(3))
    assert w.n == 2
    w, _ = d6.weyl_group(d6.d2(3))
    assert w.n == 1
    w, _ = d6.weyl_group((d6.identity,))
    assert w.n == 6


def test_zeta_tau_subgroup_is_conjugate_to_d2():
    for m in (3, 5, 9):
        dm = groups.dihedral(m)
        g1 = dm.rotation((m + 1) // 2)
        assert dm.conjugate_subgroup(g1, dm.d2(1)) == dm.zeta_tau_subgroup()


def test_quotient_by_rotations_has_order_two():
    g = groups.dihedral(9)
    q, proj = g.quotient_group(g.mu(9))
    assert q.n == 2
    assert proj[g.tau] != q.identity


def test_subgroup_as_group_roundtrip():
    g = groups.dihedral(15)
    sub = g.d2(5)
    k, embed = g.subgroup_as_group(sub)
    assert k.n == 10
    pos = {e: i for i, e in enumerate(embed)}
    for a in sub:
        for b in sub:
            assert k.mul[pos[a]][pos[b]] == pos[g.mul[a][b]]


def test_permutation_group_families():
    assert groups.cyclic(6).n == 6
    assert groups.symmetric(4).n == 24
    assert groups.alternating(4).n == 12
    assert groups.trivial_group().n == 1
    assert len(groups.symmetric(4).subgroup_classes()) == 11
    assert len(groups.alternating(4).subgroup_classes()) == 5

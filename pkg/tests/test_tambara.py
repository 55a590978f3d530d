import random

import pytest

from equivar import groups, tambara
from equivar.burnside import c_p_d_p


@pytest.mark.parametrize("p", [3, 5, 7])
def test_dihedral_formula_matches_general_route(p):
    g = groups.dihedral(p)
    e1 = tambara.reciprocity_sum(g, g.d2(1))
    e2 = tambara.reciprocity_sum_dihedral(p)
    assert e1 == e2, (e1.text(g), e2.text(g))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_summand_counts(p):
    g = groups.dihedral(p)
    expr = tambara.reciprocity_sum(g, g.d2(1))
    xs = 2 ** ((p + 1) // 2) - 2
    ys = (2 ** (p - 1) - 1) // p + 1 - 2 ** ((p - 1) // 2)
    assert len(expr.summands()) == 2 + xs + ys


def test_p3_formula_text():
    g = groups.dihedral(3)
    text = tambara.reciprocity_sum_dihedral(3).text(g)
    assert text == (
        "N[D_2->D_6](a) + N[D_2->D_6](b)"
        " + tr[D_2->D_6](N[mu_1->D_2](w[z^1](res[D_2->mu_1](a)))*b)"
        " + tr[D_2->D_6](N[mu_1->D_2](w[z^1](res[D_2->mu_1](b)))*a)")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_norm_of_two_through_formula(p):
    g = groups.dihedral(p)
    inst = tambara.BurnsideInstance(g)
    d2 = g.d2(1)
    one = inst.one(d2)
    expr = tambara.reciprocity_sum(g, d2)
    val = tambara.evaluate(expr, inst, {"a": one, "b": one})
    bf = tambara.brute_force_norm_of_sum(inst, d2, one, one)
    assert val == bf
    c, d = c_p_d_p(p)
    grp, _, pos = inst.level(tuple(range(g.n)))
    marks = val.marks()
    # value of N(2) at the full-group mark is 2
    assert marks[-1] == 2
    assert val.coeffs[grp.class_index_of((pos[0],))] == d
    assert val.coeffs[grp.class_index_of(
        tuple(sorted(pos[x] for x in d2)))] == 2 * c


def test_b_zero_collapses_to_norm():
    g3 = groups.dihedral(3)
    inst = tambara.BurnsideInstance(g3)
    h = g3.d2(1)
    a, _ = tambara.random_effective_pair(inst.one(h).group, random.Random(1))
    z = inst.one(h).scale(0)
    expr = tambara.reciprocity_sum(g3, h)
    val = tambara.evaluate(expr, inst, {"a": a, "b": z})
    assert val == inst.norm(h, tuple(range(g3.n)), a)


GROUPS = [
    ("d4", lambda: groups.dihedral(4)),
    ("d6", lambda: groups.dihedral(6)),
    ("c6", lambda: groups.cyclic(6)),
    ("s3", lambda: groups.symmetric(3)),
    ("a4", lambda: groups.alternating(4)),
]


@pytest.mark.parametrize("name,mk", GROUPS, ids=[n for n, _ in GROUPS])
def test_formula_vs_brute_force_all_classes(name, mk):
    g = mk()
    rng = random.Random(7)
    inst = tambara.BurnsideInstance(g)
    for cls in g.subgroup_classes():
        h = cls.representative
        if 2 ** (g.n // len(h)) > tambara.DIRECT_ENUMERATION_LIMIT:
            continue
        expr = tambara.reciprocity_sum(g, h)
        hgrp, _ = g.subgroup_as_group(h)
        for _ in range(2):
            a, b = tambara.random_effective_pair(hgrp, rng)
            val = tambara.evaluate(expr, inst, {"a": a, "b": b})
            bf = tambara.brute_force_norm_of_sum(inst, h, a, b)
            assert val == bf, (name, h)
        for mod in (0, 4, 6):
            fp = tambara.FixedPointInstance(g, mod)
            a, b = rng.randrange(0, 9), rng.randrange(0, 9)
            assert tambara.evaluate(expr, fp, {"a": a, "b": b}) == \
                tambara.brute_force_norm_of_sum(fp, h, a, b), (name, h, mod)


def test_zeta_tau_subgroup_of_d12():
    # the trickiest conjugation case: H = <zeta tau> inside D_12
    g = groups.dihedral(6)
    h = g.zeta_tau_subgroup()
    expr = tambara.reciprocity_sum(g, h)
    fp = tambara.FixedPointInstance(g, 0)
    assert tambara.evaluate(expr, fp, {"a": 2, "b": 1}) == 3 ** (g.n // 2)
    inst = tambara.BurnsideInstance(g)
    rng = random.Random(5)
    hgrp, _ = g.subgroup_as_group(h)
    for _ in range(3):
        a, b = tambara.random_effective_pair(hgrp, rng)
        assert tambara.evaluate(expr, inst, {"a": a, "b": b}) == \
            tambara.brute_force_norm_of_sum(inst, h, a, b)


def test_grouped_evaluation_matches_direct():
    rng = random.Random(9)
    for g in [groups.cyclic(5), groups.symmetric(3), groups.dihedral(4),
              groups.alternating(4)]:
        e_level = (g.identity,)
        inst = tambara.BurnsideInstance(g)
        expr = tambara.reciprocity_sum(g, e_level)
        counts = tambara.orbit_counts_by_stabilizer(g)
        assert sum(counts.values()) == len(expr.summands())
        assert tambara.orbit_count_total(g, e_level) == len(expr.summands())
        for _ in range(2):
            a, b = tambara.random_effective_pair(inst.one(e_level).group, rng)
            val = tambara.evaluate(expr, inst, {"a": a, "b": b})
            assert val == tambara.evaluate_reciprocity_grouped(inst, a, b)
        for mod in (0, 4, 6):
            fp = tambara.FixedPointInstance(g, mod)
            a, b = rng.randrange(0, 9), rng.randrange(0, 9)
            assert tambara.evaluate(expr, fp, {"a": a, "b": b}) == \
                tambara.evaluate_reciprocity_grouped(fp, a, b)


def test_grouped_evaluation_large_group():
    rng = random.Random(13)
    g = groups.symmetric(4)
    inst = tambara.BurnsideInstance(g)
    e_level = (g.identity,)
    a, b = tambara.random_effective_pair(inst.one(e_level).group, rng)
    gv = tambara.evaluate_reciprocity_grouped(inst, a, b)
    bf = tambara.brute_force_norm_of_sum(inst, e_level, a, b)
    assert gv == bf
    fp = tambara.FixedPointInstance(g, 0)
    assert tambara.evaluate_reciprocity_grouped(fp, 2, 1) == 3 ** g.n


def test_canonical_ordering_is_stable():
    g = groups.dihedral(5)
    e1 = tambara.reciprocity_sum(g, g.d2(1))
    e2 = tambara.reciprocity_sum(g, g.d2(1))
    assert e1.key() == e2.key()
    # summands ordered by descending stabilizer size (untransferred terms
    # have full-group stabilizer)
    sizes = [len(s.sub) if s.kind == "tr" else g.n for s in e1.summands()]
    assert sizes == sorted(sizes, reverse=True)

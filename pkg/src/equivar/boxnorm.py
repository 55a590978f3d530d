"""Box products, multiplicative norms and geometric fixed points.

Norms of presented Mackey functors are computed by coinduction applied
legwise to the presenting spans: coinduction preserves pullbacks, so it
is functorial on effective span morphisms.  Large norms are broken into
prime-index steps, certifying the intermediate answer against a small
canonical presentation before continuing.
"""

from . import abgrp, groups, mackey
from .burnside import BurnsideElement, Span, sub_gset
from .gsets import GMap, GSet, coinduce, trivial_gset
from .mackey import (LewisDiagram, MackeyPresentation, mackey_iso,
                     norm_quotient_presentation, realize)


def span_product(s, t):
    """Product span (X1 x X2 <- W1 x W2 -> Y1 x Y2)."""
    x = s.x.product(t.x)
    y = s.y.product(t.y)
    apex = s.apex.product(t.apex)
    left = [s.left[a] * t.x.n + t.left[b]
            for a in range(s.apex.n) for b in range(t.apex.n)]
    right = [s.right[a] * t.y.n + t.right[b]
             for a in range(s.apex.n) for b in range(t.apex.n)]
    return Span(x, y, apex, left, right, check=False)


def box(p1, p2):
    """Box product of presentations: A_S box A_T = A_{S x T}.

    Relations are the relations of each factor crossed with the identity
    of the other generator.
    """
    assert p1.group is p2.group
    gen = p1.gen.product(p2.gen)
    id1 = Span.identity(p1.gen)
    id2 = Span.identity(p2.gen)
    rels = []
    for r, rp in p1.relations:
        rels.append((span_product(r, id2), span_product(rp, id2)))
    for r, rp in p2.relations:
        rels.append((span_product(id1, r), span_product(id1, rp)))
    return MackeyPresentation(p1.group, gen, rels)


def norm_span(group, h_sub, span, budget=None):
    """Norm of an effective morphism: legwise coinduction of the span."""
    kw = {} if budget is None else {"budget": budget}
    nx = coinduce(group, h_sub, span.x, **kw)
    ny = coinduce(group, h_sub, span.y, **kw)
    na = coinduce(group, h_sub, span.apex, **kw)
    left = na.pushforward(GMap(span.apex, span.x, span.left, check=False), nx)
    right = na.pushforward(GMap(span.apex, span.y, span.right, check=False), ny)
    return Span(nx, ny, na, left.val, right.val, check=False)


def norm_mackey(pres, group, h_sub, budget=None):
    """Norm a presented Mackey functor from a subgroup H up to G.

    The presentation is reflexively completed (the generator is added as
    a summand of the relation source with identity spans on both sides),
    all relations are combined into a single pair of effective spans,
    those are coinduced legwise, and the normed relations are read off
    one G-orbit of the coinduced relation source at a time.
    """
    hgrp, embed = group.subgroup_as_group(h_sub)
    assert pres.group.n == hgrp.n
    kw = {} if budget is None else {"budget": budget}
    t = pres.gen
    if not pres.relations:
        return MackeyPresentation(group, coinduce(group, h_sub, t, **kw), [])

    u_all = t
    offsets = []
    for r, _ in pres.relations:
        offsets.append(u_all.n)
        u_all = u_all.disjoint_union(r.y)

    def combined(side):
        apex = t
        left = list(range(t.n))
        right = list(range(t.n))
        for i, pair in enumerate(pres.relations):
            r = pair[side]
            apex = apex.disjoint_union(r.apex)
            left += list(r.left)
            right += [offsets[i] + v for v in r.right]
        return Span(t, u_all, apex, left, right, check=False)

    d0 = combined(0)
    d1 = combined(1)
    nt = coinduce(group, h_sub, t, **kw)
    nu = coinduce(group, h_sub, u_all, **kw)

    def normed_legs(d):
        na = coinduce(group, h_sub, d.apex, **kw)
        lv = na.pushforward(GMap(d.apex, t, d.left, check=False), nt).val
        rv = na.pushforward(GMap(d.apex, u_all, d.right, check=False), nu).val
        return na, lv, rv

    na0, l0, r0 = normed_legs(d0)
    na1, l1, r1 = normed_legs(d1)

    relations = []
    for orbit in nu.orbits():
        oset = set(orbit)
        pos = {p: i for i, p in enumerate(sorted(orbit))}
        uo = sub_gset(nu, orbit)
        spans = []
        for na, lv, rv in ((na0, l0, r0), (na1, l1, r1)):
            pts = [v for v in range(na.n) if rv[v] in oset]
            apex = sub_gset(na, pts)
            left = [lv[v] for v in pts]
            right = [pos[rv[v]] for v in pts]
            spans.append(Span(nt, uo, apex, left, right, check=False))
        relations.append((spans[0], spans[1]))
    return MackeyPresentation(group, nt, relations)


def transport_presentation(pres, new_group, elt_map):
    """Move a presentation across a group isomorphism given by an element map."""
    assert new_group.n == pres.group.n
    memo = {}

    def move(x):
        if id(x) in memo:
            return memo[id(x)]
        act = [None] * new_group.n
        for g in range(pres.group.n):
            act[elt_map[g]] = list(x.act[g])
        out = GSet(new_group, x.n, act, list(x.labels), check=False)
        memo[id(x)] = out
        return out

    gen = move(pres.gen)
    rels = [(Span(move(r.x), move(r.y), move(r.apex), r.left, r.right, check=False),
             Span(move(rp.x), move(rp.y), move(rp.apex), rp.left, rp.right,
                  check=False))
            for r, rp in pres.relations]
    return MackeyPresentation(new_group, gen, rels)


def dihedral_subgroup_map(small, big, rot_step):
    """Element map of the standalone D_2m' into D_2m sending the rotation
    generator to rotation^rot_step; returns (h_sub, hgrp, elt_map)."""
    m_small, m_big = small.m, big.m
    assert rot_step * m_small % m_big == 0
    globals_ = []
    for idx in range(small.n):
        eps, i = divmod(idx, m_small)
        globals_.append(eps * m_big + (i * rot_step) % m_big)
    h_sub = tuple(sorted(globals_))
    hgrp, embed = big.subgroup_as_group(h_sub)
    pos = {g: i for i, g in enumerate(embed)}
    elt_map = [pos[g] for g in globals_]
    return h_sub, hgrp, elt_map


def odd_prime_factors(m):
    out = []
    d = 3
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 2
    if m > 1:
        out.append(m)
    return out


def norm_constant_z(m, certify=True, budget=None):
    """N_{D_2}^{D_2m} of the constant functor Z, for odd m.

    Computed in prime-index steps; after each step the result is
    certified isomorphic to A^{D_2k}/(2 - [D_2k/mu_k]) and that small
    canonical presentation is carried into the next step.  A failed
    certificate aborts.
    """
    assert m % 2 == 1 and m >= 1
    if m == 1:
        pres = mackey.constant_Z()
        return pres, realize(pres)
    cur_pres = mackey.constant_Z()
    cur_m = 1
    for p in odd_prime_factors(m):
        new_m = cur_m * p
        big = groups.dihedral(new_m)
        small = cur_pres.group
        h_sub, hgrp, elt_map = dihedral_subgroup_map(small, big, p)
        moved = transport_presentation(cur_pres, hgrp, elt_map)
        normed = norm_mackey(moved, big, h_sub, budget=budget)
        canon = norm_quotient_presentation(big)
        if certify:
            cert = mackey_iso(realize(normed), realize(canon))
            if cert.status != "isomorphic":
                raise ArithmeticError(
                    "norm step %d -> %d failed certification: %s"
                    % (cur_m, new_m, cert))
        cur_pres, cur_m = canon, new_m
    return cur_pres, realize(cur_pres)


def restrict_presentation(pres, h_sub):
    """Restriction of a presented functor to a subgroup: i*A_S = A_{i*S}."""
    group = pres.group
    hgrp, embed = group.subgroup_as_group(h_sub)
    memo = {}

    def move(x):
        if id(x) in memo:
            return memo[id(x)]
        out = x.restrict(h_sub)
        memo[id(x)] = out
        return out

    gen = move(pres.gen)
    rels = [(Span(move(r.x), move(r.y), move(r.apex), r.left, r.right, check=False),
             Span(move(rp.x), move(rp.y), move(rp.apex), rp.left, rp.right,
                  check=False))
            for r, rp in pres.relations]
    return MackeyPresentation(hgrp, gen, rels)


def conjugate_presentation(pres_small, big, h_from, h_to, g_elt):
    """Transport a presentation along conjugation by g: H -> gHg^-1.

    pres_small lives over the standalone group of h_from inside big.
    """
    hf, embf = big.subgroup_as_group(h_from)
    ht, embt = big.subgroup_as_group(h_to)
    assert pres_small.group.n == hf.n
    post = {e: i for i, e in enumerate(embt)}
    elt_map = [post[big.conj(g_elt, embf[i])] for i in range(hf.n)]
    return transport_presentation(pres_small, ht, elt_map)


def geometric_fixed_points(diag, mu_sub):
    """Phi^N of a realized diagram over a dihedral group, N = mu_d normal.

    Levels not containing N are killed; transfers from them are added as
    relations after saturating under all structure maps; the surviving
    levels are reindexed over G/N.
    """
    group = diag.group
    nset = set(mu_sub)
    nlev = len(diag.values)
    gens = [[] for _ in range(nlev)]
    for i, cls in enumerate(diag.classes):
        if not nset <= set(cls.representative):
            for j in range(diag.values[i].ngens):
                e = [0] * diag.values[i].ngens
                e[j] = 1
                gens[i].append(e)

    def add(i, v):
        if diag.values[i].is_zero_elem(v):
            return False
        if abgrp.lattice_contains(gens[i] + diag.values[i].rel_columns,
                                  diag.values[i].ngens, v):
            return False
        gens[i].append(list(v))
        return True

    changed = True
    while changed:
        changed = False
        for i in range(nlev):
            for v in list(gens[i]):
                for (a, b), hom in diag.tr.items():
                    if a == i and add(b, hom(v)):
                        changed = True
                for (a, b), hom in diag.res.items():
                    if a == i and add(b, hom(v)):
                        changed = True
                for _, hom in diag.weyl[i]:
                    if add(i, hom(v)):
                        changed = True

    values = [diag.values[i].with_extra_relations(gens[i]) for i in range(nlev)]
    res = {k: abgrp.AbHom(values[k[0]], values[k[1]], h.matrix, check=False)
           for k, h in diag.res.items()}
    tr = {k: abgrp.AbHom(values[k[0]], values[k[1]], h.matrix, check=False)
          for k, h in diag.tr.items()}
    weyl = {i: [(lab, abgrp.AbHom(values[i], values[i], h.matrix, check=False))
                for lab, h in diag.weyl[i]] for i in diag.weyl}
    quotiented = LewisDiagram(diag.group, values, res, tr, weyl, basis=diag.basis,
                              generator=diag.generator,
                              green_mult=diag.green_mult)
    return mackey.fixed_points_functor(quotiented, mu_sub)

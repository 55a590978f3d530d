"""Symbolic Tambara reciprocity for sums, with evaluation and oracles.

The norm of a sum expands into one transfer summand per orbit of
equivariant labelings Map^H(G,{a,b}); each summand is a product of
norms of Weyl-translated restrictions indexed by double cosets.  For
very large index [G:H] the expansion is evaluated in grouped form by
counting orbits with a given stabilizer through Moebius inversion over
the subgroup lattice.
"""

import random
from collections import Counter
from math import comb

from . import burnside, groups, gsets
from .burnside import BurnsideElement
from .gsets import coinduce, trivial_gset

DIRECT_ENUMERATION_LIMIT = 1 << 16


class TambaraExpr:
    """Expression tree; levels are subgroups given as sorted element tuples."""

    def __init__(self, kind, level, children=(), name=None, value=None,
                 sub=None, g_elt=None):
        self.kind = kind          # var | int | sum | prod | res | tr | norm | weyl
        self.level = level
        self.children = list(children)
        self.name = name          # var name
        self.value = value        # int literal
        self.sub = sub            # other subgroup for res/tr/norm
        self.g_elt = g_elt        # group element for weyl

    # -- constructors ------------------------------------------------------
    @staticmethod
    def var(name, level):
        return TambaraExpr("var", level, name=name)

    @staticmethod
    def lit(value, level):
        return TambaraExpr("int", level, value=value)

    @staticmethod
    def sum_of(terms, level):
        terms = [t for t in terms]
        if len(terms) == 1:
            return terms[0]
        return TambaraExpr("sum", level, terms)

    @staticmethod
    def prod_of(factors, level):
        factors = [f for f in factors]
        if len(factors) == 1:
            return factors[0]
        return TambaraExpr("prod", level, factors)

    @staticmethod
    def res(k_level, h_level, child):
        if tuple(k_level) == tuple(h_level):
            return child
        return TambaraExpr("res", h_level, [child], sub=k_level)

    @staticmethod
    def tr(h_level, k_level, child):
        if tuple(h_level) == tuple(k_level):
            return child
        return TambaraExpr("tr", k_level, [child], sub=h_level)

    @staticmethod
    def norm(h_level, k_level, child):
        if tuple(h_level) == tuple(k_level):
            return child
        return TambaraExpr("norm", k_level, [child], sub=h_level)

    @staticmethod
    def weyl(g_elt, new_level, child, identity=False):
        if identity:
            return child
        return TambaraExpr("weyl", new_level, [child], g_elt=g_elt)

    # -- canonical form ----------------------------------------------------
    def key(self):
        if self.kind == "var":
            return ("var", self.name, self.level)
        if self.kind == "int":
            return ("int", self.value, self.level)
        child_keys = [c.key() for c in self.children]
        if self.kind in ("sum", "prod"):
            child_keys = sorted(child_keys)
        extra = self.sub if self.sub is not None else self.g_elt
        return (self.kind, self.level, extra, tuple(child_keys))

    def canonical(self):
        kids = [c.canonical() for c in self.children]
        if self.kind == "prod":
            kids.sort(key=lambda c: c.key())
        out = TambaraExpr(self.kind, self.level, kids, name=self.name,
                          value=self.value, sub=self.sub, g_elt=self.g_elt)
        return out

    def __eq__(self, other):
        return isinstance(other, TambaraExpr) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- printing ----------------------------------------------------------
    def text(self, group=None):
        name = _subgroup_printer(group)
        if self.kind == "var":
            return self.name
        if self.kind == "int":
            return str(self.value)
        if self.kind == "sum":
            return " + ".join(c.text(group) for c in self.children)
        if self.kind == "prod":
            return "*".join(_paren(c, group) for c in self.children)
        if self.kind == "res":
            return "res[%s->%s](%s)" % (name(self.sub), name(self.level),
                                        self.children[0].text(group))
        if self.kind == "tr":
            return "tr[%s->%s](%s)" % (name(self.sub), name(self.level),
                                       self.children[0].text(group))
        if self.kind == "norm":
            return "N[%s->%s](%s)" % (name(self.sub), name(self.level),
                                      self.children[0].text(group))
        return "w[%s](%s)" % (group.labels[self.g_elt] if group else self.g_elt,
                              self.children[0].text(group))

    def latex(self, group=None):
        name = _subgroup_printer(group)
        if self.kind == "var":
            return self.name
        if self.kind == "int":
            return str(self.value)
        if self.kind == "sum":
            return " + ".join(c.latex(group) for c in self.children)
        if self.kind == "prod":
            return " \\cdot ".join(_paren(c, group, latex=True)
                                   for c in self.children)
        if self.kind == "res":
            return "\\mathrm{res}^{%s}_{%s}(%s)" % (
                name(self.sub), name(self.level), self.children[0].latex(group))
        if self.kind == "tr":
            return "\\mathrm{tr}_{%s}^{%s}(%s)" % (
                name(self.sub), name(self.level), self.children[0].latex(group))
        if self.kind == "norm":
            return "N_{%s}^{%s}(%s)" % (
                name(self.sub), name(self.level), self.children[0].latex(group))
        return "%s \\cdot %s" % (group.labels[self.g_elt] if group
                                 else self.g_elt, self.children[0].latex(group))

    def summands(self):
        return self.children if self.kind == "sum" else [self]

    def __repr__(self):
        return "TambaraExpr(%s)" % self.text()


def _paren(c, group, latex=False):
    s = c.latex(group) if latex else c.text(group)
    return "(" + s + ")" if c.kind == "sum" else s


def _subgroup_printer(group):
    def name(level):
        if group is not None and hasattr(group, "subgroup_name"):
            return group.subgroup_name(level)
        return "H%d" % len(level)
    return name


# ---------------------------------------------------------------------------
# word sets for the dihedral specialization


class WordSets:
    """Nonconstant reflection-fixed labelings X and free-orbit reps Y of the
    p-gon vertex labelings by {a,b}."""

    def __init__(self, p):
        self.p = p
        g = groups.dihedral(p)
        fc = coinduce(g, g.d2(1), trivial_gset(
            g.subgroup_as_group(g.d2(1))[0], 2))
        d2 = g.d2(1)
        d2set = set(d2)
        x_words, y_words = [], []
        seen = set()
        for pt in range(fc.n):
            if pt in seen:
                continue
            orbit = sorted({fc.act[h][pt] for h in range(g.n)})
            seen |= set(orbit)
            stabs = {q: fc.stabilizer(q) for q in orbit}
            if any(len(s) == g.n for s in stabs.values()):
                continue  # constant labelings
            with_d2 = sorted(q for q, s in stabs.items() if set(s) == d2set)
            if with_d2:
                x_words.append(with_d2[0])
            else:
                y_words.append(min(orbit))
        self.gset = fc
        self.group = g
        self.x = sorted(x_words)
        self.y = sorted(y_words)
        assert len(self.x) == 2 ** ((p + 1) // 2) - 2
        assert len(self.y) == (2 ** (p - 1) - 1) // p + 1 - 2 ** ((p - 1) // 2)

    def letters(self, pt):
        """The labels x_i = x(zeta^i) for i = 0..p-1, as 'a'/'b'."""
        g = self.group
        return ["ab"[function_value(g, g.d2(1), self.gset, pt, g.rotation(i))]
                for i in range(g.m)]


def function_value(group, h_sub, fc, pt, g_elt):
    """F(g) for F the coinduced point pt: the tuple position of the coset Hg."""
    pos_of = getattr(fc, "_pos_of", None)
    if pos_of is None:
        pos_of = {}
        for j, r in enumerate(fc.positions):
            for h in h_sub:
                pos_of[group.mul[h][r]] = j
        fc._pos_of = pos_of
    return fc.tuples[pt][pos_of[g_elt]]


# ---------------------------------------------------------------------------
# the general reciprocity expression


def reciprocity_sum(group, h_sub, budget=DIRECT_ENUMERATION_LIMIT):
    """Symbolic expansion of N_H^G(a+b), one transfer summand per orbit.

    >>> from . import groups
    >>> g = groups.dihedral(3)
    >>> expr = reciprocity_sum(g, tuple(sorted(range(g.n))))
    >>> expr.text(g)
    'a + b'
    """
    h_sub = tuple(sorted(h_sub))
    g_level = tuple(range(group.n))
    index = group.n // len(h_sub)
    assert 2 ** index <= budget, "enumeration budget exceeded; use grouped evaluation"
    hgrp, _ = group.subgroup_as_group(h_sub)
    fc = coinduce(group, h_sub, trivial_gset(hgrp, 2))
    summands = []
    seen = set()
    for pt in range(fc.n):
        if pt in seen:
            continue
        orbit = sorted({fc.act[x][pt] for x in range(group.n)})
        seen |= set(orbit)
        k_sets = {q: tuple(fc.stabilizer(q)) for q in orbit}
        k_cls_rep = group.subgroup_classes()[
            group.class_index_of(k_sets[orbit[0]])].representative
        reps = [q for q in orbit if k_sets[q] == k_cls_rep]
        cands = [_summand(group, h_sub, fc, q, k_cls_rep) for q in reps]
        best = min(cands, key=lambda e: e.key())
        summands.append((len(k_cls_rep), best))
    summands.sort(key=lambda t: (-t[0], t[1].key()))
    return TambaraExpr.sum_of([s for _, s in summands], g_level).canonical()


def _summand(group, h_sub, fc, pt, k_sub):
    """tr_K^G of the product of norms of translated restrictions for one orbit.

    The factor for the double coset H delta K carries the letter F(delta),
    restricted to H cap delta K delta^-1, translated by delta down to
    K cap delta^-1 H delta, and normed up to K; its multiplicative weight
    [K : K cap delta^-1 H delta] is the number of H-coset positions inside
    H delta K, which is what the expansion of the norm of a sum requires.
    """
    g_level = tuple(range(group.n))
    h_set = set(h_sub)
    factors = []
    for gamma in group.double_cosets(h_sub, k_sub):
        inner = tuple(sorted(x for x in k_sub if group.conj(gamma, x) in h_set))
        upper = tuple(sorted(group.conj(gamma, x) for x in inner))
        letter = "ab"[function_value(group, h_sub, fc, pt, gamma)]
        node = TambaraExpr.var(letter, h_sub)
        node = TambaraExpr.res(h_sub, upper, node)
        node = TambaraExpr.weyl(gamma, inner, node,
                                identity=(gamma == group.identity))
        node = TambaraExpr.norm(inner, k_sub, node)
        factors.append(node)
    prod = TambaraExpr.prod_of(factors, k_sub)
    return TambaraExpr.tr(k_sub, g_level, prod)


def reciprocity_sum_dihedral(p):
    """The dihedral N_{D_2}^{D_2p}(a+b) formula built from the word sets X, Y."""
    w = WordSets(p)
    g = w.group
    g_level = tuple(range(g.n))
    d2 = g.d2(1)
    e_level = (g.identity,)
    terms = [(g.n, TambaraExpr.norm(d2, g_level, TambaraExpr.var(v, d2)))
             for v in ("a", "b")]
    d2set = set(d2)
    for pt in w.x:
        orbit = sorted({w.gset.act[x][pt] for x in range(g.n)})
        cands = []
        for q in orbit:
            if set(w.gset.stabilizer(q)) != d2set:
                continue
            letters = w.letters(q)
            factors = [TambaraExpr.var(letters[0], d2)]
            for i in range(1, (p + 1) // 2):
                node = TambaraExpr.var(letters[i], d2)
                node = TambaraExpr.res(d2, e_level, node)
                node = TambaraExpr.weyl(g.rotation(i), e_level, node)
                node = TambaraExpr.norm(e_level, d2, node)
                factors.append(node)
            cands.append(TambaraExpr.tr(
                d2, g_level, TambaraExpr.prod_of(factors, d2)))
        terms.append((2, min(cands, key=lambda c: c.key())))
    for pt in w.y:
        # the transfer summand is independent of the orbit representative;
        # minimize over the orbit to match the general construction
        orbit = sorted({w.gset.act[x][pt] for x in range(g.n)})
        cands = []
        for q in orbit:
            factors = []
            for i in range(p):
                letter = "ab"[function_value(g, d2, w.gset, q, g.rotation(i))]
                node = TambaraExpr.var(letter, d2)
                node = TambaraExpr.res(d2, e_level, node)
                node = TambaraExpr.weyl(g.rotation(i), e_level, node,
                                        identity=(i == 0))
                factors.append(node)
            cands.append(TambaraExpr.tr(
                e_level, g_level, TambaraExpr.prod_of(factors, e_level)))
        terms.append((1, min(cands, key=lambda c: c.key())))
    terms.sort(key=lambda t: (-t[0], t[1].key()))
    return TambaraExpr.sum_of([t for _, t in terms], g_level).canonical()


# ---------------------------------------------------------------------------
# Tambara functor instances


class BurnsideInstance:
    """The Burnside Tambara functor: levelwise Burnside rings of subgroups,
    with all operations computed through marks."""

    def __init__(self, group):
        self.group = group
        self._levels = {}

    def level(self, sub):
        sub = tuple(sorted(sub))
        if sub not in self._levels:
            grp, embed = self.group.subgroup_as_group(sub)
            self._levels[sub] = (grp, embed, {e: i for i, e in enumerate(embed)})
        return self._levels[sub]

    def one(self, sub):
        grp, _, _ = self.level(sub)
        return BurnsideElement.one(grp)

    def lit(self, n, sub):
        return self.one(sub).scale(n)

    def add(self, sub, x, y):
        return x + y

    def mul(self, sub, x, y):
        return x * y

    def _rel_sub(self, big, small):
        _, _, pos = self.level(big)
        return tuple(sorted(pos[x] for x in small))

    def res(self, k_sub, h_sub, x):
        rel = self._rel_sub(k_sub, h_sub)
        over_rel = burnside.res(x, rel)
        return self._relabel(k_sub, rel, h_sub, over_rel)

    def tr(self, h_sub, k_sub, x):
        kgrp, _, _ = self.level(k_sub)
        rel = self._rel_sub(k_sub, h_sub)
        return burnside.tr(self._to_rel(k_sub, rel, h_sub, x), kgrp, rel)

    def norm(self, h_sub, k_sub, x):
        kgrp, _, _ = self.level(k_sub)
        rel = self._rel_sub(k_sub, h_sub)
        return burnside.norm(self._to_rel(k_sub, rel, h_sub, x), kgrp, rel)

    def weyl(self, g_elt, h_sub, x):
        """Move x at level H to level g^-1 H g along conjugation."""
        g_elt = self.group.inv[g_elt]
        new_sub = tuple(sorted(self.group.conj(g_elt, a) for a in h_sub))
        hgrp, embed, _ = self.level(h_sub)
        ngrp, _, npos = self.level(new_sub)
        elt_map = [npos[self.group.conj(g_elt, e)] for e in embed]
        return self._transport(hgrp, ngrp, elt_map, x)

    # internal re-labelings between "subgroup of standalone K" and "standalone H"
    def _relabel(self, k_sub, rel, h_sub, x):
        kgrp, kembed, _ = self.level(k_sub)
        hgrp, _, hpos = self.level(h_sub)
        relgrp, relembed = kgrp.subgroup_as_group(rel)
        elt_map = [hpos[kembed[relembed[i]]] for i in range(relgrp.n)]
        return self._transport(relgrp, hgrp, elt_map, x)

    def _to_rel(self, k_sub, rel, h_sub, x):
        kgrp, kembed, _ = self.level(k_sub)
        hgrp, hembed, _ = self.level(h_sub)
        relgrp, relembed = kgrp.subgroup_as_group(rel)
        pos = {kembed[relembed[i]]: i for i in range(relgrp.n)}
        elt_map = [pos[hembed[i]] for i in range(hgrp.n)]
        return self._transport(hgrp, relgrp, elt_map, x)

    @staticmethod
    def _transport(src_grp, dst_grp, elt_map, x):
        """Move a Burnside element along a group isomorphism (element map)."""
        assert src_grp.n == dst_grp.n
        out = [0] * burnside.class_count(dst_grp)
        for ci, c in enumerate(x.coeffs):
            if c:
                rep = src_grp.subgroup_classes()[ci].representative
                img = tuple(sorted(elt_map[a] for a in rep))
                out[dst_grp.class_index_of(img)] += c
        return BurnsideElement(dst_grp, out)


class FixedPointInstance:
    """Fixed-point Tambara functor of a commutative ring with trivial action."""

    def __init__(self, group, modulus=0):
        self.group = group
        self.modulus = modulus  # 0 means the integers

    def _red(self, x):
        return x % self.modulus if self.modulus else x

    def one(self, sub):
        return self._red(1)

    def lit(self, n, sub):
        return self._red(n)

    def add(self, sub, x, y):
        return self._red(x + y)

    def mul(self, sub, x, y):
        return self._red(x * y)

    def res(self, k_sub, h_sub, x):
        return x

    def tr(self, h_sub, k_sub, x):
        return self._red((len(k_sub) // len(h_sub)) * x)

    def norm(self, h_sub, k_sub, x):
        return self._red(x ** (len(k_sub) // len(h_sub)))

    def weyl(self, g_elt, h_sub, x):
        return x


def evaluate(expr, instance, bindings):
    """Evaluate an expression; bindings map variable names to underlying-level
    values (elements at the level each var node is annotated with)."""
    if expr.kind == "var":
        return bindings[expr.name]
    if expr.kind == "int":
        return instance.lit(expr.value, expr.level)
    if expr.kind == "sum":
        vals = [evaluate(c, instance, bindings) for c in expr.children]
        out = vals[0]
        for v in vals[1:]:
            out = instance.add(expr.level, out, v)
        return out
    if expr.kind == "prod":
        vals = [evaluate(c, instance, bindings) for c in expr.children]
        out = vals[0]
        for v in vals[1:]:
            out = instance.mul(expr.level, out, v)
        return out
    child = evaluate(expr.children[0], instance, bindings)
    if expr.kind == "res":
        return instance.res(expr.sub, expr.level, child)
    if expr.kind == "tr":
        return instance.tr(expr.sub, expr.level, child)
    if expr.kind == "norm":
        return instance.norm(expr.sub, expr.level, child)
    return instance.weyl(expr.g_elt, expr.children[0].level, child)


def brute_force_norm_of_sum(instance, h_sub, a, b):
    """N_H^G(a+b) computed directly, bypassing the reciprocity expansion."""
    h_sub = tuple(sorted(h_sub))
    g_level = tuple(range(instance.group.n))
    s = instance.add(h_sub, a, b)
    return instance.norm(h_sub, g_level, s)


# ---------------------------------------------------------------------------
# grouped evaluation for very large index (H = e)


def all_subgroups_sorted(group):
    subs = group.all_subgroups()
    return sorted(subs, key=lambda s: (-len(s), s))


def orbit_counts_by_stabilizer(group):
    """{(class index of K, t): number of orbits of functions G -> {a,b} with
    stabilizer in class K and exactly t points labeled 'a'} via Moebius
    inversion over the subgroup lattice (functions = subsets of G)."""
    subs = all_subgroups_sorted(group)  # descending order
    n = group.n
    sets = [frozenset(s) for s in subs]
    exact = {}
    for idx, k in enumerate(subs):
        kn = len(k)
        g_t = {}
        for t in range(0, n + 1, kn):
            g_t[t] = comb(n // kn, t // kn)
        for jdx in range(idx):
            if sets[idx] <= sets[jdx]:
                for t, c in exact[jdx].items():
                    if t in g_t:
                        g_t[t] -= c
        exact[idx] = g_t
    out = Counter()
    classes = group.subgroup_classes()
    for idx, k in enumerate(subs):
        ci = group.class_index_of(k)
        if tuple(k) != tuple(classes[ci].representative):
            continue  # one representative per class counts all its orbits
        w = len(group.normalizer(k)) // len(k)
        for t, c in exact[idx].items():
            if c:
                assert c % w == 0
                out[(ci, t)] += c // w
    return dict(out)


def evaluate_reciprocity_grouped(instance, a, b):
    """N_e^G(a+b) from the grouped expansion: orbits with stabilizer class K
    and t points labeled 'a' contribute count * tr_K^G(N_e^K(a^i b^j)).

    Valid for commutative instances whose Weyl action on the bottom level
    is trivial (Burnside and fixed-point functors of trivial-action rings).
    """
    group = instance.group
    g_level = tuple(range(group.n))
    e_level = (group.identity,)
    counts = orbit_counts_by_stabilizer(group)
    total = None
    for (ci, t), c in sorted(counts.items()):
        k = group.subgroup_classes()[ci].representative
        i = t // len(k)
        j = group.n // len(k) - i
        base = instance.mul(e_level,
                            _power(instance, e_level, a, i),
                            _power(instance, e_level, b, j))
        term = instance.tr(k, g_level, instance.norm(e_level, k, base))
        term = _scale(instance, g_level, term, c)
        total = term if total is None else instance.add(g_level, total, term)
    return total


def _power(instance, level, x, n):
    out = instance.one(level)
    for _ in range(n):
        out = instance.mul(level, out, x)
    return out


def _scale(instance, level, x, c):
    if isinstance(x, BurnsideElement):
        return x.scale(c)
    return instance.mul(level, instance.lit(c, level), x)


def orbit_count_total(group, h_sub):
    """Number of G-orbits of Map^H(G,{a,b}) by the fixed-point counting
    formula (no materialization)."""
    # Burnside's lemma on marks of the coinduced set
    classes = group.subgroup_classes()
    marks = []
    hgrp, _ = group.subgroup_as_group(h_sub)
    t2 = trivial_gset(hgrp, 2)
    for cls in classes:
        marks.append(gsets.coinduction_fixed_point_count(
            group, tuple(sorted(h_sub)), t2, cls.representative))
    elem = BurnsideElement.from_marks(group, marks)
    return sum(elem.coeffs)


def random_effective_pair(group_or_level_grp, rng):
    """A random pair of effective Burnside elements over the given group."""
    nc = burnside.class_count(group_or_level_grp)
    a = BurnsideElement(group_or_level_grp,
                        [rng.randrange(0, 3) for _ in range(nc)])
    b = BurnsideElement(group_or_level_grp,
                        [rng.randrange(0, 3) for _ in range(nc)])
    return a, b

"""Burnside rings, the mark homomorphism, and the Burnside category.

Multiplication goes through the table of marks (multiply pointwise,
invert the triangular mark matrix).  Morphisms in the Burnside category
are integer combinations of isomorphism classes of spans of G-sets,
composed by pullback; the canonical form of an orbit span is
(stabilizer class, Weyl-orbit-minimal fixed pair).
"""

from collections import Counter

from . import gsets
from .gsets import GSet, GMap, orbit_gset, trivial_gset


def c_p_d_p(p):
    """The constants c_p = 2^((p-1)/2) - 1 and d_p = (2^(p-1)-1)/p - c_p.

    >>> [c_p_d_p(p) for p in (3, 5, 7)]
    [(1, 0), (3, 0), (7, 2)]
    """
    assert p % 2 == 1 and p > 1
    c = 2 ** ((p - 1) // 2) - 1
    assert (2 ** (p - 1) - 1) % p == 0
    d = (2 ** (p - 1) - 1) // p - c
    return c, d


def marks_matrix(group):
    return gsets.table_of_marks(group)


def class_count(group):
    return len(group.subgroup_classes())


class BurnsideElement:
    """Integer combination of orbit classes [G/H] over subgroup classes."""

    def __init__(self, group, coeffs):
        self.group = group
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == class_count(group)

    @staticmethod
    def zero(group):
        return BurnsideElement(group, [0] * class_count(group))

    @staticmethod
    def one(group):
        c = [0] * class_count(group)
        c[-1] = 1  # classes sorted by order: G itself is last
        assert group.subgroup_classes()[-1].order == group.n
        return BurnsideElement(group, c)

    @staticmethod
    def basis(group, class_index):
        c = [0] * class_count(group)
        c[class_index] = 1
        return BurnsideElement(group, c)

    @staticmethod
    def from_gset(group, x):
        t = x.iso_type()
        c = [0] * class_count(group)
        for ci, mult in t.counts.items():
            c[ci] += mult
        return BurnsideElement(group, c)

    def marks(self):
        m = marks_matrix(self.group)
        k = len(self.coeffs)
        return [sum(self.coeffs[h] * m[h][j] for h in range(k)) for j in range(k)]

    @staticmethod
    def from_marks(group, v):
        """Invert the (triangular) mark matrix; asserts integrality."""
        m = marks_matrix(group)
        k = len(v)
        c = [0] * k
        for h in range(k - 1, -1, -1):
            s = v[h] - sum(c[j] * m[j][h] for j in range(h + 1, k))
            assert s % m[h][h] == 0, "mark vector is not in the image of marks"
            c[h] = s // m[h][h]
        elem = BurnsideElement(group, c)
        assert elem.marks() == list(v)
        return elem

    def mark_at(self, subgroup):
        """Mark at an arbitrary subgroup (via its conjugacy class)."""
        return self.marks()[self.group.class_index_of(subgroup)]

    def __add__(self, other):
        return BurnsideElement(self.group,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return BurnsideElement(self.group,
                               [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BurnsideElement(self.group, [-a for a in self.coeffs])

    def scale(self, k):
        return BurnsideElement(self.group, [k * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        assert self.group is other.group
        va, vb = self.marks(), other.marks()
        return BurnsideElement.from_marks(self.group, [a * b for a, b in zip(va, vb)])

    def __eq__(self, other):
        return isinstance(other, BurnsideElement) and self.coeffs == other.coeffs \
            and self.group is other.group

    def __hash__(self):
        return hash(self.coeffs)

    def is_effective(self):
        return all(c >= 0 for c in self.coeffs)

    def to_gset(self):
        assert self.is_effective(), "only effective classes have representing G-sets"
        return gsets.from_orbits(self.group, {i: c for i, c in enumerate(self.coeffs) if c})

    def describe(self):
        g = self.group
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            rep = g.subgroup_classes()[i].representative
            name = g.subgroup_name(rep) if hasattr(g, "subgroup_name") \
                else g.describe_subgroup(rep)
            term = "[G/%s]" % name
            parts.append(("%d*%s" % (c, term)) if c != 1 else term)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "BurnsideElement(%s)" % self.describe()


def burnside_class(x):
    """Burnside class of a G-set."""
    return BurnsideElement.from_gset(x.group, x)


def mul_brute_force(a, b):
    """Product via an explicit G-set product; the oracle for mark multiplication."""
    assert a.is_effective() and b.is_effective()
    return burnside_class(a.to_gset().product(b.to_gset()))


def res(a, h_sub):
    """Restriction A(G) -> A(H), computed through marks."""
    g = a.group
    hgrp, embed = g.subgroup_as_group(h_sub)
    marks_a = a.marks()
    v = []
    for cls in hgrp.subgroup_classes():
        j_in_g = tuple(sorted(embed[x] for x in cls.representative))
        v.append(marks_a[g.class_index_of(j_in_g)])
    return BurnsideElement.from_marks(hgrp, v)


def tr(b, group, h_sub):
    """Transfer A(H) -> A(G): induction sends H/J to G/J."""
    hgrp, embed = group.subgroup_as_group(h_sub)
    assert b.group.n == hgrp.n
    c = [0] * class_count(group)
    for i, coef in enumerate(b.coeffs):
        if coef == 0:
            continue
        j_std = hgrp.subgroup_classes()[i].representative
        j_in_g = tuple(sorted(embed[x] for x in j_std))
        c[group.class_index_of(j_in_g)] += coef
    return BurnsideElement(group, c)


def conj_elem(b, group, h_sub, g):
    """Conjugation isomorphism A(H) -> A(gHg^-1) on class vectors."""
    hgrp, embed = group.subgroup_as_group(h_sub)
    h2 = group.conjugate_subgroup(g, h_sub)
    h2grp, embed2 = group.subgroup_as_group(h2)
    c = [0] * class_count(h2grp)
    pos2 = {e: i for i, e in enumerate(embed2)}
    for i, coef in enumerate(b.coeffs):
        if coef == 0:
            continue
        j_std = hgrp.subgroup_classes()[i].representative
        j2 = tuple(sorted(pos2[group.conj(g, embed[x])] for x in j_std))
        c[h2grp.class_index_of(j2)] += coef
    return BurnsideElement(h2grp, c)


def norm(b, group, h_sub):
    """Multiplicative norm A(H) -> A(G) of an effective class, through marks.

    The mark of the norm at K is the product over K\\G/H of marks of b
    at the intersected subgroups; this is the mark description of the
    coinduction of a representing H-set.
    """
    assert b.is_effective(), "norm of a virtual class needs reciprocity expansion"
    g = group
    hgrp, embed = g.subgroup_as_group(h_sub)
    assert b.group.n == hgrp.n
    hset = set(h_sub)
    hpos = {e: i for i, e in enumerate(embed)}
    marks_b = b.marks()
    v = []
    for kcls in g.subgroup_classes():
        k_sub = kcls.representative
        total = 1
        for gamma in g.double_cosets(k_sub, h_sub):
            gi = g.inv[gamma]
            inter = tuple(sorted(hpos[g.conj(gi, x)] for x in k_sub
                                 if g.conj(gi, x) in hset))
            total *= marks_b[hgrp.class_index_of(inter)]
        v.append(total)
    return BurnsideElement.from_marks(g, v)


def norm_by_coinduction(b, group, h_sub):
    """Norm of an effective class by materializing the coinduction (oracle)."""
    assert b.is_effective()
    x = b.to_gset()
    return burnside_class(gsets.coinduce(group, h_sub, x))


# ---------------------------------------------------------------------------
# spans


class Span:
    """An honest span X <- apex -> Y of G-sets (an effective morphism)."""

    def __init__(self, x, y, apex, left, right, check=True):
        self.x = x
        self.y = y
        self.apex = apex
        self.left = list(left)
        self.right = list(right)
        if check:
            GMap(apex, x, self.left)
            GMap(apex, y, self.right)

    @property
    def group(self):
        return self.x.group

    @staticmethod
    def identity(x):
        ids = list(range(x.n))
        return Span(x, x, x, ids, ids, check=False)

    @staticmethod
    def from_maps(left_map, right_map):
        assert left_map.source is right_map.source
        return Span(left_map.target, right_map.target, left_map.source,
                    left_map.val, right_map.val, check=False)

    def reversed(self):
        return Span(self.y, self.x, self.apex, self.right, self.left, check=False)

    def disjoint_union(self, other):
        """Sum of parallel spans (same feet)."""
        assert self.x is other.x and self.y is other.y
        apex = self.apex.disjoint_union(other.apex)
        return Span(self.x, self.y, apex,
                    self.left + other.left, self.right + other.right, check=False)

    def restrict_apex(self, points):
        """Sub-span over a G-stable subset of the apex."""
        pts = sorted(points)
        sub = sub_gset(self.apex, pts)
        return Span(self.x, self.y, sub,
                    [self.left[p] for p in pts], [self.right[p] for p in pts],
                    check=False)

    def decompose(self):
        """Canonical form: Counter of (stabilizer class, minimal fixed pair)."""
        out = Counter()
        for orb in self.apex.orbits():
            a0 = orb[0]
            k = self.apex.stabilizer(a0)
            out[canonical_span_key(self.group, k,
                                   (self.left[a0], self.right[a0]),
                                   self.x, self.y)] += 1
        return out

    def to_hom(self):
        return SpanHom(self.x, self.y, self.decompose())


def sub_gset(x, points):
    pts = sorted(points)
    pos = {p: i for i, p in enumerate(pts)}
    act = [[pos[x.act[g][p]] for p in pts] for g in range(x.group.n)]
    return GSet(x.group, len(pts), act, [x.labels[p] for p in pts], check=False)


def canonical_span_key(group, stab, pair, x, y):
    """Canonical key of the orbit span determined by a stabilizer and a fixed pair."""
    cls = group.class_index_of(stab)
    k0 = group.subgroup_classes()[cls].representative
    best = None
    for g in group.transporter(stab, k0):
        cand = (x.act[g][pair[0]], y.act[g][pair[1]])
        if best is None or cand < best:
            best = cand
    return (cls, best)


def span_from_key(group, x, y, key):
    """Reconstruct the canonical orbit span from its key."""
    cls, (px, py) = key
    k0 = group.subgroup_classes()[cls].representative
    apex = orbit_gset(group, k0)
    reps = group.left_coset_reps(k0)
    left = [x.act[r][px] for r in reps]
    right = [y.act[r][py] for r in reps]
    return Span(x, y, apex, left, right, check=False)


class SpanHom:
    """Integer combination of canonical orbit spans: a Burnside-category morphism."""

    def __init__(self, x, y, terms=None):
        self.x = x
        self.y = y
        self.terms = Counter(terms or {})
        for k in list(self.terms):
            if self.terms[k] == 0:
                del self.terms[k]

    @staticmethod
    def zero(x, y):
        return SpanHom(x, y)

    @staticmethod
    def identity(x):
        return Span.identity(x).to_hom()

    def __add__(self, other):
        t = Counter(self.terms)
        t.update(other.terms)
        return SpanHom(self.x, self.y, t)

    def __sub__(self, other):
        t = Counter(self.terms)
        t.subtract(other.terms)
        return SpanHom(self.x, self.y, t)

    def scale(self, k):
        return SpanHom(self.x, self.y, {key: k * v for key, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SpanHom) and self.terms == other.terms

    def is_effective(self):
        return all(v >= 0 for v in self.terms.values())

    def to_span(self):
        """Effective SpanHom as one honest span (disjoint union of orbit apexes)."""
        assert self.is_effective()
        span = None
        for key in sorted(self.terms):
            for _ in range(self.terms[key]):
                piece = span_from_key(self.group, self.x, self.y, key)
                span = piece if span is None else span.disjoint_union(piece)
        if span is None:
            return Span(self.x, self.y, gsets.empty_gset(self.group), [], [],
                        check=False)
        return span

    @property
    def group(self):
        return self.x.group

    def __repr__(self):
        return "SpanHom(%d terms)" % len(self.terms)


def compose_span_pair(s1, s2):
    """Pullback composition of honest spans: X <- W1 -> Y, Y <- W2 -> Z."""
    assert s1.y is s2.x or s1.y.n == s2.x.n
    grp = s1.group
    by_y = {}
    for v in range(s2.apex.n):
        by_y.setdefault(s2.left[v], []).append(v)
    pts = [(u, v) for u in range(s1.apex.n) for v in by_y.get(s1.right[u], [])]
    pos = {p: i for i, p in enumerate(pts)}
    act = [[pos[(s1.apex.act[g][u], s2.apex.act[g][v])] for (u, v) in pts]
           for g in range(grp.n)]
    apex = GSet(grp, len(pts), act, pts, check=False)
    left = [s1.left[u] for (u, v) in pts]
    right = [s2.right[v] for (u, v) in pts]
    return Span(s1.x, s2.y, apex, left, right, check=False)


def compose_spans(f, g):
    """Composite SpanHom: f then g (f: X -> Y, g: Y -> Z)."""
    assert f.y.n == g.x.n
    out = Counter()
    cache = {}
    for kf, cf in f.terms.items():
        for kg, cg in g.terms.items():
            pair = (kf, kg)
            if pair not in cache:
                s1 = span_from_key(f.group, f.x, f.y, kf)
                s2 = span_from_key(g.group, g.x, g.y, kg)
                cache[pair] = compose_span_pair(s1, s2).decompose()
            for key, mult in cache[pair].items():
                out[key] += cf * cg * mult
    return SpanHom(f.x, g.y, out)


# structural spans between orbit levels


def projection_span(group, sub_small, sub_big, x_small, x_big):
    """Restriction-type span G/B <- G/A -> G/A' for A <= B, A conjugate to the level rep.

    x_small is the orbit G-set of the class representative A'; the
    forward leg transports G/A to G/A' by a conjugating element.
    """
    a1 = sub_small
    reps = group.left_coset_reps(a1)
    apex = orbit_gset(group, a1)
    # backward: coset projection into G/B
    big = x_big
    back = []
    big_index = coset_index_table(group, sub_big, big)
    for r in reps:
        back.append(big_index[r])
    # forward: transport by g1 with g1 a1 g1^-1 = rep(A')
    cls = group.class_index_of(a1)
    a0 = group.subgroup_classes()[cls].representative
    g1 = group.transporter(a1, a0)[0]
    small_index = coset_index_table(group, a0, x_small)
    fwd = [small_index[group.mul[r][group.inv[g1]]] for r in reps]
    return Span(x_big, x_small, apex, back, fwd, check=False)


def coset_index_table(group, sub, orbit_set):
    """Map each group element to the index of its left coset in the orbit G-set."""
    table = {}
    reps = group.left_coset_reps(sub)
    for i, r in enumerate(reps):
        for b in sub:
            table[group.mul[r][b]] = i
    return table


def res_span(group, h_small_cls, k_big_cls, levels):
    """Span implementing res: M(G/K) -> M(G/H) between class representatives."""
    k0 = group.subgroup_classes()[k_big_cls].representative
    h0 = group.subgroup_classes()[h_small_cls].representative
    h1 = embedded_conjugate(group, h0, k0)
    return projection_span(group, h1, k0, levels[h_small_cls], levels[k_big_cls]).to_hom()


def tr_span(group, h_small_cls, k_big_cls, levels):
    """Span implementing tr: M(G/H) -> M(G/K)."""
    k0 = group.subgroup_classes()[k_big_cls].representative
    h0 = group.subgroup_classes()[h_small_cls].representative
    h1 = embedded_conjugate(group, h0, k0)
    return projection_span(group, h1, k0, levels[h_small_cls],
                           levels[k_big_cls]).reversed().to_hom()


def embedded_conjugate(group, h0, k0):
    """The minimal conjugate of h0 contained in k0; None if there is none."""
    kset = set(k0)
    best = None
    for g in range(group.n):
        c = group.conjugate_subgroup(g, h0)
        if set(c) <= kset and (best is None or c < best):
            best = c
    return best


def weyl_span(group, cls, n_elt, level):
    """Span implementing the action of a Weyl representative n on M(G/H)."""
    h0 = group.subgroup_classes()[cls].representative
    reps = group.left_coset_reps(h0)
    idx = coset_index_table(group, h0, level)
    n_inv = group.inv[n_elt]
    fwd = [idx[group.mul[r][n_inv]] for r in reps]
    back = list(range(level.n))
    return Span(level, level, level, back, fwd, check=False).to_hom()

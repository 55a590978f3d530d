"""Finite G-sets and equivariant maps.

Orbits, fixed points, restriction, induction, coinduction, dependent
products, exponential diagrams, tables of marks and isomorphism types.
Points of coinductions are materialized as explicit function tables.
"""

from collections import Counter

COINDUCTION_BUDGET = 10 ** 7
COINDUCTION_MATERIALIZE_BUDGET = 300000


class GSet:
    """Finite G-set given by an action table act[g][x]."""

    def __init__(self, group, n, act, labels=None, check=True):
        self.group = group
        self.n = n
        self.act = act
        self.labels = labels if labels is not None else list(range(n))
        if check:
            e = group.identity
            assert all(act[e][x] == x for x in range(n))
            for g in range(group.n):
                for h in range(group.n):
                    gh = group.mul[g][h]
                    assert all(act[g][act[h][x]] == act[gh][x] for x in range(n)), \
                        "action table is not an action"

    def apply(self, g, x):
        return self.act[g][x]

    def orbits(self):
        """Orbit partition, each orbit a sorted list of points."""
        seen = [False] * self.n
        out = []
        for x in range(self.n):
            if seen[x]:
                continue
            orb = sorted({self.act[g][x] for g in range(self.group.n)})
            for y in orb:
                seen[y] = True
            out.append(orb)
        return out

    def orbit_of(self, x):
        return sorted({self.act[g][x] for g in range(self.group.n)})

    def stabilizer(self, x):
        return tuple(g for g in range(self.group.n) if self.act[g][x] == x)

    def fixed_points(self, h):
        """Points fixed by every element of the subgroup h."""
        return [x for x in range(self.n) if all(self.act[g][x] == x for g in h)]

    def iso_type(self):
        """Multiset of stabilizer classes of orbits: complete isomorphism invariant."""
        counts = Counter()
        for orb in self.orbits():
            counts[self.group.class_index_of(self.stabilizer(orb[0]))] += 1
        return OrbitType(self.group, counts)

    def is_isomorphic(self, other):
        assert self.group is other.group or self.group.n == other.group.n
        return self.iso_type() == other.iso_type()

    def disjoint_union(self, other):
        assert self.group is other.group
        act = [row + [v + self.n for v in orow]
               for row, orow in zip(self.act, other.act)]
        labels = [("L", l) for l in self.labels] + [("R", l) for l in other.labels]
        return GSet(self.group, self.n + other.n, act, labels, check=False)

    def product(self, other):
        assert self.group is other.group
        n = self.n * other.n
        act = []
        for g in range(self.group.n):
            ra, rb = self.act[g], other.act[g]
            act.append([ra[x] * other.n + rb[y]
                        for x in range(self.n) for y in range(other.n)])
        labels = [(a, b) for a in self.labels for b in other.labels]
        return GSet(self.group, n, act, labels, check=False)

    def restrict(self, h_sub):
        """Restriction to a subgroup, as a set over the standalone subgroup group."""
        hgrp, embed = self.group.subgroup_as_group(h_sub)
        act = [self.act[g] for g in embed]
        return GSet(hgrp, self.n, [list(r) for r in act], list(self.labels), check=False)

    def __repr__(self):
        return "GSet(|G|=%d, n=%d)" % (self.group.n, self.n)


class OrbitType:
    """Multiset of (stabilizer class, multiplicity); equality decides G-set isomorphism."""

    def __init__(self, group, counts):
        self.group = group
        self.counts = Counter(counts)
        total = sum(mult * (group.n // group.subgroup_classes()[ci].order)
                    for ci, mult in self.counts.items())
        self._total = total

    def key(self):
        return tuple(sorted(self.counts.items()))

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def describe(self):
        g = self.group
        parts = []
        for ci, mult in sorted(self.counts.items()):
            rep = g.subgroup_classes()[ci].representative
            name = g.subgroup_name(rep) if hasattr(g, "subgroup_name") \
                else g.describe_subgroup(rep)
            parts.append("%d x [G/%s]" % (mult, name))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "OrbitType(%s)" % self.describe()


class GMap:
    """Equivariant map of G-sets, given by a point table."""

    def __init__(self, source, target, val, check=True):
        self.source = source
        self.target = target
        self.val = list(val)
        assert len(self.val) == source.n
        if check:
            for g in range(source.group.n):
                for x in range(source.n):
                    assert target.act[g][self.val[x]] == self.val[source.act[g][x]], \
                        "map is not equivariant"

    def __call__(self, x):
        return self.val[x]

    def compose(self, other):
        """self after other."""
        return GMap(other.source, self.target,
                    [self.val[other.val[x]] for x in range(other.source.n)],
                    check=False)

    @staticmethod
    def identity(x):
        return GMap(x, x, list(range(x.n)), check=False)


def empty_gset(group):
    return GSet(group, 0, [[] for _ in range(group.n)], [], check=False)


def trivial_gset(group, k=1):
    act = [list(range(k)) for _ in range(group.n)]
    return GSet(group, k, act, ["pt%d" % i for i in range(k)], check=False)


def orbit_gset(group, h):
    """The coset space G/H with points labeled by minimal coset representatives."""
    reps = group.left_coset_reps(h)
    coset_of = {}
    for i, r in enumerate(reps):
        for b in h:
            coset_of[group.mul[r][b]] = i
    act = [[coset_of[group.mul[g][reps[x]]] for x in range(len(reps))]
           for g in range(group.n)]
    return GSet(group, len(reps), act, [group.labels[r] for r in reps], check=False)


def from_orbits(group, class_counts):
    """Disjoint union of orbit G-sets: {class_index: multiplicity}."""
    x = empty_gset(group)
    for ci in sorted(class_counts):
        rep = group.subgroup_classes()[ci].representative
        for _ in range(class_counts[ci]):
            x = x.disjoint_union(orbit_gset(group, rep))
    return x


def induce(group, h_sub, t):
    """G x_H T for an H-set t over the standalone subgroup group."""
    hgrp, embed = group.subgroup_as_group(h_sub)
    assert t.group.n == hgrp.n
    reps = group.left_coset_reps(h_sub)
    pos = {}
    fact = [None] * group.n  # g = reps[j] * h  ->  (j, h standalone index)
    for j, r in enumerate(reps):
        for hi in range(hgrp.n):
            g = group.mul[r][embed[hi]]
            fact[g] = (j, hi)
    points = [(j, x) for j in range(len(reps)) for x in range(t.n)]
    index = {p: i for i, p in enumerate(points)}
    act = []
    for g in range(group.n):
        row = []
        for (j, x) in points:
            j2, h2 = fact[group.mul[g][reps[j]]]
            row.append(index[(j2, t.act[h2][x])])
        act.append(row)
    labels = [(group.labels[reps[j]], t.labels[x]) for (j, x) in points]
    return GSet(group, len(points), act, labels, check=False)


class CoinducedGSet(GSet):
    """Map^H(G, T): H-equivariant functions G -> T, G acting by right translation.

    H acts freely on G by left multiplication, so a function is a free
    choice of values on the right-coset representatives; points are the
    value tuples.
    """

    def __init__(self, group, h_sub, t, budget=COINDUCTION_MATERIALIZE_BUDGET):
        hgrp, embed = group.subgroup_as_group(h_sub)
        assert t.group.n == hgrp.n
        reps = group.right_coset_reps(h_sub)  # H g
        k = len(reps)
        npts = t.n ** k
        assert npts <= min(budget, COINDUCTION_BUDGET), \
            "coinduction budget exceeded (%d points)" % npts
        hpos = {embed[i]: i for i in range(hgrp.n)}
        # r_j * g = h' * r_j2 : store (j2, h' standalone)
        move = [[None] * group.n for _ in range(k)]
        rep_pos = {}
        for j, r in enumerate(reps):
            for hi in range(hgrp.n):
                rep_pos[group.mul[embed[hi]][r]] = (j, hi)
        for j in range(k):
            for g in range(group.n):
                j2, hi = rep_pos[group.mul[reps[j]][g]]
                move[j][g] = (j2, hi)
        tuples = self._all_tuples(t.n, k)
        index = {tp: i for i, tp in enumerate(tuples)}
        act = []
        for g in range(group.n):
            mv = [move[j][g] for j in range(k)]
            row = []
            for tp in tuples:
                row.append(index[tuple(t.act[hi][tp[j2]] for (j2, hi) in mv)])
            act.append(row)
        super().__init__(group, npts, act, list(tuples), check=False)
        self.h_sub = h_sub
        self.h_group = hgrp
        self.h_embed = embed
        self.base = t
        self.positions = reps
        self.tuples = tuples
        self.tuple_index = index

    @staticmethod
    def _all_tuples(base, k):
        tuples = [()]
        for _ in range(k):
            tuples = [tp + (v,) for tp in tuples for v in range(base)]
        return tuples

    def pushforward(self, hmap, target_coinduction):
        """Map^H(G, a): F -> a o F for an H-map a: base -> other base."""
        assert hmap.source.n == self.base.n
        assert target_coinduction.base.n == hmap.target.n
        assert target_coinduction.positions == self.positions
        val = [target_coinduction.tuple_index[tuple(hmap.val[v] for v in tp)]
               for tp in self.tuples]
        return GMap(self, target_coinduction, val, check=False)


def coinduce(group, h_sub, t, budget=COINDUCTION_MATERIALIZE_BUDGET):
    """Map^H(G, T) materialized as explicit function tables.

    >>> from . import groups
    >>> g = groups.dihedral(3)
    >>> x = coinduce(g, g.d2(1), trivial_gset(g.subgroup_as_group(g.d2(1))[0], 2))
    >>> x.n
    8
    """
    return CoinducedGSet(group, h_sub, t, budget)


def coinduction_fixed_point_count(group, h_sub, t, k_sub):
    """|Map^H(G,T)^K| by the multiplicative double coset formula."""
    hgrp, embed = group.subgroup_as_group(h_sub)
    assert t.group.n == hgrp.n
    hset = set(h_sub)
    hpos = {embed[i]: i for i in range(hgrp.n)}
    total = 1
    for gamma in group.double_cosets(k_sub, h_sub):
        gi = group.inv[gamma]
        inter = [hpos[group.conj(gi, x)] for x in k_sub
                 if group.conj(gi, x) in hset]
        total *= len(t.fixed_points(tuple(sorted(inter))))
    return total


def dependent_product(gmap, t_over):
    """Dependent product along an orbit projection g: G/H -> G/K.

    t_over: GMap T -> G/H.  Returns (GSet over G/K, structure GMap to G/K).
    Points over y in G/K are sections s of t_over defined on the fiber of y.
    """
    g = gmap
    t = t_over.source
    base = g.source  # G/H
    tgt = g.target   # G/K
    grp = base.group
    fibers_t = [[] for _ in range(base.n)]
    for p in range(t.n):
        fibers_t[t_over.val[p]].append(p)
    points = []
    for y in range(tgt.n):
        fiber = [x for x in range(base.n) if g.val[x] == y]
        secs = [()]
        for x in fiber:
            secs = [s + ((x, p),) for s in secs for p in fibers_t[x]]
            assert len(secs) <= COINDUCTION_BUDGET, "dependent product budget exceeded"
        for s in secs:
            points.append((y, s))
    index = {p: i for i, p in enumerate(points)}
    act = []
    for a in range(grp.n):
        ai = grp.inv[a]
        row = []
        for (y, s) in points:
            smap = dict(s)
            y2 = tgt.act[a][y]
            s2 = tuple(sorted((x2, t.act[a][smap[base.act[ai][x2]]])
                              for x2 in range(base.n)
                              if g.val[x2] == y2))
            row.append(index[(y2, s2)])
        act.append(row)
    pi = GSet(grp, len(points), act, points, check=False)
    struct = GMap(pi, tgt, [p[0] for p in points], check=False)
    return pi, struct


def exponential_diagram(gmap, hmap):
    """The exponential diagram for an orbit projection g and a map h into its source.

    gmap: G/H -> G/K, hmap: T -> G/H.  Returns a dict with the five maps
    h, g, fprime, gprime, hprime where fprime evaluates a section at a point.
    """
    pi, hprime = dependent_product(gmap, hmap)
    base = gmap.source
    grp = base.group
    # pullback X' = G/H x_{G/K} Pi
    pts = [(x, i) for x in range(base.n) for i in range(pi.n)
           if gmap.val[x] == hprime.val[i]]
    index = {p: j for j, p in enumerate(pts)}
    act = [[index[(base.act[a][x], pi.act[a][i])] for (x, i) in pts]
           for a in range(grp.n)]
    xprime = GSet(grp, len(pts), act, pts, check=False)
    gprime = GMap(xprime, pi, [i for (x, i) in pts], check=False)
    fval = []
    for (x, i) in pts:
        y, s = pi.labels[i]
        fval.append(dict(s)[x])
    fprime = GMap(xprime, hmap.source, fval, check=False)
    return {"h": hmap, "g": gmap, "fprime": fprime, "gprime": gprime, "hprime": hprime}


def table_of_marks(group):
    """Square matrix marks[H][K] = |(G/H)^K| over subgroup classes."""
    if group._marks is not None:
        return group._marks
    classes = group.subgroup_classes()
    orbit_sets = [orbit_gset(group, c.representative) for c in classes]
    marks = [[len(x.fixed_points(k.representative)) for k in classes]
             for x in orbit_sets]
    group._marks = marks
    return marks


def iso_type(x):
    return x.iso_type()


def gsets_isomorphic(x, y):
    return x.is_isomorphic(y)

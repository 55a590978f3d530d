"""Finite groups as explicit multiplication tables.

The dihedral family is the privileged case; cyclic, symmetric and
alternating groups are provided for the generic reciprocity theorem.
Subgroups are sorted tuples of element indices.
"""

from itertools import permutations
import random


class FiniteGroup:
    """Group given by an indexed element list and a total multiplication table."""

    def __init__(self, labels, mul, check=True):
        self.labels = list(labels)
        self.n = len(self.labels)
        self.mul = [list(row) for row in mul]
        ident = None
        for e in range(self.n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(self.n)):
                ident = e
                break
        assert ident is not None, "no identity element"
        self.identity = ident
        self.inv = [None] * self.n
        for g in range(self.n):
            for h in range(self.n):
                if self.mul[g][h] == ident:
                    self.inv[g] = h
                    break
            assert self.inv[g] is not None, "missing inverse"
        if check:
            self._check_associativity()
        self._subgroup_classes = None
        self._all_subgroups = None
        self._marks = None

    def _check_associativity(self):
        n = self.n
        if n <= 64:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(20000))
        for a, b, c in triples:
            assert self.mul[self.mul[a][b]][c] == self.mul[a][self.mul[b][c]], \
                "multiplication table is not associative"

    @property
    def order(self):
        return self.n

    def m_(self, a, b):
        return self.mul[a][b]

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    def closure(self, gens):
        """Subgroup generated by the given elements, as a sorted tuple."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
                    y = self.mul[g][x]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return tuple(sorted(seen))

    def is_subgroup(self, h):
        hs = set(h)
        return self.identity in hs and all(self.mul[a][b] in hs for a in h for b in h)

    def all_subgroups(self):
        """Every subgroup, by breadth-first closure; sorted tuples, deduplicated."""
        if self._all_subgroups is not None:
            return self._all_subgroups
        assert self.n <= 200, "subgroup enumeration budget exceeded"
        trivial = (self.identity,)
        found = {trivial}
        frontier = [trivial]
        while frontier:
            new = []
            for h in frontier:
                hs = set(h)
                for g in range(self.n):
                    if g in hs:
                        continue
                    k = self.closure(list(h) + [g])
                    if k not in found:
                        found.add(k)
                        new.append(k)
            frontier = new
        self._all_subgroups = sorted(found, key=lambda s: (len(s), s))
        return self._all_subgroups

    def conjugate_subgroup(self, g, h):
        return tuple(sorted(self.conj(g, x) for x in h))

    def normalizer(self, h):
        hs = tuple(sorted(h))
        return tuple(sorted(g for g in range(self.n)
                            if self.conjugate_subgroup(g, hs) == hs))

    def subgroup_classes(self):
        """Conjugacy classes of subgroups, sorted by (order, canonical representative)."""
        if self._subgroup_classes is not None:
            return self._subgroup_classes
        subs = self.all_subgroups()
        remaining = set(subs)
        classes = []
        for h in subs:
            if h not in remaining:
                continue
            conjugates = sorted({self.conjugate_subgroup(g, h) for g in range(self.n)})
            for c in conjugates:
                remaining.discard(c)
            rep = conjugates[0]
            classes.append(SubgroupClass(self, rep, conjugates))
        classes.sort(key=lambda c: (len(c.representative), c.representative))
        self._subgroup_classes = classes
        return self._subgroup_classes

    def class_index_of(self, h):
        """Index of the subgroup class containing h."""
        hs = tuple(sorted(h))
        for i, cls in enumerate(self.subgroup_classes()):
            if len(cls.representative) == len(hs) and hs in cls.conjugate_set:
                return i
        raise ValueError("not a subgroup: %r" % (h,))

    def double_cosets(self, k, h):
        """Representatives of K\\G/H, one per double coset, minimal element first."""
        seen = [False] * self.n
        reps = []
        for g in range(self.n):
            if seen[g]:
                continue
            reps.append(g)
            for a in k:
                ag = self.mul[a][g]
                for b in h:
                    seen[self.mul[ag][b]] = True
        return reps

    def left_coset_reps(self, h):
        """Representatives of G/H (left cosets gH), minimal element per coset."""
        seen = [False] * self.n
        reps = []
        for g in range(self.n):
            if seen[g]:
                continue
            reps.append(g)
            for b in h:
                seen[self.mul[g][b]] = True
        return reps

    def right_coset_reps(self, h):
        """Representatives of H\\G (right cosets Hg), minimal element per coset."""
        seen = [False] * self.n
        reps = []
        for g in range(self.n):
            if seen[g]:
                continue
            reps.append(g)
            for b in h:
                seen[self.mul[b][g]] = True
        return reps

    def transporter(self, a, b):
        """All g with g a g^-1 = b, for subgroups a, b."""
        at = tuple(sorted(a))
        bt = tuple(sorted(b))
        return [g for g in range(self.n) if self.conjugate_subgroup(g, at) == bt]

    def subgroup_as_group(self, h):
        """The subgroup as a standalone FiniteGroup plus its element embedding.

        Cached so repeated calls return the identical group object.
        """
        key = tuple(h)
        cache = getattr(self, "_subgroup_cache", None)
        if cache is None:
            cache = self._subgroup_cache = {}
        if key in cache:
            return cache[key]
        embed = list(h)
        pos = {g: i for i, g in enumerate(embed)}
        mul = [[pos[self.mul[a][b]] for b in embed] for a in embed]
        labels = [self.labels[g] for g in embed]
        grp = FiniteGroup(labels, mul, check=False)
        cache[key] = (grp, embed)
        return grp, embed

    def is_normal(self, h):
        hs = tuple(sorted(h))
        return all(self.conjugate_subgroup(g, hs) == hs for g in range(self.n))

    def quotient_group(self, n_sub):
        """G/N with its projection table, for a normal subgroup N.

        Cached so repeated calls return the identical group object.
        """
        key = tuple(sorted(n_sub))
        cache = getattr(self, "_quotient_cache", None)
        if cache is None:
            cache = self._quotient_cache = {}
        if key in cache:
            return cache[key]
        assert self.is_normal(n_sub), "subgroup is not normal"
        ns = set(n_sub)
        coset_of = [None] * self.n
        cosets = []
        for g in range(self.n):
            if coset_of[g] is not None:
                continue
            idx = len(cosets)
            members = sorted(self.mul[g][x] for x in ns)
            cosets.append(tuple(members))
            for m in members:
                coset_of[m] = idx
        order = sorted(range(len(cosets)), key=lambda i: cosets[i])
        rank = {old: new for new, old in enumerate(order)}
        cosets = [cosets[i] for i in order]
        proj = [rank[coset_of[g]] for g in range(self.n)]
        mul = [[proj[self.mul[c[0]][d[0]]] for d in cosets] for c in cosets]
        labels = ["{" + self.labels[c[0]] + "}" for c in cosets]
        grp = FiniteGroup(labels, mul, check=False)
        cache[key] = (grp, proj)
        return grp, proj

    def weyl_group(self, h):
        """N_G(H)/H with a section: (FiniteGroup, list of coset representatives)."""
        nh = self.normalizer(h)
        ngrp, embed = self.subgroup_as_group(nh)
        hin = tuple(sorted(embed.index(x) for x in h))
        wgrp, proj = ngrp.quotient_group(hin)
        section = [None] * wgrp.n
        for i, g in enumerate(embed):
            c = proj[i]
            if section[c] is None or g < section[c]:
                section[c] = g
        return wgrp, section

    def describe_subgroup(self, h):
        return "{" + ",".join(self.labels[g] for g in h) + "}"


class SubgroupClass:
    """Conjugacy class of subgroups with normalizer and Weyl group data."""

    def __init__(self, group, representative, conjugates):
        self.group = group
        self.representative = representative
        self.conjugates = conjugates
        self.conjugate_set = set(conjugates)
        self.order = len(representative)
        self.normalizer = group.normalizer(representative)
        self.weyl, self.weyl_section = group.weyl_group(representative)

    @property
    def index(self):
        return self.group.n // self.order

    def __repr__(self):
        return "SubgroupClass(%s)" % self.group.describe_subgroup(self.representative)


class DihedralGroup(FiniteGroup):
    """D_2m with elements (i, eps): (i,e)*(j,d) = (i + (-1)^e j mod m, e+d mod 2).

    Element index = eps*m + i; generators tau = (0,1), zeta = (1,0).
    """

    def __init__(self, m):
        assert m >= 1
        self.m = m
        labels = []
        for eps in (0, 1):
            for i in range(m):
                if eps == 0:
                    labels.append("e" if i == 0 else "z^%d" % i)
                else:
                    labels.append("t" if i == 0 else "z^%d*t" % i)
        mul = [[0] * (2 * m) for _ in range(2 * m)]
        for eps in (0, 1):
            for i in range(m):
                a = eps * m + i
                for dlt in (0, 1):
                    for j in range(m):
                        b = dlt * m + j
                        k = (i + (j if eps == 0 else -j)) % m
                        mul[a][b] = ((eps + dlt) % 2) * m + k
        super().__init__(labels, mul, check=(2 * m <= 64))

    @property
    def tau(self):
        return self.m

    @property
    def zeta(self):
        return 1 % self.m if self.m > 1 else 0

    def rotation(self, i):
        return i % self.m

    def reflection(self, i):
        return self.m + (i % self.m)

    def mu(self, k):
        """The rotation subgroup mu_k of order k, for k | m."""
        assert self.m % k == 0
        step = self.m // k
        return tuple(sorted((j * step) % self.m for j in range(k)))

    def d2(self, k):
        """The standard dihedral subgroup D_2k = <zeta^(m/k), tau>, for k | m."""
        assert self.m % k == 0
        step = self.m // k
        rots = [(j * step) % self.m for j in range(k)]
        refl = [self.m + r for r in rots]
        return tuple(sorted(rots + refl))

    def zeta_tau_subgroup(self):
        """<zeta_m * tau>, the conjugate of D_2 singled out by the twisted factor."""
        return tuple(sorted((0, self.m + (1 % self.m))))

    def subgroup_name(self, h):
        """mu_k / D_2k style name of a subgroup class representative, if conjugate to one."""
        hs = tuple(sorted(h))
        cls = self.class_index_of(hs)
        for k in sorted(d for d in range(1, self.m + 1) if self.m % d == 0):
            if self.class_index_of(self.mu(k)) == cls:
                return "mu_%d" % k
            if self.class_index_of(self.d2(k)) == cls:
                return "D_%d" % (2 * k)
        return self.describe_subgroup(hs)


_dihedral_cache = {}


def dihedral(m):
    """The dihedral group of order 2m (one shared instance per m).

    >>> dihedral(3).order
    6
    """
    if m not in _dihedral_cache:
        _dihedral_cache[m] = DihedralGroup(m)
    return _dihedral_cache[m]


def _perm_group(perms, names=None):
    perms = [tuple(p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    n = len(perms[0])
    mul = []
    for a in perms:
        row = []
        for b in perms:
            c = tuple(a[b[i]] for i in range(n))
            row.append(pos[c])
        mul.append(row)
    labels = names if names else [repr(p) for p in perms]
    return FiniteGroup(labels, mul, check=(len(perms) <= 64))


def cyclic(n):
    """Cyclic group of order n."""
    labels = ["e" if i == 0 else "g^%d" % i for i in range(n)]
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, mul, check=(n <= 64))


def symmetric(n):
    """Symmetric group on n letters."""
    perms = sorted(permutations(range(n)))
    return _perm_group(perms, [str(p) for p in perms])


def alternating(n):
    """Alternating group on n letters."""

    def sign(p):
        s = 1
        p = list(p)
        for i in range(len(p)):
            while p[i] != i:
                j = p[i]
                p[i], p[j] = p[j], p[i]
                s = -s
        return s

    perms = sorted(p for p in permutations(range(n)) if sign(p) == 1)
    return _perm_group(perms, [str(p) for p in perms])


def trivial_group():
    return FiniteGroup(["e"], [[0]], check=False)

"""Finitely generated abelian groups via integer presentation matrices.

A group is presented as Z^ngens modulo the column span of an integer
relation matrix.  Smith normal form with unimodular transformation
matrices gives invariant factors, membership tests, kernels, cokernels
and homology, all in exact arbitrary-precision arithmetic.

Matrices are lists of rows of Python ints.  Columns of ``rels`` are
relators.
"""

from fractions import Fraction


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity_matrix(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def mat_mul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(row) == k for row in a), "matrix dimension mismatch"
    bt = list(zip(*b))
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in bt] for ra in a]


def mat_vec(a, v):
    assert all(len(row) == len(v) for row in a)
    return [sum(row[t] * v[t] for t in range(len(v))) for row in a]


def mat_transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_hstack(a, b):
    if not a:
        return [list(row) for row in b]
    if not b:
        return [list(row) for row in a]
    assert len(a) == len(b)
    return [list(ra) + list(rb) for ra, rb in zip(a, b)]


def mat_eq(a, b):
    return a == b


def det_sign_is_unit(m):
    """True when the integer matrix has determinant +-1 (via fraction-free check)."""
    n = len(m)
    if n == 0:
        return True
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return False
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return det in (1, -1)


def smith(m):
    """Smith normal form.  Returns (u, d, v) with u*m*v = d.

    u and v are unimodular; d is diagonal with a divisibility chain
    d[0][0] | d[1][1] | ...  Pivoting picks the minimal nonzero absolute
    value, the standard mitigation of entry growth.

    >>> u, d, v = smith([[2, 4], [6, 8]])
    >>> [d[0][0], d[1][1]]
    [2, 4]
    """
    a = [list(row) for row in m]
    nr = len(a)
    nc = len(a[0]) if a else 0
    u = identity_matrix(nr)
    v = identity_matrix(nc)

    def row_op(i, j, f):  # row_i -= f * row_j  (on a and u)
        a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        u[i] = [x - f * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, f):  # col_i -= f * col_j  (on a and v)
        for row in a:
            row[i] -= f * row[j]
        for row in v:
            row[i] -= f * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        # find minimal-absolute-value nonzero pivot in the remaining block
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        while True:
            i, j = piv
            swap_rows(t, i)
            swap_cols(t, j)
            # clear column t
            dirty = False
            for r in range(t + 1, nr):
                if a[r][t]:
                    f = a[r][t] // a[t][t]
                    row_op(r, t, f)
                    if a[r][t]:
                        dirty = True
            # clear row t
            for c in range(t + 1, nc):
                if a[t][c]:
                    f = a[t][c] // a[t][t]
                    col_op(c, t, f)
                    if a[t][c]:
                        dirty = True
            if not dirty and all(a[r][t] == 0 for r in range(t + 1, nr)) \
                    and all(a[t][c] == 0 for c in range(t + 1, nc)):
                break
            # re-pick the minimal pivot in the block and repeat
            piv = None
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        piv = (i, j)
        # enforce divisibility d_t | entries of the lower block
        fixed = True
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t] != 0:
                    # add row i to row t, restart elimination at t
                    row_op(t, i, -1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1
    return u, a, v


def smith_diagonal(m):
    """Nonnegative diagonal of the Smith normal form, padded with zeros."""
    _, d, _ = smith(m)
    return [abs(d[i][i]) for i in range(min(len(d), len(d[0]) if d else 0))]


class SmithSolver:
    """Precomputed SNF of a matrix for repeated exact linear solves."""

    def __init__(self, m):
        self.nr = len(m)
        self.nc = len(m[0]) if m else 0
        self.u, self.d, self.v = smith(m)
        k = min(self.nr, self.nc)
        self.diag = [self.d[i][i] for i in range(k)]
        self.rank = sum(1 for x in self.diag if x != 0)

    def solve(self, x):
        """Integer solution y of m*y = x, or None."""
        assert len(x) == self.nr
        ux = mat_vec(self.u, x)
        z = [0] * self.nc
        for i in range(self.nr):
            if i < len(self.diag) and self.diag[i] != 0:
                if ux[i] % self.diag[i] != 0:
                    return None
                z[i] = ux[i] // self.diag[i]
            elif ux[i] != 0:
                return None
        return mat_vec(self.v, z)

    def in_image(self, x):
        return self.solve(x) is not None


def kernel_basis(m):
    """Basis (list of columns) of the integer kernel of m."""
    if not m or not m[0]:
        nc = len(m[0]) if m else 0
        return [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    u, d, v = smith(m)
    nc = len(m[0])
    k = min(len(m), nc)
    out = []
    for j in range(nc):
        if j >= k or d[j][j] == 0:
            out.append([v[i][j] for i in range(nc)])
    return out


def lattice_from_columns(cols, n):
    """Matrix (n x len(cols)) whose columns are the given length-n vectors."""
    m = zeros(n, len(cols))
    for j, c in enumerate(cols):
        assert len(c) == n
        for i in range(n):
            m[i][j] = c[i]
    return m


def lattice_contains(lattice_cols, n, x):
    return SmithSolver(lattice_from_columns(lattice_cols, n)).in_image(x)


def lattices_equal(cols_a, cols_b, n):
    """Equality of the integer column spans of two generating sets."""
    sa = SmithSolver(lattice_from_columns(cols_a, n))
    sb = SmithSolver(lattice_from_columns(cols_b, n))
    return all(sa.in_image(c) for c in cols_b) and all(sb.in_image(c) for c in cols_a)


def lattice_basis(cols, n):
    """A basis of the lattice spanned by the given columns.

    Computed from the column-style Hermite reduction implicit in SNF:
    m*v has the same column span as m, and its nonzero columns after the
    unimodular column operations form a basis once re-expressed via u.
    """
    if not cols:
        return []
    m = lattice_from_columns(cols, n)
    u, d, v = smith(m)
    # m = u^-1 d v^-1; column span of m = column span of u^-1 d.
    uinv = invert_unimodular(u)
    k = min(n, len(cols))
    basis = []
    for j in range(k):
        if d[j][j] != 0:
            basis.append([uinv[i][j] * d[j][j] for i in range(n)])
    return basis


def invert_unimodular(u):
    """Exact inverse of a unimodular integer matrix."""
    n = len(u)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(n)]
         for r, row in enumerate(u)]
    for i in range(n):
        piv = next(r for r in range(i, n) if a[r][i] != 0)
        a[i], a[piv] = a[piv], a[i]
        a[i] = [x / a[i][i] for x in a[i]]
        for r in range(n):
            if r != i and a[r][i]:
                f = a[r][i]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    out = [[a[r][n + c] for c in range(n)] for r in range(n)]
    res = [[int(x) for x in row] for row in out]
    assert all(Fraction(res[r][c]) == out[r][c] for r in range(n) for c in range(n))
    return res


class FgAbelianGroup:
    """Z^ngens modulo the column span of ``rels``."""

    def __init__(self, ngens, rel_columns=()):
        self.ngens = ngens
        self.rel_columns = [list(c) for c in rel_columns]
        for c in self.rel_columns:
            assert len(c) == ngens
        self._solver = None
        self._invariants = None
        self._normal = None

    @property
    def rels_matrix(self):
        return lattice_from_columns(self.rel_columns, self.ngens)

    def rel_solver(self):
        if self._solver is None:
            self._solver = SmithSolver(self.rels_matrix)
        return self._solver

    def iso_invariants(self):
        """(rank, sorted list of torsion invariant factors > 1).

        A complete isomorphism invariant of the presented group.

        >>> FgAbelianGroup(2, [[0, 2]]).iso_invariants()
        (1, [2])
        """
        if self._invariants is None:
            diag = smith_diagonal(self.rels_matrix)
            nz = [x for x in diag if x != 0]
            rank = self.ngens - len(nz)
            torsion = sorted(x for x in nz if x > 1)
            self._invariants = (rank, torsion)
        return self._invariants

    @property
    def rank(self):
        return self.iso_invariants()[0]

    @property
    def torsion(self):
        return self.iso_invariants()[1]

    def is_zero_group(self):
        return self.iso_invariants() == (0, [])

    def _normal_data(self):
        # u * rels * v = d; in coordinates y = u*x the relations are diagonal.
        if self._normal is None:
            u, d, v = smith(self.rels_matrix)
            k = min(self.ngens, len(self.rel_columns))
            diag = [abs(d[i][i]) for i in range(k)] + [0] * (self.ngens - k)
            keep = [i for i in range(self.ngens) if diag[i] != 1]
            self._normal = (u, diag, keep)
        return self._normal

    def element_key(self, x):
        """Canonical reduced coordinates of an element; equal keys <=> equal elements."""
        u, diag, keep = self._normal_data()
        y = mat_vec(u, x)
        return tuple(y[i] % diag[i] if diag[i] else y[i] for i in keep)

    def is_zero_elem(self, x):
        return all(c == 0 for c in self.element_key(x))

    def elements_equal(self, x, y):
        return self.element_key(x) == self.element_key(y)

    def with_extra_relations(self, cols):
        return FgAbelianGroup(self.ngens, self.rel_columns + [list(c) for c in cols])

    def subgroup_contains(self, gen_cols, x):
        """Membership of x in the subgroup generated by gen_cols (mod relations)."""
        return lattice_contains(list(gen_cols) + self.rel_columns, self.ngens, x)


class AbHom:
    """Homomorphism of presented groups, given by a matrix on generators."""

    def __init__(self, source, target, matrix, check=True):
        self.source = source
        self.target = target
        self.matrix = [list(row) for row in matrix]
        assert len(self.matrix) == target.ngens
        assert all(len(row) == source.ngens for row in self.matrix)
        if check:
            assert self.is_well_defined(), "matrix does not carry relations into relations"

    def is_well_defined(self):
        solver = self.target.rel_solver()
        return all(solver.in_image(mat_vec(self.matrix, c)) for c in self.source.rel_columns)

    def __call__(self, x):
        return mat_vec(self.matrix, x)

    def compose(self, other):
        """self after other."""
        assert other.target is self.source or other.target.ngens == self.source.ngens
        return AbHom(other.source, self.target, mat_mul(self.matrix, other.matrix), check=False)

    def is_zero(self):
        tgt = self.target
        return all(tgt.is_zero_elem([row[j] for row in self.matrix])
                   for j in range(self.source.ngens))

    def equals(self, other):
        if self.source.ngens != other.source.ngens:
            return False
        tgt = self.target
        for j in range(self.source.ngens):
            a = [row[j] for row in self.matrix]
            b = [row[j] for row in other.matrix]
            if not tgt.elements_equal(a, b):
                return False
        return True

    @staticmethod
    def identity(group):
        return AbHom(group, group, identity_matrix(group.ngens), check=False)

    @staticmethod
    def zero(source, target):
        return AbHom(source, target, zeros(target.ngens, source.ngens), check=False)


def direct_sum(a, b):
    cols = [c + [0] * b.ngens for c in a.rel_columns] + \
           [[0] * a.ngens + c for c in b.rel_columns]
    return FgAbelianGroup(a.ngens + b.ngens, cols)


def tensor(a, b):
    """Tensor product via the Kronecker presentation.

    >>> tensor(FgAbelianGroup(1, [[2]]), FgAbelianGroup(1, [[3]])).is_zero_group()
    True
    """
    n = a.ngens * b.ngens
    cols = []
    for c in a.rel_columns:
        for j in range(b.ngens):
            col = [0] * n
            for i in range(a.ngens):
                col[i * b.ngens + j] = c[i]
            cols.append(col)
    for c in b.rel_columns:
        for i in range(a.ngens):
            col = [0] * n
            for j in range(b.ngens):
                col[i * b.ngens + j] = c[j]
            cols.append(col)
    return FgAbelianGroup(n, cols)


def cokernel(f):
    """Cokernel of an AbHom as a presented group on the target's generators."""
    cols = f.target.rel_columns + \
        [[row[j] for row in f.matrix] for j in range(f.source.ngens)]
    return FgAbelianGroup(f.target.ngens, cols)


def kernel_gens(f):
    """Generators (in target... source coordinates) of ker(f) as a subgroup of the source.

    Elements x of the source with f(x) = 0 in the presented target, i.e.
    matrix*x in the relation lattice of the target; the source's own
    relators are included so the result generates the full preimage.
    """
    m = mat_hstack(f.matrix, f.target.rels_matrix)
    ker = kernel_basis(m)
    gens = [k[:f.source.ngens] for k in ker]
    gens += f.source.rel_columns
    return [g for g in gens if any(g)]


class SubquotientPresentation:
    """ker(d_out)/im(d_in) with an explicit generator embedding into the ambient group."""

    def __init__(self, group, gen_embedding_cols, relation_cols):
        self.group = group
        self.embedding = gen_embedding_cols  # columns in ambient coordinates
        self.relations = relation_cols       # columns in the generator coordinates


def homology(d_in, d_out):
    """Homology ker(d_out)/im(d_in) of presented groups.

    d_in: A -> B, d_out: B -> C with d_out(d_in) = 0.

    >>> z = FgAbelianGroup(1)
    >>> z2 = FgAbelianGroup(2)
    >>> din = AbHom(z, z2, [[1], [1]])
    >>> dout = AbHom(z2, z, [[1, -1]])
    >>> homology(din, dout).is_zero_group()
    True
    """
    return homology_with_embedding(d_in, d_out).group


def homology_with_embedding(d_in, d_out):
    assert d_out.compose(d_in).is_zero(), "composite differential is nonzero"
    b = d_in.target
    ker = kernel_gens(d_out)
    kbasis = lattice_basis(ker, b.ngens)
    if not kbasis:
        grp = FgAbelianGroup(0)
        return SubquotientPresentation(grp, [], [])
    solver = SmithSolver(lattice_from_columns(kbasis, b.ngens))
    rel_cols = []
    image_cols = [[row[j] for row in d_in.matrix] for j in range(d_in.source.ngens)]
    for c in image_cols + b.rel_columns:
        t = solver.solve(c)
        assert t is not None, "image/relation column escapes the kernel lattice"
        rel_cols.append(t)
    grp = FgAbelianGroup(len(kbasis), rel_cols)
    return SubquotientPresentation(grp, kbasis, rel_cols)


def induced_on_homology(h_src, h_tgt, chain_map_matrix):
    """Map induced on homology subquotients by a compatible chain map."""
    src, tgt = h_src, h_tgt
    cols = []
    if not tgt.embedding:
        return AbHom(src.group, tgt.group, zeros(0, src.group.ngens), check=False)
    solver = SmithSolver(mat_hstack(
        lattice_from_columns(tgt.embedding, len(tgt.embedding[0])),
        lattice_from_columns(h_tgt_ambient_rels(tgt), len(tgt.embedding[0]))))
    for k in src.embedding:
        v = mat_vec(chain_map_matrix, k)
        t = solver.solve(v)
        assert t is not None, "chain map does not preserve the kernel lattice"
        cols.append(t[:len(tgt.embedding)])
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(tgt.embedding))]
    return AbHom(src.group, tgt.group, mat, check=False)


def h_tgt_ambient_rels(subq):
    # ambient relation columns expressed in ambient coordinates
    n = len(subq.embedding[0]) if subq.embedding else 0
    out = []
    for rel in subq.relations:
        v = [0] * n
        for j, coef in enumerate(rel):
            for i in range(n):
                v[i] += coef * subq.embedding[j][i]
        out.append(v)
    return out

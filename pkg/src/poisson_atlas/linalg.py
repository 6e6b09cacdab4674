"""Exact linear algebra over Scalar: elimination, kernels, small eigenproblems.

Everything is fraction-free in spirit but implemented directly over the scalar
field (Q or one quadratic extension); Gaussian elimination with exact pivots
is both the solver and the verifier here.  eigen_small is capped at dimension
12 and factors characteristic polynomials over Q plus at most one quadratic
extension, reporting the discriminant it had to introduce.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExtensionRequiredError
from .scalars import Scalar, ZERO, ONE, scalar_sqrt, common_domain


class Matrix:
    """Dense rectangular matrix of Scalars; immutable, operator-friendly."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(
            tuple(x if type(x) is Scalar else Scalar.coerce(x) for x in row)
            for row in rows
        )
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *args):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix([[ZERO] * c for _ in range(r)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, s) -> "Matrix":
        s = Scalar.coerce(s)
        return Matrix([[a * s for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        cols = list(zip(*other.rows))
        return Matrix(
            [
                [_dot(row, col) for col in cols]
                for row in self.rows
            ]
        )

    def __rmul__(self, s):
        return self.scale(s)

    def apply(self, vec):
        """Matrix-vector product on a tuple of Scalars."""
        return tuple(_dot(row, vec) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for r in self.rows for a in r)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def flat(self):
        return tuple(a for r in self.rows for a in r)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"


def _dot(u, v):
    total = None
    for a, b in zip(u, v):
        if a.is_zero or b.is_zero:
            continue
        total = a * b if total is None else total + a * b
    return ZERO if total is None else total


def trace_product(a: "Matrix", b: "Matrix") -> Scalar:
    """trace(a @ b) without forming the product."""
    total = ZERO
    for i, row in enumerate(a.rows):
        for k, x in enumerate(row):
            if not x.is_zero:
                y = b.rows[k][i]
                if not y.is_zero:
                    total = total + x * y
    return total


def rref(rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve_linear(matrix, rhs):
    """One exact solution of M x = b, or None if inconsistent."""
    if not matrix:
        return () if all(Scalar.coerce(v).is_zero for v in rhs) else None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    solution = [ZERO] * ncols
    for row, c in zip(reduced, pivots):
        solution[c] = row[-1]
    return tuple(solution)


def solve_and_kernel(matrix, rhs):
    """(one solution or None, kernel basis) from a single elimination pass."""
    if not matrix:
        ok = all(Scalar.coerce(v).is_zero for v in rhs)
        return (() if ok else None), []
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    solution = None
    if ncols not in pivots:
        solution = [ZERO] * ncols
        for row, c in zip(reduced, pivots):
            solution[c] = row[-1]
        solution = tuple(solution)
    col_pivots = [p for p in pivots if p < ncols]
    free = [c for c in range(ncols) if c not in col_pivots]
    kernel = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for row, c in zip(reduced, col_pivots):
            vec[c] = -row[f]
        kernel.append(tuple(vec))
    return solution, kernel


def kernel_basis(matrix):
    """Basis of the null space, one vector per free column, pivot-normalized."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for row, c in zip(reduced, pivots):
            vec[c] = -row[f]
        basis.append(tuple(vec))
    return basis


def row_space_basis(vectors):
    """Canonical (rref) basis of the span; doubles as a subspace signature."""
    reduced, pivots = rref(list(vectors))
    return tuple(tuple(row) for row in reduced[: len(pivots)])


class IncrementalSpan:
    """Row-echelon accumulator with O(rank * n) membership and insertion."""

    def __init__(self, vectors=()):
        self.rows = {}  # pivot position -> normalized row
        for v in vectors:
            self.add(v)

    def _reduce(self, vec):
        v = list(vec)
        for p in sorted(self.rows):
            if not v[p].is_zero:
                factor = v[p]
                row = self.rows[p]
                v = [a - factor * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert if independent; returns True when the rank grew."""
        v = self._reduce(vec)
        pivot = next((i for i, c in enumerate(v) if not c.is_zero), None)
        if pivot is None:
            return False
        inv = v[pivot].inverse()
        self.rows[pivot] = tuple(c * inv for c in v)
        return True

    def contains(self, vec) -> bool:
        return all(c.is_zero for c in self._reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self):
        return row_space_basis([self.rows[p] for p in sorted(self.rows)])


def in_span(vectors, target) -> bool:
    span = IncrementalSpan(vectors)
    return span.contains(tuple(target))


def associative_hull_is_full(mats, dim: int) -> bool:
    """Density criterion: the unital algebra generated by `mats` spans End(C^d).

    For a module over the complex numbers presented by matrices over Q or
    Q(sqrt d), simplicity is equivalent to the hull having dimension d^2.
    """
    if dim == 0:
        return False
    span = IncrementalSpan([Matrix.identity(dim).flat()])
    frontier = [Matrix.identity(dim)]

    def try_add(mat):
        if not span.add(mat.flat()):
            return False
        frontier.append(mat)
        return True

    for m in mats:
        try_add(m)
    while frontier and span.rank < dim * dim:
        mat = frontier.pop()
        for g in mats:
            try_add(mat * g)
            try_add(g * mat)
    return span.rank == dim * dim


def charpoly(m: Matrix):
    """Coefficients [1, c1, ..., cn] of det(tI - M) via Faddeev-LeVerrier."""
    n = m.nrows
    coeffs = [ONE]
    acc = Matrix.identity(n)
    for k in range(1, n + 1):
        acc = m * acc
        c = -(acc.trace() / k)
        coeffs.append(c)
        acc = acc + Matrix.identity(n).scale(c)
    return coeffs


def _poly_eval(coeffs, x: Scalar) -> Scalar:
    total = ZERO
    for c in coeffs:
        total = total * x + c
    return total


def _poly_divide_root(coeffs, root: Scalar):
    """Synthetic division by (t - root); remainder must be zero."""
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * root)
    if not out[-1].is_zero:
        raise ArithmeticError("not a root")
    return out[:-1]


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(coeffs):
    """All rational roots (with multiplicity) of a rational-coefficient poly."""
    roots = []
    # strip zero roots
    while len(coeffs) > 1 and coeffs[-1].is_zero:
        roots.append(ZERO)
        coeffs = coeffs[:-1]
    if len(coeffs) <= 1:
        return roots, coeffs
    denom = 1
    for c in coeffs:
        denom = denom * c.as_fraction().denominator // _gcd(denom, c.as_fraction().denominator)
    ints = [int(c.as_fraction() * denom) for c in coeffs]
    lead, const = ints[0], ints[-1]
    candidates = set()
    for p in _divisors(const):
        for q in _divisors(lead):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        root = Scalar(cand)
        while _poly_eval(coeffs, root).is_zero:
            roots.append(root)
            coeffs = _poly_divide_root(coeffs, root)
            if len(coeffs) <= 1:
                return roots, coeffs
    return roots, coeffs


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _quadratic_roots(coeffs):
    """Roots of a degree-2 scalar polynomial, introducing at most one sqrt."""
    a, b, c = coeffs
    disc = b * b - Scalar(4) * a * c
    root = scalar_sqrt(disc)  # raises if disc itself is irrational
    two_a = Scalar(2) * a
    return [(-b + root) / two_a, (-b - root) / two_a]


class EigenResult:
    """Exact eigenvalues with multiplicities and eigenvectors."""

    def __init__(self, pairs, discriminant):
        self.pairs = pairs  # list of (eigenvalue, multiplicity, [eigenvectors])
        self.discriminant = discriminant  # 0 when everything stayed rational

    def eigenvalues(self):
        out = []
        for value, mult, _ in self.pairs:
            out.extend([value] * mult)
        return out


def _roots_in_at_most_one_extension(coeffs):
    """Factor a rational polynomial over Q plus one quadratic extension."""
    roots, rest = _rational_roots(coeffs)
    degree = len(rest) - 1
    if degree == 0:
        return roots
    if degree == 2:
        return roots + _quadratic_roots(rest)
    if degree > 2 and degree % 2 == 0 and all(
        rest[i].is_zero for i in range(1, degree + 1, 2)
    ):
        # even polynomial: substitute u = t^2
        sub = [rest[i] for i in range(0, degree + 1, 2)]
        u_roots, u_rest = _rational_roots(sub)
        if len(u_rest) == 1:
            out = list(roots)
            for u in u_roots:
                r = scalar_sqrt(u)
                out.extend([r, -r])
            return out
    raise ExtensionRequiredError("extension beyond quadratic required")


def eigen_small(m: Matrix) -> EigenResult:
    """Exact eigendecomposition for dim <= 12 over Q or one Q(sqrt d).

    Raises ExtensionRequiredError when the spectrum does not fit in a single
    quadratic extension.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("eigen_small needs a square matrix")
    if n > 12:
        raise ValueError("eigen_small capped at dimension 12")
    cp = charpoly(m)
    entry_d = common_domain(m.flat())
    if entry_d == 0:
        roots = _roots_in_at_most_one_extension(cp)
    else:
        # entries in Q(sqrt d): use the rational norm polynomial for candidates
        conj = [c.conj() for c in cp]
        norm_poly = _poly_mul(cp, conj)
        candidates = _roots_in_at_most_one_extension(norm_poly)
        roots = []
        work = cp
        for cand in _unique(candidates):
            if cand.b != 0 and cand.d != entry_d:
                continue
            while len(work) > 1 and _poly_eval(work, cand).is_zero:
                roots.append(cand)
                work = _poly_divide_root(work, cand)
            if cand.b != 0:
                other = cand.conj()
                while len(work) > 1 and _poly_eval(work, other).is_zero:
                    roots.append(other)
                    work = _poly_divide_root(work, other)
        if len(work) > 1:
            raise ExtensionRequiredError("extension beyond quadratic required")
    from .errors import ScalarDomainError

    try:
        common_domain(roots + [Scalar(0, 1, entry_d) if entry_d else ZERO])
    except ScalarDomainError:
        raise ExtensionRequiredError("extension beyond quadratic required") from None
    grouped = {}
    for r in roots:
        grouped[r] = grouped.get(r, 0) + 1
    pairs = []
    for value in sorted(grouped, key=Scalar.sort_key):
        shifted = m - Matrix.identity(n).scale(value)
        vectors = kernel_basis([list(row) for row in shifted.rows])
        pairs.append((value, grouped[value], vectors))
    disc = common_domain([v for v, _, _ in pairs])
    return EigenResult(pairs, disc)


def _poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _unique(values):
    seen = []
    for v in values:
        if v not in seen:
            seen.append(v)
    return seen

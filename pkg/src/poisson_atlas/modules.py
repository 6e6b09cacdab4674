"""Poisson modules at a point: lifts, restrictions, twists, and their analysis.

The lift of a g(J)-representation N acts associatively by evaluation at the
point and Lie-wise through the linear part of each element, so the action of
a polynomial depends only on its constant-and-linear data at the point; the
restriction construction reads the matrices straight back.  Submodule
analysis combines an exact density criterion for simplicity with a
weight-graded enumeration of the submodule lattice for series and socles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brackets import PoissonPresentation, SubstitutionMap, bracket, verify_poisson_map
from .classify import Sl2Triple, derived_subalgebra
from .errors import AtlasError, IncompatibleTableError, NotPoissonMaximalError
from .ideals import is_poisson_maximal
from .lie import LieAlgebra, lie_from_point
from .linalg import (
    IncrementalSpan,
    Matrix,
    associative_hull_is_full,
    eigen_small,
    in_span,
    kernel_basis,
    rank,
    row_space_basis,
    solve_linear,
)
from .poly import LaurentPoly, PointP
from .scalars import Scalar, ZERO, ONE

DEFAULT_SEED = 0x9E3779B9
DEFAULT_TRIALS = 32

_MASK64 = (1 << 64) - 1


class SplitMix:
    """Tiny deterministic PRNG; stable across platforms and Python versions."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next64() % n


@dataclass(frozen=True)
class LieRep:
    """Matrices per Lie basis element; the rep property is constructor-checked."""

    lie: LieAlgebra
    mats: tuple
    check: bool = True

    def __post_init__(self):
        if len(self.mats) != self.lie.dim:
            raise ValueError("one matrix per Lie basis element required")
        if self.check:
            for i in range(self.lie.dim):
                for j in range(i + 1, self.lie.dim):
                    expected = self.rho(self.lie.bracket(
                        self.lie.basis_vector(i), self.lie.basis_vector(j)
                    ))
                    if expected != self.mats[i].commutator(self.mats[j]):
                        raise IncompatibleTableError(
                            f"not a representation on "
                            f"({self.lie.labels[i]}, {self.lie.labels[j]})"
                        )

    @property
    def dim(self) -> int:
        return self.mats[0].nrows if self.mats else 0

    def rho(self, vector) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for c, m in zip(vector, self.mats):
            if not c.is_zero:
                out = out + m.scale(c)
        return out


@dataclass(frozen=True)
class PoissonModule:
    """A point (maximal ideal) with a Lie action matrix per ambient generator.

    The associative action of a is the scalar a(pt); the Lie action of a is
    rho(grad a at pt), so C + J^2 kills the module (Pann contains it).
    """

    pres: PoissonPresentation
    point: PointP
    mats: tuple

    def __post_init__(self):
        if len(self.mats) != len(self.pres.varset):
            raise ValueError("one action matrix per generator required")
        if not is_poisson_maximal(self.pres, self.point):
            raise NotPoissonMaximalError(
                f"{self.point} is not a Poisson-maximal point"
            )

    @property
    def dim(self) -> int:
        return self.mats[0].nrows

    def assoc_of(self, p: LaurentPoly) -> Scalar:
        return p.evaluate(self.point)

    def action_of(self, p: LaurentPoly) -> Matrix:
        _, grad = p.linear_part(self.point)
        out = Matrix.zeros(self.dim, self.dim)
        for g, m in zip(grad, self.mats):
            if not g.is_zero:
                out = out + m.scale(g)
        return out

    def perturbed(self, gen_index: int, row: int, col: int) -> "PoissonModule":
        """Copy with +1 added to one action-matrix entry (for mutation tests)."""
        mats = list(self.mats)
        rows = [list(r) for r in mats[gen_index].rows]
        rows[row][col] = rows[row][col] + ONE
        mats[gen_index] = Matrix(rows)
        return PoissonModule(self.pres, self.point, tuple(mats))


def sl2_irrep(lie: LieAlgebra, d: int, triple: Sl2Triple, radical=()) -> LieRep:
    """The d-dimensional simple module in the weight basis v_0..v_{d-1}.

    e.v_j = j(d-j) v_{j-1}, f.v_j = v_{j+1}, h.v_j = (d-1-2j) v_j; ambient Lie
    basis elements are resolved through (e, h, f) coordinates, the radical
    acting as zero.
    """
    if d < 1:
        raise ValueError("module dimension must be >= 1")
    E = [[ZERO] * d for _ in range(d)]
    H = [[ZERO] * d for _ in range(d)]
    F = [[ZERO] * d for _ in range(d)]
    for j in range(d):
        H[j][j] = Scalar(d - 1 - 2 * j)
        if j >= 1:
            E[j - 1][j] = Scalar(j * (d - j))
        if j < d - 1:
            F[j + 1][j] = ONE
    E, H, F = Matrix(E), Matrix(H), Matrix(F)
    columns = [list(triple.e), list(triple.h), list(triple.f)] + [
        list(v) for v in radical
    ]
    solve_rows = [list(r) for r in zip(*columns)]
    mats = []
    for i in range(lie.dim):
        coords = solve_linear(solve_rows, list(lie.basis_vector(i)))
        if coords is None:
            raise AtlasError(
                f"basis element {lie.labels[i]} outside span(triple, radical)"
            )
        ce, ch, cf = coords[0], coords[1], coords[2]
        mats.append(E.scale(ce) + H.scale(ch) + F.scale(cf))
    return LieRep(lie, tuple(mats))


def lift_module(pres: PoissonPresentation, pt: PointP, rep: LieRep) -> PoissonModule:
    """The lift: a.n = a(pt) n and {a, n} = rho(lin a at pt) n, killed by the point."""
    expected = lie_from_point(pres, pt)
    if rep.lie != expected:
        raise AtlasError("representation is over a different Lie algebra than g(J)")
    return PoissonModule(pres, pt, rep.mats)


def restrict_to_lie(module: PoissonModule) -> LieRep:
    """The inverse restriction: the g(J)-module on the basis u_k = x_k - pt_k."""
    if module.dim == 0:
        raise ValueError("Poisson modules are nonzero")
    lie = lie_from_point(module.pres, module.point)
    return LieRep(lie, module.mats)


@dataclass
class AxiomReport:
    ok: bool
    failures: list = field(default_factory=list)
    checks: int = 0

    def record(self, condition: bool, axiom: str, witness: str):
        self.checks += 1
        if not condition:
            self.ok = False
            self.failures.append((axiom, witness))


def _random_poly(rng: SplitMix, varset, candidates) -> LaurentPoly:
    terms = {}
    for _ in range(1 + rng.below(4)):
        exps = candidates[rng.below(len(candidates))]
        coeff = rng.below(6) + 1  # 1..6 -> -3..-1, 1..3
        coeff = coeff - 7 if coeff > 3 else coeff
        terms[exps] = Scalar.coerce(terms.get(exps, 0)) + Scalar(coeff)
    return LaurentPoly(varset, terms)


def _exponent_candidates(varset):
    out = []

    def build(i, acc, budget):
        if i == len(varset):
            out.append(tuple(acc))
            return
        lo = -1 if varset.laurent[i] else 0
        for e in range(lo, budget + 1):
            build(i + 1, acc + [e], budget - max(e, 0))

    build(0, [], 3)
    return out


def verify_poisson_axioms(
    module: PoissonModule, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED
) -> AxiomReport:
    """Exact check of the three Poisson-module axioms plus the annihilator facts.

    Axioms run on all generator pairs and on seeded pseudo-random polynomial
    pairs of total degree <= 3; everything is compared exactly.
    """
    pres, pt = module.pres, module.point
    varset = pres.varset
    spec = pres.bracket_spec
    report = AxiomReport(True)
    gens = [LaurentPoly.variable(varset, n) for n in varset.names]

    def check_pair(p, q, label):
        br = bracket(spec, p, q)
        lhs = module.action_of(br)
        rhs = module.action_of(p).commutator(module.action_of(q))
        report.record(lhs == rhs, "axiom (i)", f"(a, b) = {label}")
        report.record(
            module.assoc_of(br).is_zero,
            "axiom (ii)",
            f"{{a, b}}(pt) != 0 for (a, b) = {label}",
        )
        prod = p * q
        lhs3 = module.action_of(prod)
        rhs3 = module.action_of(q).scale(module.assoc_of(p)) + module.action_of(
            p
        ).scale(module.assoc_of(q))
        report.record(lhs3 == rhs3, "axiom (iii)", f"(a, b) = {label}")

    names = varset.names
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            check_pair(gens[i], gens[j], f"({names[i]}, {names[j]})")

    # annihilator facts: constants and J^2 act as zero; the annihilator is Poisson
    report.record(
        module.action_of(LaurentPoly.const(varset, 1)).is_zero,
        "Pann contains constants",
        "{1, -} != 0",
    )
    shifted = [g - pt.values[i] for i, g in enumerate(gens)]
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            report.record(
                module.action_of(shifted[i] * shifted[j]).is_zero,
                "Pann contains J^2",
                f"generators ({names[i]}, {names[j]})",
            )
    for k in range(len(gens)):
        for l in range(len(gens)):
            report.record(
                module.assoc_of(bracket(spec, gens[k], shifted[l])).is_zero,
                "J is a Poisson ideal",
                f"{{{names[k]}, {names[l]} - pt}} escapes J",
            )

    rng = SplitMix(seed)
    candidates = _exponent_candidates(varset)
    for t in range(trials):
        p = _random_poly(rng, varset, candidates)
        q = _random_poly(rng, varset, candidates)
        check_pair(p, q, f"trial {t}: ({p}, {q})")
    return report


# -- submodule machinery -------------------------------------------------------


def _closure(seed, mats):
    """Canonical basis of the smallest subspace containing seed, stable under mats."""
    span = IncrementalSpan()
    frontier = []
    if span.add(tuple(seed)):
        frontier.append(tuple(seed))
    while frontier:
        v = frontier.pop()
        for m in mats:
            image = m.apply(v)
            if span.add(image):
                frontier.append(image)
    return span.basis()


def is_simple(mats, dim: int) -> bool:
    """Simplicity over C via the associative-hull density criterion."""
    return associative_hull_is_full(list(mats), dim)


def is_simple_rep(rep: LieRep) -> bool:
    return is_simple(rep.mats, rep.dim)


def is_simple_module(module: PoissonModule) -> bool:
    return is_simple(module.mats, module.dim)


@dataclass
class SubmoduleAnalysis:
    """Lattice data from weight-vector closures under the action matrices."""

    dim: int
    lattice: list  # canonical bases, sorted by (dim, signature)
    complete: bool  # True when every weight space was 1-dimensional
    minimal: list
    socle_dim: int
    semisimple: bool | None
    decomposition: list | None  # direct summands (canonical bases) when semisimple

    def proper_nonzero(self):
        return [s for s in self.lattice if 0 < len(s) < self.dim]


def _weight_seeds(grading: Matrix):
    eig = eigen_small(grading)
    seeds, complete = [], True
    for _, _, vecs in eig.pairs:
        if len(vecs) != 1:
            complete = False
        seeds.extend(vecs)
    return seeds, complete


def analyze_submodules(mats, dim: int, grading: Matrix | None = None) -> SubmoduleAnalysis:
    """Enumerate submodules from weight-vector closures.

    With a diagonalizable grading whose weight spaces are all one-dimensional,
    every submodule is graded and the enumeration is the full lattice;
    otherwise closures of basis vectors are used and the lattice may be
    incomplete (simplicity stays decided by the density criterion).
    """
    mats = list(mats)
    if grading is not None:
        seeds, complete = _weight_seeds(grading)
    else:
        seeds, complete = [], False
    if not complete:
        unit = [tuple(ONE if k == i else ZERO for k in range(dim)) for i in range(dim)]
        seeds = seeds + unit
    closures = []
    for s in seeds:
        c = _closure(s, mats)
        if c not in closures:
            closures.append(c)
    # all sums of closures, deduplicated by canonical rref signature
    found = {(): ()}
    for c in closures:
        for vectors in list(found.values()):
            merged = row_space_basis(list(vectors) + list(c))
            found.setdefault(merged, merged)
    all_spaces = sorted(found.values(), key=lambda b: (len(b), str(b)))
    minimal = []
    for space in all_spaces:
        if not space:
            continue
        if any(
            other and len(other) < len(space) and all(in_span(space, v) for v in other)
            for other in all_spaces
        ):
            continue
        minimal.append(space)
    socle = row_space_basis([v for s in minimal for v in s])
    semisimple: bool | None
    decomposition = None
    if len(socle) == dim:
        decomposition = []
        current: list = []
        for s in sorted(minimal, key=lambda b: (len(b), str(b))):
            merged = row_space_basis(current + [v for v in s])
            if len(merged) == len(current) + len(s):
                decomposition.append(s)
                current = list(merged)
            if len(current) == dim:
                break
        # on a partial lattice a "minimal" member need not be simple; the
        # semisimplicity certificate stands only when every summand is
        simple_summands = all(
            is_simple(restrict_action(mats, s), len(s)) for s in decomposition
        )
        if simple_summands:
            semisimple = True
        else:
            semisimple = None
            decomposition = None
    elif complete:
        semisimple = False
    else:
        semisimple = None  # lattice not fully enumerated
    return SubmoduleAnalysis(
        dim, all_spaces, complete, minimal, len(socle), semisimple, decomposition
    )


def is_semisimple(mats, dim: int, grading: Matrix | None = None):
    """(verdict, decomposition witness); verdict None if the lattice was partial."""
    analysis = analyze_submodules(list(mats), dim, grading)
    return analysis.semisimple, analysis.decomposition


def restrict_action(mats, basis):
    """Action matrices in the coordinates of an invariant subspace basis."""
    cols = [list(col) for col in zip(*[list(v) for v in basis])]
    out = []
    for m in mats:
        new_cols = []
        for v in basis:
            coords = solve_linear(cols, list(m.apply(v)))
            if coords is None:
                raise AtlasError("subspace is not invariant")
            new_cols.append(coords)
        out.append(Matrix(list(zip(*new_cols))))
    return out


def quotient_action(mats, sub_basis, dim):
    """Action on the quotient by an invariant subspace, with the quotient grading."""
    reduced = list(row_space_basis(sub_basis))
    pivots = []
    for row in reduced:
        pivots.append(next(i for i, c in enumerate(row) if not c.is_zero))
    free = [i for i in range(dim) if i not in pivots]

    def reduce_vec(v):
        v = list(v)
        for row, p in zip(reduced, pivots):
            if not v[p].is_zero:
                factor = v[p]
                v = [a - factor * b for a, b in zip(v, row)]
        return tuple(v[i] for i in free)

    out = []
    for m in mats:
        new_cols = [reduce_vec(m.apply(_unit(dim, c))) for c in free]
        out.append(Matrix(list(zip(*new_cols))))
    return out, len(free)


def _unit(dim, i):
    return tuple(ONE if k == i else ZERO for k in range(dim))


def composition_series(mats, dim: int, grading: Matrix | None = None):
    """Dimensions of the composition factors, built from minimal submodules.

    Every factor is certified simple by the density criterion; on a partially
    enumerated lattice that certification can fail, which is reported rather
    than returning a non-composition filtration.
    """
    mats = list(mats)
    factors = []
    g = grading
    while dim > 0:
        analysis = analyze_submodules(mats, dim, g)
        candidates = [s for s in analysis.minimal if len(s) < dim]
        if not candidates:
            if not is_simple(mats, dim):
                raise AtlasError(
                    "composition series not determined: lattice not fully "
                    "enumerated and the remaining factor is not simple"
                )
            factors.append(dim)
            break
        sub = sorted(candidates, key=lambda b: (len(b), str(b)))[0]
        if not is_simple(restrict_action(mats, sub), len(sub)):
            raise AtlasError(
                "composition series not determined: a minimal lattice member "
                "is not simple (lattice not fully enumerated)"
            )
        factors.append(len(sub))
        mats, new_dim = quotient_action(mats, sub, dim)
        if g is not None:
            g = quotient_action([g], sub, dim)[0][0]
        dim = new_dim
    return factors


# -- constructions -------------------------------------------------------------


def twist(module: PoissonModule, auto: SubstitutionMap, check: bool = True) -> PoissonModule:
    """Pullback along an automorphism: {a, m} = {pi(a), m}_M; ann moves to pi^-1(J)."""
    if check:
        report = verify_poisson_map(auto, module.pres, module.pres)
        if not report.ok:
            raise AtlasError("substitution map is not a Poisson automorphism")
    new_point = PointP(
        module.pres.varset, [img.evaluate(module.point) for img in auto.images]
    )
    new_mats = tuple(module.action_of(img) for img in auto.images)
    return PoissonModule(module.pres, new_point, new_mats)


def restrict_to_subalgebra(
    module: PoissonModule,
    emb: SubstitutionMap,
    sub_pres: PoissonPresentation,
    check: bool = True,
) -> PoissonModule:
    """Restriction along an embedding of a Poisson subalgebra given by generators.

    Each sub-generator G acts associatively by G(pt) and Lie-wise by
    rho(lin G at pt): only the constant-and-linear data of G matters.
    """
    if emb.source != sub_pres.varset or emb.target != module.pres.varset:
        raise AtlasError("embedding endpoints do not match the presentations")
    if check:
        report = verify_poisson_map(emb, sub_pres, module.pres)
        if not report.ok:
            raise AtlasError(f"embedding is not a Poisson map: {report.failures}")
    sub_point = PointP(
        sub_pres.varset, [img.evaluate(module.point) for img in emb.images]
    )
    sub_mats = tuple(module.action_of(img) for img in emb.images)
    return PoissonModule(sub_pres, sub_point, sub_mats)


def solvable_character_module(
    pres: PoissonPresentation, pt: PointP, beta
) -> PoissonModule:
    """One-dimensional module {p, v} = (sum beta_k dp/dx_k(pt)) v, p.v = p(pt) v.

    beta must vanish on [g(J), g(J)]; that is exactly the character condition.
    """
    beta = tuple(Scalar.coerce(b) for b in beta)
    lie = lie_from_point(pres, pt)
    for w in derived_subalgebra(lie):
        value = sum((b * c for b, c in zip(beta, w)), ZERO)
        if not value.is_zero:
            raise AtlasError("beta does not vanish on [g(J), g(J)]")
    mats = tuple(Matrix([[b]]) for b in beta)
    return PoissonModule(pres, pt, mats)


@dataclass(frozen=True)
class ActionTable:
    """Explicit images [u_i, m_j] as coordinate vectors over a module basis."""

    lie_labels: tuple
    module_labels: tuple
    entries: dict  # (lie_label, module_label) -> tuple of coords; missing = 0

    def matrix_for(self, lie_label: str) -> Matrix:
        d = len(self.module_labels)
        cols = []
        for m_label in self.module_labels:
            coords = self.entries.get((lie_label, m_label))
            cols.append(tuple(Scalar.coerce(c) for c in coords) if coords else (ZERO,) * d)
        return Matrix(list(zip(*cols)))


def module_from_table(lie: LieAlgebra, table: ActionTable) -> LieRep:
    """Build a LieRep from a bracket table, verifying structure compatibility."""
    if tuple(table.lie_labels) != tuple(lie.labels):
        raise IncompatibleTableError("table labels do not match the Lie algebra")
    mats = tuple(table.matrix_for(l) for l in lie.labels)
    return LieRep(lie, mats)  # constructor enforces compatibility


# -- isomorphism ----------------------------------------------------------------


def intertwiner_space(mats1, mats2, dim1: int, dim2: int):
    """Basis of {T : T rho1(u) = rho2(u) T for all u}; T maps module 1 to 2."""
    rows = []
    for a, b in zip(mats1, mats2):
        # (T a - b T)[i][j] = 0; unknowns T[i][l] indexed by i*dim1 + l
        for i in range(dim2):
            for j in range(dim1):
                row = [ZERO] * (dim1 * dim2)
                for l in range(dim1):
                    row[i * dim1 + l] = row[i * dim1 + l] + a[l, j]
                for l in range(dim2):
                    row[l * dim1 + j] = row[l * dim1 + j] - b[i, l]
                rows.append(row)
    basis = kernel_basis(rows)
    return [
        Matrix([[v[i * dim1 + l] for l in range(dim1)] for i in range(dim2)])
        for v in basis
    ]


def find_isomorphism(mats1, mats2, dim1: int, dim2: int):
    """An invertible intertwiner, or None; checks basis elements then pair sums."""
    if dim1 != dim2:
        return None
    space = intertwiner_space(mats1, mats2, dim1, dim2)
    for t in space:
        if rank([list(r) for r in t.rows]) == dim1:
            return t
    for i in range(len(space)):
        for j in range(i + 1, len(space)):
            t = space[i] + space[j]
            if rank([list(r) for r in t.rows]) == dim1:
                return t
    return None


def lie_reps_isomorphic(r1: LieRep, r2: LieRep):
    if r1.lie != r2.lie:
        return None
    return find_isomorphism(r1.mats, r2.mats, r1.dim, r2.dim)


def poisson_modules_isomorphic(m1: PoissonModule, m2: PoissonModule):
    """Isomorphism requires equal annihilators (points); then a Lie intertwiner."""
    if m1.pres is not m2.pres and m1.pres != m2.pres:
        return None
    if m1.point != m2.point:
        return None
    return find_isomorphism(m1.mats, m2.mats, m1.dim, m2.dim)


def lie_rep_restrict(rep: LieRep, vectors, labels) -> LieRep:
    """Restrict a LieRep to the subalgebra spanned by the given L-vectors."""
    vectors = [tuple(v) for v in vectors]
    n = len(vectors)
    cols = [list(c) for c in zip(*[list(v) for v in vectors])]
    sc = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            br = rep.lie.bracket(vectors[i], vectors[j])
            coords = solve_linear(cols, list(br))
            if coords is None:
                raise AtlasError("vectors do not span a subalgebra")
            for k in range(n):
                sc[i][j][k] = coords[k]
    sub = LieAlgebra(labels, sc)
    mats = tuple(rep.rho(v) for v in vectors)
    return LieRep(sub, mats)

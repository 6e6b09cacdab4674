"""Sparse multivariate (Laurent) polynomials over exact scalars.

Terms are stored as a dict from exponent tuples to nonzero Scalars, so equality
is syntactic on canonical forms.  Negative exponents are admitted only at
positions whose variable carries the Laurent flag.  The display order is
graded-lexicographic (total degree first, then exponent tuple), fixed globally
so report output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LaurentViolationError, VarSetMismatchError
from .scalars import Scalar, ZERO, ONE


class VarSet:
    """Ordered variable names with per-variable Laurent flags."""

    __slots__ = ("names", "laurent", "_index")

    def __init__(self, names, laurent=()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        lset = set(laurent)
        unknown = lset - set(names)
        if unknown:
            raise ValueError(f"Laurent flags for unknown variables {sorted(unknown)}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "laurent", tuple(n in lset for n in names))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *args):
        raise AttributeError("VarSet is immutable")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VarSetMismatchError(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, VarSet)
            and self.names == other.names
            and self.laurent == other.laurent
        )

    def __hash__(self):
        return hash((self.names, self.laurent))

    def __repr__(self):
        flags = [n for n, f in zip(self.names, self.laurent) if f]
        extra = f" laurent({', '.join(flags)})" if flags else ""
        return f"VarSet({', '.join(self.names)}{extra})"


def _check_exponents(varset: VarSet, exps):
    for e, flag, name in zip(exps, varset.laurent, varset.names):
        if e < 0 and not flag:
            raise LaurentViolationError(
                f"negative exponent on non-Laurent variable {name}"
            )


def term_sort_key(exps):
    """Graded-lex key; used descending for display."""
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable sparse polynomial; arithmetic is exact and canonicalizing."""

    __slots__ = ("varset", "terms")

    def __init__(self, varset: VarSet, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Scalar.coerce(coeff)
            if coeff.is_zero:
                continue
            exps = tuple(exps)
            if len(exps) != len(varset):
                raise VarSetMismatchError("exponent arity mismatch")
            _check_exponents(varset, exps)
            clean[exps] = coeff
        object.__setattr__(self, "varset", varset)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def _raw(varset: VarSet, terms: dict) -> "LaurentPoly":
        """Internal: skip validation when invariants follow from valid inputs."""
        p = object.__new__(LaurentPoly)
        object.__setattr__(p, "varset", varset)
        object.__setattr__(p, "terms", terms)
        return p

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(varset: VarSet) -> "LaurentPoly":
        return LaurentPoly(varset)

    @staticmethod
    def const(varset: VarSet, value) -> "LaurentPoly":
        return LaurentPoly(varset, {(0,) * len(varset): Scalar.coerce(value)})

    @staticmethod
    def variable(varset: VarSet, name: str) -> "LaurentPoly":
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return LaurentPoly(varset, {tuple(exps): ONE})

    # -- predicates ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Scalar:
        """The scalar value if the polynomial is constant, else raises."""
        if self.is_zero:
            return ZERO
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            if all(e == 0 for e in exps):
                return coeff
        raise ValueError(f"{self} is not constant")

    def total_degree(self):
        """Max over terms of the exponent sum; None for the zero polynomial."""
        if self.is_zero:
            return None
        return max(sum(e) for e in self.terms)

    def degree_wrt(self, weights):
        """Degree under a weight vector if homogeneous, else None."""
        if self.is_zero:
            return 0
        degs = {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}
        return degs.pop() if len(degs) == 1 else None

    # -- arithmetic ------------------------------------------------------------

    def _same_varset(self, other: "LaurentPoly"):
        if self.varset != other.varset:
            raise VarSetMismatchError("operands over different variable sets")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = LaurentPoly.const(self.varset, other)
        self._same_varset(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, ZERO) + coeff
            if acc.is_zero:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return LaurentPoly._raw(self.varset, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = LaurentPoly.const(self.varset, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = Scalar.coerce(other)
            if s.is_zero:
                return LaurentPoly.zero(self.varset)
            return LaurentPoly._raw(
                self.varset, {e: c * s for e, c in self.terms.items()}
            )
        self._same_varset(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(map(int.__add__, e1, e2))
                acc = out.get(exps)
                acc = c1 * c2 if acc is None else acc + c1 * c2
                if acc.is_zero:
                    out.pop(exps, None)
                else:
                    out[exps] = acc
        return LaurentPoly._raw(self.varset, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self._unit_inverse() ** (-n)
        out = LaurentPoly.const(self.varset, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit (single term on Laurent-invertible variables)."""
        if len(self.terms) != 1:
            raise LaurentViolationError(f"{self} is not a unit monomial")
        (exps, coeff), = self.terms.items()
        inv = tuple(-e for e in exps)
        _check_exponents(self.varset, inv)
        return LaurentPoly(self.varset, {inv: coeff.inverse()})

    # -- calculus ----------------------------------------------------------------

    def partial(self, name: str) -> "LaurentPoly":
        """Formal partial derivative, Laurent-aware."""
        i = self.varset.index(name)
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            out[tuple(new)] = coeff * e
        return LaurentPoly._raw(self.varset, out)

    def evaluate(self, point: "PointP") -> Scalar:
        if point.varset != self.varset:
            raise VarSetMismatchError("point over a different variable set")
        total = ZERO
        for exps, coeff in self.terms.items():
            val = coeff
            for e, x in zip(exps, point.values):
                if e:
                    val = val * x**e
            total = total + val
        return total

    def linear_part(self, point: "PointP"):
        """Constant-and-linear Taylor data at the point.

        Returns (value, gradient); the class of p - p(pt) modulo the square of
        the maximal ideal at pt is sum_k grad[k] * (x_k - pt_k).
        """
        value = self.evaluate(point)
        grad = tuple(self.partial(n).evaluate(point) for n in self.varset.names)
        return value, grad

    def substitute(self, images: dict) -> "LaurentPoly":
        """Substitute each variable by a polynomial (all over one target varset).

        Negative powers require the image to be an invertible monomial.
        """
        target = None
        for img in images.values():
            target = img.varset
            break
        if target is None:
            raise ValueError("empty substitution")
        missing = [n for n in self.varset.names if n not in images]
        if missing:
            raise VarSetMismatchError(f"substitution misses variables {missing}")
        out = LaurentPoly.zero(target)
        cache: dict[tuple[int, int], LaurentPoly] = {}
        for exps, coeff in self.terms.items():
            term = LaurentPoly.const(target, coeff)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                key = (i, e)
                if key not in cache:
                    cache[key] = images[self.varset.names[i]] ** e
                term = term * cache[key]
            out = out + term
        return out

    # -- canonical form ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]), reverse=True)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=term_sort_key)
        return exps, self.terms[exps]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = LaurentPoly.const(self.varset, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self):
        return hash((self.varset, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.varset.names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            c = str(coeff)
            if not mono:
                piece = c
            elif c == "1":
                piece = mono
            elif c == "-1":
                piece = f"-{mono}"
            elif coeff.is_rational and coeff.b == 0 and "+" not in c:
                piece = f"{c}*{mono}"
            else:
                piece = f"({c})*{mono}"
            bits.append(piece)
        out = bits[0]
        for piece in bits[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out


class PointP:
    """An assignment of one scalar per variable (a maximal ideal)."""

    __slots__ = ("varset", "values")

    def __init__(self, varset: VarSet, values):
        values = tuple(Scalar.coerce(v) for v in values)
        if len(values) != len(varset):
            raise VarSetMismatchError("point arity mismatch")
        for v, flag, name in zip(values, varset.laurent, varset.names):
            if flag and v.is_zero:
                raise LaurentViolationError(
                    f"zero assigned to Laurent variable {name}"
                )
        object.__setattr__(self, "varset", varset)
        object.__setattr__(self, "values", values)

    def __setattr__(self, *args):
        raise AttributeError("PointP is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PointP)
            and self.varset == other.varset
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.varset, self.values))

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        return f"PointP({self})"

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def express_in_span(target: LaurentPoly, basis) -> tuple | None:
    """Exact coefficients c with sum c_i * basis_i == target, or None.

    Solved over the union of monomial supports; any solution is returned (the
    system may be underdetermined).
    """
    from .linalg import solve_linear  # local import to avoid a cycle

    basis = list(basis)
    for b in basis:
        if b.varset != target.varset:
            raise VarSetMismatchError("basis over a different variable set")
    monomials = set(target.terms)
    for b in basis:
        monomials |= set(b.terms)
    rows = sorted(monomials, key=term_sort_key)
    matrix = [[b.terms.get(m, ZERO) for b in basis] for m in rows]
    rhs = [target.terms.get(m, ZERO) for m in rows]
    return solve_linear(matrix, rhs)


def divides(divisor: LaurentPoly, p: LaurentPoly):
    """Quotient q with p == q * divisor in the Laurent ring, or None.

    Monomials are units, so divisibility is tested after normalizing both
    operands to honest polynomials.
    """
    if divisor.is_zero:
        return None
    if p.is_zero:
        return LaurentPoly.zero(p.varset)

    def monomial_shift(poly):
        shift = [0] * len(poly.varset)
        for exps in poly.terms:
            for i, e in enumerate(exps):
                shift[i] = min(shift[i], e)
        return tuple(-s for s in shift)

    def shifted(poly, shift):
        return LaurentPoly(
            poly.varset,
            {tuple(e + s for e, s in zip(exps, shift)): c for exps, c in poly.terms.items()},
        )

    sh_p = monomial_shift(p)
    sh_d = monomial_shift(divisor)
    p2 = shifted(p, sh_p)
    d2 = shifted(divisor, sh_d)
    lead_d, coeff_d = d2.leading()
    quotient = LaurentPoly.zero(p.varset)
    rem = p2
    while not rem.is_zero:
        lead_r, coeff_r = rem.leading()
        q_exps = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(e < 0 for e in q_exps):
            return None
        mono = LaurentPoly(p.varset, {q_exps: coeff_r / coeff_d})
        quotient = quotient + mono
        rem = rem - mono * d2
    # undo the unit normalizations: p = z^-shp * p2 = z^-shp * q * d2 = (q * z^(shd-shp)) * divisor
    net = tuple(b - a for a, b in zip(sh_p, sh_d))
    try:
        _check_exponents(p.varset, net)
    except LaurentViolationError:
        return None
    unit = LaurentPoly(p.varset, {net: ONE})
    return quotient * unit

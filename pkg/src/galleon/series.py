"""Exact truncated power series over the rationals.

Coefficients are Python ints or ``fractions.Fraction`` values; no floating
point ever enters the arithmetic.  Two conventions share the same stored
arithmetic:

* OGF: ordinary generating functions, ``coeff(n)`` is the count itself.
* EGF: exponential generating functions, ``coeff(n)`` is count / n!.

The convention is metadata used for extraction and for guarding the
constructors that only make sense on one side (``mset2`` is an unlabeled
construction, ``set2`` a labeled one).  Products use the plain Cauchy
convolution in both conventions: EGF coefficients are already divided by
n!, so the binomial convolution is implicit.

The module also provides doubly truncated bivariate series (one counting
variable, one marking variable) and fixed-point solvers for the functional
equations produced by symbolic-method constructions.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

OGF = "ogf"
EGF = "egf"


class FixedPointError(RuntimeError):
    """Fixed-point iteration failed to stabilize within the iteration bound.

    Raised when the supplied self-map is not a contraction on truncated
    series (it must increase the valuation of differences), which signals a
    malformed functional equation.
    """


class NonIntegralCoefficientError(ArithmeticError):
    """A coefficient that must be an exact integer is not."""


def _half(x):
    """Exact x/2, keeping ints when the division is exact."""
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else Fraction(x, 2)
    return x / 2


def _exact_div(x, y):
    """Exact x/y for int or Fraction operands."""
    if y == 1:
        return x
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        return q if r == 0 else Fraction(x, y)
    return Fraction(x) / Fraction(y)


class TruncSeries:
    """Power series truncated inclusively at a fixed order.

    ``coeffs`` always has length ``order + 1``.  Values are immutable by
    convention: no operation mutates an operand, so instances can be shared
    freely (including across threads).
    """

    __slots__ = ("coeffs", "order", "convention")

    def __init__(self, coeffs, order=None, convention=OGF):
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        elif len(coeffs) > order + 1:
            del coeffs[order + 1:]
        self.coeffs = coeffs
        self.order = order
        self.convention = convention

    @classmethod
    def zero(cls, order, convention=OGF):
        return cls([0] * (order + 1), order, convention)

    @classmethod
    def one(cls, order, convention=OGF):
        c = [0] * (order + 1)
        c[0] = 1
        return cls(c, order, convention)

    @classmethod
    def atom(cls, order, convention=OGF):
        """The series t: a single atom (one leaf)."""
        c = [0] * (order + 1)
        if order >= 1:
            c[1] = 1
        return cls(c, order, convention)

    def coeff(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def truncated(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: order + 1], order, self.convention)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def _check_convention(self, other):
        if self.convention != other.convention:
            raise ValueError(
                "convention mismatch: %s vs %s" % (self.convention, other.convention)
            )

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.convention == other.convention
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.convention, self.order, tuple(self.coeffs)))

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._check_convention(other)
            n = min(self.order, other.order)
            return TruncSeries(
                [a + b for a, b in zip(self.coeffs, other.coeffs)][: n + 1],
                n,
                self.convention,
            )
        # scalar: added to the constant term
        c = list(self.coeffs)
        c[0] = c[0] + other
        return TruncSeries(c, self.order, self.convention)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.convention)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            self._check_convention(other)
            n = min(self.order, other.order)
            return TruncSeries(
                [a - b for a, b in zip(self.coeffs, other.coeffs)][: n + 1],
                n,
                self.convention,
            )
        c = list(self.coeffs)
        c[0] = c[0] - other
        return TruncSeries(c, self.order, self.convention)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(
                [other * c for c in self.coeffs], self.order, self.convention
            )
        self._check_convention(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if ai:
                for j in range(n - i + 1):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncSeries(out, n, self.convention)

    __rmul__ = __mul__

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return "TruncSeries([%s%s], order=%d, %s)" % (head, tail, self.order, self.convention)


class BivarTruncSeries:
    """Series in (t, u) truncated at ``t_order`` and ``u_order`` inclusively.

    ``coeffs[n][g]`` is the coefficient of t^n u^g.  Here t counts leaves
    and u marks galls.
    """

    __slots__ = ("coeffs", "t_order", "u_order", "convention")

    def __init__(self, coeffs, t_order, u_order, convention=OGF):
        self.coeffs = coeffs
        self.t_order = t_order
        self.u_order = u_order
        self.convention = convention

    @classmethod
    def zero(cls, t_order, u_order, convention=OGF):
        return cls(
            [[0] * (u_order + 1) for _ in range(t_order + 1)],
            t_order,
            u_order,
            convention,
        )

    @classmethod
    def atom(cls, t_order, u_order, convention=OGF):
        """The series t."""
        s = cls.zero(t_order, u_order, convention)
        if t_order >= 1:
            s.coeffs[1][0] = 1
        return s

    def coeff(self, n: int, g: int):
        if 0 <= n <= self.t_order and 0 <= g <= self.u_order:
            return self.coeffs[n][g]
        return 0

    def u_slice(self, g: int) -> TruncSeries:
        """The univariate series of t-coefficients sitting at u^g."""
        return TruncSeries(
            [row[g] if g <= self.u_order else 0 for row in self.coeffs],
            self.t_order,
            self.convention,
        )

    def shift_u(self) -> "BivarTruncSeries":
        """Multiply by u (marks one extra gall)."""
        out = BivarTruncSeries.zero(self.t_order, self.u_order, self.convention)
        for n, row in enumerate(self.coeffs):
            orow = out.coeffs[n]
            for g in range(self.u_order):
                orow[g + 1] = row[g]
        return out

    def _check_convention(self, other):
        if self.convention != other.convention:
            raise ValueError(
                "convention mismatch: %s vs %s" % (self.convention, other.convention)
            )

    def __eq__(self, other):
        if not isinstance(other, BivarTruncSeries):
            return NotImplemented
        return (
            self.convention == other.convention
            and self.t_order == other.t_order
            and self.u_order == other.u_order
            and all(
                a == b
                for ra, rb in zip(self.coeffs, other.coeffs)
                for a, b in zip(ra, rb)
            )
        )

    def __add__(self, other):
        if isinstance(other, BivarTruncSeries):
            self._check_convention(other)
            nt = min(self.t_order, other.t_order)
            nu = min(self.u_order, other.u_order)
            out = [
                [self.coeffs[n][g] + other.coeffs[n][g] for g in range(nu + 1)]
                for n in range(nt + 1)
            ]
            return BivarTruncSeries(out, nt, nu, self.convention)
        out = [list(r) for r in self.coeffs]
        out[0][0] = out[0][0] + other
        return BivarTruncSeries(out, self.t_order, self.u_order, self.convention)

    __radd__ = __add__

    def __neg__(self):
        return BivarTruncSeries(
            [[-c for c in row] for row in self.coeffs],
            self.t_order,
            self.u_order,
            self.convention,
        )

    def __sub__(self, other):
        if isinstance(other, BivarTruncSeries):
            return self + (-other)
        out = [list(r) for r in self.coeffs]
        out[0][0] = out[0][0] - other
        return BivarTruncSeries(out, self.t_order, self.u_order, self.convention)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BivarTruncSeries):
            return BivarTruncSeries(
                [[other * c for c in row] for row in self.coeffs],
                self.t_order,
                self.u_order,
                self.convention,
            )
        self._check_convention(other)
        nt = min(self.t_order, other.t_order)
        nu = min(self.u_order, other.u_order)
        out = [[0] * (nu + 1) for _ in range(nt + 1)]
        b = other.coeffs
        for i in range(nt + 1):
            arow = self.coeffs[i]
            for p in range(nu + 1):
                av = arow[p]
                if av:
                    for j in range(nt - i + 1):
                        brow = b[j]
                        orow = out[i + j]
                        for q in range(nu - p + 1):
                            bv = brow[q]
                            if bv:
                                orow[p + q] += av * bv
        return BivarTruncSeries(out, nt, nu, self.convention)

    __rmul__ = __mul__

    def __repr__(self):
        return "BivarTruncSeries(t_order=%d, u_order=%d, %s)" % (
            self.t_order,
            self.u_order,
            self.convention,
        )


# ---------------------------------------------------------------------------
# symbolic-method building blocks
# ---------------------------------------------------------------------------


def substitute_square(a):
    """a(t^2), or a(t^2, u^2) for bivariate input.

    Coefficient indices double; odd positions vanish.  This is the only
    inner substitution the unlabeled constructions need.
    """
    if isinstance(a, BivarTruncSeries):
        out = BivarTruncSeries.zero(a.t_order, a.u_order, a.convention)
        for n in range(0, a.t_order + 1, 2):
            row = a.coeffs[n // 2]
            orow = out.coeffs[n]
            for g in range(0, a.u_order + 1, 2):
                orow[g] = row[g // 2]
        return out
    out = [0] * (a.order + 1)
    for n in range(0, a.order + 1, 2):
        out[n] = a.coeffs[n // 2]
    return TruncSeries(out, a.order, a.convention)


def halve(a):
    """Elementwise exact division by 2."""
    if isinstance(a, BivarTruncSeries):
        return BivarTruncSeries(
            [[_half(c) for c in row] for row in a.coeffs],
            a.t_order,
            a.u_order,
            a.convention,
        )
    return TruncSeries([_half(c) for c in a.coeffs], a.order, a.convention)


def mset2(a):
    """Unordered pair with repetition allowed: (a^2 + a(t^2)) / 2.

    Only meaningful for unlabeled classes, so the input must be an OGF.
    """
    if a.convention != OGF:
        raise ValueError("mset2 is an unlabeled construction; input must be OGF")
    return halve(a * a + substitute_square(a))


def set2(a):
    """Unordered pair of distinct labeled structures: a^2 / 2 (EGF only)."""
    if a.convention != EGF:
        raise ValueError("set2 is a labeled construction; input must be EGF")
    return halve(a * a)


def divide(a, b):
    """Truncated a / b by back-substitution; b must have a unit constant term.

    With b0 = 1 (the only case the enumerations need) integer inputs give
    integer outputs.
    """
    if isinstance(a, BivarTruncSeries):
        a._check_convention(b)
        b00 = b.coeffs[0][0]
        if b00 == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        nt = min(a.t_order, b.t_order)
        nu = min(a.u_order, b.u_order)
        out = [[0] * (nu + 1) for _ in range(nt + 1)]
        for n in range(nt + 1):
            for g in range(nu + 1):
                acc = a.coeffs[n][g]
                for i in range(n + 1):
                    brow = b.coeffs[i]
                    orow = out[n - i]
                    for j in range(g + 1):
                        if i == 0 and j == 0:
                            continue
                        bv = brow[j]
                        if bv:
                            acc -= bv * orow[g - j]
                out[n][g] = _exact_div(acc, b00)
        return BivarTruncSeries(out, nt, nu, a.convention)
    a._check_convention(b)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = min(a.order, b.order)
    out = []
    bc = b.coeffs
    for m in range(n + 1):
        acc = a.coeff(m)
        for i in range(1, m + 1):
            bi = bc[i]
            if bi:
                acc -= bi * out[m - i]
        out.append(_exact_div(acc, b0))
    return TruncSeries(out, n, a.convention)


def seq_plus(a):
    """Non-empty sequence: a / (1 - a).  Requires zero constant term."""
    if isinstance(a, BivarTruncSeries):
        if a.coeffs[0][0] != 0:
            raise ValueError("seq_plus requires a zero constant term")
    elif a.coeffs[0] != 0:
        raise ValueError("seq_plus requires a zero constant term")
    return divide(a, 1 - a)


def power(a, k: int):
    """a^k by binary exponentiation (k >= 0)."""
    if k < 0:
        raise ValueError("negative powers are not defined for truncated series")
    if isinstance(a, BivarTruncSeries):
        result = BivarTruncSeries.zero(a.t_order, a.u_order, a.convention) + 1
    else:
        result = TruncSeries.one(a.order, a.convention)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def solve_fixed_point(equation, order: int, convention=OGF) -> TruncSeries:
    """Unique fixed point of a contractive series self-map, to ``order``.

    ``equation`` must increase the valuation of differences: if x = y mod
    t^k then F(x) = F(y) mod t^(k+1).  Starting from the zero series the
    fixed point is then reached within order+1 steps; the loop stops as
    soon as two successive iterates agree.
    """
    x = TruncSeries.zero(order, convention)
    for _ in range(order + 2):
        nxt = equation(x)
        if nxt == x:
            return x
        x = nxt
    raise FixedPointError(
        "no fixed point after %d iterations; the equation is not a contraction"
        % (order + 2)
    )


def solve_fixed_point_bivar(
    equation, t_order: int, u_order: int, convention=OGF
) -> BivarTruncSeries:
    """Bivariate analogue of :func:`solve_fixed_point` (contraction in t)."""
    x = BivarTruncSeries.zero(t_order, u_order, convention)
    for _ in range(t_order + 2):
        nxt = equation(x)
        if nxt == x:
            return x
        x = nxt
    raise FixedPointError(
        "no fixed point after %d iterations; the equation is not a contraction"
        % (t_order + 2)
    )


def egf_to_counts(a: TruncSeries) -> list:
    """Counts n! * coeff(n) of an EGF, as exact ints.

    Raises NonIntegralCoefficientError if any scaled coefficient fails to
    be an integer, which would mean the series does not enumerate a labeled
    class.
    """
    if a.convention != EGF:
        raise ValueError("egf_to_counts requires an EGF")
    out = []
    for n, c in enumerate(a.coeffs):
        v = c * factorial(n)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise NonIntegralCoefficientError(
                    "coefficient of t^%d times %d! is not an integer: %s" % (n, n, v)
                )
            v = int(v)
        out.append(v)
    return out


def ogf_to_counts(a: TruncSeries) -> list:
    """Coefficients of an OGF as exact ints (they must already be integral)."""
    if a.convention != OGF:
        raise ValueError("ogf_to_counts requires an OGF")
    out = []
    for n, c in enumerate(a.coeffs):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NonIntegralCoefficientError(
                    "coefficient of t^%d is not an integer: %s" % (n, c)
                )
            c = int(c)
        out.append(c)
    return out

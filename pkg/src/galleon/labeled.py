"""Counts of leaf-labeled time-consistent galled trees.

e(n, g) is the number of time-consistent galled trees on n labeled leaves
with g galls.  Labels kill the mirror symmetries, so compared with the
unlabeled case the recursion loses its halving and palindromic corrections
and the generating functions lose their t -> t^2 terms; what remains is an
exponential-generating-function calculus.

Routes implemented:

* ``LabeledTable`` / ``count_labeled``: the recursion

      e(n,g) = 1/2 [ sum_{m=1..n-1} binom(n,m) sum_{l=0..g} e(m,l) e(n-m,g-l)
                   + sum_{k=3..n} (k-2) sum_{c in C(n,k)} sum_{d in C(g-1+k,k)}
                         binom(n; c_1..c_k) prod_i e(c_i, d_i - 1) ]

  with e(1,0) = 1 and e(1,g) = 0 for g >= 1; the overall 1/2 removes the
  double counting of each non-plane structure, and the multinomial
  distributes labels over the root gall's subtrees.

* ``labeled_gf`` and ``bivariate_labeled``: EGF fixed points and closed
  forms.  The gall-free class satisfies F = t + F^2/2, solved in closed
  form by F(t) = 1 - sqrt(1 - 2t), whose counts are the odd double
  factorials (2n-3)!!.

* ``eg_labeled_direct``: the fixed-gall-count EGF extracted from the
  bivariate equation; only the convolution term and the root-gall kernel
  term survive in the labeled case.

* ``zhang_one_gall``: the closed formula
  (n+2) (2n)! / (2^n n!) - 3 * 2^(n-1) n! for the one-gall column, n >= 3.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .compositions import multinomial, weighted_compositions
from .counts import CountTable, max_galls
from .series import (
    EGF,
    BivarTruncSeries,
    TruncSeries,
    divide,
    halve,
    power,
    seq_plus,
    set2,
    solve_fixed_point,
    solve_fixed_point_bivar,
)
from .unlabeled import root_gall_kernel


def double_factorial(m: int) -> int:
    """m!! with the empty-product convention for m <= 0 (so (-1)!! = 1)."""
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def count_labeled_trees(n: int) -> int:
    """Number of gall-free labeled topologies on n leaves: (2n-3)!!."""
    if n < 1:
        raise ValueError("leaf count must be at least 1, got %d" % n)
    return double_factorial(2 * n - 3)


def zhang_one_gall(n: int) -> int:
    """One-gall count by the closed formula, valid for n >= 3."""
    if n < 3:
        raise ValueError("the one-gall closed formula requires n >= 3, got %d" % n)
    return (n + 2) * factorial(2 * n) // (2**n * factorial(n)) - 3 * 2 ** (
        n - 1
    ) * factorial(n)


class LabeledTable(CountTable):
    """Recursion for e(n, g); see the module docstring for the formula."""

    kind = "labeled"

    def _composition_sum(self, n, k, m):
        """sum over c in C(n,k), d in C(m,k) of binom(n; c) prod e(c_i, d_i-1).

        The multinomial is built up as a product of binomials along the
        composition, one factor per part, so the suffix memoization of the
        unlabeled case carries over unchanged.
        """
        if k == 0:
            return 1 if (n == 0 and m == 0) else 0
        if n < k or m < k:
            return 0
        key = (n, k, m)
        cached = self._comp_memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for c1 in range(1, n - k + 2):
            hmax = min((c1 - 1) // 2, m - k)
            choose = comb(n, c1)
            for h in range(hmax + 1):
                e = self.cell(c1, h)
                if e:
                    total += choose * e * self._composition_sum(n - c1, k - 1, m - h - 1)
        self._comp_memo[key] = total
        return total

    def _compute(self, n, g):
        convolution = 0
        for m in range(1, n):
            choose = comb(n, m)
            for l in range(g + 1):
                left = self.cell(m, l)
                if left:
                    right = self.cell(n - m, g - l)
                    if right:
                        convolution += choose * left * right
        root_gall = sum(
            (k - 2) * self._composition_sum(n, k, g - 1 + k) for k in range(3, n + 1)
        )
        bracket = convolution + root_gall
        if bracket % 2:
            return Fraction(bracket, 2)
        return bracket // 2


_TABLE = LabeledTable()


def count_labeled(n: int, g: int):
    """e(n, g) from the shared memoized recursion table."""
    return _TABLE.get(n, g)


def labeled_total(n: int):
    """Number of labeled structures with n leaves and any gall count."""
    return _TABLE.row_total(n)


# ---------------------------------------------------------------------------
# exponential generating functions
# ---------------------------------------------------------------------------


def _gallfree_equation(x):
    # F = t + SET2(F)
    return TruncSeries.atom(x.order, EGF) + set2(x)


def _all_galls_equation(x):
    # F = t + SET2(F) + F/2 * (F/(1-F))^2
    sp = seq_plus(x)
    return TruncSeries.atom(x.order, EGF) + set2(x) + halve(x * sp * sp)


@lru_cache(maxsize=None)
def labeled_gf(name: str, order: int) -> TruncSeries:
    """EGF of a named labeled class (U, E1, E2 or A).

    U and A are fixed points of their equations; E1 and E2 are the closed
    combinations of U.  ``labeled_gallfree_closed_form`` provides a second,
    recurrence-based route to U that the tests hold equal to this one.
    """
    if name == "U":
        return solve_fixed_point(_gallfree_equation, order, EGF)
    if name == "A":
        return solve_fixed_point(_all_galls_equation, order, EGF)
    u = labeled_gf("U", order)
    om = 1 - u
    if name == "E1":
        # E1 = U^3 / (2 (1-U)^3)
        return halve(divide(power(u, 3), power(om, 3)))
    if name == "E2":
        e1 = labeled_gf("E1", order)
        usq = u * u
        return (
            halve(divide(e1 * e1, om))
            + halve(divide(e1 * usq, power(om, 3)))
            + divide(e1 * usq, power(om, 4))
        )
    raise ValueError("unknown labeled class %r (expected U, E1, E2 or A)" % name)


def labeled_gallfree_closed_form(order: int) -> TruncSeries:
    """Taylor coefficients of 1 - sqrt(1 - 2t) by an exact recurrence.

    With V = sqrt(1 - 2t), squaring gives sum_i v_i v_(n-i) equal to 1,
    -2, 0, 0, ... so each v_n follows from the earlier ones by one exact
    division by 2v_0.  Independent of the fixed-point route.
    """
    v = [Fraction(1)]
    for n in range(1, order + 1):
        rhs = -2 if n == 1 else 0
        acc = rhs - sum(v[i] * v[n - i] for i in range(1, n))
        v.append(Fraction(acc, 2))
    coeffs = [1 - v[0]] + [-c for c in v[1:]]
    return TruncSeries(coeffs, order, EGF)


def _bivariate_equation(x):
    t = BivarTruncSeries.atom(x.t_order, x.u_order, EGF)
    sp = seq_plus(x)
    return t + set2(x) + halve(x * sp * sp).shift_u()


@lru_cache(maxsize=None)
def bivariate_labeled(t_order: int, u_order: int) -> BivarTruncSeries:
    """Fixed point of the labeled bivariate equation; n! [t^n u^g] = e(n, g)."""
    return solve_fixed_point_bivar(_bivariate_equation, t_order, u_order, EGF)


@lru_cache(maxsize=None)
def eg_labeled_direct(g: int, order: int) -> TruncSeries:
    """EGF for exactly g galls from the lower classes, g >= 1.

    Labels leave only two of the unlabeled expansion's terms: the
    convolution over gall splits and the root-gall kernel sum,

        E_g = 1/(2(1-U)) * [ sum_{l=1..g-1} E_l E_{g-l}
              + sum over multiplicity vectors of g-1:
                    multinomial * kernel(U, K) * prod_m E_m^{k_m} ]

    with the same kernel as the unlabeled case applied to the labeled U.
    """
    if g < 1:
        raise ValueError("eg_labeled_direct requires g >= 1; the g = 0 class is U")
    u = labeled_gf("U", order)

    def e(m):
        return u if m == 0 else eg_labeled_direct(m, order)

    bracket = TruncSeries.zero(order, EGF)
    for l in range(1, g):
        bracket = bracket + e(l) * e(g - l)
    for ks in weighted_compositions(g - 1):
        term = multinomial(ks) * root_gall_kernel(u, sum(ks))
        for m, mult in enumerate(ks, start=1):
            if mult:
                term = term * power(e(m), mult)
        bracket = bracket + term
    return divide(halve(bracket), 1 - u)


def count_by_gf(n: int, g: int):
    """e(n, g) read off the bivariate fixed point."""
    if g > max_galls(n):
        return 0
    value = bivariate_labeled(n, min(g, max_galls(n))).coeff(n, g) * factorial(n)
    return int(value) if isinstance(value, Fraction) and value.denominator == 1 else value


def count_by_direct(n: int, g: int):
    """e(n, g) from the per-gall-count EGF (g = 0 falls back to U)."""
    if g > max_galls(n):
        return 0
    series = labeled_gf("U", n) if g == 0 else eg_labeled_direct(g, n)
    value = series.coeff(n) * factorial(n)
    return int(value) if isinstance(value, Fraction) and value.denominator == 1 else value

"""Counts of unlabeled time-consistent galled trees, three independent ways.

A time-consistent galled tree is a rooted binary phylogenetic network whose
reticulation cycles (galls) are node-disjoint and whose gall top node and
reticulation node are at least two edges apart on both paths.  E(n, g)
denotes the number of such shapes with n unlabeled leaves and g galls.

The three routes implemented here, kept deliberately independent so that
agreement is evidence of correctness:

1. ``UnlabeledTable`` / ``count_unlabeled``: an exact recursion over
   compositions.  Writing C(n, k) for compositions of n into k positive
   parts and C_p for the palindromic ones,

       E(n,g) = 1/2 * [  sum_{c in C(n,2)} sum_{d in C(g+2,2)} prod E(c_i, d_i - 1)
                       + E(n/2, g/2)                        (0 unless n, g both even)
                       + sum_{k=3..n} (k-2) sum_{c in C(n,k)} sum_{d in C(g-1+k,k)}
                             prod E(c_i, d_i - 1)
                       + sum_{a>=1} sum_{c in C_p(n,2a+1)} sum_{d in C_p(g+2a,2a+1)}
                             prod_{i<=a+1} E(c_i, d_i - 1) ]

   with E(1,0) = 1 and E(1,g) = 0 for g >= 1.  The k-sum places a root
   gall with k subtrees; the factor (k-2) counts admissible positions of
   the reticulation node, and each subtree receives d_i - 1 galls.  The
   halving term and the palindromic term correct for the mirror symmetry
   (each asymmetric structure is produced twice inside the bracket).

2. ``bivariate_unlabeled``: the fixed point of

       G(t,u) = t + (G^2 + G(t^2,u^2))/2
                  + u*G/2 * [ (G/(1-G))^2 + G(t^2,u^2)/(1-G(t^2,u^2)) ]

   whose coefficient of t^n u^g is E(n, g).

3. ``eg_series_direct``: the series E_g(t) extracted from G by g-fold
   differentiation in u at u = 0, expressed through E_0 .. E_{g-1} only
   (Leibniz plus the Faa di Bruno expansion of the composed terms).

``unlabeled_gf`` additionally exposes the classical single-class equations
(U for gall-free shapes, E1 and E2 in closed form, A for unrestricted gall
counts), which serve as further cross-checks.
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import multinomial, weighted_compositions
from .counts import CountTable, max_galls
from .series import (
    OGF,
    TruncSeries,
    divide,
    halve,
    mset2,
    power,
    seq_plus,
    solve_fixed_point,
    solve_fixed_point_bivar,
    substitute_square,
)
from .series import BivarTruncSeries


class UnlabeledTable(CountTable):
    """Composition recursion for E(n, g).

    The inner double sums over (c, d) composition pairs are evaluated by a
    suffix recursion memoized in ``_comp_memo``; see ``_composition_sum``.
    ``gall_position_shift`` perturbs the (k-2) reticulation-position factor
    and exists only so verification tests can prove they detect a broken
    recursion; leave it at 0 for correct counts.
    """

    kind = "unlabeled"

    def __init__(self, gall_position_shift: int = 0):
        super().__init__()
        self._shift = gall_position_shift

    def _composition_sum(self, n, k, m):
        """sum over c in C(n,k), d in C(m,k) of prod_i E(c_i, d_i - 1).

        Factored over the first part: identical suffixes are shared through
        the memo, which is what makes n = 30 feasible.  Summands with
        d_1 - 1 > floor((c_1 - 1)/2) vanish by the support rule and are
        skipped.
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
            for h in range(hmax + 1):
                e = self.cell(c1, h)
                if e:
                    total += e * self._composition_sum(n - c1, k - 1, m - h - 1)
        self._comp_memo[key] = total
        return total

    def _palindromic_sum(self, n, g):
        """The mirror-fixed root galls: equal arms around a middle subtree.

        A palindromic pair (c, d) over 2a+1 parts is determined by one arm
        (a parts) and the middle entry, so the term reduces to composition
        sums over the arm times a cell for the middle.
        """
        total = 0
        for a in range(1, (n - 1) // 2 + 1):
            m_total = g + 2 * a
            for arm_n in range(a, (n - 1) // 2 + 1):
                mid_n = n - 2 * arm_n
                if mid_n < 1:
                    break
                for arm_m in range(a, (m_total - 1) // 2 + 1):
                    s = self._composition_sum(arm_n, a, arm_m)
                    if s:
                        total += s * self.cell(mid_n, m_total - 2 * arm_m - 1)
        return total

    def _compute(self, n, g):
        binary = self._composition_sum(n, 2, g + 2)
        halving = self.cell(n // 2, g // 2) if n % 2 == 0 and g % 2 == 0 else 0
        root_gall = sum(
            (k - 2 + self._shift) * self._composition_sum(n, k, g - 1 + k)
            for k in range(3, n + 1)
        )
        bracket = binary + halving + root_gall + self._palindromic_sum(n, g)
        if bracket % 2:
            # can only happen under fault injection; surface it as a wrong
            # (non-integer) count rather than crashing the verifier
            from fractions import Fraction

            return Fraction(bracket, 2)
        return bracket // 2


_TABLE = UnlabeledTable()


def count_unlabeled(n: int, g: int):
    """E(n, g) from the shared memoized recursion table."""
    return _TABLE.get(n, g)


def unlabeled_total(n: int):
    """Number of shapes with n leaves and any number of galls (row sum)."""
    return _TABLE.row_total(n)


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------


def _gallfree_equation(x):
    # U = t + MSET2(U): a shape is a leaf or an unordered pair of shapes
    return TruncSeries.atom(x.order) + mset2(x)


def _all_galls_equation(x):
    # A = t + MSET2(A) + A * MSET2(SEQ+(A)): the third term hangs a root
    # gall with two non-empty arm sequences over the reticulation child
    return TruncSeries.atom(x.order) + mset2(x) + x * mset2(seq_plus(x))


@lru_cache(maxsize=None)
def unlabeled_gf(name: str, order: int) -> TruncSeries:
    """Solve or assemble one of the named unlabeled class series.

    U: gall-free shapes (fixed point).  A: any number of galls (fixed
    point).  E1 and E2: exactly one and two galls, as the closed
    combinations of U; these are the hand-derived forms and are separate
    code paths from ``eg_series_direct``.
    """
    if name == "U":
        return solve_fixed_point(_gallfree_equation, order)
    if name == "A":
        return solve_fixed_point(_all_galls_equation, order)
    u = unlabeled_gf("U", order)
    u2 = substitute_square(u)
    om = 1 - u
    om2 = 1 - u2
    if name == "E1":
        # E1 = U^3/(2(1-U)^3) + U U(t^2) / (2 (1-U)(1-U(t^2)))
        return halve(divide(power(u, 3), power(om, 3))) + halve(
            divide(u * u2, om * om2)
        )
    if name == "E2":
        e1 = unlabeled_gf("E1", order)
        part1 = halve(divide(e1 * e1 + substitute_square(e1), om))
        part2 = halve(divide(u * u * e1, power(om, 3)))
        part3 = halve(divide(u2 * e1, om * om2))
        part4 = divide(e1 * u * u, power(om, 4))
        return part1 + part2 + part3 + part4
    raise ValueError("unknown unlabeled class %r (expected U, E1, E2 or A)" % name)


def _bivariate_equation(x):
    t = BivarTruncSeries.atom(x.t_order, x.u_order)
    return t + mset2(x) + (x * mset2(seq_plus(x))).shift_u()


@lru_cache(maxsize=None)
def bivariate_unlabeled(t_order: int, u_order: int) -> BivarTruncSeries:
    """Fixed point of the leaf/gall bivariate equation; [t^n u^g] = E(n, g)."""
    return solve_fixed_point_bivar(_bivariate_equation, t_order, u_order)


def root_gall_kernel(u: TruncSeries, k: int) -> TruncSeries:
    """(1/k!) * k-th derivative of x^3/(1-x)^2, evaluated at the series u.

    This is the factor a root gall contributes once k of its pendant
    subtrees are required to carry galls.  The k = 1 case picks up an extra
    constant 1 relative to the k >= 2 pattern.
    """
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return divide(power(u, 3), power(1 - u, 2))
    result = divide(3 * u + (k - 2), power(1 - u, k + 2))
    if k == 1:
        result = result + 1
    return result


@lru_cache(maxsize=None)
def eg_series_direct(g: int, order: int) -> TruncSeries:
    """E_g(t) for fixed g >= 1 from E_0 .. E_{g-1} alone.

    Differentiating the bivariate equation g times in u at u = 0 and
    collecting with Leibniz and Faa di Bruno gives

        E_g = 1/2 [ sum_{l=0..g} E_l E_{g-l}  +  E_{g/2}(t^2)
                  + sum over multiplicity vectors of g-1:
                        multinomial * kernel(U, K) * prod_m E_m^{k_m}
                  + sum_{b=1..floor((g-1)/2)} E_{g-2b-1} *
                        sum over multiplicity vectors of b:
                            multinomial * (1-U(t^2))^-(R+1) * prod_m E_m(t^2)^{r_m}
                  + E_{g-1} * U(t^2)/(1 - U(t^2)) ]

    where K and R are the respective multiplicity totals, the E_{g/2} term
    vanishes for odd g, and kernel is :func:`root_gall_kernel`.  The l = 0
    and l = g convolution terms contribute U * E_g, so the right side is
    divided by (1 - U) to solve for E_g.
    """
    if g < 1:
        raise ValueError("eg_series_direct requires g >= 1; the g = 0 class is U")
    u = unlabeled_gf("U", order)
    u2 = substitute_square(u)

    def e(m):
        return u if m == 0 else eg_series_direct(m, order)

    bracket = TruncSeries.zero(order)
    for l in range(1, g):
        bracket = bracket + e(l) * e(g - l)
    if g % 2 == 0:
        bracket = bracket + substitute_square(e(g // 2))

    for ks in weighted_compositions(g - 1):
        k_total = sum(ks)
        term = multinomial(ks) * root_gall_kernel(u, k_total)
        for m, mult in enumerate(ks, start=1):
            if mult:
                term = term * power(e(m), mult)
        bracket = bracket + term

    one = TruncSeries.one(order)
    for b in range(1, (g - 1) // 2 + 1):
        inner = TruncSeries.zero(order)
        for rs in weighted_compositions(b):
            r_total = sum(rs)
            term = multinomial(rs) * divide(one, power(1 - u2, r_total + 1))
            for m, mult in enumerate(rs, start=1):
                if mult:
                    term = term * power(substitute_square(e(m)), mult)
            inner = inner + term
        bracket = bracket + e(g - 2 * b - 1) * inner

    bracket = bracket + e(g - 1) * seq_plus(u2)

    return divide(halve(bracket), 1 - u)


def count_by_gf(n: int, g: int):
    """E(n, g) read off the bivariate fixed point (independent of the table)."""
    if g > max_galls(n):
        return 0
    return bivariate_unlabeled(n, min(g, max_galls(n))).coeff(n, g)


def count_by_direct(n: int, g: int):
    """E(n, g) from the per-gall-count series (g = 0 falls back to U)."""
    if g > max_galls(n):
        return 0
    series = unlabeled_gf("U", n) if g == 0 else eg_series_direct(g, n)
    return series.coeff(n)

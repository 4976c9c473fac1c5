"""Exhaustive generation of canonical galled-tree shapes for small n.

This module is the brute-force oracle against which the analytic routes
are checked.  A shape is one of

* a leaf;
* a binary node over an unordered pair of shapes;
* a gall: two non-empty arm sequences of shapes hanging off the cycle,
  plus the subtree under the reticulation node.  Both arms non-empty is
  exactly the time-consistency requirement (top node and reticulation node
  at least two edges apart on both paths).

Shapes are stored canonically: binary children sorted, gall arms oriented
so the lexicographically smaller arm comes first (a mirror flip exchanges
the arms and fixes the reticulation child).  The canonical serialization
is injective, parseable, and doubles as the total order.

The automorphism count is the product of a factor 2 for every binary node
with equal children and every gall whose two arms are equal as sequences;
each shape then admits exactly n!/aut distinct leaf labelings, which is
how the labeled counts are cross-checked.
"""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """Request exceeds the practical brute-force bound."""


MAX_LEAVES = 10


class GalledShape:
    """Immutable canonical shape; compare and hash by serialization."""

    __slots__ = ("kind", "left", "right", "arms", "child", "text", "n_leaves", "n_galls", "aut")

    def __init__(self, kind, left=None, right=None, arms=None, child=None):
        self.kind = kind
        self.left = left
        self.right = right
        self.arms = arms
        self.child = child
        if kind == "leaf":
            self.text = "L"
            self.n_leaves = 1
            self.n_galls = 0
            self.aut = 1
        elif kind == "binary":
            self.text = "(%s,%s)" % (left.text, right.text)
            self.n_leaves = left.n_leaves + right.n_leaves
            self.n_galls = left.n_galls + right.n_galls
            self.aut = left.aut * right.aut * (2 if left.text == right.text else 1)
        else:
            a, b = arms
            self.text = "<[%s];[%s];%s>" % (
                ",".join(s.text for s in a),
                ",".join(s.text for s in b),
                child.text,
            )
            self.n_leaves = sum(s.n_leaves for s in a + b) + child.n_leaves
            self.n_galls = 1 + sum(s.n_galls for s in a + b) + child.n_galls
            symmetric = tuple(s.text for s in a) == tuple(s.text for s in b)
            self.aut = child.aut * (2 if symmetric else 1)
            for s in a + b:
                self.aut *= s.aut

    def __eq__(self, other):
        return isinstance(other, GalledShape) and self.text == other.text

    def __hash__(self):
        return hash(self.text)

    def __lt__(self, other):
        return self.text < other.text

    def __repr__(self):
        return "GalledShape(%r)" % self.text


LEAF = GalledShape("leaf")


def binary(a: GalledShape, b: GalledShape) -> GalledShape:
    """Canonical binary node: children stored in serialization order."""
    if b.text < a.text:
        a, b = b, a
    return GalledShape("binary", left=a, right=b)


def gall(arm_a, arm_b, child: GalledShape) -> GalledShape:
    """Canonical gall node from two arm sequences and a reticulation child.

    Arms are sequences ordered from the gall's top node toward the
    reticulation node; the mirror flip swaps the arms whole, so canonical
    form keeps the smaller one on the left.
    """
    arm_a = tuple(arm_a)
    arm_b = tuple(arm_b)
    if not arm_a or not arm_b:
        raise ValueError("both gall arms must be non-empty (time-consistency)")
    if tuple(s.text for s in arm_b) < tuple(s.text for s in arm_a):
        arm_a, arm_b = arm_b, arm_a
    return GalledShape("gall", arms=(arm_a, arm_b), child=child)


def count_galls(shape: GalledShape) -> int:
    """Number of gall nodes in the shape."""
    return shape.n_galls


def automorphism_size(shape: GalledShape) -> int:
    """Order of the symmetry group of the shape."""
    return shape.aut


def canonical_serialize(shape: GalledShape) -> str:
    """Deterministic injective text form; grammar in :func:`parse_shape`."""
    return shape.text


_shape_cache = {1: (LEAF,)}
_sequence_cache = {}


def _sequences(total: int):
    """All shape sequences (non-empty tuples) with the given leaf total."""
    cached = _sequence_cache.get(total)
    if cached is not None:
        return cached
    result = []
    for head_leaves in range(1, total + 1):
        for head in _shape_cache[head_leaves]:
            if head_leaves == total:
                result.append((head,))
            else:
                for tail in _sequences(total - head_leaves):
                    result.append((head,) + tail)
    _sequence_cache[total] = result
    return result


def generate_unlabeled(n: int):
    """All canonical shapes with exactly n leaves, sorted, each once.

    Generation is recursive over leaf counts: unordered pairs for binary
    roots, and arm-sequence pairs plus a reticulation child over every
    split of the leaves for root galls.  Bounded at n <= 10 (17497 shapes
    at n = 10); beyond that the analytic routes are the only practical
    option.
    """
    if n < 1:
        raise ValueError("leaf count must be at least 1, got %d" % n)
    if n > MAX_LEAVES:
        raise ResourceLimitError(
            "exhaustive generation is capped at %d leaves (asked for %d)"
            % (MAX_LEAVES, n)
        )
    cached = _shape_cache.get(n)
    if cached is not None:
        return cached
    for m in range(2, n):
        generate_unlabeled(m)
    found = {}
    for a in range(1, n // 2 + 1):
        for s1 in _shape_cache[a]:
            for s2 in _shape_cache[n - a]:
                if a < n - a or s1.text <= s2.text:
                    s = binary(s1, s2)
                    found[s.text] = s
    for child_leaves in range(1, n - 1):
        arm_leaves = n - child_leaves
        for left_total in range(1, arm_leaves):
            for left_arm in _sequences(left_total):
                for right_arm in _sequences(arm_leaves - left_total):
                    for child in _shape_cache[child_leaves]:
                        s = gall(left_arm, right_arm, child)
                        found[s.text] = s
    result = tuple(sorted(found.values()))
    _shape_cache[n] = result
    return result


def gall_census(n: int) -> dict:
    """Histogram {gall count: number of shapes} over all shapes with n leaves."""
    census = {}
    for s in generate_unlabeled(n):
        census[s.n_galls] = census.get(s.n_galls, 0) + 1
    return census


def labeled_census(n: int) -> dict:
    """Histogram {gall count: sum of n!/aut} giving labeled counts by orbit size."""
    from math import factorial

    nf = factorial(n)
    census = {}
    for s in generate_unlabeled(n):
        census[s.n_galls] = census.get(s.n_galls, 0) + nf // s.aut
    return census


def parse_shape(text: str) -> GalledShape:
    """Parse the canonical serialization.

    Grammar:
        shape := "L" | "(" shape "," shape ")" | "<" arm ";" arm ";" shape ">"
        arm   := "[" shape ("," shape)* "]"

    Raises ValueError on malformed input.  Because the constructors
    canonicalize, parsing any valid text yields a canonical shape and
    parse(serialize(s)) == s.
    """
    pos = 0

    def fail(expected):
        raise ValueError(
            "malformed shape at position %d: expected %s in %r" % (pos, expected, text)
        )

    def expect(ch):
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            fail(repr(ch))
        pos += 1

    def node():
        nonlocal pos
        if pos >= len(text):
            fail("a shape")
        ch = text[pos]
        if ch == "L":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            a = node()
            expect(",")
            b = node()
            expect(")")
            return binary(a, b)
        if ch == "<":
            pos += 1
            a = arm()
            expect(";")
            b = arm()
            expect(";")
            c = node()
            expect(">")
            return gall(a, b, c)
        fail("'L', '(' or '<'")

    def arm():
        nonlocal pos
        expect("[")
        items = [node()]
        while pos < len(text) and text[pos] == ",":
            pos += 1
            items.append(node())
        expect("]")
        return tuple(items)

    result = node()
    if pos != len(text):
        fail("end of input")
    return result

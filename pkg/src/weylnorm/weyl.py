"""Weyl group elements, lengths, longest and relative longest elements.

Elements are stored as exact integer matrices acting on simple-root
coordinates of a top-level ("frame") root system; words are certificates
produced on demand by the classical greedy peeling procedure.  Everything
is immutable, so elements can be shared and memoized freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable

from .rootsystem import LabelError, Root, RootSystem, ambient_to_coords
from .vectors import Vector, add, dot, invert, lincomb, mat_vec, scale, sub


@dataclass(frozen=True, eq=False)
class WeylElement:
    frame: RootSystem
    matrix: tuple[tuple[int, ...], ...]

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeylElement)
                and self.frame.frame_labels == other.frame.frame_labels
                and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: (self * other)(x) = self(other(x))."""
        a, b = self.matrix, other.matrix
        n = len(a)
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self.frame, prod)

    def apply_coords(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        m = self.matrix
        n = len(m)
        return tuple(sum(m[i][j] * coords[j] for j in range(n)) for i in range(n))

    def apply_root(self, root: Root) -> Root:
        return self.frame.root_from_coords(self.apply_coords(root.coords))

    def maps_negative(self, root: Root) -> bool:
        image = self.apply_coords(root.coords)
        neg = all(c <= 0 for c in image) and any(c < 0 for c in image)
        if not neg and not all(c >= 0 for c in image):
            raise AssertionError("image %s of %s is not a root" % (image, root.coords))
        return neg


def identity_element(sys: RootSystem) -> WeylElement:
    frame = sys.frame()
    n = len(frame.frame_labels)
    return WeylElement(frame, tuple(tuple(1 if i == j else 0 for j in range(n))
                                    for i in range(n)))


def simple_reflection(sys: RootSystem, label: int) -> WeylElement:
    """Reflection x -> x - <x, tau_check> tau for the simple root tau."""
    if label not in sys.labels:
        raise LabelError("label %s not in delta %s" % (label, list(sys.labels)))
    frame = sys.frame()
    memo = frame._cache.setdefault("reflections", {})
    if label in memo:
        return memo[label]
    n = len(frame.frame_labels)
    idx = frame.frame_index(label)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j, other in enumerate(frame.frame_labels):
        rows[idx][j] -= frame.cartan(label, other)
    elem = WeylElement(frame, tuple(tuple(r) for r in rows))
    memo[label] = elem
    return elem


def inverse(w: WeylElement) -> WeylElement:
    inv = invert(tuple(tuple(Q(x) for x in row) for row in w.matrix))
    rows = []
    for row in inv:
        assert all(q.denominator == 1 for q in row)
        rows.append(tuple(int(q) for q in row))
    return WeylElement(w.frame, tuple(rows))


def inversion_set(w: WeylElement, sys: RootSystem | None = None) -> frozenset[Root]:
    """R(w): positive roots of sys sent to negative roots."""
    sys = sys or w.frame
    return frozenset(r for r in sys.positive_roots if w.maps_negative(r))


def length(w: WeylElement, sys: RootSystem | None = None) -> int:
    """|R(w)| over the frame, memoized by matrix."""
    frame = (sys or w.frame).frame()
    memo = frame._cache.setdefault("length_memo", {})
    if w.matrix not in memo:
        memo[w.matrix] = sum(1 for r in frame.positive_roots if w.maps_negative(r))
    return memo[w.matrix]


def longest_element(sys: RootSystem) -> WeylElement:
    """The unique element of W(sys) mapping all positive roots to negatives.

    Built greedily: while some simple root of sys is still sent positive,
    multiply on the right by its reflection (each step adds 1 to the length),
    so the full Weyl group is never enumerated.
    """
    if "longest" in sys._cache:
        return sys._cache["longest"]
    w = identity_element(sys)
    simples = [sys.simple_by_label[l] for l in sys.labels]
    while True:
        tau = next((l for l, r in zip(sys.labels, simples) if not w.maps_negative(r)), None)
        if tau is None:
            break
        w = w * simple_reflection(sys, tau)
    sys._cache["longest"] = w
    return w


def relative_longest(sys: RootSystem, removed: int) -> WeylElement:
    """w0 = (longest of sys) . (longest of the sub-system without `removed`)."""
    if removed not in sys.labels:
        raise LabelError("label %s not in delta %s" % (removed, list(sys.labels)))
    memo = sys._cache.setdefault("relative_longest", {})
    if removed in memo:
        return memo[removed]
    others = [l for l in sys.labels if l != removed]
    w = longest_element(sys) * longest_element(sys.sub_system(others))
    memo[removed] = w
    return w


def relative_element(sys: RootSystem, theta: Iterable[int]) -> WeylElement:
    """(longest of sys) . (longest of the sub-system on theta), any theta.

    The co-rank one case is `relative_longest`; relative reflections for a
    Levi inside a bigger one compose two of these.
    """
    theta = frozenset(theta)
    if not theta <= set(sys.labels):
        raise LabelError("theta %s not contained in delta %s" % (sorted(theta), list(sys.labels)))
    return longest_element(sys) * longest_element(sys.sub_system(theta))


def reduced_word_star(w: WeylElement, sys: RootSystem | None = None) -> tuple[int, ...]:
    """Greedy reduced word.

    Repeatedly pick the smallest-label simple root gamma with w.gamma < 0 and
    strip its reflection off the right.  Letters are returned in peeling
    order, so w equals the product of their reflections composed with the
    first letter applied first (w = s_{g_m} ... s_{g_1} for letters
    (g_1, ..., g_m)).
    """
    sys = sys or w.frame
    letters: list[int] = []
    cur = w
    while True:
        gamma = next((l for l in sys.labels
                      if cur.maps_negative(sys.simple_by_label[l])), None)
        if gamma is None:
            break
        letters.append(gamma)
        cur = cur * simple_reflection(sys, gamma)
    if not cur.is_identity:
        raise AssertionError("peeling did not reach the identity")
    if word_to_element(sys, tuple(letters)) != w:
        raise AssertionError("reduced word does not multiply back to the element")
    return tuple(letters)


def word_to_element(sys: RootSystem, letters: tuple[int, ...]) -> WeylElement:
    """Product of simple reflections with the first letter applied first."""
    w = identity_element(sys)
    for g in letters:
        w = simple_reflection(sys, g) * w
    return w


def action_table(sys: RootSystem, removed: int) -> dict[int, Root]:
    """tau -> w0^{-1}(tau) for every simple root tau of sys."""
    if removed not in sys.labels:
        raise LabelError("label %s not in delta %s" % (removed, list(sys.labels)))
    others = [l for l in sys.labels if l != removed]
    w0_inv = longest_element(sys.sub_system(others)) * longest_element(sys)
    return {l: w0_inv.apply_root(sys.simple_by_label[l]) for l in sys.labels}


def apply_to_ambient(w: WeylElement, x: Vector) -> Vector:
    """Apply w to any ambient vector, including ones outside span(delta).

    Splits x into its component in the simple-root span plus an orthogonal
    remainder; reflections fix the remainder pointwise.
    """
    frame = w.frame
    simples = [frame.simple_by_label[l].ambient for l in frame.frame_labels]
    gram_inv = frame._cache.get("gram_inv")
    if gram_inv is None:
        gram = tuple(tuple(dot(a, b) for b in simples) for a in simples)
        gram_inv = invert(gram)
        frame._cache["gram_inv"] = gram_inv
    coeffs = mat_vec(gram_inv, tuple(dot(d, x) for d in simples))
    in_span = lincomb(coeffs, simples)
    perp = sub(x, in_span)
    out = perp
    for c, l in zip(coeffs, frame.frame_labels):
        if c:
            image_coords = w.apply_coords(frame.simple_by_label[l].coords)
            out = add(out, scale(c, lincomb(image_coords, simples)))
    return out


def foreign_action_coords(sys: RootSystem, removed: int, host: RootSystem,
                          foreign_label: int) -> tuple[int, ...]:
    """Coordinates over host's delta of w0^{-1}(alpha_foreign).

    Used when sys sits inside a larger system `host` and the table row is a
    simple root of host outside sys (the neighbouring node).
    """
    others = [l for l in sys.labels if l != removed]
    w0_inv = longest_element(sys.sub_system(others)) * longest_element(sys)
    image = apply_to_ambient(w0_inv, host.simple_by_label[foreign_label].ambient)
    coords = ambient_to_coords(host, image)
    assert all(q.denominator == 1 for q in coords)
    return tuple(int(q) for q in coords)


def enumerate_weyl_group(sys: RootSystem) -> list[WeylElement]:
    """Every element of W(sys), by breadth-first closure under right multiplication."""
    gens = [simple_reflection(sys, l) for l in sys.labels]
    start = identity_element(sys)
    seen = {start.matrix: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = w * g
                if cand.matrix not in seen:
                    seen[cand.matrix] = cand
                    nxt.append(cand)
        frontier = nxt
    return list(seen.values())

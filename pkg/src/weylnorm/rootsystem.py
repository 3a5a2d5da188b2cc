"""Root systems of types G2, F4, E6, E7, E8 over exact rationals.

Simple roots use fixed ambient coordinates (dimension 3, 4 or 8) and a fixed
integer labelling: G2 is {1: alpha, 2: beta}, F4 is {1..4}, E6 is {3..8} and
E7 is {2..8} (both sitting inside the ambient space of E8), E8 is {1..8}.
Positive roots are generated by closing the simple roots under simple
reflections; every root carries exact integer coordinates with respect to
the simple-root basis of its top-level system.

Sub-systems generated by a subset of the simple roots share their parent's
coordinate frame: a sub-root keeps the coordinates it has in the parent.
All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Optional

from .vectors import (
    Vector, dot, format_rational, lincomb, parse_rational, solve_exact, vec,
)

HALF = Q(1, 2)

# Ambient simple-root vectors, keyed by paper label.
SIMPLE_ROOT_DATA: dict[str, dict[int, Vector]] = {
    "G2": {
        1: vec([0, 1, -1]),                       # alpha (short)
        2: vec([1, -2, 1]),                       # beta (long)
    },
    "F4": {
        1: vec([0, 1, -1, 0]),
        2: vec([0, 0, 1, -1]),
        3: vec([0, 0, 0, 1]),
        4: (HALF, -HALF, -HALF, -HALF),
    },
    "E6": {
        3: vec([0, 0, 1, -1, 0, 0, 0, 0]),
        4: vec([0, 0, 0, 1, -1, 0, 0, 0]),
        5: vec([0, 0, 0, 0, 1, -1, 0, 0]),
        6: vec([0, 0, 0, 0, 0, 1, 1, 0]),
        7: tuple([-HALF] * 8),
        8: vec([0, 0, 0, 0, 0, 1, -1, 0]),
    },
    "E7": {
        2: vec([0, 1, -1, 0, 0, 0, 0, 0]),
        3: vec([0, 0, 1, -1, 0, 0, 0, 0]),
        4: vec([0, 0, 0, 1, -1, 0, 0, 0]),
        5: vec([0, 0, 0, 0, 1, -1, 0, 0]),
        6: vec([0, 0, 0, 0, 0, 1, 1, 0]),
        7: tuple([-HALF] * 8),
        8: vec([0, 0, 0, 0, 0, 1, -1, 0]),
    },
    "E8": {
        1: vec([1, -1, 0, 0, 0, 0, 0, 0]),
        2: vec([0, 1, -1, 0, 0, 0, 0, 0]),
        3: vec([0, 0, 1, -1, 0, 0, 0, 0]),
        4: vec([0, 0, 0, 1, -1, 0, 0, 0]),
        5: vec([0, 0, 0, 0, 1, -1, 0, 0]),
        6: vec([0, 0, 0, 0, 0, 1, 1, 0]),
        7: tuple([-HALF] * 8),
        8: vec([0, 0, 0, 0, 0, 1, -1, 0]),
    },
}

POSITIVE_ROOT_COUNT = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}

# G2 labels double as names in user-facing I/O.
G2_NAMES = {"alpha": 1, "beta": 2, "a": 1, "b": 2}


class UnknownTypeError(ValueError):
    pass


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class Root:
    """A root: integer coordinates over the frame's simple roots + ambient vector."""

    coords: tuple[int, ...]
    ambient: Vector

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords) and all(c >= 0 for c in self.coords)

    @property
    def is_negative(self) -> bool:
        return any(c < 0 for c in self.coords) and all(c <= 0 for c in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), tuple(-q for q in self.ambient))

    def __repr__(self) -> str:
        return "Root(%s)" % (self.coords,)


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    frame_labels: tuple[int, ...]          # labels of the top-level system
    labels: tuple[int, ...]                # labels of this system's simple roots
    simple_by_label: dict[int, Root]
    positive_roots: tuple[Root, ...]
    ambient_dim: int
    parent: Optional["RootSystem"] = None
    _cache: dict = field(default_factory=dict, repr=False)

    # -- basic queries -------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    def frame(self) -> "RootSystem":
        sys = self
        while sys.parent is not None:
            sys = sys.parent
        return sys

    def frame_index(self, label: int) -> int:
        return self.frame_labels.index(label)

    def canonical_index(self, label: int) -> int:
        """1-based position of a label among this system's ascending labels.

        I/O keeps the original labelling (E6 uses 3..8, E7 uses 2..8); this
        is for callers that want a plain 1..rank indexing.
        """
        return self.labels.index(label) + 1

    def label_at(self, index: int) -> int:
        return self.labels[index - 1]

    def coeff(self, root: Root, label: int) -> int:
        return root.coords[self.frame_index(label)]

    def root_from_coords(self, coords: tuple[int, ...]) -> Root:
        table = self.frame()._cache["by_coords"]
        try:
            return table[coords]
        except KeyError:
            raise LabelError("not a root: %s" % (coords,))

    def is_root_coords(self, coords: tuple[int, ...]) -> bool:
        return coords in self.frame()._cache["by_coords"]

    def contains(self, root: Root) -> bool:
        return root in self._cache["positive_set"] or (-root) in self._cache["positive_set"]

    # -- pairings ------------------------------------------------------

    def pairing(self, x: Vector, beta: Root) -> Q:
        """<x, beta_check> = 2 (x . beta) / (beta . beta)."""
        nn = dot(beta.ambient, beta.ambient)
        if not nn:
            raise ValueError("zero root")
        return 2 * dot(x, beta.ambient) / nn

    def cartan(self, row: int, col: int) -> int:
        """<alpha_col, alpha_row_check> for simple roots by label."""
        val = self.pairing(self.simple_by_label[col].ambient, self.simple_by_label[row])
        assert val.denominator == 1
        return int(val)

    def coroot_coeff(self, beta: Root, label: int) -> int:
        """Coefficient of label's simple coroot in beta's coroot.

        For beta = sum c_t t this is c_label * |label|^2 / |beta|^2, always
        an integer for crystallographic systems.
        """
        tau = self.simple_by_label[label]
        val = Q(self.coeff(beta, label)) * dot(tau.ambient, tau.ambient) / dot(beta.ambient, beta.ambient)
        assert val.denominator == 1
        return int(val)

    # -- derived systems -----------------------------------------------

    def sub_system(self, subset: Iterable[int]) -> "RootSystem":
        key = frozenset(subset)
        if not key <= set(self.labels):
            raise LabelError("subset %s not contained in delta %s" % (sorted(key), self.labels))
        memo = self._cache.setdefault("subsystems", {})
        if key in memo:
            return memo[key]
        labels = tuple(sorted(key))
        keep = [self.frame_index(l) for l in self.frame_labels if l not in key]
        pos = tuple(r for r in self.positive_roots if all(r.coords[i] == 0 for i in keep))
        sub = RootSystem(
            type_label="Sub",
            frame_labels=self.frame_labels,
            labels=labels,
            simple_by_label={l: self.simple_by_label[l] for l in labels},
            positive_roots=pos,
            ambient_dim=self.ambient_dim,
            parent=self,
        )
        sub._cache["positive_set"] = frozenset(pos)
        memo[key] = sub
        return sub

    def irreducible_components(self) -> list[frozenset[int]]:
        """Connected components of the Dynkin graph on this system's labels."""
        remaining = set(self.labels)
        comps: list[frozenset[int]] = []
        while remaining:
            seed = min(remaining)
            comp = {seed}
            queue = [seed]
            while queue:
                cur = queue.pop()
                for other in self.labels:
                    if other in comp or other not in remaining:
                        continue
                    if self.cartan(cur, other) != 0:
                        comp.add(other)
                        queue.append(other)
            remaining -= comp
            comps.append(frozenset(comp))
        return sorted(comps, key=min)

    # -- export ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_label,
            "delta": [
                {"label": l, "ambient": [format_rational(q) for q in self.simple_by_label[l].ambient]}
                for l in self.labels
            ],
            "positive_roots": [
                {
                    "ambient": [format_rational(q) for q in r.ambient],
                    "simple_coords": {str(l): self.coeff(r, l) for l in self.labels},
                }
                for r in self.positive_roots
            ],
        }


def _close_under_reflections(labels: tuple[int, ...], simple: dict[int, Vector]) -> list[tuple[int, ...]]:
    """All roots in simple coordinates, by closure under simple reflections."""
    rank = len(labels)
    cartan = [
        [int(2 * dot(simple[lc], simple[lr]) / dot(simple[lr], simple[lr])) for lc in labels]
        for lr in labels
    ]
    units = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(units)
    frontier = list(units)
    while frontier:
        nxt = []
        for coords in frontier:
            for i in range(rank):
                pair = sum(cartan[i][j] * coords[j] for j in range(rank))
                image = tuple(c - pair if j == i else c for j, c in enumerate(coords))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen)


def build_root_system(type_label: str) -> RootSystem:
    """Construct the full root system for one of the five exceptional types."""
    if type_label not in SIMPLE_ROOT_DATA:
        raise UnknownTypeError("unknown type %r (expected one of %s)"
                               % (type_label, sorted(SIMPLE_ROOT_DATA)))
    simple = SIMPLE_ROOT_DATA[type_label]
    labels = tuple(sorted(simple))
    all_coords = _close_under_reflections(labels, simple)
    ambient_dim = len(next(iter(simple.values())))
    simple_vecs = [simple[l] for l in labels]
    roots = []
    for coords in all_coords:
        if not (all(c >= 0 for c in coords) and any(c > 0 for c in coords)):
            continue
        roots.append(Root(coords, lincomb(coords, simple_vecs)))
    roots.sort(key=lambda r: (sum(r.coords), r.coords))
    expected = POSITIVE_ROOT_COUNT[type_label]
    if len(roots) != expected:
        raise AssertionError("closure produced %d positive roots for %s, expected %d"
                             % (len(roots), type_label, expected))
    simple_roots = {
        l: roots[[r.coords for r in roots].index(tuple(1 if x == l else 0 for x in labels))]
        for l in labels
    }
    sys = RootSystem(
        type_label=type_label,
        frame_labels=labels,
        labels=labels,
        simple_by_label=simple_roots,
        positive_roots=tuple(roots),
        ambient_dim=ambient_dim,
    )
    sys._cache["positive_set"] = frozenset(roots)
    sys._cache["by_coords"] = {r.coords: r for r in roots}
    sys._cache["by_coords"].update({(-r).coords: -r for r in roots})
    return sys


_BUILT: dict[str, RootSystem] = {}


def get_root_system(type_label: str) -> RootSystem:
    """Memoized build_root_system."""
    if type_label not in _BUILT:
        _BUILT[type_label] = build_root_system(type_label)
    return _BUILT[type_label]


def ambient_to_coords(sys: RootSystem, x: Vector) -> tuple[Q, ...]:
    """Coordinates of x over the frame's simple roots (x must lie in their span)."""
    frame = sys.frame()
    cols = [frame.simple_by_label[l].ambient for l in frame.frame_labels]
    return solve_exact(cols, x)


def root_system_from_json(data: dict) -> RootSystem:
    """Rebuild a root system from its JSON export (top-level systems only)."""
    labels = tuple(d["label"] for d in data["delta"])
    simple = {
        d["label"]: tuple(parse_rational(s) for s in d["ambient"]) for d in data["delta"]
    }
    roots = []
    for entry in data["positive_roots"]:
        coords = tuple(int(entry["simple_coords"][str(l)]) for l in labels)
        ambient = tuple(parse_rational(s) for s in entry["ambient"])
        roots.append(Root(coords, ambient))
    simple_roots = {l: r for l in labels for r in roots
                    if r.coords == tuple(1 if x == l else 0 for x in labels)}
    sys = RootSystem(
        type_label=data["type"],
        frame_labels=labels,
        labels=labels,
        simple_by_label=simple_roots,
        positive_roots=tuple(roots),
        ambient_dim=len(next(iter(simple.values()))),
    )
    sys._cache["positive_set"] = frozenset(roots)
    sys._cache["by_coords"] = {r.coords: r for r in roots}
    sys._cache["by_coords"].update({(-r).coords: -r for r in roots})
    return sys


def parse_label(sys: RootSystem, text: str) -> int:
    """Parse a simple-root label from CLI text (accepts 'alpha'/'beta' for G2)."""
    t = text.strip().lower()
    if sys.frame().type_label == "G2" and t in G2_NAMES:
        return G2_NAMES[t]
    try:
        label = int(t)
    except ValueError:
        raise LabelError("bad simple-root label %r" % text)
    if label not in sys.labels:
        raise LabelError("label %d not in delta %s" % (label, list(sys.labels)))
    return label

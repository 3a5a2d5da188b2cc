"""Reduced decompositions of co-rank one relative longest Weyl elements.

Starting from a pair (delta, delta - {alpha}) and an auxiliary simple root
beta (the "Way"), each step removes one simple root, restricts to the
irreducible component containing the root carried over from the previous
step, and splits off that component's relative longest element.  The run
also partitions the set S of positive roots with nonzero coefficient on
alpha into one piece per step.

Each trace records the intermediate residuals w0^(n), so the structural
properties (A)-(D) can be checked without recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .rootsystem import LabelError, Root, RootSystem
from .weyl import (
    WeylElement, identity_element, inversion_set, length, longest_element,
    reduced_word_star, relative_longest,
)


class AlgorithmInvariantError(RuntimeError):
    """A structural guarantee of the decomposition procedure failed."""


@dataclass(frozen=True)
class AlgorithmStep:
    step_index: int
    ambient_delta: frozenset[int]          # component the step works in
    tau_in: int                            # root whose relative longest is split off
    excluded: int | None                   # root removed from delta this step
    produced: int                          # the singleton root handed to step n+2
    w_factor: WeylElement
    word: tuple[int, ...]
    t_piece: frozenset[Root]               # S-set of the step's sub-system
    s_piece: frozenset[Root]               # t_piece pulled back to step 1 coordinates


@dataclass(frozen=True)
class DecompositionTrace:
    system: RootSystem
    removed: int
    way: int
    beta: int | None
    steps: tuple[AlgorithmStep, ...]
    residuals: tuple[WeylElement, ...]     # w0^(0), ..., w0^(n)
    w0: WeylElement
    total_word: tuple[int, ...]

    @property
    def total_length(self) -> int:
        return len(self.total_word)

    def pieces(self) -> list[frozenset[Root]]:
        return [s.s_piece for s in self.steps]


def s_set(sys: RootSystem, removed: int) -> frozenset[Root]:
    """Positive roots with nonzero coefficient on the removed simple root."""
    if removed not in sys.labels:
        raise LabelError("label %s not in delta %s" % (removed, list(sys.labels)))
    return frozenset(r for r in sys.positive_roots if sys.coeff(r, removed) != 0)


def admissible_ways(sys: RootSystem, removed: int) -> list[int]:
    """Auxiliary simple roots ordered by label; Way k picks the k-th."""
    if removed not in sys.labels:
        raise LabelError("label %s not in delta %s" % (removed, list(sys.labels)))
    return [l for l in sys.labels if l != removed]


def run_algorithm(sys: RootSystem, removed: int, way: int) -> DecompositionTrace:
    """Execute the step-by-step decomposition for (delta, delta-{removed}), Way `way`."""
    choices = admissible_ways(sys, removed)
    if not choices:
        # Rank one: the relative longest element is the simple reflection
        # itself and there is no auxiliary root to choose.
        if way != 1:
            raise LabelError("rank-one system admits only way 1")
        return _rank_one_trace(sys, removed)
    if not 1 <= way <= len(choices):
        raise LabelError("way %d out of range 1..%d" % (way, len(choices)))
    beta = choices[way - 1]

    w0 = relative_longest(sys, removed)
    big_s = s_set(sys, removed)
    residual = w0
    p_inv = identity_element(sys)
    residuals = [w0]
    steps: list[AlgorithmStep] = []
    tau_in, excluded = removed, beta
    seen: set[Root] = set()

    for index in range(1, len(sys.positive_roots) + 2):
        if not residual.maps_negative(sys.simple_by_label[tau_in]):
            break
        rest = sys.sub_system([l for l in sys.labels if l != excluded])
        component = next((c for c in rest.irreducible_components() if tau_in in c), None)
        if component is None:
            raise AlgorithmInvariantError("no component contains %s" % tau_in)
        subsys = sys.sub_system(component)
        w_n = relative_longest(subsys, tau_in)

        image_labels = set()
        for l in sorted(component - {tau_in}):
            img = w_n.apply_root(subsys.simple_by_label[l])
            lbl = _simple_label(sys, img)
            if lbl is None or lbl not in component:
                raise AlgorithmInvariantError(
                    "w_%d does not map %s into the component's simple roots" % (index, l))
            image_labels.add(lbl)
        left_over = component - image_labels
        if len(left_over) != 1:
            raise AlgorithmInvariantError(
                "step %d produced %s instead of a singleton" % (index, sorted(left_over)))
        produced = next(iter(left_over))

        t_piece = s_set(subsys, tau_in)
        s_piece = frozenset(p_inv.apply_root(r) for r in t_piece)
        if not s_piece <= big_s or s_piece & seen:
            raise AlgorithmInvariantError("piece %d escapes S or overlaps" % index)
        seen |= s_piece

        w_n_inv = longest_element(sys.sub_system(component - {tau_in})) * longest_element(subsys)
        steps.append(AlgorithmStep(
            step_index=index,
            ambient_delta=component,
            tau_in=tau_in,
            excluded=excluded,
            produced=produced,
            w_factor=w_n,
            word=reduced_word_star(w_n, subsys),
            t_piece=t_piece,
            s_piece=s_piece,
        ))
        residual = residual * w_n_inv
        p_inv = p_inv * w_n_inv
        residuals.append(residual)
        tau_in, excluded = excluded, produced
    else:
        raise AlgorithmInvariantError("termination guard exceeded")

    if not residual.is_identity:
        raise AlgorithmInvariantError("residual is not the identity at termination")
    if seen != big_s:
        raise AlgorithmInvariantError("pieces do not exhaust S")
    product = identity_element(sys)
    for step in steps:
        product = step.w_factor * product
    if product != w0:
        raise AlgorithmInvariantError("factors do not multiply to w0")
    total_word = tuple(l for step in steps for l in step.word)
    if len(total_word) != length(w0, sys):
        raise AlgorithmInvariantError("length additivity failed")
    return DecompositionTrace(sys, removed, way, beta, tuple(steps),
                              tuple(residuals), w0, total_word)


def _rank_one_trace(sys: RootSystem, removed: int) -> DecompositionTrace:
    w0 = relative_longest(sys, removed)
    piece = s_set(sys, removed)
    step = AlgorithmStep(
        step_index=1,
        ambient_delta=frozenset({removed}),
        tau_in=removed,
        excluded=None,
        produced=removed,
        w_factor=w0,
        word=reduced_word_star(w0, sys),
        t_piece=piece,
        s_piece=piece,
    )
    return DecompositionTrace(sys, removed, 1, None, (step,),
                              (w0, identity_element(sys)), w0, step.word)


def _simple_label(sys: RootSystem, root: Root) -> int | None:
    if sum(root.coords) != 1 or any(c not in (0, 1) for c in root.coords):
        return None
    return sys.frame_labels[root.coords.index(1)]


def s_ab_partition(sys: RootSystem, removed: int, beta: int | None) -> list[frozenset[Root]]:
    """Partition S by the proportionality class of (c_removed, c_beta).

    Classes are keyed by the primitive integer pair; empty classes cannot
    arise and duplicates are merged by construction.  A None beta (rank one)
    yields the single class S.
    """
    roots = s_set(sys, removed)
    if beta is None:
        return [roots]
    if beta not in sys.labels or beta == removed:
        raise LabelError("beta must be a simple root different from the removed one")
    classes: dict[tuple[int, int], set[Root]] = {}
    for r in roots:
        a, b = sys.coeff(r, removed), sys.coeff(r, beta)
        g = gcd(a, b)
        classes.setdefault((a // g, b // g), set()).add(r)
    return [frozenset(classes[k]) for k in sorted(classes)]


@dataclass(frozen=True)
class PropositionReport:
    ok: bool
    algorithm_pieces: tuple[frozenset[Root], ...]
    coefficient_classes: tuple[frozenset[Root], ...]
    mismatches: tuple[str, ...]


def verify_proposition(sys: RootSystem, removed: int, way: int) -> PropositionReport:
    """Compare the algorithm's pieces with the (c_alpha, c_beta) classes, both recomputed."""
    trace = run_algorithm(sys, removed, way)
    pieces = tuple(trace.pieces())
    classes = tuple(s_ab_partition(sys, removed, trace.beta))
    left = {p for p in pieces}
    right = {c for c in classes}
    mismatches = []
    for p in sorted(left - right, key=lambda s: sorted(r.coords for r in s)):
        mismatches.append("algorithm piece %s is not a coefficient class"
                          % sorted(r.coords for r in p))
    for c in sorted(right - left, key=lambda s: sorted(r.coords for r in s)):
        mismatches.append("coefficient class %s is not an algorithm piece"
                          % sorted(r.coords for r in c))
    return PropositionReport(not mismatches, pieces, classes, tuple(mismatches))


@dataclass(frozen=True)
class PropertyReport:
    ok: bool
    failures: tuple[str, ...]
    checks: int


def verify_properties_ABCD(trace: DecompositionTrace) -> PropertyReport:
    """Check properties (A)-(D) of the decomposition at every step.

    (A) each factor's inverse maps the component minus the produced root into
        the component minus the incoming root, and permutes the predicted
        complements in delta;
    (B) w0 maps delta minus the removed root into delta, and its inversion
        set is exactly S;
    (C) each residual maps the predicted part of delta into delta, kills the
        pending piece, and satisfies the sign dichotomy on the pending root;
    (D) lengths telescope exactly along the factorization.
    """
    sys = trace.system
    failures: list[str] = []
    checks = 0

    def check(cond: bool, msg: str) -> None:
        nonlocal checks
        checks += 1
        if not cond:
            failures.append(msg)

    def simple(l: int) -> Root:
        return sys.simple_by_label[l]

    def image_labels(w: WeylElement, labels) -> set[int | None]:
        return {_simple_label(sys, w.apply_root(simple(l))) for l in labels}

    # (A)
    for st in trace.steps:
        if st.excluded is None:
            continue
        w_inv = (longest_element(sys.sub_system(st.ambient_delta - {st.tau_in}))
                 * longest_element(sys.sub_system(st.ambient_delta)))
        part1 = image_labels(w_inv, sorted(st.ambient_delta - {st.produced}))
        check(None not in part1 and part1 <= st.ambient_delta - {st.tau_in},
              "(A) step %d: component images escape" % st.step_index)
        dom = [l for l in sys.labels if l not in (st.excluded, st.produced)]
        part2 = image_labels(w_inv, dom)
        expected = set(sys.labels) - {st.tau_in, st.excluded}
        check(part2 == expected, "(A) step %d: delta complement not permuted" % st.step_index)

    # (B)
    w0 = trace.w0
    others = [l for l in sys.labels if l != trace.removed]
    img = image_labels(w0, others)
    check(None not in img and img <= set(sys.labels),
          "(B) w0 does not map delta-{removed} into delta")
    check(inversion_set(w0, sys) == s_set(sys, trace.removed),
          "(B) inversion set of w0 differs from S")

    # (C)
    base_image = frozenset(w0.apply_root(simple(l)) for l in sys.labels
                           if l not in (trace.removed, trace.beta)) if trace.beta else None
    n_steps = len(trace.steps)
    for n, resid in enumerate(trace.residuals):
        if trace.beta is None:
            break
        if n < n_steps:
            tau_next, tau_after = trace.steps[n].tau_in, trace.steps[n].excluded
        else:
            tau_next, tau_after = trace.steps[-1].excluded, trace.steps[-1].produced
        part = frozenset(resid.apply_root(simple(l)) for l in sys.labels
                         if l not in (tau_next, tau_after))
        check(part == base_image,
              "(C) residual %d: delta image drifted" % n)
        if n < n_steps:
            check(resid.maps_negative(simple(tau_next)),
                  "(C) residual %d: pending root not negative" % n)
            check(all(resid.maps_negative(r) for r in trace.steps[n].t_piece),
                  "(C) residual %d: pending piece not killed" % n)
        else:
            check(not resid.maps_negative(simple(tau_next)),
                  "(C) terminal residual still negative on pending root")

    # (D)
    for n, st in enumerate(trace.steps, start=1):
        check(length(trace.residuals[n], sys)
              == length(trace.residuals[n - 1], sys) - length(st.w_factor, sys),
              "(D) length recursion fails at step %d" % n)
    check(length(w0, sys) == sum(length(st.w_factor, sys) for st in trace.steps),
          "(D) total length is not additive")

    return PropertyReport(not failures, tuple(failures), checks)


def trace_to_json(trace: DecompositionTrace) -> dict:
    sys = trace.system
    return {
        "type": sys.type_label,
        "removed": trace.removed,
        "way": trace.way,
        "steps": [
            {
                "delta": sorted(st.ambient_delta),
                "tau_in": st.tau_in,
                "tau_next": st.produced,
                "word": list(st.word),
                "s_piece": sorted(list(r.coords) for r in st.s_piece),
            }
            for st in trace.steps
        ],
        "total_length": trace.total_length,
    }

"""Symbolic normalization-factor arithmetic for (twisted) Steinberg data.

Every root beta in S contributes a numerator factor labelled by the linear
form <nu + s*at, beta_check> (an "s-term") and a denominator factor whose
exponent is that form minus one; the tables display the denominator as the
"1-s term", the negation of the exponent.  Reduction cancels a numerator
term t against a denominator whenever t equals some s-term minus one: the
two exponentials then agree up to an invertible monomial, which is the only
cancellation valid for every residue cardinality q.

The discrepancy of a decomposition is the multiset of numerator terms that
survive piecewise reduction but cancel in the reduction over all of S.
Holomorphicity needs no "positive term" (slope and intercept of the same
strict sign) in the gcd of the discrepancies over the chosen Ways.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q

from . import refdata
from .decompose import DecompositionTrace, run_algorithm, s_set
from .rootsystem import Root, RootSystem
from .vectors import Vector, format_rational, lincomb, scale


class PairDataError(LookupError):
    """No published inducing exponent for this (type, removed) pair."""


class ReductionError(ArithmeticError):
    """A discrepancy came out negative; the factor pipeline is inconsistent."""


@dataclass(frozen=True, order=True)
class LinearTerm:
    """The linear form slope*s + intercept, exact in both coefficients."""

    slope: Q
    intercept: Q

    @property
    def is_positive(self) -> bool:
        return (self.slope > 0 and self.intercept > 0) or (self.slope < 0 and self.intercept < 0)

    def one_minus(self) -> "LinearTerm":
        return LinearTerm(-self.slope, 1 - self.intercept)

    def minus_one(self) -> "LinearTerm":
        return LinearTerm(self.slope, self.intercept - 1)

    def render(self) -> str:
        """Match the table style: '2s', 's-3/2', '5/2-s', '-1/2-s', '1-2s'."""
        a, b = self.slope, self.intercept

        def s_part(coef: Q, lead: bool) -> str:
            mag = abs(coef)
            body = "s" if mag == 1 else format_rational(mag) + "s"
            if lead:
                return body if coef > 0 else "-" + body
            return ("+" if coef > 0 else "-") + body

        if a == 0:
            return format_rational(b)
        if a > 0:
            out = s_part(a, lead=True)
            if b > 0:
                out += "+" + format_rational(b)
            elif b < 0:
                out += "-" + format_rational(-b)
            return out
        # negative slope: intercept first, table style
        if b == 0:
            return s_part(a, lead=True)
        return format_rational(b) + s_part(a, lead=False)


def parse_linear_term(text: str) -> LinearTerm:
    """Inverse of LinearTerm.render (accepts any sum of c*s and constant chunks)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty term")
    slope = Q(0)
    intercept = Q(0)
    for chunk in re.findall(r"[+-]?[^+-]+", s):
        if not chunk:
            continue
        if chunk.endswith("s"):
            coef = chunk[:-1]
            if coef in ("", "+"):
                slope += 1
            elif coef == "-":
                slope -= 1
            else:
                slope += Q(coef)
        else:
            intercept += Q(chunk)
    return LinearTerm(slope, intercept)


@dataclass
class FactorMultiset:
    """Multiset of linear forms; order is irrelevant, multiplicity is not."""

    counts: Counter

    @classmethod
    def from_terms(cls, terms) -> "FactorMultiset":
        return cls(Counter(terms))

    def __eq__(self, other) -> bool:
        return isinstance(other, FactorMultiset) and +self.counts == +other.counts

    def __bool__(self) -> bool:
        return any(m > 0 for m in self.counts.values())

    def total(self) -> int:
        return sum(self.counts.values())

    def union_add(self, other: "FactorMultiset") -> "FactorMultiset":
        return FactorMultiset(self.counts + other.counts)

    def subtract_exact(self, other: "FactorMultiset") -> "FactorMultiset":
        out = Counter(self.counts)
        for term, mult in other.counts.items():
            out[term] -= mult
            if out[term] < 0:
                raise ReductionError("negative multiplicity for %s" % term.render())
        return FactorMultiset(+out)

    def gcd(self, other: "FactorMultiset") -> "FactorMultiset":
        out = Counter()
        for term, mult in self.counts.items():
            m = min(mult, other.counts.get(term, 0))
            if m > 0:
                out[term] = m
        return FactorMultiset(out)

    def positive_terms(self) -> list[LinearTerm]:
        return sorted(t for t, m in self.counts.items() if m > 0 and t.is_positive)

    def sorted_items(self) -> list[tuple[LinearTerm, int]]:
        return sorted(((t, m) for t, m in self.counts.items() if m > 0))

    def to_json(self) -> list[dict]:
        return [
            {"term": t.render(), "multiplicity": m, "positive": t.is_positive}
            for t, m in self.sorted_items()
        ]


@dataclass(frozen=True)
class SteinbergDatum:
    system: RootSystem
    removed: int
    nu_R: Vector
    alpha_tilde: Vector

    def s_term(self, beta: Root) -> LinearTerm:
        return LinearTerm(
            self.system.pairing(self.alpha_tilde, beta),
            self.system.pairing(self.nu_R, beta),
        )


def half_sum(roots) -> Vector:
    roots = list(roots)
    total = roots[0].ambient
    for r in roots[1:]:
        total = tuple(a + b for a, b in zip(total, r.ambient))
    return scale(Q(1, 2), total)


def steinberg_datum(sys: RootSystem, removed: int) -> SteinbergDatum:
    """Build and fully cross-validate the Steinberg inducing datum for a pair.

    The published ambient vector, its published simple-basis form, and the
    half-sum of positive roots of the Levi must all agree exactly; the
    coweight direction is recomputed from S and pinned against the published
    vectors (G2, F4) or the coefficient pairing identity (E6, E7, E8).
    """
    key = (sys.type_label, removed)
    if key not in refdata.NU_R:
        raise PairDataError("no published inducing exponent for %s, removed=%s" % key)
    memo = sys._cache.setdefault("steinberg", {})
    if removed in memo:
        return memo[removed]
    printed_ambient, printed_simple = refdata.NU_R[key]
    simple_vecs = [sys.simple_by_label[l].ambient for l in sys.labels]
    if lincomb(printed_simple, simple_vecs) != printed_ambient:
        raise AssertionError("published nu_R forms disagree for %s" % (key,))
    levi = sys.sub_system([l for l in sys.labels if l != removed])
    if levi.positive_roots and half_sum(levi.positive_roots) != printed_ambient:
        raise AssertionError("nu_R does not equal the Levi half-sum for %s" % (key,))

    big_s = s_set(sys, removed)
    rho_n = half_sum(sorted(big_s, key=lambda r: r.coords))
    norm = sys.pairing(rho_n, sys.simple_by_label[removed])
    alpha_tilde = scale(Q(1) / norm, rho_n)
    for l in sys.labels:
        want = Q(1) if l == removed else Q(0)
        if sys.pairing(alpha_tilde, sys.simple_by_label[l]) != want:
            raise AssertionError("coweight direction fails pairing test for %s" % (key,))
    if key in refdata.ALPHA_TILDE:
        if alpha_tilde != refdata.ALPHA_TILDE[key]:
            raise AssertionError("published coweight direction disagrees for %s" % (key,))
    else:
        for r in sys.positive_roots:
            if sys.pairing(alpha_tilde, r) != sys.coeff(r, removed):
                raise AssertionError("coefficient pairing identity fails for %s" % (key,))
    datum = SteinbergDatum(sys, removed, printed_ambient, alpha_tilde)
    memo[removed] = datum
    return datum


@dataclass(frozen=True)
class FactorTable:
    datum: SteinbergDatum
    rows: tuple[tuple[Root, LinearTerm, LinearTerm], ...]


def factor_table(datum: SteinbergDatum) -> FactorTable:
    """One (s-term, 1-s term) row per root of S, sorted by coordinates."""
    roots = sorted(s_set(datum.system, datum.removed), key=lambda r: r.coords)
    rows = []
    for beta in roots:
        t = datum.s_term(beta)
        rows.append((beta, t, t.one_minus()))
    return FactorTable(datum, tuple(rows))


def reduced_numerator(roots, datum: SteinbergDatum) -> FactorMultiset:
    """Numerator terms over the given roots surviving reduction.

    A numerator term cancels one denominator occurrence exactly when the two
    underlying factors coincide up to a unit, i.e. when the term equals some
    s-term minus one.
    """
    terms = [datum.s_term(b) for b in roots]
    numerator = Counter(terms)
    denominator = Counter(t.minus_one() for t in terms)
    out = Counter()
    for term, mult in numerator.items():
        keep = mult - denominator.get(term, 0)
        if keep > 0:
            out[term] = keep
    return FactorMultiset(out)


def discrepancy(trace: DecompositionTrace, datum: SteinbergDatum,
                restrict: frozenset[Root] | None = None) -> FactorMultiset:
    """Piecewise numerators over the trace divided by the numerator over S.

    With `restrict` given, every piece and S itself are intersected with it
    first (used for nontrivial unitary twists, which strike roots from the
    product).  Raises ReductionError if the quotient is not a polynomial.
    """
    if trace.system is not datum.system or trace.removed != datum.removed:
        raise ValueError("trace and datum describe different pairs")
    whole = s_set(datum.system, datum.removed)
    pieces = trace.pieces()
    if restrict is not None:
        whole = whole & restrict
        pieces = [p & restrict for p in pieces]
    piecewise = FactorMultiset(Counter())
    for piece in pieces:
        piecewise = piecewise.union_add(reduced_numerator(piece, datum))
    return piecewise.subtract_exact(reduced_numerator(whole, datum))


def gcd_of_discrepancies(discrepancies: list[FactorMultiset]) -> FactorMultiset:
    if not discrepancies:
        raise ValueError("need at least one discrepancy")
    out = discrepancies[0]
    for d in discrepancies[1:]:
        out = out.gcd(d)
    return out


HOLOMORPHIC_VERIFIED = "HOLOMORPHIC_VERIFIED"
OBSTRUCTED = "OBSTRUCTED"
REQUIRES_REPRESENTATION_THEORY = "REQUIRES_REPRESENTATION_THEORY"


@dataclass(frozen=True)
class TheoremReport:
    type_label: str
    removed: int
    ways: tuple[int, ...]
    verdict: str
    gcd_terms: FactorMultiset
    per_way: dict[int, FactorMultiset]
    twist_order: int | None = None

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "removed": self.removed,
            "ways": list(self.ways),
            "twist_order": self.twist_order,
            "verdict": self.verdict,
            "gcd_terms": self.gcd_terms.to_json(),
            "per_way_discrepancies": {str(w): d.to_json() for w, d in sorted(self.per_way.items())},
        }


def twist_restriction(sys: RootSystem, removed: int, order: int) -> frozenset[Root]:
    """Roots of S still contributing under a twist of the given order.

    A unitary character twisting the Steinberg datum is trivial on the Levi's
    coroots, so its value on beta_check is the value on removed_check raised
    to beta's coroot coefficient; only multiples of the order survive.
    """
    if order < 2:
        raise ValueError("twist order must be at least 2")
    return frozenset(r for r in s_set(sys, removed)
                     if sys.coroot_coeff(r, removed) % order == 0)


def check_main_theorem(sys: RootSystem, removed: int, ways,
                       twist_order: int | None = None) -> TheoremReport:
    """Gcd the discrepancies over the given Ways and test positivity.

    HOLOMORPHIC_VERIFIED iff no positive term survives in the gcd, else
    OBSTRUCTED with the full gcd attached.
    """
    ways = tuple(ways)
    if not ways:
        raise ValueError("need at least one way")
    datum = steinberg_datum(sys, removed)
    restrict = twist_restriction(sys, removed, twist_order) if twist_order else None
    per_way = {w: discrepancy(run_algorithm(sys, removed, w), datum, restrict) for w in ways}
    g = gcd_of_discrepancies([per_way[w] for w in ways])
    verdict = OBSTRUCTED if g.positive_terms() else HOLOMORPHIC_VERIFIED
    return TheoremReport(sys.type_label, removed, ways, verdict, g, per_way, twist_order)


def max_twist_order(sys: RootSystem, removed: int) -> int:
    return max(sys.coroot_coeff(r, removed) for r in s_set(sys, removed))


def check_main_theorem_twisted(sys: RootSystem, removed: int, ways) -> list[TheoremReport]:
    """One report per relevant twist order; orders above the largest coroot
    coefficient leave nothing in the product and are vacuous."""
    return [check_main_theorem(sys, removed, ways, twist_order=d)
            for d in range(2, max_twist_order(sys, removed) + 1)]

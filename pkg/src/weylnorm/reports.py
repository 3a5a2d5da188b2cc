"""Verdict reports for every published holomorphicity claim.

One report per claimed (pair, Way list, twist branch).  The untwisted
Steinberg datum is checked by the positivity criterion directly; nontrivial
unitary twists strike roots from the factor product, and since only the
order of the twist on the removed coroot matters, each possible order up to
the largest coroot coefficient is checked separately and all must pass.

Two branches are special:
  * the G2 pair keeping only the long root, untwisted: the calculus leaves a
    positive term and the published resolution is representation-theoretic,
    so the verdict is a flag rather than a computation;
  * the E8 pair keeping the full A7 chain, untwisted: the published claim is
    an obstruction at s+1/2, which this calculus does not reproduce (the
    auxiliary-root choice with the second-smallest label yields a
    discrepancy free of that term); the computed verdict is reported and the
    divergence is noted on the report.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import refdata
from .decompose import run_algorithm
from .normalization import (
    HOLOMORPHIC_VERIFIED, OBSTRUCTED, REQUIRES_REPRESENTATION_THEORY,
    FactorMultiset, check_main_theorem, check_main_theorem_twisted,
    gcd_of_discrepancies,
)
from .rootsystem import get_root_system

TYPE_ORDER = ("G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class VerificationReport:
    type_label: str
    removed: int
    ways_used: tuple[int, ...]
    twist: str                       # "trivial" or "nontrivial"
    verdict: str
    published_verdict: str = ""
    gcd_terms: FactorMultiset | None = None
    trace_digests: tuple = ()
    notes: tuple[str, ...] = ()
    details: tuple = ()

    @property
    def matches_published(self) -> bool:
        return self.verdict == self.published_verdict

    def to_json(self) -> dict:
        return {
            "pair": {"type": self.type_label, "removed": self.removed},
            "ways_used": list(self.ways_used),
            "twist": self.twist,
            "verdict": self.verdict,
            "published_verdict": self.published_verdict,
            "matches_published": self.matches_published,
            "gcd_terms": self.gcd_terms.to_json() if self.gcd_terms is not None else [],
            "trace_digests": list(self.trace_digests),
            "notes": list(self.notes),
            "details": [d.to_json() for d in self.details],
        }


def _digest(type_label: str, removed: int, way: int) -> dict:
    trace = run_algorithm(get_root_system(type_label), removed, way)
    return {
        "way": way,
        "steps": len(trace.steps),
        "total_length": trace.total_length,
        "piece_sizes": [len(p) for p in trace.pieces()],
    }


def _combined_twisted(type_label: str, removed: int, ways) -> VerificationReport:
    sys = get_root_system(type_label)
    reports = check_main_theorem_twisted(sys, removed, ways)
    bad = [r for r in reports if r.verdict != HOLOMORPHIC_VERIFIED]
    gcd = gcd_of_discrepancies([r.gcd_terms for r in reports]) if reports else FactorMultiset.from_terms([])
    return VerificationReport(
        type_label, removed, tuple(ways), "nontrivial",
        OBSTRUCTED if bad else HOLOMORPHIC_VERIFIED,
        published_verdict=HOLOMORPHIC_VERIFIED,
        gcd_terms=gcd,
        trace_digests=tuple(_digest(type_label, removed, w) for w in ways),
        notes=("every twist order up to the largest coroot coefficient checked",),
        details=tuple(reports),
    )


def _plain(type_label: str, removed: int, ways, published=HOLOMORPHIC_VERIFIED,
           notes=()) -> VerificationReport:
    rep = check_main_theorem(get_root_system(type_label), removed, ways)
    return VerificationReport(
        type_label, removed, tuple(ways), "trivial", rep.verdict,
        published_verdict=published,
        gcd_terms=rep.gcd_terms,
        trace_digests=tuple(_digest(type_label, removed, w) for w in ways),
        notes=tuple(notes),
        details=(rep,),
    )


def _flag_report(type_label: str, removed: int, ways) -> VerificationReport:
    # untwisted branch outside this calculus; report the flag with the
    # computed evidence attached
    ev = check_main_theorem(get_root_system(type_label), removed, ways)
    return VerificationReport(
        type_label, removed, tuple(ways), "trivial",
        REQUIRES_REPRESENTATION_THEORY,
        published_verdict=REQUIRES_REPRESENTATION_THEORY,
        gcd_terms=ev.gcd_terms,
        trace_digests=tuple(_digest(type_label, removed, w) for w in ways),
        notes=("positivity calculus is inconclusive here; the published "
               "resolution analyzes the module structure directly",),
        details=(ev,),
    )


def claim_jobs() -> list:
    """One zero-argument callable per claim entry, in deterministic order."""
    jobs = []
    for type_label in TYPE_ORDER:
        for removed, claim in sorted(refdata.CLAIMS[type_label].items(), reverse=True):
            ways = claim["ways"]
            twist = claim.get("twist")
            if twist == "branch":
                jobs.append(lambda t=type_label, r=removed, w=ways: _flag_report(t, r, w))
                jobs.append(lambda t=type_label, r=removed, w=ways: _combined_twisted(t, r, w))
            elif twist == "obstruction":
                all_ways = tuple(range(1, get_root_system(type_label).rank))
                jobs.append(lambda t=type_label, r=removed, w=all_ways: _plain(
                    t, r, list(w), published=OBSTRUCTED,
                    notes=("published claim: obstructed at s+1/2 for the "
                           "trivial twist; see the per-way discrepancies",)))
                jobs.append(lambda t=type_label, r=removed, w=ways: _combined_twisted(t, r, w))
            elif claim.get("mode") == "each":
                for way in ways:
                    jobs.append(lambda t=type_label, r=removed, w=way: _plain(t, r, [w]))
            else:
                jobs.append(lambda t=type_label, r=removed, w=ways: _plain(t, r, w))
    return jobs


def run_paper_claims(jobs: int = 1) -> list[VerificationReport]:
    """Reports for every published pair, in type order, special branches last
    per type.  With jobs > 1 the independent entries are computed on a worker
    pool and aggregated in the same deterministic order."""
    thunks = claim_jobs()
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda f: f(), thunks))
    return [f() for f in thunks]

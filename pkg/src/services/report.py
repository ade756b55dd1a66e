"""
Reproduction reports

theorem_report runs the CL-check in basis and sampled mode plus the
nilpotency classification over the whole corpus of nilpotent algebras of
dimension at most four. counterexample_report reproduces the non-nilpotent
CL-algebra.
"""
from src.config import DEFAULT_SAMPLES, DEFAULT_SEED
from src.core.leibniz import derived_series, lower_central_series
from src.core.linalg import Vector
from src.services.catalog import (
    CORPUS_NAMES,
    audit_centralizers,
    catalog_digest,
    catalog_entry,
    catalog_get,
    corpus_members,
)
from src.services.centralizers import XSelection, centralizer, is_cl


class TheoremRow:
    """Verdicts for one corpus member"""

    def __init__(self, name, parameter, dim, series, basis, sampled):
        self.name = name
        self.parameter = parameter
        self.dim = dim
        self.series = series
        self.basis = basis
        self.sampled = sampled

    @property
    def passed(self):
        return self.series.reaches_zero and self.basis.passed and self.sampled.passed

    @property
    def witness(self):
        for verdict in (self.basis, self.sampled):
            if verdict.witness is not None:
                return verdict.witness
        return None

    def to_dict(self):
        return {
            "name": self.name,
            "parameter": self.parameter,
            "dim": self.dim,
            "nilpotency": self.series.verdict,
            "basis": self.basis.to_dict(),
            "sampled": self.sampled.to_dict(),
            "verdict": "pass" if self.passed else "fail",
        }


class AuditRow:
    """Printed versus computed centralizer of one basis element"""

    def __init__(self, name, index, expected, computed, notes):
        self.name = name
        self.index = index
        self.expected = expected
        self.computed = computed
        self.notes = notes

    @property
    def matches(self):
        return self.expected == self.computed

    def to_dict(self):
        return {
            "name": self.name,
            "element": f"e{self.index + 1}",
            "expected": self.expected.to_strings(),
            "computed": self.computed.to_strings(),
            "match": self.matches,
        }


class TheoremReport:
    def __init__(self, rows, audit, samples, seed, digest=None):
        self.rows = rows
        self.audit = audit
        self.samples = samples
        self.seed = seed
        self.digest = digest

    @property
    def passed(self):
        return all(row.passed for row in self.rows) and all(a.matches for a in self.audit)

    def failures(self):
        return [row for row in self.rows if not row.passed]

    def to_dict(self):
        return {
            "corpus_size": len(self.rows),
            "catalog_digest": self.digest,
            "selection": {
                "basis": XSelection.basis().to_dict(),
                "sampled": XSelection.sampled(self.samples, self.seed).to_dict(),
            },
            "rows": [row.to_dict() for row in self.rows],
            "centralizer_audit": [a.to_dict() for a in self.audit],
            "verdict": "pass" if self.passed else "fail",
        }


def check_member(name, parameter, L, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
    return TheoremRow(
        name,
        parameter,
        L.dim,
        lower_central_series(L),
        is_cl(L, XSelection.basis()),
        is_cl(L, XSelection.sampled(samples, seed)),
    )


def centralizer_audit(names=CORPUS_NAMES):
    rows = []
    for name in names:
        notes = catalog_entry(name).notes
        for index, expected, computed in audit_centralizers(name):
            rows.append(AuditRow(name, index, expected, computed, notes))
    return rows


def theorem_report(members=None, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, audit=True):
    """
    Run the CL-algebra reproduction over the corpus

    Args:
        members: CorpusMember list; the full corpus when None
        samples: Sample count for the sampled selection
        seed: Seed for the sampled selection
        audit: Also compare the printed centralizers with computed ones

    Returns:
        TheoremReport: One row per member in corpus order
    """
    if members is None:
        members = corpus_members()
    rows = [check_member(m.name, m.parameter, m.algebra, samples, seed) for m in members]
    return TheoremReport(rows, centralizer_audit() if audit else [], samples, seed, catalog_digest())


class CounterexampleReport:
    """Series, centralizers and CL verdicts of the non-nilpotent CL-algebra"""

    def __init__(self, L, lower, derived, centralizers, basis, sampled):
        self.algebra = L
        self.lower = lower
        self.derived = derived
        self.centralizers = centralizers
        self.basis = basis
        self.sampled = sampled

    @property
    def passed(self):
        return (not self.lower.reaches_zero and self.derived.reaches_zero
                and self.basis.passed and self.sampled.passed)

    def to_dict(self):
        return {
            "name": self.algebra.name,
            "lower_central_series": self.lower.to_dict(),
            "derived_series": self.derived.to_dict(),
            "centralizers": {f"e{i + 1}": c.to_strings() for i, c in enumerate(self.centralizers)},
            "basis": self.basis.to_dict(),
            "sampled": self.sampled.to_dict(),
            "verdict": "pass" if self.passed else "fail",
        }


def counterexample_report(samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
    """
    Show that a CL-algebra need not be nilpotent

    Passes when the algebra is not nilpotent, is solvable, and is CL on the
    basis and on the sampled selection.
    """
    L = catalog_get("counterexample_s4")
    centralizers = [centralizer(L, Vector.basis(i, L.dim, L.field)) for i in range(L.dim)]
    return CounterexampleReport(
        L,
        lower_central_series(L),
        derived_series(L),
        centralizers,
        is_cl(L, XSelection.basis()),
        is_cl(L, XSelection.sampled(samples, seed)),
    )

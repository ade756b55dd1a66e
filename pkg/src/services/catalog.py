"""
Built-in catalog of nilpotent Leibniz algebras up to dimension four

Tables live in resources/catalog.json in the algebra document format, each
with its citation, parameter constraints and the centralizers of the basis
elements as printed in the proof that these algebras are CL-algebras.
"""
from functools import lru_cache

from sympy import Rational

from src.config import LAMBDA_4_SAMPLES, PARAMETER_SAMPLES, load_catalog_data
from src.core.errors import ExcludedParameter, UnknownName
from src.core.leibniz import LeibnizAlgebra
from src.core.linalg import Vector, span
from src.core.scalars import FIELD_QA
from src.db.documents import algebra_from_document, dump_document, input_digest
from src.services.centralizers import centralizer

# Order of the classification regression corpus
CORPUS_NAMES = (
    "abelian_1", "abelian_2", "mu_1",
    "lambda_1", "lambda_2", "lambda_3", "lambda_4", "lambda_5", "lambda_6",
) + tuple(f"rho_{k}" for k in range(1, 18))

SAMPLE_SETS = {
    "generic": PARAMETER_SAMPLES,
    "lambda_4": LAMBDA_4_SAMPLES,
}

# abelian_1 + abelian_2 + mu_1 + 5 lambdas + lambda_4 x 5 + 12 rhos + rho_4 x 2
# + rho_9, rho_10, rho_16 x 5 each
CORPUS_SIZE = 43


def parameter_text(alpha):
    """Label for a parameter choice: "generic" or e.g. "a=1/2" """
    return "generic" if alpha is None else f"a={alpha}"


class CatalogEntry:
    """
    One catalog algebra with its provenance

    Args:
        data: Decoded catalog record
    """

    def __init__(self, data):
        self.name = data["name"]
        self.label = data.get("label", self.name)
        self.citation = data.get("citation", "")
        self.notes = list(data.get("notes", []))
        parameter = data.get("parameter", {})
        self.allowed = tuple(Rational(v) for v in parameter.get("allowed", ()))
        self.excluded = tuple(Rational(v) for v in parameter.get("excluded", ()))
        self.samples = SAMPLE_SETS.get(parameter.get("samples"), ())
        self.algebra = algebra_from_document(data)
        self.expected = {
            int(k) - 1: tuple(i - 1 for i in v)
            for k, v in data.get("expected_centralizers", {}).items()
        }

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_parametric(self):
        return self.field == FIELD_QA

    def check_parameter(self, alpha):
        """
        Raises:
            ExcludedParameter: If alpha is outside the entry's range
        """
        if self.allowed and alpha not in self.allowed:
            allowed = ", ".join(str(v) for v in self.allowed)
            raise ExcludedParameter(f"{self.name} needs a in {{{allowed}}}, got {alpha}")
        if alpha in self.excluded:
            raise ExcludedParameter(f"{self.name} is undefined at a = {alpha}")

    def instantiate(self, alpha=None):
        """
        The algebra over Q at alpha, or over Q(a) when alpha is None

        Raises:
            ExcludedParameter: On a forbidden parameter value, or a missing
                value for an entry restricted to finitely many
            PoleError: If alpha is a pole of a structure constant
        """
        if not self.is_parametric:
            if alpha is not None:
                raise ExcludedParameter(f"{self.name} takes no parameter")
            return self.algebra
        if alpha is None:
            if self.allowed:
                allowed = ", ".join(str(v) for v in self.allowed)
                raise ExcludedParameter(f"{self.name} needs an explicit a in {{{allowed}}}")
            return self.algebra
        alpha = Rational(alpha)
        self.check_parameter(alpha)
        return self.algebra.substitute(alpha, name=f"{self.name}({parameter_text(alpha)})")

    def parameter_values(self):
        """Parameter choices used by the corpus; None stands for generic a"""
        if not self.is_parametric:
            return [None]
        if self.allowed:
            return list(self.allowed)
        return [None] + list(self.samples)

    def expected_centralizer(self, index):
        """The printed centralizer of e_{index+1}, or None if none is listed"""
        if index not in self.expected:
            return None
        field = self.field
        return span([Vector.basis(i, self.dim, field) for i in self.expected[index]], self.dim, field)

    def describe_parameter(self):
        if not self.is_parametric:
            return ""
        if self.allowed:
            return "a in {" + ", ".join(str(v) for v in self.allowed) + "}"
        if self.excluded:
            return "a != " + ", ".join(str(v) for v in self.excluded)
        return "a in Q"


@lru_cache(maxsize=1)
def _entries():
    records = load_catalog_data().get("entries", [])
    return {record["name"]: CatalogEntry(record) for record in records}


def catalog_names():
    return list(_entries())


@lru_cache(maxsize=1)
def catalog_digest():
    """sha256 of the catalog tables in their stable JSON form"""
    return input_digest(dump_document(load_catalog_data()))


def catalog_entry(name):
    """
    Raises:
        UnknownName: If no entry has this name
    """
    try:
        return _entries()[name]
    except KeyError:
        raise UnknownName(f"unknown catalog algebra {name!r}")


def catalog_get(name, alpha=None):
    """
    Fetch a catalog algebra

    Args:
        name: Catalog name such as "rho_1" or "lambda_4"
        alpha: Optional rational parameter value for parametric entries

    Returns:
        LeibnizAlgebra: Over Q, or over Q(a) for a parametric entry without
            alpha
    """
    return catalog_entry(name).instantiate(alpha)


class CorpusMember:
    """One row of the classification corpus"""

    def __init__(self, name, alpha, algebra, parametric):
        self.name = name
        self.alpha = alpha
        self.algebra = algebra
        self.parameter = parameter_text(alpha) if parametric else ""


def corpus_members():
    members = []
    for name in CORPUS_NAMES:
        entry = catalog_entry(name)
        for alpha in entry.parameter_values():
            members.append(CorpusMember(name, alpha, entry.instantiate(alpha), entry.is_parametric))
    return members


def theorem_corpus():
    """
    Every nilpotent Leibniz algebra of dimension at most four

    Parametric families appear at generic a and at the sample values; rho_4
    only at a = 0 and a = 1.

    Returns:
        list: LeibnizAlgebra instances in fixed catalog order
    """
    return [member.algebra for member in corpus_members()]


def audit_centralizers(name):
    """
    Compare computed centralizers of the basis with the printed ones

    Returns:
        list: (index, expected Subspace, computed Subspace) per listed element
    """
    entry = catalog_entry(name)
    L = entry.algebra
    rows = []
    for index in sorted(entry.expected):
        computed = centralizer(L, Vector.basis(index, L.dim, L.field))
        rows.append((index, entry.expected_centralizer(index), computed))
    return rows


def all_algebras():
    """Every stored algebra, parametric entries at generic a"""
    return [LeibnizAlgebra(entry.algebra.table, name=entry.name, leibniz_checked=True)
            for entry in _entries().values()]

"""
Centralizers, CL-conditions and CL-elements

Every check here quantifies over a finite XSelection of elements x. The
verdicts carry their selection so a report always says which x were tried.
"""
import random

from src.config import DEFAULT_SAMPLES, DEFAULT_SEED, SAMPLE_RANGE
from src.core.errors import DimensionMismatch, NotSubalgebra
from src.core.leibniz import restrict, subspace_role
from src.core.linalg import Matrix, Vector, null_space

CENTRALIZER_KINDS = ("left", "right", "two_sided")
CL_FLAVORS = ("left", "right", "two_sided")

# condition numbers needed by each flavor of CL-algebra
FLAVOR_CONDITIONS = {
    "left": (1, 2),
    "right": (1, 3),
    "two_sided": (1, 2, 3),
}


class XSelection:
    """
    Finite set of elements x standing in for "for all x in L"

    Args:
        mode: "basis", "basis_plus_pairs", "sampled" or "explicit"
        count: Number of samples for the sampled mode
        seed: Integer seed for the sampled mode
        vectors: Explicit list of Vector for the explicit mode
    """

    MODES = ("basis", "basis_plus_pairs", "sampled", "explicit")

    def __init__(self, mode, count=None, seed=None, vectors=None):
        if mode not in self.MODES:
            raise ValueError(f"unknown selection mode {mode!r}")
        if mode == "sampled" and (count is None or count < 1):
            raise ValueError("a sampled selection needs count >= 1")
        self.mode = mode
        self.count = count
        self.seed = seed
        self.explicit = list(vectors) if vectors is not None else None

    @classmethod
    def basis(cls):
        return cls("basis")

    @classmethod
    def pairs(cls):
        return cls("basis_plus_pairs")

    @classmethod
    def sampled(cls, count=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
        return cls("sampled", count=count, seed=seed)

    @classmethod
    def of(cls, vectors):
        return cls("explicit", vectors=vectors)

    def vectors(self, L):
        """
        Materialize the selection inside an algebra

        Args:
            L: LeibnizAlgebra supplying dimension and field

        Returns:
            list: Vectors in deterministic order
        """
        n, field = L.dim, L.field
        if self.mode == "explicit":
            for v in self.explicit:
                if v.dim != n:
                    raise DimensionMismatch(f"selected vector of length {v.dim} in a {n}-dimensional algebra")
            return list(self.explicit)
        basis = L.basis()
        if self.mode == "basis":
            return basis
        if self.mode == "basis_plus_pairs":
            return basis + [basis[i] + basis[j] for i in range(n) for j in range(i + 1, n)]
        if n == 0:
            return []
        rng = random.Random(self.seed)
        out = []
        while len(out) < self.count:
            values = [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(n)]
            if any(values):
                out.append(Vector.of(values, field))
        return out

    def image(self, f, L):
        """Explicit selection f(sel) for transporting a check along a map"""
        return XSelection.of([f.apply(x) for x in self.vectors(L)])

    def describe(self):
        if self.mode == "sampled":
            return f"sampled({self.count}, seed=0x{self.seed:X})"
        if self.mode == "explicit":
            return f"explicit({len(self.explicit)})"
        return self.mode

    def to_dict(self):
        data = {"mode": self.mode}
        if self.mode == "sampled":
            data["count"] = self.count
            data["seed"] = f"0x{self.seed:X}"
        if self.mode == "explicit":
            data["vectors"] = [v.to_strings() for v in self.explicit]
        return data

    def __repr__(self):
        return f"XSelection({self.describe()})"


def centralizer(L, x, kind="two_sided"):
    """
    Left, right or two-sided centralizer of x

    Args:
        L: LeibnizAlgebra
        x: Vector
        kind: "left" ({y : [y, x] = 0}), "right" ({y : [x, y] = 0})
            or "two_sided" (both)

    Returns:
        Subspace: The centralizer; all of L when x = 0
    """
    if kind not in CENTRALIZER_KINDS:
        raise ValueError(f"unknown centralizer kind {kind!r}")
    if kind == "right":
        return null_space(L.right_multiplication(x))
    if kind == "left":
        return null_space(L.left_multiplication(x))
    stacked = L.right_multiplication(x).rows + L.left_multiplication(x).rows
    return null_space(Matrix(stacked, cols=L.dim, field=L.field))


def centralizer_is_subalgebra(L, x):
    return subspace_role(L, centralizer(L, x), "subalgebra")


def centralizer_is_ideal(L, x, side="two_sided"):
    """
    Decide the ideal side of the CL equivalence directly

    Args:
        L: LeibnizAlgebra
        x: Vector
        side: "left", "right" or "two_sided"

    Returns:
        bool: Whether C_L(x) is a left, right or two-sided ideal
    """
    role = {"left": "left_ideal", "right": "right_ideal", "two_sided": "ideal"}[side]
    return subspace_role(L, centralizer(L, x), role)


class CLWitness:
    """
    A violated condition: the bracket built from (x, a, y) is value != 0

    For a CL-algebra check a is the basis vector e_i that generates
    [x, L] or [L, x]; for a CL-element check it is the element itself.
    """

    def __init__(self, x, condition, a, y, value):
        self.x = x
        self.condition = condition
        self.a = a
        self.y = y
        self.value = value

    def evaluate(self, L):
        """Recompute the offending bracket"""
        if self.condition == 1:
            return L.bracket(L.bracket(self.x, self.a), self.y)
        if self.condition == 2:
            return L.bracket(L.bracket(self.a, self.x), self.y)
        return L.bracket(self.y, L.bracket(self.a, self.x))

    def describe(self):
        x, a, y = self.x.render(), self.a.render(), self.y.render()
        forms = {1: f"[[{x}, {a}], {y}]", 2: f"[[{a}, {x}], {y}]", 3: f"[{y}, [{a}, {x}]]"}
        return f"condition ({self.condition}): {forms[self.condition]} = {self.value.render()}"

    def to_dict(self):
        return {
            "x": self.x.to_strings(),
            "condition": self.condition,
            "a": self.a.to_strings(),
            "y": self.y.to_strings(),
            "value": self.value.to_strings(),
        }


class CLConditions:
    """Per-condition outcome of cl_check_at for one element x"""

    def __init__(self, x, centralizer_space, witnesses):
        self.x = x
        self.centralizer = centralizer_space
        self.witnesses = witnesses

    def holds(self, condition):
        return condition not in self.witnesses

    @property
    def condition_1(self):
        return self.holds(1)

    @property
    def condition_2(self):
        return self.holds(2)

    @property
    def condition_3(self):
        return self.holds(3)

    @property
    def left(self):
        return self.condition_1 and self.condition_2

    @property
    def right(self):
        return self.condition_1 and self.condition_3

    @property
    def two_sided(self):
        return self.left and self.condition_3

    def first_failure(self, flavor="two_sided"):
        for condition in FLAVOR_CONDITIONS[flavor]:
            if condition in self.witnesses:
                return self.witnesses[condition]
        return None


def cl_check_at(L, x):
    """
    Evaluate the three CL-conditions at one element x

    [x, L] and [L, x] are spanned by the brackets of x with the basis, so the
    conditions are checked on those generators against the basis of C_L(x).

    Args:
        L: LeibnizAlgebra
        x: Vector

    Returns:
        CLConditions: Booleans per condition with the first witness of each
    """
    C = centralizer(L, x)
    ys = C.vectors()
    witnesses = {}
    for e in L.basis():
        right_product = L.bracket(x, e)
        left_product = L.bracket(e, x)
        for y in ys:
            if 1 not in witnesses:
                value = L.bracket(right_product, y)
                if not value.is_zero():
                    witnesses[1] = CLWitness(x, 1, e, y, value)
            if 2 not in witnesses:
                value = L.bracket(left_product, y)
                if not value.is_zero():
                    witnesses[2] = CLWitness(x, 2, e, y, value)
            if 3 not in witnesses:
                value = L.bracket(y, left_product)
                if not value.is_zero():
                    witnesses[3] = CLWitness(x, 3, e, y, value)
        if len(witnesses) == 3:
            break
    return CLConditions(x, C, witnesses)


class CLVerdict:
    """
    Result of is_cl over a selection

    Args:
        passed: Whether every selected x satisfied the flavor's conditions
        flavor: "left", "right" or "two_sided"
        selection: The XSelection that was used
        checked: Number of elements x examined
        witness: First CLWitness in selection order, on failure
    """

    def __init__(self, passed, flavor, selection, checked, witness=None):
        self.passed = passed
        self.flavor = flavor
        self.selection = selection
        self.checked = checked
        self.witness = witness

    def __bool__(self):
        return self.passed

    @property
    def label(self):
        return "pass" if self.passed else "fail"

    def to_dict(self):
        data = {
            "verdict": self.label,
            "flavor": self.flavor,
            "selection": self.selection.to_dict(),
            "checked": self.checked,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def is_cl(L, sel, flavor="two_sided"):
    """
    Check the CL-conditions for every x of a selection

    A pass means "CL-verified on this selection", not a proof for all x.

    Args:
        L: LeibnizAlgebra
        sel: XSelection
        flavor: "left", "right" or "two_sided"

    Returns:
        CLVerdict: pass, or the first failing witness in selection order
    """
    if flavor not in CL_FLAVORS:
        raise ValueError(f"unknown CL flavor {flavor!r}")
    xs = sel.vectors(L)
    for count, x in enumerate(xs, start=1):
        witness = cl_check_at(L, x).first_failure(flavor)
        if witness is not None:
            return CLVerdict(False, flavor, sel, count, witness)
    return CLVerdict(True, flavor, sel, len(xs))


class CLElementReport:
    """Outcome of cl_element_check for one element a"""

    def __init__(self, element, passed, selection, checked, witness=None):
        self.element = element
        self.passed = passed
        self.selection = selection
        self.checked = checked
        self.witness = witness

    def __bool__(self):
        return self.passed

    def to_dict(self):
        data = {
            "element": self.element.to_strings(),
            "verdict": "pass" if self.passed else "fail",
            "selection": self.selection.to_dict(),
            "checked": self.checked,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def cl_element_check(L, a, sel):
    """
    Check [[x,a],y] = [[a,x],y] = [y,[a,x]] = 0 for x in sel, y in C_L(x)

    Args:
        L: LeibnizAlgebra
        a: Vector, the candidate CL-element
        sel: XSelection

    Returns:
        CLElementReport: pass, or the first witness in selection order
    """
    if a.dim != L.dim:
        raise DimensionMismatch(f"element of length {a.dim} in a {L.dim}-dimensional algebra")
    xs = sel.vectors(L)
    for count, x in enumerate(xs, start=1):
        xa = L.bracket(x, a)
        ax = L.bracket(a, x)
        if xa.is_zero() and ax.is_zero():
            continue
        for y in centralizer(L, x).vectors():
            for condition, value in (
                (1, L.bracket(xa, y)),
                (2, L.bracket(ax, y)),
                (3, L.bracket(y, ax)),
            ):
                if not value.is_zero():
                    return CLElementReport(a, False, sel, count, CLWitness(x, condition, a, y, value))
    return CLElementReport(a, True, sel, len(xs))


def cl_element_subspace(L, sel):
    """
    The space S_sel of elements with the CL-property on a selection

    For fixed x and y every condition is linear in a, so S_sel is the null
    space of the stacked condition matrices.

    Args:
        L: LeibnizAlgebra
        sel: XSelection

    Returns:
        tuple: (Subspace S_sel, closure_check) where closure_check says
            whether S_sel is closed under the bracket
    """
    n = L.dim
    basis = L.basis()
    rows = []
    for x in sel.vectors(L):
        right_products = [L.bracket(x, e) for e in basis]
        left_products = [L.bracket(e, x) for e in basis]
        if all(v.is_zero() for v in right_products + left_products):
            continue
        for y in centralizer(L, x).vectors():
            blocks = (
                [L.bracket(v, y) for v in right_products],
                [L.bracket(v, y) for v in left_products],
                [L.bracket(y, v) for v in left_products],
            )
            for columns in blocks:
                for r in range(n):
                    row = tuple(col[r] for col in columns)
                    if not all(s.is_zero() for s in row):
                        rows.append(row)
    S = null_space(Matrix(rows, cols=n, field=L.field))
    return S, subspace_role(L, S, "subalgebra")


def cl_element_space_is_cl(L, sel):
    """
    Run is_cl on the algebra (S_sel, [,]) in its own basis

    Raises:
        NotSubalgebra: If S_sel is not closed under the bracket
    """
    S, closed = cl_element_subspace(L, sel)
    if not closed:
        raise NotSubalgebra(f"CL-element space {S.render()} is not a subalgebra")
    return is_cl(restrict(L, S), XSelection.basis())

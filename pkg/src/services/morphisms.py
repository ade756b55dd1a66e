"""
Algebra morphisms and finite group actions

Linear maps are matrices acting on coordinate columns. A finite group acts on
an algebra through an explicit list of matrices plus a multiplication table.
"""
from src.core.errors import DimensionMismatch, InvalidAction, NotCLElement, NotIsomorphism
from src.core.linalg import Matrix
from src.services.centralizers import cl_element_check, centralizer


class LinearMap:
    """
    Linear map K^source_dim -> K^target_dim

    Args:
        matrix: Matrix of shape (target_dim, source_dim); column j is f(e_j)
    """

    def __init__(self, matrix):
        self.matrix = matrix
        self.target_dim, self.source_dim = matrix.shape

    @classmethod
    def identity(cls, n, field):
        return cls(Matrix.identity(n, field))

    @classmethod
    def zero(cls, target_dim, source_dim, field):
        return cls(Matrix.zero(target_dim, source_dim, field))

    @property
    def field(self):
        return self.matrix.field

    def apply(self, x):
        return self.matrix.apply(x)

    def image(self, U):
        return U.image(self.matrix)

    def compose(self, other):
        """self after other"""
        return LinearMap(self.matrix @ other.matrix)

    def is_invertible(self):
        return self.source_dim == self.target_dim and self.matrix.rank() == self.source_dim

    def __repr__(self):
        return f"LinearMap({self.source_dim} -> {self.target_dim})"


class MorphismResult:
    """
    Outcome of morphism_check

    kind is "not_morphism", "morphism" or "isomorphism"; a failing basis pair
    (i, j) is kept in witness.
    """

    def __init__(self, kind, witness=None):
        self.kind = kind
        self.witness = witness

    @property
    def is_morphism(self):
        return self.kind != "not_morphism"

    @property
    def is_isomorphism(self):
        return self.kind == "isomorphism"

    def to_dict(self):
        data = {"kind": self.kind}
        if self.witness is not None:
            data["witness"] = [f"e{i + 1}" for i in self.witness]
        return data


def morphism_check(f, L1, L2):
    """
    Decide whether f([x, y]) = [f x, f y]

    Checking the basis pairs suffices by bilinearity.

    Args:
        f: LinearMap from L1 to L2
        L1: LeibnizAlgebra, the source
        L2: LeibnizAlgebra, the target

    Returns:
        MorphismResult: not_morphism with a witness, morphism or isomorphism
    """
    if (f.source_dim, f.target_dim) != (L1.dim, L2.dim):
        raise DimensionMismatch(
            f"map {f.source_dim} -> {f.target_dim} does not fit algebras {L1.dim} -> {L2.dim}"
        )
    basis = L1.basis()
    images = [f.apply(e) for e in basis]
    for i, ei in enumerate(basis):
        for j, ej in enumerate(basis):
            if f.apply(L1.bracket(ei, ej)) != L2.bracket(images[i], images[j]):
                return MorphismResult("not_morphism", (i, j))
    return MorphismResult("isomorphism" if f.is_invertible() else "morphism")


def _require_isomorphism(f, L1, L2):
    if not morphism_check(f, L1, L2).is_isomorphism:
        raise NotIsomorphism("the map is not an isomorphism of Leibniz algebras")


def centralizer_transport_check(f, L1, L2, xs):
    """
    Check f(C_L1(x)) = C_L2(f(x)) for every x in xs

    Raises:
        NotIsomorphism: If f is not an algebra isomorphism
    """
    _require_isomorphism(f, L1, L2)
    return all(f.image(centralizer(L1, x)) == centralizer(L2, f.apply(x)) for x in xs)


def cl_element_transport_check(f, L1, L2, a, sel):
    """
    Check that f(a) is a CL-element of L2 on the image selection f(sel)

    Returns:
        bool: True when a fails in L1 (nothing to transport) or f(a) passes

    Raises:
        NotIsomorphism: If f is not an algebra isomorphism
    """
    _require_isomorphism(f, L1, L2)
    if not cl_element_check(L1, a, sel).passed:
        return True
    return cl_element_check(L2, f.apply(a), sel.image(f, L1)).passed


class FiniteGroupAction:
    """
    Finite group acting on K^n by the matrices psi_g

    Args:
        elements: List of n x n Matrix
        identity_index: Index of the group identity in elements
        table: table[i][j] = index of elements[i] * elements[j]
    """

    def __init__(self, elements, identity_index, table):
        self.elements = list(elements)
        self.identity_index = identity_index
        self.table = [list(row) for row in table]

    @classmethod
    def from_matrices(cls, elements):
        """
        Derive identity and multiplication table from the matrices

        Raises:
            InvalidAction: If the set is not closed under products or lacks
                the identity
        """
        if not elements:
            raise InvalidAction("an action needs at least one element")
        n = elements[0].n_rows
        field = elements[0].field
        index = {m: k for k, m in enumerate(elements)}
        identity = Matrix.identity(n, field)
        if identity not in index:
            raise InvalidAction("the identity matrix is missing")
        table = []
        for i, g in enumerate(elements):
            row = []
            for j, h in enumerate(elements):
                product = g @ h
                if product not in index:
                    raise InvalidAction(f"product g{i} g{j} is not in the set (not closed)")
                row.append(index[product])
            table.append(row)
        return cls(elements, index[identity], table)

    @classmethod
    def trivial(cls, n, field):
        return cls([Matrix.identity(n, field)], 0, [[0]])

    @property
    def order(self):
        return len(self.elements)

    @property
    def dim(self):
        return self.elements[0].n_rows if self.elements else 0

    def act(self, g, x):
        return self.elements[g].apply(x)

    def __repr__(self):
        return f"FiniteGroupAction(order={self.order}, dim={self.dim})"


class ActionReport:
    """
    Per-condition outcome of validate_action

    conditions maps "linear", "identity", "compatible" and "automorphism" to
    True or to a witness dict describing the first violation.
    """

    CONDITIONS = ("linear", "identity", "compatible", "automorphism")

    def __init__(self, conditions):
        self.conditions = conditions

    @property
    def passed(self):
        return all(value is True for value in self.conditions.values())

    def __bool__(self):
        return self.passed

    def failures(self):
        return {name: value for name, value in self.conditions.items() if value is not True}

    def to_dict(self):
        return {
            "verdict": "pass" if self.passed else "fail",
            "conditions": {
                name: "pass" if value is True else value for name, value in self.conditions.items()
            },
        }


def validate_action(L, action):
    """
    Check the defining conditions of a group action by automorphisms

    Returns:
        ActionReport: linearity, identity, compatibility with the
            multiplication table and the automorphism condition
    """
    n = L.dim
    conditions = {}

    linear = True
    for g, m in enumerate(action.elements):
        if m.shape != (n, n) or m.field != L.field:
            linear = {"g": g, "reason": f"matrix of shape {m.shape[0]}x{m.shape[1]} over {m.field}"}
            break
        if m.rank() != n:
            linear = {"g": g, "reason": "matrix is not invertible"}
            break
    conditions["linear"] = linear

    identity = True
    if not 0 <= action.identity_index < action.order:
        identity = {"g": action.identity_index, "reason": "identity index out of range"}
    elif linear is True and action.elements[action.identity_index] != Matrix.identity(n, L.field):
        identity = {"g": action.identity_index, "reason": "element is not the identity matrix"}
    conditions["identity"] = identity

    compatible = True
    if len(action.table) != action.order or any(len(row) != action.order for row in action.table):
        compatible = {"reason": "multiplication table has the wrong shape"}
    elif linear is True:
        for i, g in enumerate(action.elements):
            for j, h in enumerate(action.elements):
                k = action.table[i][j]
                if not 0 <= k < action.order or g @ h != action.elements[k]:
                    compatible = {"g1": i, "g2": j, "claimed": k}
                    break
            if compatible is not True:
                break
    conditions["compatible"] = compatible

    automorphism = True
    if linear is True:
        for g, m in enumerate(action.elements):
            result = morphism_check(LinearMap(m), L, L)
            if not result.is_morphism:
                i, j = result.witness
                automorphism = {"g": g, "x": f"e{i + 1}", "y": f"e{j + 1}"}
                break
    else:
        automorphism = {"reason": "skipped: elements are not invertible maps of L"}
    conditions["automorphism"] = automorphism
    return ActionReport(conditions)


def _require_valid(L, action):
    report = validate_action(L, action)
    if not report.passed:
        raise InvalidAction(f"action fails: {', '.join(report.failures())}")


def centralizer_action_map(L, action, g, x):
    """
    Check that y -> g y maps C_L(x) onto C_L(g x)

    Raises:
        InvalidAction: If the action does not validate
    """
    _require_valid(L, action)
    return centralizer(L, x).image(action.elements[g]) == centralizer(L, action.act(g, x))


def orbit(action, a):
    """Distinct images g a in group order"""
    seen = []
    for g in range(action.order):
        image = action.act(g, a)
        if image not in seen:
            seen.append(image)
    return seen


def action_cl_preservation(L, action, a, sel):
    """
    Check that every g a is again a CL-element on the selection

    Raises:
        InvalidAction: If the action does not validate
        NotCLElement: If a itself fails cl_element_check
    """
    _require_valid(L, action)
    if not cl_element_check(L, a, sel).passed:
        raise NotCLElement(f"{a.render()} is not a CL-element on {sel.describe()}")
    return all(cl_element_check(L, image, sel).passed for image in orbit(action, a))


class EquivariantResult:
    """Outcome of equivariant_check; witness is the first non-commuting g"""

    def __init__(self, passed, witness=None):
        self.passed = passed
        self.witness = witness

    def __bool__(self):
        return self.passed


def equivariant_check(f, action):
    """
    Check f(g x) = g f(x) for all g, i.e. f commutes with every psi_g

    Raises:
        DimensionMismatch: If f is not an endomap of the carrier space
    """
    if (f.source_dim, f.target_dim) != (action.dim, action.dim):
        raise DimensionMismatch(f"map {f.source_dim} -> {f.target_dim} on a {action.dim}-dimensional carrier")
    for g, m in enumerate(action.elements):
        if f.matrix @ m != m @ f.matrix:
            return EquivariantResult(False, g)
    return EquivariantResult(True)


def equivariant_cl_preservation(L, action, f, a, sel):
    """
    Check that f(g a) is a CL-element for every g

    f must be an equivariant automorphism of L; the images are checked on
    the transported selection f(sel).

    Raises:
        NotIsomorphism: If f is not an automorphism of L
        NotCLElement: If a is not a CL-element on the selection
    """
    _require_isomorphism(f, L, L)
    if not equivariant_check(f, action).passed:
        raise InvalidAction("the map does not commute with the action")
    if not action_cl_preservation(L, action, a, sel):
        return False
    moved = sel.image(f, L)
    return all(cl_element_check(L, f.apply(image), moved).passed for image in orbit(action, a))

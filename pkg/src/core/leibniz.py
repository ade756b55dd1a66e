"""
Leibniz algebras given by structure constants

An algebra of dimension n is stored as the tensor c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k (0-based internally). This module evaluates
brackets, checks the Leibniz identity, computes the lower central and derived
series, the squares ideal, the derived bracket of a differential Lie algebra
and the transport of a table along a change of basis.
"""
from src.core.errors import (
    DimensionMismatch,
    LeibnizIdentityViolation,
    MixedFieldError,
    NotDerivation,
    NotDifferential,
    NotLie,
    NotSubalgebra,
    SingularMatrix,
)
from src.core.linalg import (
    Matrix,
    Subspace,
    Vector,
    is_subspace_of,
    span,
    subspace_sum,
)
from src.core.scalars import FIELD_Q, Scalar

SUBSPACE_ROLES = ("subalgebra", "left_ideal", "right_ideal", "ideal")


class StructureTable:
    """
    Structure constants of a bilinear bracket

    Args:
        dim: Dimension n of the algebra
        field: Field tag shared by every constant
        constants: Nested n x n x n sequence of Scalar
    """

    __slots__ = ("dim", "field", "c", "nonzero")

    def __init__(self, dim, field, constants):
        self.dim = dim
        self.field = field
        self.c = tuple(tuple(tuple(Scalar.of(s, field) for s in row) for row in plane)
                       for plane in constants)
        if len(self.c) != dim or any(len(p) != dim or any(len(r) != dim for r in p) for p in self.c):
            raise DimensionMismatch(f"structure constants must form a {dim}x{dim}x{dim} array")
        self.nonzero = tuple(
            (i, j, k, s)
            for i, plane in enumerate(self.c)
            for j, row in enumerate(plane)
            for k, s in enumerate(row)
            if not s.is_zero()
        )

    @classmethod
    def zero(cls, dim, field=FIELD_Q):
        zero = Scalar.zero(field)
        return cls(dim, field, [[[zero] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_brackets(cls, dim, field, brackets):
        """
        Build a table from its nonzero products

        Args:
            dim: Dimension
            field: Field tag
            brackets: Mapping (i, j) -> {k: value} with 0-based indices;
                values may be ints, Fractions, sympy Rationals or Scalars

        Returns:
            StructureTable: The table, zero everywhere else
        """
        zero = Scalar.zero(field)
        constants = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), result in brackets.items():
            for k, value in result.items():
                if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                    raise DimensionMismatch(f"index out of range in bracket ({i}, {j}) -> {k}")
                constants[i][j][k] = Scalar.of(value, field)
        return cls(dim, field, constants)

    def product(self, i, j):
        """Coordinates of [e_i, e_j]"""
        return Vector._trusted(self.c[i][j], self.field)

    def products(self):
        """Nonzero products as an ordered mapping (i, j) -> Vector"""
        out = {}
        for i, j, _, _ in self.nonzero:
            if (i, j) not in out:
                out[(i, j)] = self.product(i, j)
        return out

    def substitute(self, value):
        """Instantiate every Q(a) constant at a parameter value"""
        if self.field == FIELD_Q:
            return self
        return StructureTable(
            self.dim,
            FIELD_Q,
            [[[s.substitute(value) for s in row] for row in plane] for plane in self.c],
        )

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return self.dim == other.dim and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.field, self.c))

    def __repr__(self):
        return f"StructureTable(dim={self.dim}, field={self.field}, nonzero={len(self.nonzero)})"


class IdentityVerdict:
    """
    Outcome of validate_leibniz

    On failure, witness holds the 0-based basis triple (i, j, k) and lhs/rhs
    the two evaluated sides of the identity.
    """

    def __init__(self, passed, witness=None, lhs=None, rhs=None):
        self.passed = passed
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs

    def __bool__(self):
        return self.passed

    def to_dict(self):
        if self.passed:
            return {"verdict": "pass"}
        return {
            "verdict": "fail",
            "witness": [f"e{i + 1}" for i in self.witness],
            "lhs": self.lhs.to_strings(),
            "rhs": self.rhs.to_strings(),
        }


class LeibnizAlgebra:
    """
    Algebra with a bilinear bracket given by a StructureTable

    Args:
        table: StructureTable
        name: Optional display name
        leibniz_checked: True once validate_leibniz has passed on the table
    """

    def __init__(self, table, name=None, leibniz_checked=False):
        self.table = table
        self.name = name
        self.leibniz_checked = leibniz_checked

    @classmethod
    def validated(cls, table, name=None):
        """
        Build an algebra after checking the Leibniz identity

        Raises:
            LeibnizIdentityViolation: With the failing basis triple
        """
        verdict = validate_leibniz(table)
        if not verdict.passed:
            raise LeibnizIdentityViolation(verdict)
        return cls(table, name=name, leibniz_checked=True)

    @property
    def dim(self):
        return self.table.dim

    @property
    def field(self):
        return self.table.field

    def basis(self):
        return [Vector.basis(i, self.dim, self.field) for i in range(self.dim)]

    def vector(self, values):
        return Vector.of(values, self.field)

    def zero_vector(self):
        return Vector.zero(self.dim, self.field)

    def full_space(self):
        return Subspace.full(self.dim, self.field)

    def zero_space(self):
        return Subspace.zero(self.dim, self.field)

    def _check_vector(self, v):
        if v.dim != self.dim:
            raise DimensionMismatch(f"vector of length {v.dim} in a {self.dim}-dimensional algebra")
        if v.field != self.field:
            raise MixedFieldError(f"{v.field} vector in a {self.field} algebra")

    def bracket(self, x, y):
        """[x, y] computed from the nonzero structure constants"""
        self._check_vector(x)
        self._check_vector(y)
        xs, ys = x.entries, y.entries
        out = list(Scalar.zero(self.field) for _ in range(self.dim))
        touched = False
        for i, j, k, c in self.table.nonzero:
            xi = xs[i]
            if xi.is_zero():
                continue
            yj = ys[j]
            if yj.is_zero():
                continue
            out[k] = out[k] + xi * yj * c
            touched = True
        if not touched:
            return Vector.zero(self.dim, self.field)
        return Vector._trusted(tuple(out), self.field)

    def right_multiplication(self, x):
        """Matrix R with R y = [x, y]"""
        self._check_vector(x)
        rows = [[Scalar.zero(self.field)] * self.dim for _ in range(self.dim)]
        for i, j, k, c in self.table.nonzero:
            if not x.entries[i].is_zero():
                rows[k][j] = rows[k][j] + x.entries[i] * c
        return Matrix(rows, cols=self.dim, field=self.field)

    def left_multiplication(self, x):
        """Matrix M with M y = [y, x]"""
        self._check_vector(x)
        rows = [[Scalar.zero(self.field)] * self.dim for _ in range(self.dim)]
        for i, j, k, c in self.table.nonzero:
            if not x.entries[j].is_zero():
                rows[k][i] = rows[k][i] + x.entries[j] * c
        return Matrix(rows, cols=self.dim, field=self.field)

    def substitute(self, value, name=None):
        """Instantiate a Q(a) algebra at a parameter value"""
        return LeibnizAlgebra(self.table.substitute(value), name=name or self.name,
                              leibniz_checked=self.leibniz_checked)

    def __repr__(self):
        label = self.name or "unnamed"
        return f"LeibnizAlgebra({label}, dim={self.dim}, field={self.field})"


def bracket(L, x, y):
    """
    Evaluate [x, y] in L

    Raises:
        DimensionMismatch: If x or y has the wrong length
        MixedFieldError: If x or y lives in another field
    """
    return L.bracket(x, y)


def validate_leibniz(t):
    """
    Check [x,[y,z]] = [[x,y],z] - [[x,z],y] on every basis triple

    By trilinearity the basis triples decide the identity on all of L.

    Args:
        t: StructureTable

    Returns:
        IdentityVerdict: pass, or the first failing triple with both sides
    """
    L = LeibnizAlgebra(t)
    basis = L.basis()
    products = [[L.bracket(ei, ej) for ej in basis] for ei in basis]
    for i, x in enumerate(basis):
        for j in range(t.dim):
            for k in range(t.dim):
                lhs = L.bracket(x, products[j][k])
                rhs = L.bracket(products[i][j], basis[k]) - L.bracket(products[i][k], basis[j])
                if lhs != rhs:
                    return IdentityVerdict(False, (i, j, k), lhs, rhs)
    return IdentityVerdict(True)


def bracket_span(L, U, V):
    """
    The subspace [U, V] spanned by brackets of basis vectors

    Args:
        L: LeibnizAlgebra
        U: Subspace
        V: Subspace

    Returns:
        Subspace: span{[u, v] : u in basis(U), v in basis(V)}
    """
    for S in (U, V):
        if S.ambient_dim != L.dim:
            raise DimensionMismatch(f"subspace of K^{S.ambient_dim} in a {L.dim}-dimensional algebra")
    products = [L.bracket(u, v) for u in U.vectors() for v in V.vectors()]
    return span(products, L.dim, L.field)


def subspace_role(L, U, role):
    """
    Decide whether U is a subalgebra, left ideal, right ideal or ideal

    Args:
        L: LeibnizAlgebra
        U: Subspace
        role: One of "subalgebra", "left_ideal", "right_ideal", "ideal"

    Returns:
        bool: True when U has the requested role
    """
    if role not in SUBSPACE_ROLES:
        raise ValueError(f"unknown subspace role {role!r}")
    if U.ambient_dim != L.dim:
        raise DimensionMismatch(f"subspace of K^{U.ambient_dim} in a {L.dim}-dimensional algebra")
    if role == "subalgebra":
        return is_subspace_of(bracket_span(L, U, U), U)
    full = L.full_space()
    left = role in ("left_ideal", "ideal")
    right = role in ("right_ideal", "ideal")
    if left and not is_subspace_of(bracket_span(L, full, U), U):
        return False
    if right and not is_subspace_of(bracket_span(L, U, full), U):
        return False
    return True


class SeriesResult:
    """
    Terms of a lower central or derived series

    terms[0] is L^1 = L; computation stops once two consecutive terms are
    equal, so the last term repeats the one before it.
    """

    def __init__(self, kind, terms):
        self.kind = kind
        self.terms = terms
        self.stabilized_at = len(terms) - 1
        self.step = next((k + 1 for k, term in enumerate(terms) if term.is_zero()), None)

    @property
    def reaches_zero(self):
        return self.step is not None

    @property
    def verdict(self):
        if self.kind == "lower_central":
            return f"nilpotent ({self.step}-step)" if self.reaches_zero else "not nilpotent"
        return f"solvable (length {self.step})" if self.reaches_zero else "not solvable"

    def dims(self):
        return [term.dim for term in self.terms]

    def to_dict(self):
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "step": self.step,
            "stabilized_at": self.stabilized_at,
            "terms": [term.to_strings() for term in self.terms],
        }


def _series(L, kind, step):
    terms = [L.full_space()]
    while True:
        following = step(terms[-1])
        terms.append(following)
        if following == terms[-2]:
            return SeriesResult(kind, terms)


def lower_central_series(L):
    """
    L^1 = L, L^{k+1} = [L^k, L]

    Returns:
        SeriesResult: Nilpotent with class n when the least n with L^n = 0
            exists (a nonzero abelian algebra is 2-step)
    """
    full = L.full_space()
    return _series(L, "lower_central", lambda term: bracket_span(L, term, full))


def derived_series(L):
    """L^[1] = L, L^[k+1] = [L^[k], L^[k]]; solvable when it reaches 0"""
    return _series(L, "derived", lambda term: bracket_span(L, term, term))


def ideal_closure(L, U):
    """Smallest two-sided ideal containing U"""
    full = L.full_space()
    while True:
        grown = subspace_sum(subspace_sum(U, bracket_span(L, U, full)), bracket_span(L, full, U))
        if grown == U:
            return U
        U = grown


def squares_ideal(L):
    """
    The ideal I generated by all squares [x, x]

    Away from characteristic 2 the squares span the same space as the
    [e_i, e_i] together with the symmetrized products [e_i, e_j] + [e_j, e_i].
    """
    basis = L.basis()
    generators = []
    for i, ei in enumerate(basis):
        generators.append(L.bracket(ei, ei))
        for ej in basis[i + 1:]:
            generators.append(L.bracket(ei, ej) + L.bracket(ej, ei))
    return ideal_closure(L, span(generators, L.dim, L.field))


def is_abelian(L):
    return not L.table.nonzero


def _antisymmetry_witness(table):
    for i in range(table.dim):
        if not table.product(i, i).is_zero():
            return (i, i)
        for j in range(i + 1, table.dim):
            if not (table.product(i, j) + table.product(j, i)).is_zero():
                return (i, j)
    return None


def is_lie(L):
    """True when the bracket is antisymmetric, i.e. L is a Lie algebra"""
    return _antisymmetry_witness(L.table) is None


def derived_bracket(lie_table, d):
    """
    Leibniz algebra of the derived bracket [x, y]_d = [x, d y]

    Args:
        lie_table: StructureTable of a Lie algebra
        d: Square matrix whose j-th column is d(e_j)

    Returns:
        LeibnizAlgebra: The derived-bracket algebra, already validated

    Raises:
        NotLie: If lie_table is not antisymmetric or breaks the identity
        NotDifferential: If d^2 != 0
        NotDerivation: If d[x,y] != [dx,y] + [x,dy] on a basis pair
    """
    lie = LeibnizAlgebra(lie_table)
    n = lie.dim
    verdict = validate_leibniz(lie_table)
    if not verdict.passed:
        raise NotLie("bracket violates the Jacobi identity", verdict.witness)
    witness = _antisymmetry_witness(lie_table)
    if witness is not None:
        raise NotLie("bracket is not antisymmetric", witness)
    if d.shape != (n, n):
        raise DimensionMismatch(f"d must be {n}x{n}, got {d.shape[0]}x{d.shape[1]}")
    basis = lie.basis()
    images = [d.apply(e) for e in basis]
    for i, image in enumerate(images):
        if not d.apply(image).is_zero():
            raise NotDifferential("d does not square to zero", (i,))
    for i in range(n):
        for j in range(n):
            lhs = d.apply(lie.bracket(basis[i], basis[j]))
            rhs = lie.bracket(images[i], basis[j]) + lie.bracket(basis[i], images[j])
            if lhs != rhs:
                raise NotDerivation("d is not a derivation", (i, j))
    constants = [[lie.bracket(basis[i], images[j]).entries for j in range(n)] for i in range(n)]
    return LeibnizAlgebra.validated(StructureTable(n, lie_table.field, constants))


def transport(L, P, name=None):
    """
    Carry L along the change of basis x -> P x

    The new bracket is [u, v]' = P [P^-1 u, P^-1 v], so x -> P x is an
    isomorphism from L onto the result.

    Raises:
        SingularMatrix: If P is not invertible
        DimensionMismatch: If P does not match the dimension of L
    """
    if P.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"P must be {L.dim}x{L.dim}, got {P.shape[0]}x{P.shape[1]}")
    if P.field != L.field:
        raise MixedFieldError(f"{P.field} matrix for a {L.field} algebra")
    try:
        P_inv = P.inverse()
    except SingularMatrix:
        raise SingularMatrix("transport needs an invertible change of basis")
    pulled = [P_inv.apply(e) for e in L.basis()]
    constants = [[P.apply(L.bracket(u, v)).entries for v in pulled] for u in pulled]
    return LeibnizAlgebra(StructureTable(L.dim, L.field, constants), name=name,
                          leibniz_checked=L.leibniz_checked)


def restrict(L, U, name=None):
    """
    The subalgebra U as an algebra in its own RREF basis

    Raises:
        NotSubalgebra: If [U, U] is not contained in U
    """
    if not subspace_role(L, U, "subalgebra"):
        raise NotSubalgebra(f"{U.render()} is not closed under the bracket")
    vectors = U.vectors()
    constants = []
    for u in vectors:
        plane = []
        for v in vectors:
            product = L.bracket(u, v)
            # coordinates in an RREF basis are read off at the pivot columns
            plane.append([product[p] for p in U.pivots])
        constants.append(plane)
    return LeibnizAlgebra(StructureTable(U.dim, L.field, constants), name=name,
                          leibniz_checked=L.leibniz_checked)


def is_nilpotent_ideal(L, P):
    """An ideal P is nilpotent when it is nilpotent as a Leibniz algebra"""
    if not subspace_role(L, P, "ideal"):
        return False
    return lower_central_series(restrict(L, P)).reaches_zero

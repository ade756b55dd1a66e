"""
Exact linear algebra over a Scalar field

Vectors, matrices and subspaces of the coordinate space K^n, where K is Q or
Q(a). Subspaces are always stored by their reduced row-echelon basis, which
makes equality of subspaces a comparison of bases. Elimination, kernels,
determinants and inverses run on sympy DomainMatrix over the field's domain.
"""
from sympy.polys.matrices import DomainMatrix

from src.core.errors import DimensionMismatch, MixedFieldError, SingularMatrix
from src.core.scalars import Scalar, domain_of


def _to_domain(rows, n_cols, field):
    rows = [[s.value for s in r] for r in rows]
    return DomainMatrix(rows, (len(rows), n_cols), domain_of(field))


def _from_domain(dm, field):
    return [tuple(Scalar._wrap(x, field) for x in row) for row in dm.to_list()]


def _common_field(scalars, field=None):
    for s in scalars:
        if field is None:
            field = s.field
        elif s.field != field:
            raise MixedFieldError(f"cannot mix {field} and {s.field} entries")
    return field


class Vector:
    """
    Coordinate vector in the basis e1, ..., en

    Args:
        entries: Iterable of Scalar, all in one field
        field: Field tag, required only for the empty vector
    """

    __slots__ = ("entries", "field")

    def __init__(self, entries, field=None):
        self.entries = tuple(entries)
        self.field = _common_field(self.entries, field)

    @classmethod
    def _trusted(cls, entries, field):
        vector = cls.__new__(cls)
        vector.entries = entries
        vector.field = field
        return vector

    @classmethod
    def zero(cls, dim, field):
        zero = Scalar.zero(field)
        return cls._trusted((zero,) * dim, field)

    @classmethod
    def basis(cls, index, dim, field):
        """Standard basis vector e_{index+1} (index is 0-based)"""
        zero, one = Scalar.zero(field), Scalar.one(field)
        return cls._trusted(tuple(one if k == index else zero for k in range(dim)), field)

    @classmethod
    def of(cls, values, field):
        """Build a vector from ints, Fractions, sympy Rationals or Scalars"""
        return cls._trusted(tuple(Scalar.of(v, field) for v in values), field)

    @property
    def dim(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def _check(self, other):
        if len(self.entries) != len(other.entries):
            raise DimensionMismatch(f"vector lengths {len(self.entries)} and {len(other.entries)} differ")
        if self.field != other.field:
            raise MixedFieldError(f"cannot combine {self.field} and {other.field} vectors")

    def __add__(self, other):
        self._check(other)
        return Vector._trusted(tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other):
        self._check(other)
        return Vector._trusted(tuple(a - b for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self):
        return Vector._trusted(tuple(-a for a in self.entries), self.field)

    def scale(self, factor):
        factor = Scalar.of(factor, self.field)
        return Vector._trusted(tuple(factor * a for a in self.entries), self.field)

    def is_zero(self):
        return all(a.is_zero() for a in self.entries)

    def render(self):
        """Render as a combination of basis vectors, e.g. ``e1 - 2*e3``"""
        parts = []
        for k, coeff in enumerate(self.entries):
            if coeff.is_zero():
                continue
            text = coeff.render()
            name = f"e{k + 1}"
            if text == "1":
                term, negative = name, False
            elif text == "-1":
                term, negative = name, True
            elif text.startswith("-") and " " not in text and "/" not in text:
                term, negative = f"{text[1:]}*{name}", True
            elif " " in text or "/" in text:
                term, negative = f"({text})*{name}", False
            else:
                term, negative = f"{text}*{name}", False
            if not parts:
                parts.append(f"-{term}" if negative else term)
            else:
                parts.append(f" - {term}" if negative else f" + {term}")
        return "".join(parts) if parts else "0"

    def to_strings(self):
        return [a.render() for a in self.entries]

    def __repr__(self):
        return f"Vector({self.to_strings()}, {self.field})"


class Matrix:
    """
    Rectangular grid of scalars

    Args:
        rows: Iterable of rows, each an iterable of Scalar
        cols: Column count, required only when there are no rows
        field: Field tag, required only for empty matrices
    """

    __slots__ = ("rows", "n_rows", "n_cols", "field")

    def __init__(self, rows, cols=None, field=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.n_rows = len(self.rows)
        if self.rows:
            self.n_cols = len(self.rows[0])
            if any(len(r) != self.n_cols for r in self.rows):
                raise DimensionMismatch("matrix rows have different lengths")
        else:
            self.n_cols = cols or 0
        self.field = _common_field((s for r in self.rows for s in r), field)
        if self.field is None:
            raise ValueError("an empty matrix needs an explicit field")

    @classmethod
    def of(cls, rows, field):
        """Build a matrix from nested ints, Fractions, sympy Rationals or Scalars"""
        rows = [[Scalar.of(v, field) for v in row] for row in rows]
        return cls(rows, cols=len(rows[0]) if rows else 0, field=field)

    @classmethod
    def identity(cls, n, field):
        return cls([Vector.basis(i, n, field).entries for i in range(n)], cols=n, field=field)

    @classmethod
    def zero(cls, n_rows, n_cols, field):
        zero = Scalar.zero(field)
        return cls([[zero] * n_cols for _ in range(n_rows)], cols=n_cols, field=field)

    @classmethod
    def from_columns(cls, columns, n_rows, field):
        """Matrix whose j-th column is columns[j]"""
        rows = [[col[i] for col in columns] for i in range(n_rows)]
        return cls(rows, cols=len(columns), field=field)

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def __getitem__(self, index):
        return self.rows[index]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def column(self, j):
        return Vector._trusted(tuple(row[j] for row in self.rows), self.field)

    def columns(self):
        return [self.column(j) for j in range(self.n_cols)]

    def apply(self, vector):
        """Matrix-vector product"""
        if vector.dim != self.n_cols:
            raise DimensionMismatch(f"cannot apply a {self.n_rows}x{self.n_cols} matrix to a length-{vector.dim} vector")
        if vector.field != self.field:
            raise MixedFieldError(f"cannot apply a {self.field} matrix to a {vector.field} vector")
        zero = Scalar.zero(self.field)
        out = []
        for row in self.rows:
            total = zero
            for a, b in zip(row, vector.entries):
                if not a.is_zero() and not b.is_zero():
                    total = total + a * b
            out.append(total)
        return Vector._trusted(tuple(out), self.field)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return self.apply(other)
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.field != other.field:
            raise MixedFieldError(f"cannot multiply {self.field} and {other.field} matrices")
        if not self.n_rows or not other.n_cols or not self.n_cols:
            return Matrix.zero(self.n_rows, other.n_cols, self.field)
        product = self._domain().matmul(other._domain())
        return Matrix(_from_domain(product, self.field), cols=other.n_cols, field=self.field)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                      cols=self.n_cols, field=self.field)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                      cols=self.n_cols, field=self.field)

    def is_zero(self):
        return all(s.is_zero() for row in self.rows for s in row)

    def is_square(self):
        return self.n_rows == self.n_cols

    def _domain(self):
        return _to_domain(self.rows, self.n_cols, self.field)

    def rank(self):
        return len(_echelon(self.rows, self.n_cols, self.field)[1])

    def determinant(self):
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        if not self.n_rows:
            return Scalar.one(self.field)
        return Scalar._wrap(self._domain().det(), self.field)

    def inverse(self):
        """
        Inverse over the scalar field

        Raises:
            SingularMatrix: If the matrix is not invertible
        """
        if not self.is_square():
            raise SingularMatrix("only square matrices can be inverted")
        if self.determinant().is_zero():
            raise SingularMatrix("matrix is singular")
        if not self.n_rows:
            return self
        return Matrix(_from_domain(self._domain().inv(), self.field), cols=self.n_cols, field=self.field)

    def to_strings(self):
        return [[s.render() for s in row] for row in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_strings()}, {self.field})"


def _echelon(rows, n_cols, field):
    """
    Reduced row-echelon form of a list of rows

    Returns:
        tuple: (reduced rows without zero rows, pivot column list)
    """
    rows = list(rows)
    if not rows or not n_cols:
        return [], []
    reduced, pivots = _to_domain(rows, n_cols, field).rref()
    return _from_domain(reduced, field)[:len(pivots)], list(pivots)


def rref(m):
    """
    Reduced row-echelon form of a matrix

    Args:
        m: Matrix

    Returns:
        Matrix: Same shape as m; zero rows are kept at the bottom
    """
    reduced, _ = _echelon(m.rows, m.n_cols, m.field)
    zero = Scalar.zero(m.field)
    padding = [(zero,) * m.n_cols] * (m.n_rows - len(reduced))
    return Matrix(list(reduced) + padding, cols=m.n_cols, field=m.field)


class Subspace:
    """
    Subspace of K^n held by its RREF basis

    Construct through span(), null_space() or the classmethods; the
    constructor assumes its rows are already reduced.
    """

    __slots__ = ("ambient_dim", "field", "rows", "pivots")

    def __init__(self, ambient_dim, field, rows, pivots):
        self.ambient_dim = ambient_dim
        self.field = field
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, ambient_dim, field):
        return cls(ambient_dim, field, (), ())

    @classmethod
    def full(cls, ambient_dim, field):
        return cls(ambient_dim, field, Matrix.identity(ambient_dim, field).rows, range(ambient_dim))

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self):
        """Basis as a Matrix with one basis vector per row"""
        return Matrix(self.rows, cols=self.ambient_dim, field=self.field)

    def vectors(self):
        return [Vector._trusted(r, self.field) for r in self.rows]

    def is_zero(self):
        return not self.rows

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.field, self.rows))

    def __contains__(self, vector):
        return member(vector, self)

    def image(self, matrix):
        """Image of the subspace under a linear map given by a matrix"""
        return span([matrix.apply(v) for v in self.vectors()], matrix.n_rows, self.field)

    def render(self):
        """Angle-bracket notation, e.g. ``⟨e2, e3⟩``"""
        return "⟨" + ", ".join(v.render() for v in self.vectors()) + "⟩" if self.rows else "0"

    def to_strings(self):
        return [[s.render() for s in r] for r in self.rows]

    def __repr__(self):
        return f"Subspace({self.render()}, dim={self.dim}/{self.ambient_dim}, {self.field})"


def _check_pair(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")
    if a.field != b.field:
        raise MixedFieldError(f"cannot combine {a.field} and {b.field} subspaces")


def span(vectors, ambient_dim, field=None):
    """
    Canonical span of a list of vectors

    Args:
        vectors: Iterable of Vector
        ambient_dim: Length every vector must have
        field: Field tag, needed when vectors is empty

    Returns:
        Subspace: The linear span

    Raises:
        DimensionMismatch: If a vector has the wrong length
    """
    vectors = list(vectors)
    for v in vectors:
        if v.dim != ambient_dim:
            raise DimensionMismatch(f"vector of length {v.dim} in a {ambient_dim}-dimensional space")
    if vectors:
        field = field or vectors[0].field
    for v in vectors:
        if v.field != field:
            raise MixedFieldError(f"cannot span {field} and {v.field} vectors together")
    if field is None:
        raise ValueError("the span of no vectors needs an explicit field")
    reduced, pivots = _echelon([v.entries for v in vectors], ambient_dim, field)
    return Subspace(ambient_dim, field, reduced, pivots)


def null_space(m):
    """
    Kernel {v : m v = 0} with its canonical basis

    Args:
        m: Matrix

    Returns:
        Subspace: Subspace of K^cols of dimension cols - rank(m)
    """
    n = m.n_cols
    if not m.n_rows:
        return Subspace.full(n, m.field)
    if not n:
        return Subspace.zero(0, m.field)
    kernel = _from_domain(m._domain().nullspace(), m.field)
    return span([Vector._trusted(r, m.field) for r in kernel], n, m.field)


def subspace_sum(a, b):
    """Canonical sum a + b"""
    _check_pair(a, b)
    reduced, pivots = _echelon(a.rows + b.rows, a.ambient_dim, a.field)
    return Subspace(a.ambient_dim, a.field, reduced, pivots)


def subspace_intersect(a, b):
    """
    Canonical intersection of two subspaces

    Solves sum(l_i a_i) - sum(m_j b_j) = 0 for coefficient vectors (l, m)
    and maps each solution back through the basis of a.
    """
    _check_pair(a, b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim, a.field)
    columns = [Vector._trusted(r, a.field) for r in a.rows] + \
        [-Vector._trusted(r, a.field) for r in b.rows]
    system = Matrix.from_columns(columns, a.ambient_dim, a.field)
    solutions = null_space(system)
    if solutions.is_zero():
        return Subspace.zero(a.ambient_dim, a.field)
    weights = Matrix([r[:a.dim] for r in solutions.rows], cols=a.dim, field=a.field)
    meets = weights @ a.basis
    return span([Vector._trusted(r, a.field) for r in meets.rows], a.ambient_dim, a.field)


def member(v, a):
    """
    Exact membership test v in a

    Raises:
        DimensionMismatch: If v does not live in the ambient space of a
    """
    if v.dim != a.ambient_dim:
        raise DimensionMismatch(f"vector of length {v.dim} tested against a {a.ambient_dim}-dimensional space")
    if v.field != a.field:
        raise MixedFieldError(f"cannot test a {v.field} vector against a {a.field} subspace")
    if v.is_zero():
        return True
    return len(_echelon(a.rows + (v.entries,), a.ambient_dim, a.field)[1]) == a.dim


def subspace_compare(a, b):
    """
    Compare two subspaces by inclusion

    Returns:
        str: "equal", "a_in_b", "b_in_a" or "incomparable"
    """
    _check_pair(a, b)
    if a == b:
        return "equal"
    if all(member(v, b) for v in a.vectors()):
        return "a_in_b"
    if all(member(v, a) for v in b.vectors()):
        return "b_in_a"
    return "incomparable"


def is_subspace_of(a, b):
    return subspace_compare(a, b) in ("equal", "a_in_b")

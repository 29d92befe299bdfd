"""Deterministic exact linear algebra over the rationals.

Matrices are dense Fraction grids; subspaces are kept in reduced
row-echelon form, which is unique, so subspace equality is plain data
comparison.  Everything is a pure value operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vector = tuple[Fraction, ...]


def _as_vector(values) -> Vector:
    return tuple(Fraction(v) for v in values)


class RatMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        grid = tuple(tuple(Fraction(v) for v in row) for row in data)
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        self.data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns, rows: int) -> RatMatrix:
        cols = list(columns)
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(rows)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def transpose(self) -> RatMatrix:
        return RatMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_shape(other)
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_shape(other)
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __mul__(self, scalar) -> RatMatrix:
        c = Fraction(scalar)
        return RatMatrix([[c * v for v in row] for row in self.data])

    __rmul__ = __mul__

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        other_t = other.transpose().data
        return RatMatrix(
            [[_dot(row, col) for col in other_t] for row in self.data]
        )

    def apply(self, v) -> Vector:
        vec = _as_vector(v)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(_dot(row, vec) for row in self.data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    def _check_shape(self, other: RatMatrix) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shapes do not match")

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Unique reduced row-echelon form and its pivot columns."""
    grid = [list(row) for row in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, m.rows) if grid[i][c] != 0), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        inv = 1 / grid[r][c]
        grid[r] = [v * inv for v in grid[r]]
        for i in range(m.rows):
            if i != r and grid[i][c] != 0:
                factor = grid[i][c]
                grid[i] = [v - factor * w for v, w in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return RatMatrix(grid), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient with its unique RREF row basis."""

    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_spanning(cls, ambient: int, vectors) -> Subspace:
        rows = [list(_as_vector(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise ValueError("spanning vector has wrong length")
        if not rows:
            return cls(ambient, ())
        reduced, pivots = rref(RatMatrix(rows))
        return cls(ambient, tuple(reduced.data[: len(pivots)]))

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls.from_spanning(ambient, RatMatrix.identity(ambient).data)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        vec = list(_as_vector(v))
        if len(vec) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if x != 0)
            if vec[pivot] != 0:
                c = vec[pivot]
                vec = [a - c * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)

    def sum_with(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        return Subspace.from_spanning(self.ambient, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        """Canonical basis of the intersection (Zassenhaus-style via a kernel)."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        # columns: basis of self, then negated basis of other; kernel elements
        # (a, b) satisfy sum a_i u_i = sum b_j v_j.
        columns = [list(v) for v in self.basis] + [[-x for x in v] for v in other.basis]
        combined = RatMatrix.from_columns(columns, self.ambient)
        coeffs = nullspace(combined)
        vectors = []
        for coeff in coeffs.basis:
            a = coeff[: self.dim]
            vec = [Fraction(0)] * self.ambient
            for ai, u in zip(a, self.basis):
                if ai != 0:
                    vec = [x + ai * y for x, y in zip(vec, u)]
            vectors.append(vec)
        return Subspace.from_spanning(self.ambient, vectors)

    def _check_ambient(self, other: Subspace) -> None:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")


def nullspace(m: RatMatrix) -> Subspace:
    """Canonical basis of the right kernel {v : Mv = 0}."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for j in free:
        v = [Fraction(0)] * m.cols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.data[r][j]
        vectors.append(v)
    return Subspace.from_spanning(m.cols, vectors)


def column_space(m: RatMatrix) -> Subspace:
    """Canonical basis of the image of M."""
    return Subspace.from_spanning(m.rows, m.transpose().data)


def generalized_nullspace(m: RatMatrix, lam) -> Subspace:
    """Kernel of (M - lam*I)^n, n = ambient dimension.

    The kernel chain stabilizes within n steps, so the loop exits early as
    soon as two consecutive kernels have equal dimension.
    """
    if m.rows != m.cols:
        raise ValueError("generalized nullspace needs a square matrix")
    n = m.rows
    if n == 0:
        return Subspace.zero(0)
    shifted = m - RatMatrix.identity(n) * Fraction(lam)
    power = shifted
    kernel = nullspace(power)
    for _ in range(n - 1):
        power = power @ shifted
        bigger = nullspace(power)
        if bigger.dim == kernel.dim:
            break
        kernel = bigger
    return kernel


def membership(v, u: Subspace) -> bool:
    """True iff v lies in the span of u."""
    return u.contains(v)


def det(m: RatMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    grid = [list(row) for row in m.data]
    n = m.rows
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if grid[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            grid[c], grid[pivot_row] = grid[pivot_row], grid[c]
            sign = -sign
        result *= grid[c][c]
        inv = 1 / grid[c][c]
        for i in range(c + 1, n):
            if grid[i][c] != 0:
                factor = grid[i][c] * inv
                grid[i] = [v - factor * w for v, w in zip(grid[i], grid[c])]
    return result * sign


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    augmented = RatMatrix([list(row) + [1 if i == j else 0 for j in range(n)]
                           for i, row in enumerate(m.data)])
    reduced, pivots = rref(augmented)
    if list(pivots[:n]) != list(range(n)):
        raise ValueError("matrix is singular")
    return RatMatrix([row[n:] for row in reduced.data])


class SpanBuilder:
    """Incrementally grown echelon span, for completions and membership."""

    def __init__(self, ambient: int, vectors=()):
        self.ambient = ambient
        self.rows: list[list[Fraction]] = []
        self.pivot_cols: list[int] = []
        for v in vectors:
            self.add(v)

    def _eliminate(self, v) -> list[Fraction]:
        vec = list(_as_vector(v))
        for row, pc in zip(self.rows, self.pivot_cols):
            if vec[pc] != 0:
                c = vec[pc]
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def contains(self, v) -> bool:
        return all(x == 0 for x in self._eliminate(v))

    def add(self, v) -> bool:
        """Add v to the span; False when v was already inside."""
        vec = self._eliminate(v)
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            return False
        inv = 1 / vec[pivot]
        self.rows.append([x * inv for x in vec])
        self.pivot_cols.append(pivot)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def to_subspace(self) -> Subspace:
        return Subspace.from_spanning(self.ambient, self.rows)


# ---------------------------------------------------------------------------
# Characteristic polynomials and exact rational roots
# ---------------------------------------------------------------------------

def char_poly(m: RatMatrix) -> list[Fraction]:
    """Coefficients of det(tI - M), descending: [1, c1, ..., cn].

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [Fraction(1)]
    aux = RatMatrix.identity(n)
    for k in range(1, n + 1):
        aux = m @ aux
        ck = -aux.trace() / k
        coeffs.append(ck)
        aux = aux + RatMatrix.identity(n) * ck
    return coeffs


def poly_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    """Horner evaluation; coeffs descending."""
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(coeffs: list[Fraction]) -> tuple[list[tuple[Fraction, int]], list[Fraction]]:
    """Rational roots with multiplicities, plus the root-free remainder factor.

    coeffs are descending.  The remainder is [] when the polynomial splits
    completely over the rationals; otherwise it is a polynomial of degree
    >= 2 with no rational roots (descending coefficients, normalized monic
    when the input is monic).
    """
    work = [Fraction(c) for c in coeffs]
    while len(work) > 1 and work[0] == 0:
        work.pop(0)
    if len(work) <= 1:
        return [], []

    roots: list[tuple[Fraction, int]] = []

    # zero roots come off as trailing zero coefficients
    zero_mult = 0
    while len(work) > 1 and work[-1] == 0:
        work.pop()
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))

    if len(work) > 1:
        # clear denominators once; rational roots of any quotient along the
        # way are roots of this integer polynomial, so one candidate set works
        denom_lcm = 1
        for c in work:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in work]
        candidates: list[Fraction] = []
        seen = set()
        for p in _divisors(ints[-1]):
            for q in _divisors(ints[0]):
                for num in (p, -p):
                    cand = Fraction(num, q)
                    if cand not in seen:
                        seen.add(cand)
                        candidates.append(cand)
        candidates.sort()
        for cand in candidates:
            while len(work) > 1 and poly_eval(work, cand) == 0:
                work = _synthetic_div(work, cand)
                _bump(roots, cand)

    if len(work) <= 1:
        return roots, []
    return roots, work


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _synthetic_div(coeffs: list[Fraction], r: Fraction) -> list[Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + r * out[-1])
    return out


def _bump(roots: list[tuple[Fraction, int]], value: Fraction) -> None:
    for i, (r, mult) in enumerate(roots):
        if r == value:
            roots[i] = (r, mult + 1)
            return
    roots.append((value, 1))


def format_univariate(coeffs: list[Fraction], var: str = "t") -> str:
    """Human string for a descending-coefficient polynomial, e.g. 't^2 + 1'."""
    n = len(coeffs) - 1
    parts: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = n - i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) if parts else "0"

"""Degree-preserving derivation actions of a Lie algebra on the graded ring.

An action is specified by the images of the variables alone; the Leibniz
rule extends it uniquely to a k-linear derivation of the whole polynomial
ring.  Lie elements are coordinate vectors on the fixed basis.  Per-degree
matrices are cached per basis element; degrees are independent of each
other, so concurrent readers of a verified action are safe.
"""

from __future__ import annotations

from fractions import Fraction

from .liealg import LieAlgebra, Violation, casimir
from .linalg import RatMatrix
from .poly import AlgebraSignature, Polynomial, monomial_basis, to_coordinates


class DerivationAction:
    """Lie algebra acting on a graded polynomial ring by variable images."""

    __slots__ = ("sig", "lie", "images", "_matrix_cache")

    def __init__(self, sig: AlgebraSignature, lie: LieAlgebra, images):
        """images[j][i] is the polynomial image of variable i under basis element j."""
        self.sig = sig
        self.lie = lie
        rows = tuple(tuple(images[j][i] for i in range(sig.nvars)) for j in range(lie.dim))
        for row in rows:
            for p in row:
                if p.sig != sig:
                    raise ValueError("image polynomial has a different signature")
        self.images = rows
        self._matrix_cache: dict[tuple[int, int], RatMatrix] = {}

    def combined_image(self, x) -> list[Polynomial]:
        """Variable images of the Lie element with coordinates x."""
        out = [Polynomial.zero(self.sig) for _ in range(self.sig.nvars)]
        for j, cj in enumerate(x):
            c = Fraction(cj)
            if c == 0:
                continue
            for i in range(self.sig.nvars):
                out[i] = out[i] + self.images[j][i].scale(c)
        return out


def act(action: DerivationAction, x, f: Polynomial) -> Polynomial:
    """Apply the derivation with Lie coordinates x to f (Leibniz extension)."""
    if f.sig != action.sig:
        raise ValueError("polynomial signature does not match the action")
    images = action.combined_image(x)
    out = Polynomial.zero(action.sig)
    for mono, coeff in f.terms.items():
        for i, e in enumerate(mono.exponents):
            if e == 0 or images[i].is_zero():
                continue
            partial = Polynomial.from_monomial(action.sig, mono.divide_by_var(i), coeff * e)
            out = out + images[i] * partial
    return out


def basis_action_matrix(action: DerivationAction, j: int, d: int) -> RatMatrix:
    """Matrix of basis element X_j on S^d in monomial-basis coordinates (cached)."""
    key = (j, d)
    cached = action._matrix_cache.get(key)
    if cached is not None:
        return cached
    basis = monomial_basis(action.sig, d)
    x = action.lie.basis_vector(j)
    columns = [to_coordinates(act(action, x, Polynomial.from_monomial(action.sig, m)), d)
               for m in basis]
    matrix = RatMatrix.from_columns(columns, len(basis))
    action._matrix_cache[key] = matrix
    return matrix


def action_matrix(action: DerivationAction, x, d: int) -> RatMatrix:
    """Matrix of the Lie element with coordinates x on S^d."""
    n = len(monomial_basis(action.sig, d))
    total = RatMatrix.zeros(n, n)
    for j, cj in enumerate(x):
        c = Fraction(cj)
        if c != 0:
            total = total + basis_action_matrix(action, j, d) * c
    return total


def verify_action(action: DerivationAction) -> Violation | None:
    """Check grading preservation and bracket compatibility on the variables.

    Derivations that agree on the generators of a polynomial ring are equal,
    so checking [rho(X_i), rho(X_j)] = rho([X_i, X_j]) on each variable is
    sound for the whole ring.
    """
    sig, lie = action.sig, action.lie
    for j in range(lie.dim):
        for i in range(sig.nvars):
            image = action.images[j][i]
            if not image.is_homogeneous_of_degree(sig.degrees[i]):
                return Violation(
                    "homogeneity",
                    (lie.labels[j], sig.names[i]),
                    f"image {image} is not homogeneous of degree {sig.degrees[i]}",
                )
    for a in range(lie.dim):
        for b in range(a + 1, lie.dim):
            xa, xb = lie.basis_vector(a), lie.basis_vector(b)
            bracket = lie.bracket(xa, xb)
            for i in range(sig.nvars):
                var = Polynomial.variable(sig, i)
                residual = (
                    act(action, xa, act(action, xb, var))
                    - act(action, xb, act(action, xa, var))
                    - act(action, bracket, var)
                )
                if not residual.is_zero():
                    return Violation(
                        "bracket",
                        (lie.labels[a], lie.labels[b], sig.names[i]),
                        str(residual),
                    )
    return None


def casimir_matrix(action: DerivationAction, d: int) -> RatMatrix:
    """Casimir operator on S^d; commutes with every action matrix.

    Raises NotSemisimple when the Lie algebra has a singular Killing form.
    """
    element = casimir(action.lie)
    n = len(monomial_basis(action.sig, d))
    total = RatMatrix.zeros(n, n)
    for i, j, coeff in element.terms:
        total = total + (basis_action_matrix(action, i, d)
                         @ basis_action_matrix(action, j, d)) * coeff
    return total

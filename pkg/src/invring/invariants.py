"""Invariant spaces per degree and generator extraction for the invariant ring.

The generator sweep walks degrees 1..D: at each degree it spans the products
of previously accepted generators, then completes that span inside the
invariant space, accepting the completion vectors (in canonical basis order)
as new generators.  After every step the generated subalgebra agrees with
the invariants in all degrees processed so far, which is re-assertable
independently.  The same sweep serves the character-selected subalgebras in
`weights` via the `target` callable.

For a semisimple Lie algebra the Casimir operator splits each graded piece
into invariants (its kernel) and a complement (its image); the Reynolds
projection is the equivariant projection onto the kernel along the image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .action import DerivationAction, basis_action_matrix, casimir_matrix
from .errors import SplitFailure
from .linalg import RatMatrix, SpanBuilder, Subspace, column_space, inverse, membership, nullspace
from .poly import AlgebraSignature, Polynomial, from_coordinates, monomial_basis, to_coordinates


def invariants_degree(action: DerivationAction, d: int) -> Subspace:
    """Joint kernel of all basis action matrices on S^d."""
    n = len(monomial_basis(action.sig, d))
    space = Subspace.full(n)
    for j in range(action.lie.dim):
        space = space.intersect(nullspace(basis_action_matrix(action, j, d)))
        if space.dim == 0:
            break
    return space


def normalize_generator(f: Polynomial) -> Polynomial:
    """Scale to primitive integer coefficients with positive leading display term."""
    if f.is_zero():
        return f
    coeffs = list(f.terms.values())
    denom = lcm(*(c.denominator for c in coeffs)) if len(coeffs) > 1 else coeffs[0].denominator
    numer = gcd(*(c.numerator for c in coeffs)) if len(coeffs) > 1 else abs(coeffs[0].numerator)
    scaled = f.scale(Fraction(denom, numer))
    if scaled.sorted_terms()[0][1] < 0:
        scaled = -scaled
    return scaled


@dataclass(frozen=True)
class GeneratorSet:
    """Accepted generators with the per-degree dimension table of the target."""

    generators: tuple[tuple[int, Polynomial], ...]
    dims: tuple[int, ...]  # index d -> dim of the target space in degree d
    max_degree: int
    stable_tail: bool  # no new generators appeared in the last ceil(D/2) degrees

    def polynomials(self) -> list[Polynomial]:
        return [g for _, g in self.generators]


def algebra_generator_sweep(sig: AlgebraSignature, target, max_degree: int) -> GeneratorSet:
    """Degree-ascending generator extraction for a multiplicatively closed target.

    `target(d)` must return the degree-d subspace (in monomial coordinates)
    of a graded subalgebra of S; products of target elements must stay in
    the target, which is asserted along the way.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    gens: list[tuple[int, Polynomial]] = []
    dims = [target(0).dim]
    span_polys: dict[int, list[Polynomial]] = {
        0: [Polynomial.one(sig)] if dims[0] else []
    }
    for d in range(1, max_degree + 1):
        space = target(d)
        dims.append(space.dim)
        n = len(monomial_basis(sig, d))
        builder = SpanBuilder(n)
        for gdeg, g in gens:
            for p in span_polys[d - gdeg]:
                product = g * p
                vec = to_coordinates(product, d)
                assert space.contains(vec), (
                    f"generator product left the target space at degree {d}"
                )
                builder.add(vec)
        for row in space.basis:
            if builder.add(row):
                gens.append((d, normalize_generator(from_coordinates(sig, d, row))))
        assert builder.dim == space.dim
        span_polys[d] = [from_coordinates(sig, d, row) for row in space.basis]
    tail = max_degree - (max_degree + 1) // 2
    stable = all(gdeg <= tail for gdeg, _ in gens)
    return GeneratorSet(tuple(gens), tuple(dims), max_degree, stable)


def invariant_generators(action: DerivationAction, max_degree: int) -> GeneratorSet:
    """Generators of the invariant ring up to the truncation degree."""
    return algebra_generator_sweep(
        action.sig, lambda d: invariants_degree(action, d), max_degree
    )


def complement_Q(action: DerivationAction, d: int) -> Subspace:
    """Image of the Casimir operator on S^d; complements the invariants."""
    q = column_space(casimir_matrix(action, d))
    inv = invariants_degree(action, d)
    n = len(monomial_basis(action.sig, d))
    if inv.intersect(q).dim != 0 or inv.dim + q.dim != n:
        raise SplitFailure(f"Casimir image fails to complement the invariants at degree {d}")
    return q


def reynolds(action: DerivationAction, d: int) -> RatMatrix:
    """Projection onto the invariants of S^d along the Casimir image.

    Satisfies R^2 = R, R . rho(X) = rho(X) . R = 0, rank R = dim invariants.
    """
    c = casimir_matrix(action, d)
    kernel = nullspace(c)
    image = column_space(c)
    n = len(monomial_basis(action.sig, d))
    if kernel != invariants_degree(action, d):
        raise SplitFailure(f"Casimir kernel differs from the invariant space at degree {d}")
    if kernel.intersect(image).dim != 0 or kernel.dim + image.dim != n:
        raise SplitFailure(f"Casimir kernel and image fail to split S^{d}")
    columns = [list(v) for v in kernel.basis] + [list(v) for v in image.basis]
    change = RatMatrix.from_columns(columns, n)
    selector = RatMatrix(
        [[1 if (i == j and i < kernel.dim) else 0 for j in range(n)] for i in range(n)]
    )
    return change @ selector @ inverse(change)


def verify_hilblemma(action: DerivationAction, i: int, j: int) -> bool:
    """Check Q^i . invariants^j lies inside Q^(i+j), basis pair by basis pair."""
    qi = complement_Q(action, i)
    inv_j = invariants_degree(action, j)
    q_total = complement_Q(action, i + j)
    sig = action.sig
    for qrow in qi.basis:
        q = from_coordinates(sig, i, qrow)
        for srow in inv_j.basis:
            s = from_coordinates(sig, j, srow)
            if not membership(to_coordinates(q * s, i + j), q_total):
                return False
    return True

"""Finite-dimensional Lie algebras given by rational structure constants.

The structure tensor c[i][j][k] encodes [X_i, X_j] = sum_k c[i][j][k] X_k.
Verification (antisymmetry + Jacobi) is explicit and returns a report;
every other operation assumes a verified algebra.  Working over an exact
field of characteristic 0 makes Cartan's criterion (nondegenerate Killing
form) a valid semisimplicity test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSemisimple
from .linalg import RatMatrix, Subspace, det, inverse

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Violation:
    """First failed axiom found by a verifier."""

    kind: str
    where: tuple
    residual: str

    def describe(self) -> str:
        return f"{self.kind} violation at {self.where}: residual {self.residual}"


class LieAlgebra:
    """Lie algebra with basis labels and a full structure-constant tensor."""

    __slots__ = ("labels", "structure")

    def __init__(self, labels, structure):
        self.labels = tuple(labels)
        m = len(self.labels)
        tensor = tuple(
            tuple(tuple(Fraction(c) for c in structure[i][j]) for j in range(m))
            for i in range(m)
        )
        for plane in tensor:
            for row in plane:
                if len(row) != m:
                    raise ValueError("structure tensor must be m x m x m")
        self.structure = tensor

    @classmethod
    def from_brackets(cls, labels, brackets) -> LieAlgebra:
        """Build from sparse brackets {(i, j): {k: coeff}} given for i < j.

        Mirror pairs not present are filled by antisymmetry; explicitly
        supplied mirrors are taken literally, so an inconsistent file still
        reaches verify_lie intact.
        """
        labels = tuple(labels)
        m = len(labels)
        tensor = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
        for (i, j), terms in brackets.items():
            for k, coeff in terms.items():
                tensor[i][j][k] = Fraction(coeff)
        for i in range(m):
            for j in range(m):
                if i != j and (i, j) in brackets and (j, i) not in brackets:
                    for k in range(m):
                        tensor[j][i][k] = -tensor[i][j][k]
        return cls(labels, tensor)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, u, v) -> Vector:
        """Bracket of coefficient vectors on the basis."""
        m = self.dim
        out = [Fraction(0)] * m
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                scale = Fraction(ui) * Fraction(vj)
                for k in range(m):
                    c = self.structure[i][j][k]
                    if c != 0:
                        out[k] += scale * c
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def ad(self, i: int) -> RatMatrix:
        """Matrix of ad X_i: column j holds [X_i, X_j]."""
        m = self.dim
        return RatMatrix([[self.structure[i][j][k] for j in range(m)] for k in range(m)])


def verify_lie(lie: LieAlgebra) -> Violation | None:
    """None when antisymmetry and Jacobi hold exactly; else the first violation."""
    m = lie.dim
    for i in range(m):
        for j in range(i, m):
            for k in range(m):
                residual = lie.structure[i][j][k] + lie.structure[j][i][k]
                if residual != 0:
                    return Violation(
                        "antisymmetry",
                        (lie.labels[i], lie.labels[j], lie.labels[k]),
                        str(residual),
                    )
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                ei, ej, ek = (lie.basis_vector(t) for t in (i, j, k))
                total = [
                    a + b + c
                    for a, b, c in zip(
                        lie.bracket(lie.bracket(ei, ej), ek),
                        lie.bracket(lie.bracket(ej, ek), ei),
                        lie.bracket(lie.bracket(ek, ei), ej),
                    )
                ]
                if any(v != 0 for v in total):
                    return Violation(
                        "jacobi",
                        (lie.labels[i], lie.labels[j], lie.labels[k]),
                        "(" + ", ".join(str(v) for v in total) + ")",
                    )
    return None


def derived_series(lie: LieAlgebra) -> list[Subspace]:
    """g, [g,g], [[g,g],[g,g]], ... until the dimension stabilizes."""
    m = lie.dim
    series = [Subspace.full(m)]
    while True:
        current = series[-1]
        vectors = [
            lie.bracket(u, v)
            for a, u in enumerate(current.basis)
            for v in current.basis[a + 1 :]
        ]
        nxt = Subspace.from_spanning(m, vectors)
        if nxt.dim == current.dim:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_solvable(lie: LieAlgebra) -> bool:
    return derived_series(lie)[-1].dim == 0


def killing_form(lie: LieAlgebra) -> RatMatrix:
    """kappa(X_i, X_j) = trace(ad X_i . ad X_j)."""
    ads = [lie.ad(i) for i in range(lie.dim)]
    return RatMatrix(
        [[(ads[i] @ ads[j]).trace() for j in range(lie.dim)] for i in range(lie.dim)]
    )


def is_semisimple(lie: LieAlgebra) -> bool:
    return det(killing_form(lie)) != 0


def commutator_subspace(lie: LieAlgebra) -> Subspace:
    m = lie.dim
    vectors = [
        lie.bracket(lie.basis_vector(i), lie.basis_vector(j))
        for i in range(m)
        for j in range(i + 1, m)
    ]
    return Subspace.from_spanning(m, vectors)


def character_space(lie: LieAlgebra) -> Subspace:
    """Functionals on the basis that vanish on [g, g], dimension m - dim [g,g]."""
    commutator = commutator_subspace(lie)
    if commutator.dim == 0:
        return Subspace.full(lie.dim)
    from .linalg import nullspace

    return nullspace(RatMatrix([list(v) for v in commutator.basis]))


@dataclass(frozen=True)
class CasimirElement:
    """Sum of coeff * X_i (x) X_j terms with coefficient tensor kappa^{-1}."""

    terms: tuple[tuple[int, int, Fraction], ...]


def casimir(lie: LieAlgebra) -> CasimirElement:
    """Casimir element from the inverse Killing form.

    Raises NotSemisimple when the Killing form is singular.
    """
    kappa = killing_form(lie)
    if det(kappa) == 0:
        raise NotSemisimple(
            f"Killing form of <{', '.join(lie.labels)}> is singular; no Casimir element"
        )
    kinv = inverse(kappa)
    terms = [
        (i, j, kinv[i, j])
        for i in range(lie.dim)
        for j in range(lie.dim)
        if kinv[i, j] != 0
    ]
    return CasimirElement(tuple(terms))

"""Sparse multivariate polynomials over exact rationals with weighted grading.

A polynomial is a map from monomials (exponent tuples) to nonzero Fraction
coefficients; the zero polynomial stores no terms.  Every variable carries a
positive integer degree, so each graded piece of the ring is finite
dimensional.  All values here are immutable after construction and all
operations are pure, so they are safe to share across threads.

Monomial bases are ordered by weighted degree, then descending lexicographic
on exponent tuples; this fixes every downstream pivot choice.  Display order
is descending weighted degree, then graded reverse lexicographic, which is
the order a human writes (b^2 - 4*a*c, not -4*a*c + b^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PolyParseError, SignatureMismatch

# weighted_degree() sentinels: the zero polynomial is homogeneous of every
# degree; a polynomial with terms of mixed degree has none.
DEGREE_ANY = "any"
INHOMOGENEOUS = "inhomogeneous"


@dataclass(frozen=True)
class AlgebraSignature:
    """Variable names and their positive weights for a graded polynomial ring."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if not self.names:
            raise ValueError("at least one variable required (S = k is degenerate)")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for name in self.names:
            if not _is_ident(name):
                raise ValueError(f"invalid variable name {name!r}")
        for deg in self.degrees:
            if not isinstance(deg, int) or deg < 1:
                raise ValueError("variable degrees must be integers >= 1")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def _is_ident(s: str) -> bool:
    return s.isidentifier()


@dataclass(frozen=True)
class Monomial:
    """Exponent tuple of a power product, one entry per signature variable."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    def weighted_degree(self, sig: AlgebraSignature) -> int:
        return sum(e * d for e, d in zip(self.exponents, sig.degrees))

    def mul(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divide_by_var(self, i: int) -> Monomial:
        """Monomial with exponent i reduced by one; requires exponents[i] >= 1."""
        e = list(self.exponents)
        if e[i] < 1:
            raise ValueError("variable does not divide monomial")
        e[i] -= 1
        return Monomial(tuple(e))

    def render(self, sig: AlgebraSignature) -> str:
        """Power-product string such as x^2*y; '1' for the constant monomial."""
        factors = []
        for name, e in zip(sig.names, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


def display_key(mono: Monomial, sig: AlgebraSignature) -> tuple:
    # descending weighted degree, then graded-reverse-lex descending
    return (-mono.weighted_degree(sig), tuple(reversed(mono.exponents)))


class Polynomial:
    """Immutable sparse polynomial attached to an AlgebraSignature."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms: dict[Monomial, Fraction]):
        self.sig = sig
        clean = {m: Fraction(c) for m, c in terms.items() if c != 0}
        for m in clean:
            if len(m.exponents) != sig.nvars:
                raise ValueError("monomial arity does not match signature")
        self.terms = clean

    @classmethod
    def zero(cls, sig: AlgebraSignature) -> Polynomial:
        return cls(sig, {})

    @classmethod
    def constant(cls, sig: AlgebraSignature, value) -> Polynomial:
        return cls(sig, {Monomial((0,) * sig.nvars): Fraction(value)})

    @classmethod
    def one(cls, sig: AlgebraSignature) -> Polynomial:
        return cls.constant(sig, 1)

    @classmethod
    def variable(cls, sig: AlgebraSignature, i: int) -> Polynomial:
        exps = [0] * sig.nvars
        exps[i] = 1
        return cls(sig, {Monomial(tuple(exps)): Fraction(1)})

    @classmethod
    def from_monomial(cls, sig: AlgebraSignature, mono: Monomial, coeff=1) -> Polynomial:
        return cls(sig, {mono: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check_sig(self, other: Polynomial) -> None:
        if self.sig != other.sig:
            raise SignatureMismatch("polynomials belong to different signatures")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_sig(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.sig, out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check_sig(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return Polynomial(self.sig, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.sig, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check_sig(other)
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1.mul(m2)
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
            return Polynomial(self.sig, out)
        return self.scale(other)

    def __rmul__(self, other) -> Polynomial:
        return self.scale(other)

    def scale(self, value) -> Polynomial:
        c = Fraction(value)
        return Polynomial(self.sig, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers not defined")
        result = Polynomial.one(self.sig)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def weighted_degree(self):
        """Common weighted degree of all terms.

        Returns DEGREE_ANY for the zero polynomial and INHOMOGENEOUS when
        terms disagree.
        """
        if not self.terms:
            return DEGREE_ANY
        degs = {m.weighted_degree(self.sig) for m in self.terms}
        if len(degs) > 1:
            return INHOMOGENEOUS
        return degs.pop()

    def is_homogeneous_of_degree(self, d: int) -> bool:
        wd = self.weighted_degree()
        return wd == DEGREE_ANY or wd == d

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in display order (descending degree, then grevlex)."""
        return sorted(self.terms.items(), key=lambda t: display_key(t[0], self.sig))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = mono.render(self.sig)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                parts.append(f"-{text}" if sign == "-" else text)
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@lru_cache(maxsize=None)
def monomial_basis(sig: AlgebraSignature, d: int) -> tuple[Monomial, ...]:
    """All monomials of weighted degree exactly d, descending lex order.

    Returns the empty tuple for negative d; degree 0 yields the constant
    monomial alone (the ring has S^0 = k because all variable degrees are
    positive).
    """
    if d < 0:
        return ()
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], i: int, remaining: int) -> None:
        if i == sig.nvars:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        step = sig.degrees[i]
        # descending exponent keeps the whole enumeration in descending lex
        for e in range(remaining // step, -1, -1):
            extend(prefix + [e], i + 1, remaining - e * step)

    extend([], 0, d)
    return tuple(Monomial(e) for e in out)


def to_coordinates(f: Polynomial, d: int) -> list[Fraction]:
    """Coordinate vector of a homogeneous degree-d polynomial in monomial_basis order."""
    if not f.is_homogeneous_of_degree(d):
        raise ValueError(f"polynomial is not homogeneous of degree {d}: {f}")
    basis = monomial_basis(f.sig, d)
    index = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in f.terms.items():
        vec[index[m]] = c
    return vec


def from_coordinates(sig: AlgebraSignature, d: int, vec) -> Polynomial:
    """Inverse of to_coordinates."""
    basis = monomial_basis(sig, d)
    if len(vec) != len(basis):
        raise ValueError("coordinate vector length does not match basis size")
    return Polynomial(sig, {m: Fraction(c) for m, c in zip(basis, vec)})


# ---------------------------------------------------------------------------
# Expression parser
#
#   expr   := term (('+'|'-') term)*
#   term   := coeff ('*' factor)* | factor ('*' factor)*
#   coeff  := integer | integer '/' integer
#   factor := ident ('^' positive-integer)?
#
# Whitespace is insignificant; a unary minus is allowed on the first term.
# ---------------------------------------------------------------------------

_OPS = "+-*/^"


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []  # (kind, value, position)
        self._scan()
        self.cursor = 0

    def _scan(self) -> None:
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("ident", text[i:j], i))
                i = j
                continue
            if ch in _OPS:
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise PolyParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", n))

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.cursor]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.cursor]
        self.cursor += 1
        return tok


def parse_poly(text: str, sig: AlgebraSignature) -> Polynomial:
    """Parse an expression in the grammar above into a canonical Polynomial.

    Raises PolyParseError with the offending position for syntax errors and
    unknown variable names.  parse -> str -> parse is the identity on
    canonical forms.
    """
    toks = _Tokenizer(text)
    result = Polynomial.zero(sig)

    sign = 1
    kind, _, _ = toks.peek()
    if kind == "-":  # unary minus on the first term
        toks.take()
        sign = -1

    while True:
        result = result + _parse_term(toks, sig).scale(sign)
        kind, _, pos = toks.peek()
        if kind == "end":
            return result
        if kind == "+":
            toks.take()
            sign = 1
        elif kind == "-":
            toks.take()
            sign = -1
        else:
            raise PolyParseError("expected '+', '-', or end of expression", pos)


def _parse_term(toks: _Tokenizer, sig: AlgebraSignature) -> Polynomial:
    kind, _, pos = toks.peek()
    coeff = Fraction(1)
    exps = [0] * sig.nvars
    saw_factor = False

    if kind == "int":
        coeff = Fraction(int(toks.take()[1]))
        if toks.peek()[0] == "/":
            toks.take()
            dkind, dval, dpos = toks.take()
            if dkind != "int":
                raise PolyParseError("expected integer denominator", dpos)
            if int(dval) == 0:
                raise PolyParseError("zero denominator", dpos)
            coeff /= int(dval)
    elif kind == "ident":
        _parse_factor(toks, sig, exps)
        saw_factor = True
    else:
        raise PolyParseError("expected a term", pos)

    while toks.peek()[0] == "*":
        toks.take()
        _parse_factor(toks, sig, exps)
        saw_factor = True

    if not saw_factor and all(e == 0 for e in exps) and coeff == 0:
        return Polynomial.zero(sig)
    return Polynomial(sig, {Monomial(tuple(exps)): coeff})


def _parse_factor(toks: _Tokenizer, sig: AlgebraSignature, exps: list[int]) -> None:
    kind, name, pos = toks.take()
    if kind != "ident":
        raise PolyParseError("expected a variable name", pos)
    if name not in sig.names:
        raise PolyParseError(f"unknown variable {name!r}", pos)
    exponent = 1
    if toks.peek()[0] == "^":
        toks.take()
        ekind, evalue, epos = toks.take()
        if ekind != "int" or int(evalue) < 1:
            raise PolyParseError("expected a positive integer exponent", epos)
        exponent = int(evalue)
    exps[sig.index(name)] += exponent

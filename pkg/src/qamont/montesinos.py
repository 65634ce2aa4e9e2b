"""Montesinos link parameters and their normal forms.

A Montesinos link M(e; t1, ..., tp) is described by an integer half-twist
count e and an ordered list of rational tangle parameters.  Each tangle,
written in reduced form alpha/beta with alpha > 0, must have alpha >= 2;
tangles with alpha = 1 degenerate the structure and are rejected outright
rather than silently absorbed.

Two parameter tuples related by slide moves describe isotopic links:

    (e, alpha/beta)  <->  (e + 1, alpha/(beta + alpha)).

The quantity eps = e - sum(beta_i/alpha_i) is a slide invariant; it
controls both the link determinant |alpha_1 ... alpha_p * eps| and which
orientation of the double branched cover bounds a negative definite
plumbing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ParseError

__all__ = [
    "MontesinosLink",
    "StandardForm",
    "tangle_alpha_beta",
    "to_standard_form",
    "reflect",
    "epsilon",
    "determinant",
    "to_negative_form",
    "canonical_form",
    "slide",
    "parse_link",
    "format_link",
]


def tangle_alpha_beta(t: Fraction) -> tuple[int, int]:
    """Write a tangle parameter as alpha/beta with alpha > 0, gcd(alpha, |beta|) = 1."""
    if t > 0:
        return t.numerator, t.denominator
    return -t.numerator, -t.denominator


@dataclass(frozen=True, eq=False)
class MontesinosLink:
    """Raw Montesinos parameters: integer e plus an ordered tangle tuple."""

    e: int
    tangles: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.e, int):
            raise ValueError(f"half-twist count e must be an integer, got {self.e!r}")
        tangles = tuple(Fraction(t) for t in self.tangles)
        if not tangles:
            raise ValueError("a Montesinos link needs at least one tangle")
        for t in tangles:
            alpha, beta = tangle_alpha_beta(t)
            if alpha < 2:
                raise ValueError(
                    f"tangle {t} has alpha = {alpha}; tangles must have alpha >= 2")
            assert beta != 0
        object.__setattr__(self, "tangles", tangles)

    # Equality is by value across the standard-form subclass too.
    def __eq__(self, other):
        if not isinstance(other, MontesinosLink):
            return NotImplemented
        return self.e == other.e and self.tangles == other.tangles

    def __hash__(self):
        return hash((self.e, self.tangles))

    @property
    def p(self) -> int:
        return len(self.tangles)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(tangle_alpha_beta(t)[0] for t in self.tangles)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(tangle_alpha_beta(t)[1] for t in self.tangles)

    def __str__(self) -> str:
        return format_link(self)


@dataclass(frozen=True, eq=False)
class StandardForm(MontesinosLink):
    """A Montesinos link with every tangle > 1, i.e. 0 < beta < alpha."""

    def __post_init__(self):
        super().__post_init__()
        for t in self.tangles:
            if t <= 1:
                raise ValueError(f"tangle {t} is not > 1; not in standard form")


def to_standard_form(link: MontesinosLink) -> StandardForm:
    """Slide each tangle until 0 < beta < alpha, absorbing full twists into e.

    Replacing beta by beta + k*alpha while adding k to e leaves the link
    unchanged, so eps is preserved exactly.
    """
    new_e = link.e
    new_tangles = []
    for t in link.tangles:
        alpha, beta = tangle_alpha_beta(t)
        beta_std = beta % alpha  # nonzero: gcd(alpha, beta) = 1 and alpha >= 2
        new_e += (beta_std - beta) // alpha
        new_tangles.append(Fraction(alpha, beta_std))
    return StandardForm(new_e, tuple(new_tangles))


def reflect(link: StandardForm) -> StandardForm:
    """Mirror image in standard form: M(p - e; alpha_i/(alpha_i - beta_i)).

    Reflection negates eps and is an involution on standard forms.
    """
    _require_standard(link)
    tangles = tuple(Fraction(a, a - b) for a, b in zip(link.alphas, link.betas))
    return StandardForm(link.p - link.e, tangles)


def epsilon(link: MontesinosLink) -> Fraction:
    """The slide invariant e - sum(beta_i/alpha_i)."""
    return Fraction(link.e) - sum(1 / t for t in link.tangles)


def determinant(link: MontesinosLink) -> int:
    """Link determinant |alpha_1 ... alpha_p * eps|; always a nonnegative integer."""
    value = epsilon(link) * prod(link.alphas)
    assert value.denominator == 1
    return abs(value.numerator)


def to_negative_form(link: StandardForm) -> MontesinosLink:
    """Slide every tangle below -1: M(e - p; alpha_i/(beta_i - alpha_i)).

    This is the parameter form from which the star-shaped plumbing graph
    is built; eps is unchanged.
    """
    _require_standard(link)
    tangles = tuple(Fraction(a, b - a) for a, b in zip(link.alphas, link.betas))
    return MontesinosLink(link.e - link.p, tangles)


def canonical_form(link: MontesinosLink) -> StandardForm:
    """Standard form with tangles sorted in non-increasing order.

    Parameter tuples related by slide moves and tangle reordering map to
    equal canonical forms, so this is the deduplication key used by the
    family enumeration.
    """
    std = to_standard_form(link)
    return StandardForm(std.e, tuple(sorted(std.tangles, reverse=True)))


def slide(link: MontesinosLink, index: int, count: int = 1) -> MontesinosLink:
    """Apply ``count`` slide moves to the tangle at ``index``.

    Each move trades a full twist between the tangle and e:
    (e, alpha/beta) -> (e + 1, alpha/(beta + alpha)).
    """
    if not 0 <= index < link.p:
        raise ValueError(f"tangle index {index} out of range 0..{link.p - 1}")
    alpha, beta = tangle_alpha_beta(link.tangles[index])
    tangles = list(link.tangles)
    tangles[index] = Fraction(alpha, beta + count * alpha)
    return MontesinosLink(link.e + count, tuple(tangles))


def _require_standard(link: MontesinosLink) -> None:
    for t in link.tangles:
        if t <= 1:
            raise ValueError(f"operation requires standard form; tangle {t} is not > 1")


# Text grammar: M(e; t1, t2, ...) with tangles written a/b or as integers.

_LINK_RE = re.compile(r"\A\s*M\s*\(\s*(?P<e>[+-]?\d+)\s*;(?P<tangles>[^;]*)\)\s*\Z")
_TANGLE_RE = re.compile(r"\A(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>[+-]?\d+))?\Z")


def parse_link(text: str) -> MontesinosLink:
    """Parse ``M(e; t1, t2, ...)``; raises ParseError naming the offending token."""
    m = _LINK_RE.match(text)
    if not m:
        raise ParseError(
            f"{text.strip()!r} does not match the link grammar M(e; a1/b1, a2/b2, ...)")
    body = m.group("tangles").strip()
    if not body:
        raise ParseError("link expression lists no tangles")
    tangles = []
    for token in body.split(","):
        token = token.strip()
        tm = _TANGLE_RE.match(token)
        if not tm:
            raise ParseError(f"invalid tangle token {token!r}")
        num = int(tm.group("num"))
        den = int(tm.group("den")) if tm.group("den") is not None else 1
        if den == 0:
            raise ParseError(f"invalid tangle token {token!r}: zero denominator")
        tangles.append(Fraction(num, den))
    try:
        return MontesinosLink(int(m.group("e")), tuple(tangles))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_link(link: MontesinosLink) -> str:
    """Print in the same grammar, tangles in reduced form."""
    parts = []
    for t in link.tangles:
        parts.append(str(t.numerator) if t.denominator == 1 else f"{t.numerator}/{t.denominator}")
    return f"M({link.e}; " + ", ".join(parts) + ")"

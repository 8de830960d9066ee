"""Exact dictionary between FIN_k and the delta-net of the positive sphere of c0.

The net consists of finitely supported functions taking values among the
powers (1+delta)^(-e) for e in 0..k-1 and attaining 1 somewhere.  Carrying
the exponents instead of the values makes the correspondence with FIN_k a
pure integer relabeling (value at a position = k - exponent), so no
logarithm is ever evaluated and the round trip is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import FinkElement, FinkError, ParseError


@dataclass(frozen=True)
class NetFunction:
    """A net function stored as sorted (position, exponent) pairs.

    h(position) = (1+delta)^(-exponent); exponents lie in 0..k-1 and some
    exponent is 0, so h attains the value 1.
    """

    k: int
    delta: Fraction
    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise FinkError(f"level bound must be >= 1, got {self.k}")
        if self.delta <= 0:
            raise FinkError(f"delta must be positive, got {self.delta}")
        if not self.exponents:
            raise FinkError("net function must have nonempty support")
        last = -1
        attains_one = False
        for pos, e in self.exponents:
            if pos <= last or pos < 0:
                raise FinkError(f"positions must be strictly increasing, bad {pos}")
            if not 0 <= e <= self.k - 1:
                raise FinkError(f"exponent {e} at {pos} outside 0..{self.k - 1}")
            attains_one = attains_one or e == 0
            last = pos
        if not attains_one:
            raise FinkError("net function never attains the value 1 (no exponent 0)")

    def support(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.exponents)

    def value_at(self, pos: int) -> Fraction:
        for p, e in self.exponents:
            if p == pos:
                return Fraction(1) / (1 + self.delta) ** e
        return Fraction(0)


def theta(h: NetFunction) -> FinkElement:
    """Relabel exponents to levels: position with exponent e maps to k - e."""
    return FinkElement(h.k, tuple((pos, h.k - e) for pos, e in h.exponents))


def theta_inv(p: FinkElement, delta: Fraction) -> NetFunction:
    """Inverse relabeling: level v becomes exponent k - v."""
    return NetFunction(
        p.k, Fraction(delta), tuple((pos, p.k - val) for pos, val in p.values)
    )


def k_for_epsilon(epsilon: Fraction) -> tuple[int, Fraction]:
    """delta = epsilon/2 and the least k with (1+delta)^(k-1) > 1/delta.

    Exact rational comparison throughout; epsilon must be positive.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise FinkError(f"epsilon must be positive, got {epsilon}")
    delta = epsilon / 2
    threshold = 1 / delta
    k = 1
    power = Fraction(1)  # (1+delta)^(k-1)
    while power <= threshold:
        k += 1
        power *= 1 + delta
    return k, delta


def parse_net_function(text: str, k: int, delta: Fraction) -> NetFunction:
    """Parse "pos:exp,pos:exp" with exponents in 0..k-1 (0 is stored here,
    unlike the element grammar where value 0 is never written)."""
    text = text.strip()
    if not text:
        raise ParseError("empty net function string")
    pairs = []
    for chunk in text.split(","):
        left, sep, right = chunk.partition(":")
        if not sep:
            raise ParseError(f"bad exponent pair {chunk!r}")
        try:
            pairs.append((int(left), int(right)))
        except ValueError:
            raise ParseError(f"bad exponent pair {chunk!r}") from None
    pairs.sort()
    try:
        return NetFunction(k, Fraction(delta), tuple(pairs))
    except FinkError as e:
        raise ParseError(str(e)) from None


def format_net_function(h: NetFunction) -> str:
    return ",".join(f"{pos}:{e}" for pos, e in h.exponents)

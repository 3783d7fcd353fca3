"""Layer parameters, thresholds and color budgets for the layered colorer.

Quantities like ``n ** (2 / (k + 4))`` feed ceilings and degree tests, and a
floating point error of one ulp at an exact power (``400 ** 0.5``) would
shift a ceiling by one.  :class:`Power` keeps them symbolic and compares
against integers and fractions exactly with big-integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class Power:
    """The real number ``coef * base ** (num / den)`` with exact comparisons."""

    __slots__ = ("coef", "base", "num", "den")

    def __init__(self, coef: int, base: int, num: int, den: int):
        if coef <= 0 or base < 1 or num < 0 or den < 1:
            raise ValueError("Power needs coef > 0, base >= 1, num >= 0, den >= 1")
        self.coef, self.base, self.num, self.den = int(coef), int(base), int(num), int(den)

    def __repr__(self):
        return f"Power({self.coef}, {self.base}, {self.num}, {self.den})"

    def __str__(self):
        return f"{self.coef}*{self.base}^({self.num}/{self.den})"

    def __float__(self):
        return self.coef * math.exp(math.log(self.base) * self.num / self.den)

    def _cmp(self, other) -> int:
        """Sign of ``self - other`` for a rational ``other``."""
        if not isinstance(other, Rational):
            if isinstance(other, float) and other.is_integer():
                other = int(other)
            else:
                other = Fraction(other)
        if other <= 0:
            return 1
        p, q = other.numerator, other.denominator
        lhs = self.coef**self.den * self.base**self.num * q**self.den
        rhs = p**self.den
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, Power):
            return (self.coef, self.base, self.num, self.den) == (
                other.coef, other.base, other.num, other.den)
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.coef, self.base, self.num, self.den))

    def __ceil__(self):
        m = max(0, math.ceil(float(self)))
        while m > 0 and self <= m - 1:
            m -= 1
        while not self <= m:
            m += 1
        return m

    def __floor__(self):
        m = max(0, math.floor(float(self)))
        while not self >= m:
            m -= 1
        while self >= m + 1:
            m += 1
        return m

    def squared(self) -> "Power":
        return Power(self.coef**2, self.base, 2 * self.num, self.den)


def ceil_pow(n: int, num: int, den: int) -> int:
    """Exact ``ceil(n ** (num / den))``."""
    return math.ceil(Power(1, n, num, den))


def even_diameter_cap(level: int) -> int:
    """Even-diameter cap for bases at ``level``: 2, then ``5 * prev + 14``."""
    a = 2
    for _ in range(level):
        a = 5 * a + 14
    return a


def even_diameter_cap_closed(level: int) -> int:
    # (11/2) * 5**k - 7/2, kept integral
    return (11 * 5**level - 7) // 2


def g_req(k: int) -> int:
    """Odd girth needed by the ``k``-layer colorer."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return even_diameter_cap(k) + 5


def color_budget(k: int, n: int) -> int:
    """Worst-case color count of the ``k``-layer colorer on ``n`` vertices."""
    if k < 0 or n < 1:
        raise ValueError("color_budget needs k >= 0 and n >= 1")
    c = ceil_pow(n, 2, k + 4)
    return 2 * c + k * (36 * c + 2)


def _floor(x) -> int:
    return math.floor(x)


def _ceil(x) -> int:
    return math.ceil(x)


@dataclass(frozen=True)
class LayerConfig:
    """Everything the layered colorer needs to know up front.

    ``r_stars[l]`` is the base budget of the layer-``l`` subroutine and
    ``d_stars[l]`` its even-diameter cap.  Layers ``0..k-1`` are reducers with
    group-coloring degree parameter ``delta``; layer ``k`` is terminal.
    Colors are laid out as ``[first-fit c] + k * [group block] + [terminal]``.
    """

    n: int
    k: int
    c: int
    delta: object
    r_stars: tuple
    custom: bool = False

    @classmethod
    def default(cls, n: int, k: int) -> "LayerConfig":
        if n < 1:
            raise ValueError("n must be >= 1")
        if k < 0:
            raise ValueError("k must be >= 0")
        m = k + 4
        c = ceil_pow(n, 2, m)
        delta = Power(6, n, 1, m)
        r_stars = tuple(Power(1, n, k + 2 - level, m) for level in range(k + 1))
        return cls(n, k, c, delta, r_stars)

    @classmethod
    def custom_params(cls, n: int, k: int, c: int, delta) -> "LayerConfig":
        """Explicit first-fit width ``c`` and degree parameter ``delta``.

        Budgets follow the reductions: ``n / c`` bases at layer 0, then each
        reducer shrinks its budget by ``6 / delta``.
        """
        if n < 1 or k < 0 or c < 1:
            raise ValueError("need n >= 1, k >= 0, c >= 1")
        delta = Fraction(delta)
        if k > 0 and delta < 1:
            raise ValueError("delta must be >= 1")
        r = Fraction(n, c)
        r_stars = [r]
        for _ in range(k):
            r = 6 * r / delta
            r_stars.append(r)
        return cls(n, k, c, delta, tuple(r_stars), custom=True)

    @property
    def d_stars(self) -> tuple[int, ...]:
        return tuple(even_diameter_cap(level) for level in range(self.k + 1))

    @property
    def required_odd_girth(self) -> int:
        return g_req(self.k)

    def base_budget(self, level: int) -> int:
        return _ceil(self.r_stars[level])

    @property
    def group_block(self) -> int:
        d = self.delta
        sq = d.squared() if isinstance(d, Power) else d * d
        return _floor(sq) + 2

    @property
    def terminal_block(self) -> int:
        return self.base_budget(self.k)

    def group_offset(self, level: int) -> int:
        return self.c + level * self.group_block

    @property
    def terminal_offset(self) -> int:
        return self.c + self.k * self.group_block

    @property
    def palette_size(self) -> int:
        return self.terminal_offset + self.terminal_block

    @property
    def budget(self) -> int:
        """Color count the run must stay within."""
        if self.custom:
            return self.palette_size
        return color_budget(self.k, self.n)

    def to_dict(self) -> dict:
        d = {"n": self.n, "k": self.k, "c": self.c}
        if self.custom:
            d["delta"] = str(self.delta)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LayerConfig":
        if "delta" in d:
            return cls.custom_params(d["n"], d["k"], d["c"], Fraction(d["delta"]))
        return cls.default(d["n"], d["k"])

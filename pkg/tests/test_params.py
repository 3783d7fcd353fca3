import math
from fractions import Fraction

import pytest

from girthcolor.params import (LayerConfig, Power, ceil_pow, color_budget, even_diameter_cap,
                               even_diameter_cap_closed, g_req)


def test_g_req_table():
    assert [g_req(k) for k in range(4)] == [7, 29, 139, 689]


def test_caps():
    assert [even_diameter_cap(level) for level in range(3)] == [2, 24, 134]
    for level in range(11):
        # closed form (11/2) 5^l - 7/2, in exact rationals
        assert even_diameter_cap(level) == Fraction(11, 2) * 5**level - Fraction(7, 2)
        assert even_diameter_cap(level) == even_diameter_cap_closed(level)


def test_color_budget_examples():
    assert color_budget(0, 100) == 20
    assert color_budget(1, 100) == 268
    assert color_budget(0, 1) == 2


def test_exact_ceilings_at_perfect_powers():
    assert ceil_pow(400, 1, 2) == 20
    assert ceil_pow(401, 1, 2) == 21
    assert ceil_pow(3**5, 1, 5) == 3
    assert ceil_pow(3**5 + 1, 1, 5) == 4
    assert ceil_pow(2**30, 2, 3) == 2**20
    for n in range(1, 2000):
        assert ceil_pow(n, 1, 2) == math.isqrt(n - 1) + 1


def test_power_comparisons():
    p = Power(6, 32, 1, 5)            # 6 * 2 = 12
    assert p == 12 and p <= 12 and p >= 12 and not p < 12
    assert Power(6, 33, 1, 5) > 12
    assert math.floor(Power(1, 10, 1, 2)) == 3
    assert math.ceil(Power(1, 10, 1, 2)) == 4
    assert Power(2, 2, 1, 2).squared() == 8
    assert Power(1, 2, 1, 2) < Fraction(3, 2)


def test_default_config_n100_k1():
    cfg = LayerConfig.default(100, 1)
    assert cfg.c == 7                       # ceil(100^(2/5)) = ceil(6.31)
    assert cfg.base_budget(0) == 16         # ceil(100^(3/5)) = ceil(15.85)
    assert cfg.base_budget(1) == 7          # ceil(100^(2/5))
    assert cfg.group_block == 229           # floor(36 * 100^(2/5)) + 2 = 227 + 2
    assert cfg.d_stars == (2, 24)
    assert cfg.palette_size <= color_budget(1, 100)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_palette_never_exceeds_budget(k):
    for n in list(range(1, 300)) + [1000, 4096, 10**5]:
        cfg = LayerConfig.default(n, k)
        assert cfg.palette_size <= color_budget(k, n)


def test_custom_config():
    cfg = LayerConfig.custom_params(200, 2, 2, 1)
    assert cfg.r_stars == (100, 600, 3600)
    assert cfg.group_block == 3
    assert cfg.budget == cfg.palette_size == 2 + 2 * 3 + 3600
    assert LayerConfig.from_dict(cfg.to_dict()) == cfg
    with pytest.raises(ValueError):
        LayerConfig.custom_params(10, 1, 2, Fraction(1, 2))


def test_round_trip_default():
    cfg = LayerConfig.default(300, 2)
    assert LayerConfig.from_dict(cfg.to_dict()) == cfg

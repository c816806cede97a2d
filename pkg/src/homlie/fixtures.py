"""Shipped example algebras."""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from .algebra import HomLieSuperAlgebra, abelian
from .io import parse

FIXTURE_NAMES = (
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "sl2",
    "heis3",
    "hsl2",
    "osp12",
    "hosp12",
    "c11",
    "sl21",
)


def fixture_text(name: str) -> str:
    return resources.files("homlie").joinpath("fixtures", f"{name}.alg").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> HomLieSuperAlgebra:
    """Load a shipped fixture; ``abelian_<k>`` works for any k."""
    m = re.fullmatch(r"abelian_(\d+)", name)
    if m and name not in FIXTURE_NAMES:
        return abelian(int(m.group(1)))
    try:
        text = fixture_text(name)
    except FileNotFoundError:
        raise KeyError(f"no fixture named {name!r}") from None
    return parse(text, f"{name}.alg")

"""Access to the embedded reference data (``data/fixtures.json``)."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .polyring import Poly

VARIANTS = ("main", "729", "123")


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files("rubikgalois").joinpath("data/fixtures.json").read_text()
    return json.loads(text)


def variant(name: str) -> dict:
    try:
        return load()["variants"][name]
    except KeyError:
        raise KeyError(f"unknown variant {name!r}; choose from {VARIANTS}") from None


def f24(name: str) -> Poly:
    desc = variant(name)["f24_desc"]
    return Poly([Fraction(c) for c in reversed(desc)])

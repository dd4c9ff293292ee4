"""Shipped generator lists."""

from dataclasses import dataclass
from importlib import resources

from .. import tomlcompat
from ..finitefield import PrimeField
from .matrix import MatrixFq


@dataclass(frozen=True)
class GeneratorSet:
    label: str
    a5xc2: bool
    generators: tuple


def matrices_from_lists(p, lists):
    F = PrimeField(p)
    return tuple(MatrixFq(F, m) for m in lists)


def order120_subgroups(ambient):
    """``ambient`` is "gl4f3" or "gl3f5"."""
    text = resources.files("unram_cert.data").joinpath("order120_subgroups.toml").read_text()
    table = tomlcompat.loads(text)[ambient]
    return [GeneratorSet(s["label"], s["a5xc2"], matrices_from_lists(table["p"], s["generators"]))
            for s in table["sets"]]

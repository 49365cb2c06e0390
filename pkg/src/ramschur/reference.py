"""Access to the frozen reference corpus shipped with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib.resources import files

__all__ = [
    "reference_phi_expansions",
    "reference_ell_expansions",
    "reference_table_ns",
    "reference_table_u_max",
    "reference_positivity_table",
]


@lru_cache(maxsize=None)
def _raw() -> dict:
    payload = files("ramschur").joinpath("data/reference_values.json").read_text()
    return json.loads(payload)


@lru_cache(maxsize=None)
def reference_phi_expansions() -> dict[int, dict[tuple[int, ...], int]]:
    """Known Schur expansions of R(n, 0) for n = 2..6."""
    out = {}
    for n_str, terms in _raw()["phi_schur"].items():
        out[int(n_str)] = {tuple(shape): int(coeff) for shape, coeff in terms}
    return out


@lru_cache(maxsize=None)
def reference_ell_expansions() -> dict[tuple[int, int], dict[int, int]]:
    """Known ell-basis expansions of R(n, u), keyed (n, u)."""
    out = {}
    for key, terms in _raw()["ell_expansions"].items():
        n_str, u_str = key.split(",")
        out[(int(n_str), int(u_str))] = {int(k): int(coeff) for k, coeff in terms}
    return out


def reference_table_ns() -> list[int]:
    return list(_raw()["positivity_table"]["ns"])


def reference_table_u_max() -> int:
    return int(_raw()["positivity_table"]["u_max"])


@lru_cache(maxsize=None)
def reference_positivity_table() -> dict[tuple[int, int], bool]:
    """Published verdict grid {(n, u): is_schur_positive}."""
    table = _raw()["positivity_table"]
    ns = table["ns"]
    out = {}
    for u_str, row in table["rows"].items():
        u = int(u_str)
        if len(row) != len(ns):
            raise ValueError(f"verdict row for u={u} has wrong width")
        for n, verdict in zip(ns, row):
            out[(n, u)] = verdict == "Y"
    return out

"""Exact invariants of Legendrian products.

Models are plain dicts in the same layout as the command-line JSON. Actions may be given as
``fractions.Fraction``, ``int`` or ``"p/q"`` strings and are returned as ``Fraction``.
"""

from __future__ import annotations

import functools
import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import _legprod

__all__ = [
    "LegprodError",
    "whitney",
    "validate",
    "chord_sum_tb",
    "stabilize",
    "tau",
    "product_tb",
    "maslov_product",
    "perturb_product",
    "frontspin",
    "infinite_family_tb",
    "triple_tau",
    "triple_tb",
    "triple_vs_iterated",
    "knot_fixture",
    "diagram_signs",
    "diagram_tb",
    "diagram_faces",
    "area_constraints",
    "is_feasible",
    "sample_point",
    "tb_range_search",
]

Model = dict[str, Any]
RationalLike = Fraction | int | str


class LegprodError(Exception):
    """A domain or input failure; ``kind`` is the stable error name (e.g. ``"ActionCollision"``)."""

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message


def _translated(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _legprod.Error as e:
            kind, message = e.args
            raise LegprodError(kind, message) from None

    return wrapper


def _q(x: RationalLike) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _encode(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return _q(obj)
    if isinstance(obj, Mapping):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def _dump(obj: Any) -> str:
    return json.dumps(_encode(obj))


def _load_model(text: str) -> Model:
    m = json.loads(text)
    for c in m["chords"]:
        c["action"] = _fraction(c["action"])
    return m


def _load_chords(text: str) -> list[dict[str, Any]]:
    chords = json.loads(text)
    for c in chords:
        c["action"] = _fraction(c["action"])
    return chords


def _load_system(text: str) -> dict[str, Any]:
    sys = json.loads(text)
    for c in sys["constraints"]:
        c["lhs"] = {v: _fraction(x) for v, x in c["lhs"].items()}
        c["rhs"] = _fraction(c["rhs"])
    return sys


def _system_text(system: Mapping[str, Any]) -> str:
    return _dump(system)


@_translated
def whitney(n: int, action: RationalLike, sign: int | None = None) -> Model:
    return _load_model(_legprod.whitney(n, _q(action), sign))


@_translated
def validate(model: Model) -> list[str]:
    return _legprod.validate(_dump(model))


@_translated
def chord_sum_tb(model: Model) -> int:
    return _legprod.chord_sum_tb(_dump(model))


@_translated
def stabilize(model: Model, za: RationalLike, zb: RationalLike, lead_sign: int) -> Model:
    return _load_model(_legprod.stabilize(_dump(model), _q(za), _q(zb), lead_sign))


@_translated
def tau(za: RationalLike, zb: RationalLike, n: int, m: int) -> int:
    return _legprod.tau(_q(za), _q(zb), n, m)


@_translated
def product_tb(K: Model, L: Model) -> int:
    return _legprod.product_tb(_dump(K), _dump(L))


@_translated
def maslov_product(K: Model, L: Model) -> dict[str, int]:
    return _legprod.maslov_product(_dump(K), _dump(L))


@_translated
def perturb_product(K: Model, L: Model, duplicates: str = "keep") -> tuple[list[dict[str, Any]], Model]:
    """Chords of the perturbed product and the product model. ``duplicates`` is keep, separate or reject."""
    chords, model = _legprod.perturb_product(_dump(K), _dump(L), duplicates)
    return _load_chords(chords), _load_model(model)


@_translated
def frontspin(L: Model) -> Model:
    return _load_model(_legprod.frontspin(_dump(L)))


@_translated
def infinite_family_tb(
    K: Model, L: Model, e: str, pairs: int, za: RationalLike, zb: RationalLike, lead_sign: int
) -> list[int]:
    return _legprod.infinite_family_tb(_dump(K), _dump(L), e, pairs, _q(za), _q(zb), lead_sign)


@_translated
def triple_tau(a: RationalLike, b: RationalLike, c: RationalLike) -> int:
    return _legprod.triple_tau(_q(a), _q(b), _q(c))


@_translated
def triple_tb(K1: Model, K2: Model, K3: Model) -> int:
    return _legprod.triple_tb(_dump(K1), _dump(K2), _dump(K3))


@_translated
def triple_vs_iterated(K1: Model, K2: Model, K3: Model) -> tuple[int, int, bool]:
    return _legprod.triple_vs_iterated(_dump(K1), _dump(K2), _dump(K3))


@_translated
def knot_fixture(name: str, actions: Mapping[str, RationalLike]) -> tuple[Model, dict[str, Any]]:
    model, system = _legprod.knot_fixture(name, _dump({k: _q(v) for k, v in actions.items()}))
    return _load_model(model), _load_system(system)


@_translated
def diagram_signs(pd_text: str) -> list[int]:
    return _legprod.diagram_signs(pd_text)


@_translated
def diagram_tb(pd_text: str) -> int:
    return _legprod.diagram_tb(pd_text)


@_translated
def diagram_faces(pd_text: str) -> list[dict[str, Any]]:
    return json.loads(_legprod.diagram_faces(pd_text))


@_translated
def area_constraints(pd_text: str, prefix: str = "x") -> dict[str, Any]:
    return _load_system(_legprod.area_constraints(pd_text, prefix))


@_translated
def is_feasible(system: Mapping[str, Any]) -> bool:
    return _legprod.is_feasible(_system_text(system))


@_translated
def sample_point(system: Mapping[str, Any]) -> dict[str, Fraction] | None:
    text = _legprod.sample_point(_system_text(system))
    if text is None:
        return None
    return {k: _fraction(v) for k, v in json.loads(text).items()}


@_translated
def tb_range_search(fixtures: Sequence[str], budget: int, seed: int) -> dict[str, Any]:
    report = json.loads(_legprod.tb_range_search(list(fixtures), budget, seed))
    for w in report["witnesses"]:
        w["actions"] = {k: _fraction(v) for k, v in w["actions"].items()}
    return report

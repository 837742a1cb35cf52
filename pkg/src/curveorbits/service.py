"""Service layer shared by the HTTP API and the CLI.

Requests and responses are pydantic models mirroring the canonical JSON
forms; the functions here are plain and synchronous so the CLI can call them
in-process while the FastAPI app exposes them over HTTP.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from . import verify as verify_mod
from .kazarian import LOCAL_TABLE, KazarianLocalClass, universal_curve_tower
from .orbits import (
    OrbitClassResult,
    compute_class,
    cubic_table,
    quartic_table,
    section_counts,
    w_variety_classes,
)
from .points import flip_sign
from .poly import Poly, UsageError


class TermModel(BaseModel):
    coeff: str
    exps: list[int]


class PolyModel(BaseModel):
    symbols: list[str]
    terms: list[TermModel]

    @classmethod
    def from_poly(cls, p: Poly) -> "PolyModel":
        return cls.model_validate(p.to_json_dict())

    def to_poly(self, table=None) -> Poly:
        return Poly.from_json_dict(self.model_dump(), table)


class KazarianEntryModel(BaseModel):
    """One user-supplied local class: {name, polynomial over (c1, c2, u)}."""

    name: str
    polynomial: PolyModel


class ClassRequest(BaseModel):
    identifier: str
    flip_sign: bool = False  # points convention: report p(u, v) instead of p(-u, -v)
    kazarian: Optional[list[KazarianEntryModel]] = None


class OrbitClassModel(BaseModel):
    name: str
    affine: PolyModel
    projective: PolyModel
    predegree: str
    aut: int | str | None = None
    weighted: bool = True
    provenance: str
    display: Optional[str] = None
    degree: int
    sign_convention: str = "p(-u,-v)"


class TableModel(BaseModel):
    which: Literal["quartics", "cubics", "sections"]
    rows: list[dict]


class VerifyRequest(BaseModel):
    suite: str = "all"
    kazarian: Optional[list[KazarianEntryModel]] = None


class CheckModel(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    ok: bool
    checked: int
    failures: list[CheckModel] = Field(default_factory=list)
    checks: list[CheckModel] = Field(default_factory=list)


def parse_kazarian_entries(
    entries: Optional[list[KazarianEntryModel]],
) -> dict[str, KazarianLocalClass]:
    out: dict[str, KazarianLocalClass] = {}
    for entry in entries or []:
        poly = entry.polynomial.to_poly(LOCAL_TABLE)
        out[entry.name] = KazarianLocalClass(entry.name, poly)
    return out


def _result_model(res: OrbitClassResult, flip: bool) -> OrbitClassModel:
    affine, projective = res.affine, res.projective
    convention = "p(-u,-v)" if res.name.startswith("points:") else "chern classes of V"
    if flip:
        if not res.name.startswith("points:"):
            raise UsageError("--flip-sign only applies to point configurations")
        affine = flip_sign(affine)
        projective = flip_sign(projective)
        convention = "p(u,v)"
    return OrbitClassModel(
        name=res.name,
        affine=PolyModel.from_poly(affine),
        projective=PolyModel.from_poly(projective),
        predegree=str(res.predegree),
        aut=res.aut,
        weighted=res.weighted,
        provenance=res.provenance,
        display=res.display,
        degree=res.d,
        sign_convention=convention,
    )


def class_response(req: ClassRequest) -> OrbitClassModel:
    locals_ = parse_kazarian_entries(req.kazarian)
    res = compute_class(req.identifier, locals_ or None)
    return _result_model(res, req.flip_sign)


def table_response(
    which: str, kazarian: Optional[list[KazarianEntryModel]] = None
) -> TableModel:
    locals_ = parse_kazarian_entries(kazarian)
    if which == "quartics":
        rows = [_result_model(r, False).model_dump() for r in quartic_table()]
    elif which == "cubics":
        rows = [_result_model(r, False).model_dump() for r in cubic_table(locals_ or None)]
    elif which == "sections":
        rows = [
            {
                "name": name,
                "aut": aut,
                "weighted_sections": int(count),
                "per_aut": int(count) // aut if aut else None,
                "provenance": "Grassmannian evaluation of the weighted class",
            }
            for name, aut, count in section_counts()
        ]
    else:
        raise UsageError(f"unknown table {which!r} (try quartics, cubics, sections)")
    return TableModel(which=which, rows=rows)


def verify_response(req: VerifyRequest) -> VerifyResponse:
    locals_ = parse_kazarian_entries(req.kazarian)
    checks = verify_mod.run_suite(req.suite, locals_ or None)
    failures = [CheckModel(**c.to_json_dict()) for c in checks if not c.ok]
    return VerifyResponse(
        suite=req.suite,
        ok=not failures,
        checked=len(checks),
        failures=failures,
        checks=[CheckModel(**c.to_json_dict()) for c in checks],
    )


def towers_debug() -> dict:
    """Tower descriptions for the fixed pipelines (debug output)."""
    return {
        "universal-curve": universal_curve_tower().describe(),
        "triple-tangency": _w_tower_description(),
    }


def _w_tower_description() -> dict:
    w = w_variety_classes(4)
    return {
        "tower": w.tower_description,
        "classes": {
            "relative_canonical": w.relative_canonical.to_json_dict(),
            "conic_component": w.conic_component.to_json_dict(),
            "ramification": w.ramification.to_json_dict(),
            "branch_node_divisor": w.w_bn.to_json_dict(),
            "flex_node_divisor": w.w_an.to_json_dict(),
        },
    }

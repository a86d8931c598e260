"""JSON code-profile serialization shared by the CLI and tests.

A profile document holds a field spec, the evaluation vector as element
strings, and the twist data:

    {"field": {"p": 2, "m": 4, "modulus": [1, 1, 0, 0, 1]},
     "alpha": ["0", "a^2", "a + 1", ...],
     "k": 3, "t": [1, 2], "h": [0, 1],
     "eta": ["a^3 + a^2", "1"]}

Extra keys are ignored on load so documents emitted by the construct-*
commands (which add summary fields) round-trip unchanged.
"""

from __future__ import annotations

import json

from .codes import MultiTwistedCode, TwistProfile
from .field import Field, FieldSpec


def field_from_doc(doc: dict) -> Field:
    f = doc["field"]
    return Field(FieldSpec(int(f["p"]), int(f["m"]), tuple(int(c) for c in f["modulus"])))


def code_from_profile(doc: dict) -> MultiTwistedCode:
    ctx = field_from_doc(doc)
    profile = TwistProfile(
        int(doc["k"]),
        tuple(int(x) for x in doc.get("t", ())),
        tuple(int(x) for x in doc.get("h", ())),
        ctx.parse_vector(doc.get("eta", ())),
    )
    return MultiTwistedCode(ctx, profile, ctx.parse_vector(doc["alpha"]))


def profile_to_doc(code: MultiTwistedCode) -> dict:
    ctx, pr = code.ctx, code.profile
    return {
        "field": {"p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)},
        "alpha": [ctx.format(x) for x in code.alpha],
        "k": pr.k,
        "t": list(pr.t),
        "h": list(pr.h),
        "eta": [ctx.format(e) for e in pr.eta],
    }


def load_profile(path: str) -> MultiTwistedCode:
    with open(path, "r", encoding="utf-8") as fh:
        return code_from_profile(json.load(fh))


def matrix_to_doc(m) -> list[list[str]]:
    return [[m.ctx.format(x) for x in row] for row in m.data]

"""JSON schemas and the human-readable polynomial text format.

Polynomials are serialized as ascending coefficient arrays and displayed as
descending-degree text ("x^5 + 7x^4 + ... + 8"); coefficients are canonical
representatives in [0, p^e).
"""

from __future__ import annotations

import re

from .code import CyclicCode
from .constructions import ConstructedCode, ConstructionResult
from .fieldpoly import FqPoly, Splitting
from .ring import RingSpec
from .ringpoly import RPoly


class SchemaError(ValueError):
    """Malformed JSON payload."""


def ring_to_json(spec: RingSpec) -> dict:
    return {"p": spec.p, "e": spec.e}


def ring_from_json(data: dict) -> RingSpec:
    try:
        return RingSpec(int(data["p"]), int(data["e"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad ring spec {data!r}: {exc}") from exc


def fqpoly_to_json(poly: FqPoly) -> dict:
    return {"p": poly.p, "coeffs": list(poly.coeffs)}


def fqpoly_from_json(data: dict) -> FqPoly:
    try:
        return FqPoly(int(data["p"]), tuple(int(c) for c in data["coeffs"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad field polynomial {data!r}: {exc}") from exc


def rpoly_to_json(poly: RPoly) -> dict:
    return {"ring": ring_to_json(poly.spec), "coeffs": list(poly.coeffs)}


def rpoly_from_json(data: dict) -> RPoly:
    try:
        spec = ring_from_json(data["ring"])
        return RPoly(spec, tuple(int(c) for c in data["coeffs"]))
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad ring polynomial {data!r}: {exc}") from exc


def splitting_to_json(splitting: Splitting) -> dict:
    return {
        "m": splitting.m,
        "q": splitting.q,
        "s1": list(splitting.s1),
        "s2": list(splitting.s2),
        "a": splitting.a,
        "mu_minus1": "swaps" if splitting.given_by_mu_minus1 else "fixes",
    }


def splitting_from_json(data: dict) -> Splitting:
    try:
        splitting = Splitting(
            int(data["m"]),
            int(data["q"]),
            tuple(int(x) for x in data["s1"]),
            tuple(int(x) for x in data["s2"]),
            int(data["a"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad splitting {data!r}: {exc}") from exc
    declared = data.get("mu_minus1")
    actual = "swaps" if splitting.given_by_mu_minus1 else "fixes"
    if declared is not None and declared != actual:
        raise SchemaError(f"mu_minus1 is {actual!r}, payload says {declared!r}")
    return splitting


def code_to_json(code: CyclicCode) -> dict:
    return {
        "ring": ring_to_json(code.spec),
        "n": code.n,
        "F": [rpoly_to_json(f) for f in code.F],
    }


def code_from_json(data: dict) -> CyclicCode:
    try:
        spec = ring_from_json(data["ring"])
        family = tuple(rpoly_from_json(f) for f in data["F"])
        return CyclicCode(spec, int(data["n"]), family)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad cyclic code payload: {exc}") from exc


def result_to_json(result: ConstructionResult, reports: dict[str, dict] | None = None) -> dict:
    codes = []
    for entry in result.codes:
        item: dict = {
            "label": entry.label,
            "code": code_to_json(entry.code),
            "claims": list(entry.claims),
        }
        if reports is not None:
            item["verified"] = reports.get(entry.label, {})
        codes.append(item)
    return {"kind": result.kind, "params": result.params, "codes": codes}


def result_from_json(data: dict) -> ConstructionResult:
    try:
        codes = [
            ConstructedCode(
                str(item["label"]),
                code_from_json(item["code"]),
                tuple(str(c) for c in item.get("claims", ())),
            )
            for item in data["codes"]
        ]
        return ConstructionResult(
            kind=str(data["kind"]), params=dict(data["params"]), codes=codes
        )
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad construction result payload: {exc}") from exc


# ---------------------------------------------------------------------------
# Polynomial text format
# ---------------------------------------------------------------------------

_TERM = re.compile(r"^(\d+)?(x(?:\^(\d+))?)?$")


def poly_to_text(coeffs: list[int]) -> str:
    """Descending-degree display: 'x^5 + 7x^4 + ... + 8', '0' for zero."""
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
    return " + ".join(terms) if terms else "0"


def poly_from_text(text: str, modulus: int) -> list[int]:
    """Parse descending or mixed-order text with + and - signs; coefficients
    are reduced to canonical representatives mod `modulus`."""
    compact = text.replace(" ", "").replace("*", "")
    if not compact:
        raise SchemaError("empty polynomial text")
    if compact == "0":
        return []
    compact = compact.replace("-", "+-")
    if compact.startswith("+"):
        compact = compact[1:]
    coeffs: dict[int, int] = {}
    for raw in compact.split("+"):
        if not raw:
            raise SchemaError(f"dangling sign in {text!r}")
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:]
        match = _TERM.match(raw)
        if not match or (match.group(1) is None and match.group(2) is None):
            raise SchemaError(f"cannot parse term {raw!r} in {text!r}")
        coeff = int(match.group(1)) if match.group(1) else 1
        if match.group(2) is None:
            power = 0
        elif match.group(3) is None:
            power = 1
        else:
            power = int(match.group(3))
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    out = [0] * (max(coeffs) + 1)
    for power, value in coeffs.items():
        out[power] = value % modulus
    while out and out[-1] == 0:
        out.pop()
    return out

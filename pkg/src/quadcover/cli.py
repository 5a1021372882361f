"""Batch command-line front end.

    quadcover COMMAND [--input FILE|-] [--output FILE|-] [--seed N] [--format json|text] [--n K]

The payload is a JSON object read from ``--input`` (``-`` for stdin); the
result is a JSON document.  Exit status: 0 success, 1 malformed input,
2 domain error.  Errors are reported as ``{"error": {code, message, location}}``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable

import jsonschema

from . import matrix as mx
from .binforms import BinaryForm, ModuleAction, covering_from_form, invertible_generator, is_etale, is_primitive
from .errors import QuadCoverError
from .identities import random_form, verify_identities
from .normfunctor import CoverModulePair, norm_form, roundtrip_action, roundtrip_form
from .polyduality import QuadraticPolynomial, dual_form, kernel_generator, proj_spec_check
from .quadalg import (
    QuadraticAlgebra,
    diramation,
    differentials_annihilator,
    find_section,
    kahler_differentials,
    pinch,
    section_witness_check,
    splitting_base_change,
    standard_cover,
)
from .rings import Ring, element_from_json, ring_from_json, ring_to_json
from .symcover import discriminant_report, max_group_degree

# schemas -------------------------------------------------------------------------

_ELEM = {"anyOf": [{"type": "integer"}, {"type": "string"}, {"type": "array"}]}
_RING = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["rational", "modular", "polynomial", "quotient"]},
        "m": {"type": "integer"},
        "vars": {"type": "array", "items": {"type": "string"}},
        "base": {"$ref": "#/$defs/ring"},
        "modulus": _ELEM,
    },
}


def _obj(required: list[str], **props) -> dict:
    return {
        "type": "object",
        "required": required,
        "properties": {"ring": {"$ref": "#/$defs/ring"}, **props},
        "$defs": {"ring": _RING},
    }


_FORM = _obj(["a", "b", "c"], a=_ELEM, b=_ELEM, c=_ELEM, convention={"enum": ["phi", "gamma2b"]})
_POLY = _obj(["a", "b", "c"], a=_ELEM, b=_ELEM, c=_ELEM, convention={"enum": ["gamma_b", "gamma2b"]})
_MATRIX = {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _ELEM}}

SCHEMAS: dict[str, dict] = {
    "form-to-cover": _FORM,
    "cover-to-form": _obj(["M"], M=_MATRIX, d=_ELEM),
    "roundtrip": {
        "anyOf": [_FORM, _obj(["count"], count={"type": "integer", "minimum": 0})],
        "$defs": {"ring": _RING},
    },
    "dual": _POLY,
    "kernel-gen": _POLY,
    "proj-check": _POLY,
    "discriminant": {"type": "object", "required": ["n"], "properties": {"n": {"type": "integer", "minimum": 2}}},
    "standard": {
        "anyOf": [_obj(["u"], u=_ELEM), _obj(["d"], d=_ELEM, w=_ELEM)],
        "$defs": {"ring": _RING},
    },
    "pinch": _obj(["d", "t"], d=_ELEM, t=_ELEM),
    "split": _obj(["d1", "d2", "t"], d1=_ELEM, d2=_ELEM, t=_ELEM),
    "differentials": _obj(["d"], d=_ELEM),
    "verify-identities": {"type": "object"},
}

COMMANDS = tuple(SCHEMAS)


class InputError(Exception):
    """Malformed payload (exit 1)."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(message)
        self.location = location


# payload decoding ------------------------------------------------------------------


class _Reader:
    def __init__(self, payload: dict):
        self.payload = payload
        try:
            self.ring: Ring = ring_from_json(payload.get("ring", {"kind": "rational"}))
        except QuadCoverError as exc:
            raise InputError(str(exc), "/ring") from exc

    def elem(self, key: str, value: Any = None):
        raw = self.payload[key] if value is None else value
        try:
            return element_from_json(self.ring, raw)
        except (QuadCoverError, ZeroDivisionError) as exc:
            raise InputError(str(exc), f"/{key}") from exc

    def form(self) -> BinaryForm:
        return BinaryForm(
            self.ring, self.elem("a"), self.elem("b"), self.elem("c"), self.payload.get("convention", "phi")
        ).to_phi()

    def polynomial(self, default: str) -> QuadraticPolynomial:
        return QuadraticPolynomial(
            self.ring, self.elem("a"), self.elem("b"), self.elem("c"), self.payload.get("convention", default)
        )

    def matrix(self, key: str) -> mx.Matrix:
        rows = self.payload[key]
        return tuple(
            tuple(self.elem(f"{key}/{i}/{j}", x) for j, x in enumerate(row)) for i, row in enumerate(rows)
        )


def _tri(flag) -> Any:
    return flag  # True / False / None serialize as true / false / null


# commands -----------------------------------------------------------------------------


def cmd_form_to_cover(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    f = r.form()
    cov = covering_from_form(f)
    out = {
        "ring": ring_to_json(f.ring),
        "d": cov.algebra.d.to_json(),
        "presentation": cov.presentation(),
        "discriminant": cov.discriminant.to_json(),
        "etale": _tri(is_etale(f)),
        "action": mx.to_json(cov.action.M),
        "primitive": _tri(is_primitive(f)),
    }
    if is_primitive(f) is True:
        gen = invertible_generator(f, cov.action)
        out["generator"] = None if gen is None else [x.to_json() for x in gen.vector]
    return out


def cmd_cover_to_form(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    M = r.matrix("M")
    act = ModuleAction.from_matrix(r.ring, M) if "d" not in p else ModuleAction(r.ring, M, r.elem("d"))
    f = norm_form(CoverModulePair.from_action(act))
    return {**f.to_json(), "d": act.d.to_json(), "action_roundtrip": roundtrip_action(act)}


def cmd_roundtrip(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    if "count" in p:
        passed, failures = 0, []
        for _ in range(p["count"]):
            f = random_form(r.ring, rng)
            rep = roundtrip_form(f)
            if rep.ok:
                passed += 1
            else:
                failures.append({**f.to_json(), "mismatch": rep.mismatch})
        return {"pass": passed, "fail": len(failures), "failures": failures}
    return roundtrip_form(r.form()).to_json()


def cmd_dual(p: dict, rng: random.Random) -> dict:
    return dual_form(_Reader(p).polynomial("gamma_b")).to_json()


def cmd_kernel_gen(p: dict, rng: random.Random) -> dict:
    g = _Reader(p).polynomial("gamma_b")
    k = kernel_generator(g)
    return {"kernel": [x.to_json() for x in k], "equals_minus_gamma": True, "gamma": g.to_gamma_b().to_json()}


def cmd_proj_check(p: dict, rng: random.Random) -> dict:
    return proj_spec_check(_Reader(p).polynomial("gamma2b")).to_json()


def cmd_discriminant(p: dict, rng: random.Random) -> dict:
    return discriminant_report(p["n"])


def cmd_standard(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    if "u" in p:
        sc = standard_cover(r.elem("u"))
        A = sc.algebra
        return {
            "ring": ring_to_json(r.ring),
            "d": A.d.to_json(),
            "u": sc.u.to_json(),
            "embed_alpha": [x.to_json() for x in sc.embed(A.alpha)],
            "standard": True,
        }
    A = QuadraticAlgebra(r.ring, r.elem("d"))
    if "w" in p:
        sec = section_witness_check(A, r.elem("w"))
        return {"ring": ring_to_json(r.ring), "d": A.d.to_json(), "standard": True, "u": sec.w.to_json()}
    sec = find_section(A)
    return {
        "ring": ring_to_json(r.ring),
        "d": A.d.to_json(),
        "standard": sec is not None,
        "u": None if sec is None else sec.w.to_json(),
    }


def cmd_pinch(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    res = pinch(QuadraticAlgebra(r.ring, r.elem("d")), r.elem("t"))
    return {"ring": ring_to_json(r.ring), "d": res.algebra.d.to_json(), "regularity_checked": res.regularity_checked}


def cmd_split(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    res = splitting_base_change(QuadraticAlgebra(r.ring, r.elem("d1")), QuadraticAlgebra(r.ring, r.elem("d2")), r.elem("t"))
    return {
        "ring": ring_to_json(res.ring),
        "map": f"alpha1 -> {res.ring.var}*alpha2",
        "verified": True,
    }


def cmd_differentials(p: dict, rng: random.Random) -> dict:
    r = _Reader(p)
    A = QuadraticAlgebra(r.ring, r.elem("d"))
    pres = kahler_differentials(A)
    return {
        "ring": ring_to_json(r.ring),
        "d": A.d.to_json(),
        "generators": list(pres.generators),
        "relations": [[x.to_json() for x in row] for row in pres.relations],
        "annihilator": differentials_annihilator(A).to_json(),
        "etale": _tri(diramation(A).etale),
    }


def cmd_verify_identities(p: dict, rng: random.Random) -> dict:
    results = verify_identities(rng.randrange(2**32))
    passed = sum(r.passed for r in results)
    return {"results": [r.to_json() for r in results], "pass": passed, "fail": len(results) - passed}


HANDLERS: dict[str, Callable[[dict, random.Random], dict]] = {
    "form-to-cover": cmd_form_to_cover,
    "cover-to-form": cmd_cover_to_form,
    "roundtrip": cmd_roundtrip,
    "dual": cmd_dual,
    "kernel-gen": cmd_kernel_gen,
    "proj-check": cmd_proj_check,
    "discriminant": cmd_discriminant,
    "standard": cmd_standard,
    "pinch": cmd_pinch,
    "split": cmd_split,
    "differentials": cmd_differentials,
    "verify-identities": cmd_verify_identities,
}


def _error(code: str, message: str, location: str = "") -> dict:
    return {"error": {"code": code, "message": message, "location": location}}


def run(command: str, payload: Any, seed: int = 0) -> tuple[dict, int]:
    """Validate and dispatch one request; returns (document, exit code)."""
    if command not in HANDLERS:
        return _error("unknown_command", f"unknown command {command!r}"), 1
    try:
        jsonschema.validate(payload, SCHEMAS[command])
    except jsonschema.ValidationError as exc:
        loc = "/" + "/".join(str(x) for x in exc.absolute_path)
        return _error("schema", exc.message, loc), 1
    if command == "discriminant" and payload["n"] > max_group_degree():
        return _error("too_large", f"n = {payload['n']} exceeds QUADCOVER_MAX_N", "/n"), 2
    rng = random.Random(seed)
    try:
        return HANDLERS[command](payload, rng), 0
    except InputError as exc:
        return _error("malformed", str(exc), exc.location), 1
    except QuadCoverError as exc:
        return _error(exc.code, str(exc)), 2


def _text(doc: Any, indent: str = "") -> str:
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for item in doc:
            lines.append(_text(item, indent + "- ") if isinstance(item, dict) else f"{indent}- {_scalar(item)}")
    else:
        lines.append(indent + _scalar(doc))
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "undecided"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadcover", description="Binary quadratic forms and double covers, exactly.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", "-i", help="JSON payload file, or - for stdin")
    ap.add_argument("--output", "-o", default="-", help="output file, or - for stdout")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--n", type=int, help="degree for the discriminant command")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = 0
    try:
        if args.input is None:
            payload: Any = {}
        elif args.input == "-":
            payload = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        doc, code = _error("malformed", str(exc), "input"), 1
    else:
        if args.n is not None and isinstance(payload, dict):
            payload = {**payload, "n": args.n}
        doc, code = run(args.command, payload, args.seed)

    text = json.dumps(doc, indent=2) if args.format == "json" else _text(doc)
    if args.output == "-":
        print(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

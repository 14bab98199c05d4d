"""Command-line front end.

Subcommands take a JSON input file conforming to the schemas shipped in
casson4/schemas, compute invariants, and emit a report either as a
human-readable table or as canonical JSON.  Exit codes: 0 on success, 1
on bad input, 2 when a mandated congruence fails (a regression alarm, so
CI can distinguish it from input trouble).

Reports are deterministic: the same input bytes always produce the same
output bytes, and every report echoes a digest of its (canonicalized)
input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd

import jsonschema

from .bundles import CircleBundleData, circle_bundle_report
from .equivariant import (
    BranchedQuotientData,
    FreeQuotientData,
    branched_free_relation,
    equivariant_casson_free,
    furuta_ohta_mapping_torus,
    matched_cover_data,
)
from .errors import Casson4Error, ParseError, SchemaError
from .floer import FloerData, check_evenness, deduce_sign_pattern, lefschetz
from .laurent import second_derivative_at_one
from .seifert import (
    SeifertMatrix,
    SignatureSpectrum,
    alexander_polynomial,
    arf_invariant,
    preset_knot,
    signature_spectrum,
    tl_signature,
    torus_knot_seifert,
)
from .spheres import (
    SurgeryPresentation,
    check_casson_rohlin,
    mubar_double_branched,
)
from .tori import (
    CupRing,
    ThreeTorusForm,
    admissible,
    bundle_exists,
    det4,
    donaldson_mod2,
    four_orbit_count,
    orbit_order_census,
    product_ring,
    torus4_ring,
)

SCHEMA_VERSION = 1


# --- input plumbing ---

@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    files = resources.files("casson4.schemas")
    text = files.joinpath(f"{name}.json").read_text()
    # inline the shared definitions so no resolver configuration is needed
    text = text.replace("defs.json#/", "#/")
    doc = json.loads(text)
    defs = json.loads(files.joinpath("defs.json").read_text())
    doc.setdefault("definitions", {}).update(defs["definitions"])
    return doc


def load_input(path: str, schema_name: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    try:
        jsonschema.validate(data, _schema(schema_name))
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{path}: {exc.message}") from None
    return data


def input_digest(data) -> str:
    canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode()).hexdigest()


def resolve_knot(ref) -> SeifertMatrix:
    if isinstance(ref, str):
        try:
            return preset_knot(ref)
        except KeyError as exc:
            raise SchemaError(str(exc)) from None
    if isinstance(ref, list):
        return SeifertMatrix(ref)
    if isinstance(ref, dict):
        if "torus" in ref:
            p, q = ref["torus"]
            return torus_knot_seifert(p, q)
        return SeifertMatrix(ref["seifert"])
    raise SchemaError(f"cannot interpret knot reference {ref!r}")


def _rational(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def _frac_json(value: Fraction | int):
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


# --- reports ---

@dataclass
class InvariantReport:
    command: str
    input_digest: str
    invariants: dict
    congruences: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)
    name: str | None = None

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "invariants": self.invariants,
            "congruences": self.congruences,
            "certificates": list(self.certificates),
        }
        if self.name is not None:
            out["name"] = self.name
        return out

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_human(self) -> str:
        lines = [f"command: {self.command}" + (f" ({self.name})" if self.name else "")]
        lines.append(f"input:   {self.input_digest}")
        if self.invariants:
            lines.append("invariants:")
            for key, value in self.invariants.items():
                lines.append(f"  {key}: {value}")
        if self.congruences:
            lines.append("congruences:")
            for key, value in self.congruences.items():
                lines.append(f"  {key}: {'pass' if value else 'FAIL'}")
        for note in self.certificates:
            lines.append(f"note: {note}")
        return "\n".join(lines)

    def exit_code(self) -> int:
        return 2 if any(v == 0 for v in self.congruences.values()) else 0


# --- subcommands ---

def cmd_knot(data: dict) -> tuple[InvariantReport, int]:
    knot = SeifertMatrix(data["seifert"])
    order = data.get("spectrum_order", 2)
    delta = alexander_polynomial(knot)
    d2 = second_derivative_at_one(delta)
    arf = arf_invariant(knot)
    spectrum = signature_spectrum(knot, order)
    delta_minus_one = delta(-1)
    murasugi = 1 if (arf == 0) == (delta_minus_one % 8 in (1, 7)) else 0
    half_d2 = 1 if (d2 // 2) % 2 == arf % 2 else 0
    report = InvariantReport(
        command="knot",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants={
            "genus": knot.genus,
            "alexander": str(delta),
            "alexander_coeffs": [[e, c] for e, c in delta.items()],
            "alexander_at_minus_one": delta_minus_one,
            "delta_second_derivative": d2,
            "arf": arf,
            "spectrum_order": order,
            "spectrum": list(spectrum.values),
        },
        congruences={
            "murasugi_mod8": murasugi,
            "half_d2_equals_arf_mod2": half_d2,
        },
    )
    return report, report.exit_code()


def cmd_sphere(data: dict) -> tuple[InvariantReport, int]:
    steps = [(resolve_knot(step["knot"]), step["q"]) for step in data["steps"]]
    presentation = SurgeryPresentation(steps)
    result = check_casson_rohlin(presentation)
    report = InvariantReport(
        command="sphere",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants={
            "steps": len(presentation),
            "casson": result.casson,
            "rohlin": result.rohlin,
        },
        congruences={"casson_equals_rohlin_mod2": result.congruent},
    )
    return report, report.exit_code()


def cmd_mapping_torus(data: dict) -> tuple[InvariantReport, int]:
    n = data["n"]
    if data["type"] == "branched":
        if "branch_knot" in data:
            spectrum = signature_spectrum(resolve_knot(data["branch_knot"]), n)
        else:
            try:
                spectrum = SignatureSpectrum(n, data["spectrum"])
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
        quotient = BranchedQuotientData(n, data["quotient_casson"], spectrum)
    else:
        quotient = FreeQuotientData(
            n, data["q"], data["quotient_casson"], resolve_knot(data["branch_knot"])
        )
    lam = furuta_ohta_mapping_torus(quotient)
    integral = 1 if lam.denominator == 1 else 0
    invariants = {"lambda_fo": _frac_json(lam)}
    congruences = {"integral": integral}
    certificates = []
    if not integral:
        report = InvariantReport(
            command="mapping-torus",
            name=data.get("name"),
            input_digest=input_digest(data),
            invariants=invariants,
            congruences=congruences,
            certificates=["non-integral invariant: input is not geometric"],
        )
        return report, 1
    lam_int = int(lam)
    invariants["lefschetz"] = 2 * lam_int
    if "rho_cover" in data:
        rho = data["rho_cover"]
        invariants["rho"] = rho
        congruences["lambda_fo_equals_rho_mod2"] = 1 if lam_int % 2 == rho else 0
    if "floer_ranks" in data:
        pattern = deduce_sign_pattern(data["floer_ranks"], 2 * lam_int)
        signs = sorted(pattern.values())
        if signs and all(s == -1 for s in signs):
            label = "minus-identity"
        elif signs and all(s == 1 for s in signs):
            label = "identity"
        else:
            label = "mixed"
        invariants["sign_pattern"] = {str(k): v for k, v in sorted(pattern.items())}
        invariants["pattern"] = label
        certificates.append(
            "sign pattern forced by Lefschetz number on rank-one gradings"
        )
    report = InvariantReport(
        command="mapping-torus",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants=invariants,
        congruences=congruences,
        certificates=certificates,
    )
    return report, report.exit_code()


def cmd_floer(data: dict) -> tuple[InvariantReport, int]:
    maps = data.get("maps")
    if maps is not None:
        maps = tuple(
            m if isinstance(m, str) else [[_rational(x) for x in row] for row in m]
            for m in maps
        )
    fixture = FloerData(data["ranks"], maps)
    lef = lefschetz(fixture)
    even = check_evenness(fixture)
    invariants = {"lefschetz": _frac_json(lef), "even": even}
    congruences = {}
    if data.get("geometric", True):
        congruences["evenness"] = even
    if even:
        invariants["lambda_fo"] = _frac_json(Fraction(lef, 2))
    if "target_lef" in data:
        pattern = deduce_sign_pattern(data["ranks"], data["target_lef"])
        invariants["sign_pattern"] = {str(k): v for k, v in sorted(pattern.items())}
    report = InvariantReport(
        command="floer",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants=invariants,
        congruences=congruences,
    )
    return report, report.exit_code()


def _ring_from_input(data: dict) -> CupRing:
    if "three_form" in data:
        return product_ring(ThreeTorusForm(data["three_form"]))
    if data.get("preset") == "T4":
        return torus4_ring()
    cup2 = [
        [sum((bit & 1) << k for k, bit in enumerate(vec)) for vec in row]
        for row in data["cup2"]
    ]
    return CupRing(cup2, data["pairing"], data["eval_top"])


def cmd_torus4(data: dict) -> tuple[InvariantReport, int]:
    ring = _ring_from_input(data)
    determinant = det4(ring)
    invariants = {"det4": determinant}
    congruences = {}
    certificates = []
    if "three_form" in data:
        invariants["det3"] = data["three_form"]
        congruences["det4_equals_det3"] = 1 if determinant == data["three_form"] else 0
    if "w" in data:
        w = data["w"]
        if isinstance(w, list):
            w = sum((bit & 1) << k for k, bit in enumerate(w))
        invariants["w"] = w
        xi_ok = admissible(ring, w)
        p1_ok = bundle_exists(ring, w)
        invariants["admissible"] = 1 if xi_ok else 0
        invariants["bundle_exists"] = 1 if p1_ok else 0
        count = four_orbit_count(ring, w)
        invariants["four_orbit_count"] = count
        census = orbit_order_census(ring, w)
        invariants["orbit_census"] = {
            "4": census.four,
            "8": "unknown (gauge-theoretic)",
            "16": "unknown (gauge-theoretic)",
        }
        certificates.append("no orbits of order one or two in the plane stratum")
        if xi_ok and p1_ok:
            quarter = donaldson_mod2(ring, w)
            invariants["donaldson_mod2"] = quarter
            congruences["quarter_count_equals_det4_mod2"] = (
                1 if quarter == determinant else 0
            )
        else:
            certificates.append(
                "degree-zero count undefined for this w (hypothesis fails); "
                "orbit counts reported without the parity check"
            )
    report = InvariantReport(
        command="torus4",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants=invariants,
        congruences=congruences,
        certificates=certificates,
    )
    return report, report.exit_code()


def cmd_circle_bundle(data: dict) -> tuple[InvariantReport, int]:
    bundle = CircleBundleData(resolve_knot(data["knot"]), data["euler"])
    result = circle_bundle_report(bundle)
    report = InvariantReport(
        command="circle-bundle",
        name=data.get("name"),
        input_digest=input_digest(data),
        invariants={
            "rho": result.rho,
            "furuta_ohta": result.furuta_ohta,
            "arf": result.arf,
            "delta_second_derivative": result.second_derivative,
        },
        congruences={"lambda_fo_equals_rho_mod2": result.congruent},
        certificates=list(result.certificate),
    )
    return report, report.exit_code()


# --- sweeps ---

def _parse_range(spec: str | None) -> dict:
    out: dict = {}
    if not spec:
        return out
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise SchemaError(f"range entries look like key=value, got {part!r}")
        key, _, value = part.partition("=")
        items = [v.strip() for v in value.split(",") if v.strip()]
        parsed = []
        for item in items:
            try:
                parsed.append(int(item))
            except ValueError:
                parsed.append(item)
        out[key.strip()] = parsed
    return out


def _sweep_torus_knot_covers(params: dict) -> list[dict]:
    q_list = params.get("q", [3, 5, 7, 9, 11])
    r_list = params.get("r")
    pairs = []
    for index, q in enumerate(q_list):
        if q % 2 == 0 or q < 3:
            raise SchemaError(f"cover sweep needs odd q >= 3, got {q}")
        if r_list is None:
            r = q + 2
        else:
            r = r_list[index % len(r_list)]
        if r % 2 == 0 or gcd(q, r) != 1:
            raise SchemaError(f"({q}, {r}) must be odd and coprime")
        pairs.append((q, r))
    instances = []
    for q, r in pairs:
        knot = torus_knot_seifert(q, r)
        determinant = abs(alexander_polynomial(knot)(-1))
        sig = tl_signature(knot, Fraction(1, 2))
        data = BranchedQuotientData(2, 0, signature_spectrum(knot, 2))
        lam = furuta_ohta_mapping_torus(data)
        mubar = mubar_double_branched(knot)
        # the double cover bounds the even form S + S^T, so its Rohlin
        # invariant is sign/8 mod 2
        rho = (sig // 8) % 2
        instances.append(
            {
                "instance": f"double cover over T({q},{r})",
                "q": q,
                "r": r,
                "cover_is_homology_sphere": 1 if determinant == 1 else 0,
                "lambda_fo": _frac_json(lam),
                "mubar": _frac_json(mubar),
                "rho": rho,
                "congruent": 1 if lam.denominator == 1 and int(lam) % 2 == rho else 0,
                "mubar_agrees": 1 if mubar == lam else 0,
            }
        )
    return instances


def _sweep_free_quotients(params: dict) -> list[dict]:
    q_list = params.get("q", [1, 3, 5])
    knots = [
        ("torus(3,5)", torus_knot_seifert(3, 5)),
        ("torus(3,7)", torus_knot_seifert(3, 7)),
        ("untwisted_double", preset_knot("untwisted_double")),
    ]
    instances = []
    for name, knot in knots:
        sig = tl_signature(knot, Fraction(1, 2))
        if sig % 8:
            raise SchemaError(f"{name}: signature {sig} not divisible by 8")
        arf = arf_invariant(knot)
        for q in q_list:
            if gcd(2, q) != 1:
                raise SchemaError(f"free quotient of order 2 needs odd q, got {q}")
            data = FreeQuotientData(2, q, 0, knot)
            lam = equivariant_casson_free(data)
            # rho of the cover: rho of the double branched cover plus
            # q * arf of the lifted knot (arf is preserved by the lift)
            rho = (sig // 8 + q * arf) % 2
            relation = branched_free_relation(data, matched_cover_data(data))
            instances.append(
                {
                    "instance": f"free quotient: (2/{q})-surgery on {name}",
                    "knot": name,
                    "q": q,
                    "lambda_fo": _frac_json(lam),
                    "rho": rho,
                    "congruent": (
                        1 if lam.denominator == 1 and int(lam) % 2 == rho else 0
                    ),
                    "cover_relation": relation,
                }
            )
    return instances


def _sweep_surgery_chains(params: dict) -> list[dict]:
    count = params.get("count", [100])[0]
    steps = params.get("steps", [5])[0]
    seed = params.get("seed", [0])[0]
    rng = random.Random(seed)
    pool = [
        preset_knot("left_trefoil"),
        preset_knot("right_trefoil"),
        preset_knot("figure_eight"),
        preset_knot("untwisted_double"),
        torus_knot_seifert(2, 5),
        torus_knot_seifert(3, 4),
    ]
    instances = []
    for index in range(count):
        chain = SurgeryPresentation(
            [
                (rng.choice(pool), rng.choice([-3, -2, -1, 1, 2, 3]))
                for _ in range(rng.randint(0, steps))
            ]
        )
        result = check_casson_rohlin(chain)
        instances.append(
            {
                "instance": f"chain #{index}",
                "steps": len(chain),
                "casson": result.casson,
                "rohlin": result.rohlin,
                "congruent": result.congruent,
            }
        )
    return instances


def _sweep_three_forms(params: dict) -> list[dict]:
    rings = [
        ("product ring, triple form 0", product_ring(ThreeTorusForm(0))),
        ("product ring, triple form 1", product_ring(ThreeTorusForm(1))),
        ("T4 exterior ring", torus4_ring()),
    ]
    instances = []
    for name, ring in rings:
        determinant = det4(ring)
        admissible_count = 0
        failures = 0
        for w in range(1, 64):
            if not (admissible(ring, w) and bundle_exists(ring, w)):
                continue
            admissible_count += 1
            if donaldson_mod2(ring, w) != determinant:
                failures += 1
        instances.append(
            {
                "instance": name,
                "det4": determinant,
                "admissible_w": admissible_count,
                "parity_failures": failures,
                "congruent": 1 if failures == 0 else 0,
            }
        )
    return instances


_FAMILIES = {
    "torus-knot-covers": _sweep_torus_knot_covers,
    "free-quotients": _sweep_free_quotients,
    "surgery-chains": _sweep_surgery_chains,
    "three-forms": _sweep_three_forms,
}


def cmd_sweep(family: str, range_spec: str | None) -> tuple[dict, int]:
    if family not in _FAMILIES:
        raise SchemaError(
            f"unknown family {family!r}; available: {sorted(_FAMILIES)}"
        )
    params = _parse_range(range_spec)
    instances = _FAMILIES[family](params)
    passed = sum(1 for inst in instances if inst.get("congruent", 1) == 1)
    failed = len(instances) - passed
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "sweep",
        "family": family,
        "range": params,
        "input_digest": input_digest({"family": family, "range": params}),
        "instances": instances,
        "summary": {
            "instances": len(instances),
            "congruence_passes": passed,
            "congruence_failures": failed,
        },
    }
    return payload, (2 if failed else 0)


def _render_sweep_human(payload: dict) -> str:
    lines = [f"sweep: {payload['family']}"]
    for inst in payload["instances"]:
        status = "ok" if inst.get("congruent", 1) == 1 else "CONGRUENCE FAIL"
        fields = ", ".join(
            f"{k}={v}" for k, v in inst.items() if k not in ("instance", "congruent")
        )
        lines.append(f"  {inst['instance']}: {fields} [{status}]")
    summary = payload["summary"]
    lines.append(
        f"summary: {summary['congruence_passes']}/{summary['instances']} congruences hold"
    )
    return "\n".join(lines)


# --- entry point ---

_COMMANDS = {
    "knot": ("knot", cmd_knot),
    "sphere": ("sphere", cmd_sphere),
    "mapping-torus": ("mapping_torus", cmd_mapping_torus),
    "floer": ("floer", cmd_floer),
    "torus4": ("torus4", cmd_torus4),
    "circle-bundle": ("circle_bundle", cmd_circle_bundle),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casson4",
        description="exact Casson-type invariants and congruence checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in _COMMANDS:
        p = sub.add_parser(command, help=f"run the {command} computation")
        p.add_argument("--input", required=True, help="path to a JSON input file")
        p.add_argument(
            "--format", choices=("human", "json"), default="human",
            help="output format (json is the canonical machine format)",
        )
    p = sub.add_parser("sweep", help="evaluate a family and check congruences")
    p.add_argument("--family", required=True, help=f"one of {sorted(_FAMILIES)}")
    p.add_argument("--range", default=None, help="family parameters, e.g. 'q=3,5,7'")
    p.add_argument("--format", choices=("human", "json"), default="human")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            payload, code = cmd_sweep(args.family, args.range)
            if args.format == "json":
                print(json.dumps(payload, sort_keys=True, indent=2))
            else:
                print(_render_sweep_human(payload))
            return code
        schema_name, handler = _COMMANDS[args.command]
        data = load_input(args.input, schema_name)
        report, code = handler(data)
        print(report.render_json() if args.format == "json" else report.render_human())
        return code
    except (Casson4Error, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

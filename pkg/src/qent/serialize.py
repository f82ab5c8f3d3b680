"""JSON serialization for elements, density operators, and check reports.

All complex numbers are written as two-entry [re, im] arrays; nothing is
string-encoded.  Element payloads carry q and tol in their header so a file
fully determines the algebra it lives in.
"""

from __future__ import annotations

import json

from .algebra import AlgebraParams, Element, Monomial, PLAIN, STAR
from .entangle import PDReport
from .fourier import DensityOp
from .hopf import MultiElement


def complex_pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _from_pair(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def _mono_record(mono: Monomial) -> dict:
    return {"sector": mono.sector, "k": mono.k, "m": mono.m, "n": mono.n}


def _mono_from_record(rec) -> Monomial:
    sector = rec["sector"]
    if sector not in (PLAIN, STAR):
        raise ValueError(f"unknown sector {sector!r}")
    return Monomial(sector, int(rec["k"]), int(rec["m"]), int(rec["n"]))


def element_to_dict(x: Element) -> dict:
    terms = []
    for mono in sorted(x.terms, key=lambda m: (m.sector, m.k, m.m, m.n)):
        rec = _mono_record(mono)
        rec["coeff"] = complex_pair(x.terms[mono])
        terms.append(rec)
    return {"q": x.params.q, "tol": x.params.tol, "terms": terms}


def element_from_dict(data) -> Element:
    params = AlgebraParams(q=float(data["q"]), tol=float(data["tol"]))
    terms = {}
    for rec in data["terms"]:
        mono = _mono_from_record(rec)
        terms[mono] = terms.get(mono, 0j) + _from_pair(rec["coeff"])
    return Element(params, terms)


def multielement_to_dict(x: MultiElement) -> dict:
    terms = []
    for tup in sorted(x.terms, key=lambda t: tuple((m.sector, m.k, m.m, m.n) for m in t)):
        terms.append({
            "monomials": [_mono_record(m) for m in tup],
            "coeff": complex_pair(x.terms[tup]),
        })
    return {"legs": x.legs, "q": x.params.q, "tol": x.params.tol, "terms": terms}


def multielement_from_dict(data) -> MultiElement:
    params = AlgebraParams(q=float(data["q"]), tol=float(data["tol"]))
    legs = int(data["legs"])
    terms = {}
    for rec in data["terms"]:
        tup = tuple(_mono_from_record(r) for r in rec["monomials"])
        terms[tup] = terms.get(tup, 0j) + _from_pair(rec["coeff"])
    return MultiElement(params, legs, terms)


def densityop_to_dict(rho: DensityOp) -> dict:
    entries = [complex_pair(z) for z in rho.matrix.reshape(-1)]
    return {"dims": list(rho.dims), "entries": entries}


def densityop_from_dict(data) -> DensityOp:
    n, m = (int(d) for d in data["dims"])
    flat = [_from_pair(pair) for pair in data["entries"]]
    if len(flat) != (n * m) ** 2:
        raise ValueError(f"expected {(n * m) ** 2} matrix entries, got {len(flat)}")
    import numpy as np

    return DensityOp((n, m), np.array(flat, dtype=complex).reshape(n * m, n * m))


def pdreport_to_dict(report: PDReport) -> dict:
    return {
        "verdict": report.verdict,
        "per_block": [
            {"label": label, "min_eigenvalue": value}
            for label, value in report.per_block.items()
        ],
        "support_residual": report.support_residual,
        "witness": multielement_to_dict(report.witness) if report.witness is not None else None,
    }


def parse_payload(data):
    """Dispatch a decoded JSON payload to the matching value type."""
    if "dims" in data:
        return densityop_from_dict(data)
    if "legs" in data:
        return multielement_from_dict(data)
    if "terms" in data:
        return element_from_dict(data)
    raise ValueError("unrecognized payload (expected a density-operator or element file)")


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")

"""JSON round trip for constructed polynomials (exact decimal strings)."""

from fractions import Fraction

from ..numerics.rational import RationalPoly
from .construct import Type1Triple, Type2Triple
from .scaled import ScaledFamily


def triple_to_json(t):
    if isinstance(t, Type1Triple):
        return {
            "family": "type1",
            "indices": list(t.indices),
            "polys": {k: p.to_json() for k, p in t.polys.items()},
        }
    out = {
        "family": "type2",
        "indices": list(t.indices),
        "normalization": t.normalization,
        "polys": {k: p.to_json() for k, p in t.polys.items()},
    }
    if t.scale != 1:
        out["scale"] = str(t.scale)
    return out


def triple_from_json(doc):
    polys = {k: RationalPoly.from_json(v) for k, v in doc["polys"].items()}
    indices = tuple(doc["indices"])
    if doc["family"] == "type1":
        return Type1Triple(polys["p"], polys["q"], polys["r"], indices)
    if doc["family"] == "type2":
        return Type2Triple(
            polys["a"], polys["b"], polys["c"], indices,
            doc.get("normalization"), Fraction(doc.get("scale", "1")),
        )
    raise ValueError(f"unknown family {doc['family']!r}")


def family_to_json(fam):
    return {
        "family": "type2_scaled",
        "indices": [fam.n] * 3,
        "normalization": "A_monic",
        "n": fam.n,
        "polys": {"A": fam.A.to_json(), "B": fam.B.to_json(), "C": fam.C.to_json()},
    }


def family_from_json(doc):
    p = doc["polys"]
    return ScaledFamily(
        doc["n"], RationalPoly.from_json(p["A"]), RationalPoly.from_json(p["B"]), RationalPoly.from_json(p["C"])
    )

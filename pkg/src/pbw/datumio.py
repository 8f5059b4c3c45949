"""JSON serialization of presentation data.

Top-level fields: theta, field, group, g, chi, L, heights, reds, redhats.
Unknown fields are rejected.  Scalar literals: an integer is a root exponent
(zeta^k), a string "a/b" is an exact rational, a list of "a/b" strings of
length phi(m) is a cyclotomic coefficient vector.
"""

from __future__ import annotations

import json

from .algebra import Datum, GroupSpec, NCPoly
from .scalars import CycloField, PrimeField, parse_scalar_literal, scalar_literal
from .words import format_word, parse_word

_TOP_FIELDS = {"theta", "field", "group", "g", "chi", "L", "heights", "reds", "redhats"}


class DatumFormatError(ValueError):
    pass


def _require(cond, msg):
    if not cond:
        raise DatumFormatError(msg)


def datum_from_dict(data: dict) -> Datum:
    _require(isinstance(data, dict), "datum must be a JSON object")
    unknown = set(data) - _TOP_FIELDS
    _require(not unknown, f"unknown fields: {sorted(unknown)}")
    missing = _TOP_FIELDS - set(data)
    _require(not missing, f"missing fields: {sorted(missing)}")

    theta = data["theta"]
    _require(isinstance(theta, int) and theta >= 1, "theta must be a positive integer")

    fspec = data["field"]
    _require(isinstance(fspec, dict) and len(fspec) == 1, "field must be {'cyclotomic': m} or {'prime': p}")
    if "cyclotomic" in fspec:
        field = CycloField(fspec["cyclotomic"])
    elif "prime" in fspec:
        field = PrimeField(fspec["prime"])
    else:
        raise DatumFormatError("field must be {'cyclotomic': m} or {'prime': p}")

    gspec = data["group"]
    _require(isinstance(gspec, dict) and set(gspec) <= {"torsion", "free_rank"}, "bad group spec")
    group = GroupSpec(tuple(gspec.get("torsion", ())), gspec.get("free_rank", 0))

    g_list = data["g"]
    _require(isinstance(g_list, list) and len(g_list) == theta, "g must list theta exponent vectors")
    g = tuple(group.element(v) for v in g_list)

    chi_list = data["chi"]
    _require(isinstance(chi_list, list) and len(chi_list) == theta, "chi must list theta characters")
    for v in chi_list:
        _require(
            isinstance(v, list) and len(v) == group.nfactors and all(isinstance(k, int) for k in v),
            "each character is a list of integer root exponents, one per group factor",
        )
    chi = tuple(tuple(v) for v in chi_list)

    L_words = [parse_word(w) for w in data["L"]]
    _require(len(set(L_words)) == len(L_words), "duplicate members in L")
    L = tuple(sorted(L_words))

    heights = {}
    for k, v in data["heights"].items():
        w = parse_word(k)
        if v == "inf":
            heights[w] = None
        else:
            _require(isinstance(v, int) and v >= 1, f"height of {k} must be a positive integer or 'inf'")
            heights[w] = v

    def parse_poly(obj, where):
        _require(isinstance(obj, list), f"{where} must be a list of terms")
        p = NCPoly()
        for t in obj:
            _require(isinstance(t, dict) and set(t) == {"word", "grp", "coeff"}, f"bad term in {where}")
            letters = tuple(parse_word(l) for l in t["word"])
            gel = group.element(t["grp"])
            coeff = parse_scalar_literal(t["coeff"], field)
            p.add_term((letters, gel), coeff)
        return p

    reds = {parse_word(k): parse_poly(v, f"reds[{k}]") for k, v in data["reds"].items()}
    redhats = {parse_word(k): parse_poly(v, f"redhats[{k}]") for k, v in data["redhats"].items()}

    return Datum(
        theta=theta, field=field, group=group, g=g, chi=chi, L=L,
        heights=heights, reds=reds, redhats=redhats,
    )


def datum_to_dict(d: Datum) -> dict:
    if isinstance(d.field, CycloField):
        fspec = {"cyclotomic": d.field.m}
    else:
        fspec = {"prime": d.field.p}

    def poly_terms(p):
        out = []
        for (U, g), c in sorted(p.terms.items()):
            out.append({
                "word": [format_word(u) for u in U],
                "grp": list(g),
                "coeff": scalar_literal(c),
            })
        return out

    return {
        "theta": d.theta,
        "field": fspec,
        "group": {"torsion": list(d.group.torsion), "free_rank": d.group.free_rank},
        "g": [list(v) for v in d.g],
        "chi": [list(v) for v in d.chi],
        "L": [format_word(u) for u in d.L],
        "heights": {format_word(u): ("inf" if n is None else n) for u, n in d.heights.items()},
        "reds": {format_word(w): poly_terms(p) for w, p in sorted(d.reds.items())},
        "redhats": {format_word(w): poly_terms(p) for w, p in sorted(d.redhats.items())},
    }


def load_datum(path) -> Datum:
    with open(path, encoding="utf-8") as f:
        return datum_from_dict(json.load(f))


def save_datum(d: Datum, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(datum_to_dict(d), f, indent=1, sort_keys=True)
        f.write("\n")

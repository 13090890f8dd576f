"""JSON character-table documents (format tag ``critgrp-table/1``).

Each value is one of

* an integer, e.g. ``-1``
* a rational ``{"num": 1, "den": 2}``
* a cyclotomic sum ``{"zeta_order": m, "coeffs": [c0, c1, ...]}`` meaning
  sum_k c_k * zeta_m^k, where each c_k is an integer or a rational object.

Writers emit cyclotomic coefficients in the reduced power basis, so a
document re-parses to a table equal to the original.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chartab import CharacterTable, ConjugacyClassInfo, validate
from .exactnum import Cyclotomic

FORMAT = "critgrp-table/1"

__all__ = ["FORMAT", "TableFormatError", "dump_table", "dumps_table", "load_table", "loads_table",
           "encode_value", "decode_value"]


class TableFormatError(ValueError):
    pass


def _encode_rational(q: Fraction):
    if q.denominator == 1:
        return q.numerator
    return {"num": q.numerator, "den": q.denominator}


def _decode_rational(obj) -> Fraction:
    if isinstance(obj, bool):
        raise TableFormatError(f"booleans are not numbers: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and set(obj) == {"num", "den"}:
        num, den = obj["num"], obj["den"]
        if not (isinstance(num, int) and isinstance(den, int)) or den == 0:
            raise TableFormatError(f"bad rational {obj!r}")
        return Fraction(num, den)
    raise TableFormatError(f"expected an integer or rational, got {obj!r}")


def encode_value(v: Cyclotomic):
    if v.is_rational():
        return _encode_rational(v.coeffs[0])
    return {"zeta_order": v.order, "coeffs": [_encode_rational(c) for c in v.coeffs]}


def decode_value(obj) -> Cyclotomic:
    if isinstance(obj, dict) and "zeta_order" in obj:
        m = obj["zeta_order"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise TableFormatError(f"bad zeta_order in {obj!r}")
        coeffs = obj.get("coeffs")
        if not isinstance(coeffs, list):
            raise TableFormatError(f"coeffs must be a list in {obj!r}")
        return Cyclotomic.from_powers(m, [_decode_rational(c) for c in coeffs])
    return Cyclotomic.rational(_decode_rational(obj))


def table_to_dict(table: CharacterTable) -> dict:
    doc = {
        "format": FORMAT,
        "group_name": table.group_name,
        "order": table.order,
        "exponent": table.exponent,
        "classes": [{"label": c.label, "size": c.size} for c in table.classes],
        "characters": [[encode_value(v) for v in row] for row in table.values],
    }
    if table.family is not None:
        doc["family"] = {"name": table.family[0], "parameter": table.family[1]}
    return doc


def table_from_dict(doc: dict, check: bool = True) -> CharacterTable:
    if not isinstance(doc, dict):
        raise TableFormatError("document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise TableFormatError(f"unsupported format {doc.get('format')!r}, expected {FORMAT!r}")
    try:
        classes = tuple(ConjugacyClassInfo(str(c["label"]), int(c["size"])) for c in doc["classes"])
        values = tuple(tuple(decode_value(v) for v in row) for row in doc["characters"])
        family = doc.get("family")
        if family is not None:
            family = (str(family["name"]), int(family["parameter"]))
        table = CharacterTable(str(doc["group_name"]), int(doc["order"]), int(doc["exponent"]),
                               classes, values, family)
    except TableFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise TableFormatError(f"malformed table document: {exc}") from exc
    if check:
        problems = validate(table)
        if problems:
            raise TableFormatError("table failed validation: " + "; ".join(problems))
    return table


def dumps_table(table: CharacterTable) -> str:
    """Pretty JSON with one class and one character row per line."""
    doc = table_to_dict(table)
    lines = ["{"]
    for key, val in doc.items():
        if key in ("classes", "characters"):
            items = [json.dumps(x, ensure_ascii=False) for x in val]
            body = ",\n".join("    " + x for x in items)
            lines.append(f'  "{key}": [\n{body}\n  ],')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(val, ensure_ascii=False)},")
    lines[-1] = lines[-1].rstrip(",")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_table(text: str, check: bool = True) -> CharacterTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"not JSON: {exc}") from exc
    return table_from_dict(doc, check)


def dump_table(table: CharacterTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_table(table))


def load_table(path, check: bool = True) -> CharacterTable:
    with open(path, encoding="utf-8") as fh:
        return loads_table(fh.read(), check)

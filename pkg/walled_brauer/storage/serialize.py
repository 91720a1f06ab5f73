"""
JSON and CSV codecs for diagrams, elements, cell labels and reports.

Every top-level report carries ``"schema": 1``. Cell labels on the
command line use the compact form ``lamL;lamR;l=K`` with partitions
written as comma-separated parts and the empty partition as ``0``.
Shapes are written ``r1,s1|r2,s2``.
"""

import csv
import io
import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from walled_brauer.algebra.coeff_ring import LaurentPoly, lp_from_json, lp_to_json
from walled_brauer.algebra.diagrams import AlgebraElement, WalledDiagram, validate
from walled_brauer.algebra.half_diagrams import HalfDiagram
from walled_brauer.errors import CellLabelError, WalledBrauerError
from walled_brauer.types import CellLabel, Partition, RestrictionTerm, SplitShape

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

_CELL_PATTERN = re.compile(r"^\s*([0-9,\s]*);([0-9,\s]*);\s*l\s*=\s*(\d+)\s*$")
_SHAPE_PATTERN = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*\|\s*(\d+)\s*,\s*(\d+)\s*$")


# --- text grammars ---------------------------------------------------------


def parse_partition(text: str) -> Partition:
    cleaned = text.strip()
    if cleaned in ("", "0", "∅"):
        return Partition()
    try:
        parts = tuple(int(piece) for piece in cleaned.split(","))
        return Partition(parts=parts)
    except ValueError as e:
        raise CellLabelError(f"Malformed partition {text!r}: {e}")


def parse_cell(text: str) -> CellLabel:
    """
    Parse ``"lamL;lamR;l=K"``, e.g. ``"2,1;0;l=1"``.

    Raises:
        CellLabelError: If the text does not follow the grammar.
    """
    match = _CELL_PATTERN.match(text)
    if not match:
        raise CellLabelError(f"Cell label {text!r} is not of the form 'lamL;lamR;l=K'")
    return CellLabel(l=int(match.group(3)), lam_l=parse_partition(match.group(1)), lam_r=parse_partition(match.group(2)))


def parse_shape(text: str) -> SplitShape:
    match = _SHAPE_PATTERN.match(text)
    if not match:
        raise CellLabelError(f"Shape {text!r} is not of the form 'r1,s1|r2,s2'")
    r1, s1, r2, s2 = (int(g) for g in match.groups())
    return SplitShape(r1=r1, s1=s1, r2=r2, s2=s2)


# --- JSON codecs -------------------------------------------------------------


def diagram_to_json(d: WalledDiagram) -> Dict[str, Any]:
    return {"r": d.r, "s": d.s, "pairs": [[a, b] for a, b in d.pairs]}


def diagram_from_json(payload: Dict[str, Any]) -> WalledDiagram:
    try:
        return validate(int(payload["r"]), int(payload["s"]), payload["pairs"])
    except (KeyError, TypeError) as e:
        raise WalledBrauerError(f"Malformed diagram JSON: {e}")


def element_to_json(x: AlgebraElement) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "r": x.r,
        "s": x.s,
        "terms": [{"diagram": diagram_to_json(d), "coeff": lp_to_json(c)} for d, c in x.items()],
    }


def element_from_json(payload: Dict[str, Any]) -> AlgebraElement:
    """Read an element; a bare diagram object is read with coefficient 1."""
    if "pairs" in payload:
        return AlgebraElement.from_diagram(diagram_from_json(payload))
    try:
        r, s = int(payload["r"]), int(payload["s"])
        terms: Dict[WalledDiagram, LaurentPoly] = {}
        for term in payload["terms"]:
            d = diagram_from_json(term["diagram"])
            terms[d] = terms.get(d, LaurentPoly.zero()) + lp_from_json(term["coeff"])
    except (KeyError, TypeError) as e:
        raise WalledBrauerError(f"Malformed element JSON: {e}")
    return AlgebraElement(r, s, terms)


def half_to_json(v: HalfDiagram) -> Dict[str, Any]:
    return {"r": v.r, "s": v.s, "arcs": [[i, j] for i, j in v.arcs]}


def half_from_json(payload: Dict[str, Any]) -> HalfDiagram:
    arcs = sorted(tuple(arc) for arc in payload["arcs"])
    return HalfDiagram(r=int(payload["r"]), s=int(payload["s"]), arcs=tuple(arcs))


def cell_to_json(cell: CellLabel) -> Dict[str, Any]:
    return {"l": cell.l, "lamL": list(cell.lam_l.parts), "lamR": list(cell.lam_r.parts)}


def shape_to_json(shape: SplitShape) -> Dict[str, int]:
    return {"r1": shape.r1, "s1": shape.s1, "r2": shape.r2, "s2": shape.s2}


def load_json(path: str) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise WalledBrauerError(f"Cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise WalledBrauerError(f"{path} is not valid JSON: {e}")


def load_element(path: str) -> AlgebraElement:
    return element_from_json(load_json(path))


# --- reports ---------------------------------------------------------------------


def restriction_report(shape: SplitShape, cell: CellLabel, terms: Sequence[RestrictionTerm]) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "shape": shape_to_json(shape),
        "cell": cell_to_json(cell),
        "terms": [
            {"cell1": cell_to_json(t.cell1), "cell2": cell_to_json(t.cell2), "mult": t.multiplicity}
            for t in terms
        ],
    }


def structure_table(
    shape: SplitShape, nu1: CellLabel, nu2: CellLabel, result: Dict[CellLabel, int]
) -> Dict[str, Any]:
    rows = sorted(result.items(), key=lambda item: item[0].sort_key)
    return {
        "schema": SCHEMA_VERSION,
        "shape": shape_to_json(shape),
        "nu1": cell_to_json(nu1),
        "nu2": cell_to_json(nu2),
        "result": [{"cell": cell_to_json(cell), "coeff": coeff} for cell, coeff in rows],
    }


def _csv(header: List[str], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def structure_csv(payload: Dict[str, Any]) -> str:
    """Columns: l, lamL, lamR, coeff."""
    rows = [
        [row["cell"]["l"], _parts_text(row["cell"]["lamL"]), _parts_text(row["cell"]["lamR"]), row["coeff"]]
        for row in payload["result"]
    ]
    return _csv(["l", "lamL", "lamR", "coeff"], rows)


def restriction_csv(payload: Dict[str, Any]) -> str:
    """Columns: l1, lamL1, lamR1, l2, lamL2, lamR2, mult."""
    rows = []
    for term in payload["terms"]:
        c1, c2 = term["cell1"], term["cell2"]
        rows.append([
            c1["l"], _parts_text(c1["lamL"]), _parts_text(c1["lamR"]),
            c2["l"], _parts_text(c2["lamL"]), _parts_text(c2["lamR"]),
            term["mult"],
        ])
    return _csv(["l1", "lamL1", "lamR1", "l2", "lamL2", "lamR2", "mult"], rows)


def _parts_text(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts) if parts else "0"


def to_json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write a report to ``path``, or to stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    Path(path).write_text(text)
    logger.info(f"Report written to {path}")

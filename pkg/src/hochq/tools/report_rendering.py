"""Render results as CSV, JSON and short human summaries."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence
from typing import Any

from pydantic import BaseModel

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex
from hochq.arithmetic.scalars import ScalarExponent
from hochq.cohomology.cup import CupProduct
from hochq.cohomology.enumeration import CohomologyClass, DegreeTotals, DimensionTable
from hochq.cohomology.families import FamilyParameters
from hochq.complexes.koszul import CochainKey
from hochq.errors import InstanceParseError
from hochq.models.schemas import (
    CenterRecord,
    ClassRecord,
    CupRecord,
    FamilyRecord,
    SignedScalarRecord,
    VerificationReport,
)

TABLE_COLUMNS = ("g_id", "m", "internal_degree", "dim", "invariant_dim")


def to_json(payload: BaseModel | Sequence[BaseModel] | dict[str, Any]) -> str:
    """Stable JSON: sorted keys, two-space indent, trailing newline."""
    if isinstance(payload, BaseModel):
        data: Any = payload.model_dump(mode="json")
    elif isinstance(payload, dict):
        data = payload
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def class_record(cls: CohomologyClass) -> ClassRecord:
    return ClassRecord(g=cls.g, alpha=list(cls.alpha.exps), beta=list(cls.beta.bits))


def class_from_record(instance: QInstance, record: ClassRecord) -> CohomologyClass:
    """Rebuild a class from its record; raises PreconditionError outside C_g."""
    n = instance.n
    if len(record.alpha) != n or len(record.beta) != n:
        raise InstanceParseError(f"alpha and beta must have {n} entries", "class")
    if any(a < 0 for a in record.alpha):
        raise InstanceParseError("alpha entries must be non-negative", "class.alpha")
    if any(b not in (0, 1) for b in record.beta):
        raise InstanceParseError("beta entries must be 0 or 1", "class.beta")
    instance.check_element(record.g)
    key = CochainKey(record.g, Monomial(tuple(record.alpha)), WedgeIndex(tuple(record.beta)))
    return CohomologyClass.checked(instance, key)


def parse_class(instance: QInstance, text: str) -> CohomologyClass:
    """A class given on the command line as JSON {g, alpha, beta}."""
    try:
        record = ClassRecord.model_validate_json(text)
    except ValueError as exc:
        raise InstanceParseError(str(exc).splitlines()[0], "class") from exc
    return class_from_record(instance, record)


def signed_scalar_record(sign: int, scalar: ScalarExponent) -> SignedScalarRecord:
    return SignedScalarRecord(sign=sign, free=list(scalar.free), torsion=scalar.torsion)


def cup_record(u: CohomologyClass, v: CohomologyClass, product: CupProduct) -> CupRecord:
    if product.result is None or product.scalar is None:
        return CupRecord(
            left=class_record(u), right=class_record(v), result="zero", reason=product.reason
        )
    return CupRecord(
        left=class_record(u),
        right=class_record(v),
        scalar=signed_scalar_record(product.sign, product.scalar),
        result=class_record(product.result),
    )


def table_csv(table: DimensionTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in table.rows():
        writer.writerow(row)
    return buffer.getvalue()


def classes_json(classes: Iterable[CohomologyClass]) -> str:
    return to_json([class_record(cls) for cls in classes])


def center_json(elements: Iterable[tuple[Monomial, int]]) -> str:
    return to_json([CenterRecord(alpha=list(alpha.exps), g=g) for alpha, g in elements])


def family_record(
    g: int, params: FamilyParameters, classes: dict[int, list[CohomologyClass]]
) -> FamilyRecord:
    return FamilyRecord(
        g=g,
        ell=params.ell,
        ell1=params.ell1,
        ell2=params.ell2,
        classes={m: [class_record(cls) for cls in found] for m, found in classes.items()},
    )


def totals_summary(totals: DegreeTotals) -> str:
    per_degree = ", ".join(f"HH^{m}={v}" for m, v in sorted(totals.per_degree.items()))
    invariant = ", ".join(f"HH^{m}={v}" for m, v in sorted(totals.invariant.items()))
    return f"totals: {per_degree}; invariant: {invariant}"


def report_summary(report: VerificationReport) -> str:
    """A few lines for a terminal; the JSON report carries the detail."""
    status = "PASSED" if report.passed else "FAILED"
    mismatched = sum(1 for piece in report.pieces if not piece.match)
    bad_projectors = sum(1 for proj in report.projectors if not proj.match)
    lines = [
        f"verification {status}",
        f"  instance: n={report.n} |G|={report.group_order} cap={report.degree_cap} "
        f"seed={report.seed}",
        f"  fields: Q(zeta_{report.target_order}), Q(zeta_{report.second_target_order})",
        f"  pieces: {len(report.pieces)} checked, {mismatched} mismatched, "
        f"{report.homotopy_checked} homotopy checks",
        f"  projector cells: {len(report.projectors)} checked, {bad_projectors} mismatched",
    ]
    failure = report.first_failure()
    if failure:
        lines.append(f"  first failure: {failure}")
    return "\n".join(lines) + "\n"

"""Load instance files into validated QInstance objects."""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from hochq.algebra.instance import DiagonalGroupSpec, QInstance, QMatrix, validate_instance
from hochq.arithmetic.scalars import ScalarExponent, ScalarGroupSpec
from hochq.errors import FiniteOrderError, InstanceParseError
from hochq.models.schemas import InstanceFile, ScalarRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedInstance:
    instance: QInstance
    instance_hash: str
    name: str | None = None
    degree_cap: int | None = None


def instance_hash(model: InstanceFile) -> str:
    """sha256 of the canonical JSON of the algebraic data (name and cap excluded)."""
    payload = model.model_dump(mode="json", exclude={"name", "degree_cap"})
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _scalar(spec: ScalarGroupSpec, record: ScalarRecord, field: str) -> ScalarExponent:
    free = record.free or [0] * spec.free_rank
    if len(free) != spec.free_rank:
        raise InstanceParseError(
            f"free part has length {len(free)}, expected {spec.free_rank}", field
        )
    return spec.scalar(free, record.torsion)


def _character_entry(
    spec: ScalarGroupSpec, entry: Union[int, ScalarRecord], field: str
) -> ScalarExponent:
    if isinstance(entry, int):
        return spec.root_of_unity(entry)
    if any(entry.free):
        raise FiniteOrderError("group character must have finite order (zero free part)", field)
    return spec.root_of_unity(entry.torsion)


def build_instance(model: InstanceFile) -> QInstance:
    """Turn a parsed instance file into a validated QInstance."""
    spec = ScalarGroupSpec(model.scalar_group.free_rank, model.scalar_group.torsion_order)
    n = model.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if len(model.q_exponents) != len(pairs):
        raise InstanceParseError(
            f"expected {len(pairs)} entries (pairs i < j), got {len(model.q_exponents)}",
            "q_exponents",
        )
    upper = {
        pair: _scalar(spec, record, f"q_exponents.{k}")
        for k, (pair, record) in enumerate(zip(pairs, model.q_exponents))
    }
    q = QMatrix.from_upper(spec, n, upper)

    generators = []
    for k, generator in enumerate(model.group.generators):
        if len(generator) != n:
            raise InstanceParseError(
                f"generator has length {len(generator)}, expected {n}", f"group.generators.{k}"
            )
        generators.append(tuple(
            _character_entry(spec, entry, f"group.generators.{k}.{i}")
            for i, entry in enumerate(generator)
        ))
    group = DiagonalGroupSpec.generated(spec, n, generators)
    return validate_instance(q, group, spec)


def parse_instance(text: str) -> InstanceFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    try:
        return InstanceFile.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InstanceParseError(first["msg"], location) from exc


def load_instance(path: str | Path) -> LoadedInstance:
    """Parse, validate and hash an instance file."""
    file_path = Path(path)
    if not file_path.exists():
        raise InstanceParseError(f"instance file not found: {file_path}")
    model = parse_instance(file_path.read_text(encoding="utf-8"))
    instance = build_instance(model)
    digest = instance_hash(model)
    logger.info(
        "Loaded instance %s: n=%d |G|=%d hash=%s",
        model.name or file_path.name, instance.n, instance.group_order, digest[:12],
    )
    return LoadedInstance(
        instance=instance, instance_hash=digest, name=model.name, degree_cap=model.degree_cap
    )

"""Command-line entry point for hochq."""

from __future__ import annotations

import argparse
import logging
import random
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import structlog

from hochq.cohomology.cup import cup
from hochq.cohomology.enumeration import (
    center_basis,
    degree_totals,
    hh_basis,
    hh_dim_table,
    skew_center_basis,
)
from hochq.cohomology.families import family_parameters, two_variable_families
from hochq.complexes.bar import relation_membership, verify_chain_map, verify_q_pi_peel
from hochq.config import settings
from hochq.errors import HochqError, InstanceParseError
from hochq.models.schemas import ChainMapRecord, MembershipRecord, VerificationReport
from hochq.oracle.verifier import verify_instance
from hochq.services.result_cache import ResultCache
from hochq.tools.instance_loader import LoadedInstance, build_instance, load_instance
from hochq.tools.random_instances import random_torsion_instance
from hochq.tools.report_rendering import (
    center_json,
    class_record,
    classes_json,
    cup_record,
    family_record,
    parse_class,
    report_summary,
    table_csv,
    to_json,
    totals_summary,
)

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _resolve_log_level(level_name: str) -> int:
    return getattr(logging, level_name.upper(), logging.INFO)


def _configure_logging() -> None:
    logging.basicConfig(level=_resolve_log_level(settings.log_level), stream=sys.stderr)
    if structlog.is_configured():
        return
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


@dataclass
class CommandOutcome:
    artifact: str
    exit_code: int = EXIT_OK


@dataclass
class CommandContext:
    args: argparse.Namespace
    cache: ResultCache
    loaded: LoadedInstance | None = None

    @property
    def require_instance(self) -> LoadedInstance:
        if self.loaded is None:
            raise InstanceParseError("this command needs --instance PATH", "--instance")
        return self.loaded

    @property
    def cap(self) -> int:
        if self.args.cap is not None:
            return int(self.args.cap)
        if self.loaded is not None and self.loaded.degree_cap is not None:
            return self.loaded.degree_cap
        return settings.default_degree_cap

    @property
    def seed(self) -> int:
        return settings.default_seed if self.args.seed is None else int(self.args.seed)

    @property
    def workers(self) -> int:
        return settings.oracle_max_workers if self.args.workers is None else int(self.args.workers)

    def cached(self, command: str, params: dict[str, Any], compute: Callable[[], str]) -> str:
        instance_hash = self.loaded.instance_hash if self.loaded else "random"
        hit = self.cache.get(instance_hash, command, params)
        if hit is not None:
            return hit
        artifact = compute()
        self.cache.put(instance_hash, command, params, artifact)
        return artifact


def cmd_hh(ctx: CommandContext) -> CommandOutcome:
    instance = ctx.require_instance.instance
    cap = ctx.cap

    def compute() -> str:
        table = hh_dim_table(instance, cap)
        logger.info("Dimension table ready", summary=totals_summary(degree_totals(table)))
        return table_csv(table)

    return CommandOutcome(ctx.cached("hh", {"cap": cap}, compute))


def cmd_basis(ctx: CommandContext) -> CommandOutcome:
    instance = ctx.require_instance.instance
    g, m, cap = ctx.args.g, ctx.args.m, ctx.cap
    artifact = ctx.cached(
        "basis", {"cap": cap, "g": g, "m": m},
        lambda: classes_json(hh_basis(instance, g, m, cap)),
    )
    return CommandOutcome(artifact)


def cmd_cup(ctx: CommandContext) -> CommandOutcome:
    instance = ctx.require_instance.instance
    left = parse_class(instance, ctx.args.left)
    right = parse_class(instance, ctx.args.right)
    # keyed on the parsed records, not the raw argument text
    params = {
        "left": class_record(left).model_dump(mode="json"),
        "right": class_record(right).model_dump(mode="json"),
    }
    artifact = ctx.cached(
        "cup", params, lambda: to_json(cup_record(left, right, cup(instance, left, right)))
    )
    return CommandOutcome(artifact)


def cmd_center(ctx: CommandContext) -> CommandOutcome:
    instance = ctx.require_instance.instance
    cap, skew = ctx.cap, bool(ctx.args.skew)

    def compute() -> str:
        if skew:
            return center_json(skew_center_basis(instance, cap))
        return center_json((alpha, instance.identity) for alpha in center_basis(instance, cap))

    return CommandOutcome(ctx.cached("center", {"cap": cap, "skew": skew}, compute))


def cmd_families(ctx: CommandContext) -> CommandOutcome:
    instance = ctx.require_instance.instance
    g, cap = ctx.args.g, ctx.cap

    def compute() -> str:
        params = family_parameters(instance, g)
        classes = {m: two_variable_families(instance, g, m, cap) for m in range(3)}
        return to_json(family_record(g, params, classes))

    return CommandOutcome(ctx.cached("families", {"cap": cap, "g": g}, compute))


def cmd_verify(ctx: CommandContext) -> CommandOutcome:
    loaded = ctx.require_instance
    cap, seed = ctx.cap, ctx.seed
    params = {
        "cap": cap,
        "seed": seed,
        "homotopy_sample_size": settings.homotopy_sample_size,
        "margin": settings.specialization_margin,
    }

    def compute() -> str:
        report = verify_instance(
            loaded.instance,
            cap,
            seed=seed,
            max_workers=ctx.workers,
            homotopy_sample_size=settings.homotopy_sample_size,
            margin=settings.specialization_margin,
            max_field_degree=settings.max_field_degree,
            instance_hash=loaded.instance_hash,
        )
        return to_json(report)

    report = VerificationReport.model_validate_json(ctx.cached("verify", params, compute))
    artifact = to_json(report) if ctx.args.json else report_summary(report)
    return CommandOutcome(artifact, EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED)


def chainmap_record(n: int, m: int, trials: int, seed: int) -> ChainMapRecord:
    """Run the chain-map, relation-membership and q_pi peel checks on seeded instances."""
    rng = random.Random(seed)
    membership: list[MembershipRecord] = []
    for trial in range(trials):
        instance = build_instance(random_torsion_instance(rng, n, with_group=False))
        report = verify_chain_map(instance, m)
        if not report.success:
            first = list(report.first_failure) if report.first_failure else None
            return ChainMapRecord(
                n=n, m=m, trials=trials, seed=seed, success=False,
                first_failure=first, failing_trial=trial,
            )
        for position in range(m - 1):
            result = relation_membership(instance, m, position)
            if trial == 0 or not result.success:
                membership.append(MembershipRecord(
                    position=position, success=result.success,
                    first_failure=result.first_failure,
                ))
            if not result.success:
                return ChainMapRecord(
                    n=n, m=m, trials=trials, seed=seed, success=False,
                    failing_trial=trial, membership=membership,
                )
        indices = sorted(rng.sample(range(n), m))
        if not all(verify_q_pi_peel(instance, indices, i) for i in range(m)):
            return ChainMapRecord(
                n=n, m=m, trials=trials, seed=seed, success=False, failing_trial=trial,
                membership=membership, q_pi_peel_ok=False,
            )
    return ChainMapRecord(
        n=n, m=m, trials=trials, seed=seed, success=True, membership=membership
    )


def cmd_chainmap_check(ctx: CommandContext) -> CommandOutcome:
    n, m, trials, seed = ctx.args.n, ctx.args.m, ctx.args.trials, ctx.seed
    params = {"n": n, "m": m, "trials": trials, "seed": seed}
    artifact = ctx.cached(
        "chainmap-check", params, lambda: to_json(chainmap_record(n, m, trials, seed))
    )
    record = ChainMapRecord.model_validate_json(artifact)
    return CommandOutcome(artifact, EXIT_OK if record.success else EXIT_VERIFICATION_FAILED)


COMMANDS: dict[str, Callable[[CommandContext], CommandOutcome]] = {
    "hh": cmd_hh,
    "basis": cmd_basis,
    "cup": cmd_cup,
    "center": cmd_center,
    "families": cmd_families,
    "verify": cmd_verify,
    "chainmap-check": cmd_chainmap_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hochq",
        description=(
            "Hochschild cohomology of quantum symmetric algebras and their skew group algebras"
        ),
    )
    parser.add_argument("--instance", default=None, help="JSON instance file")
    parser.add_argument("--cap", type=int, default=None, help="Internal degree cap D")
    parser.add_argument("--seed", type=int, default=None, help="Seed for every sampled subset")
    parser.add_argument("--out", default=None, help="Write the artifact here instead of stdout")
    parser.add_argument("--no-cache", action="store_true", help="Bypass the result cache")
    parser.add_argument("--workers", type=int, default=None, help="Oracle worker threads")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("hh", help="Dimension table as CSV")

    basis = sub.add_parser("basis", help="Basis classes of HH^m_g as JSON")
    basis.add_argument("--g", type=int, required=True)
    basis.add_argument("--m", type=int, required=True)

    cup_parser = sub.add_parser("cup", help="Cup product of two classes")
    cup_parser.add_argument("--left", required=True, help='JSON {"g":..,"alpha":[..],"beta":[..]}')
    cup_parser.add_argument("--right", required=True)

    center = sub.add_parser("center", help="Center of A (or of A # G with --skew)")
    center.add_argument("--skew", action="store_true")

    verify = sub.add_parser("verify", help="Check the closed form against the oracle")
    verify.add_argument("--json", action="store_true", help="Emit the full JSON report")

    chain = sub.add_parser("chainmap-check", help="Check the chain map on random instances")
    chain.add_argument("--n", type=int, required=True)
    chain.add_argument("--m", type=int, required=True)
    chain.add_argument("--trials", type=int, default=20)

    families = sub.add_parser("families", help="Two-variable congruence families (N = 2)")
    families.add_argument("--g", type=int, required=True)
    return parser


def _emit(artifact: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(artifact)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(artifact, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging()
    enabled = settings.cache_enabled and not args.no_cache
    cache = ResultCache(Path(settings.cache_dir), enabled=enabled)
    log = logger.bind(command=args.command)
    try:
        loaded = load_instance(args.instance) if args.instance else None
        if loaded is not None:
            log = log.bind(instance_hash=loaded.instance_hash[:12])
        log.info("Command starting", debug=settings.debug)
        outcome = COMMANDS[args.command](CommandContext(args=args, cache=cache, loaded=loaded))
        _emit(outcome.artifact, args.out)
    except HochqError as exc:
        sys.stderr.write(f"hochq: error: {exc}\n")
        log.info("Command finished", exit_code=EXIT_USAGE)
        return EXIT_USAGE

    log.info("Command finished", exit_code=outcome.exit_code)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

"""Команда separate: различение двух входов тестами уточнения."""

import argparse
from enum import Enum
from typing import List, Optional

from base.config import OutputFormat
from base.data_structures import RunConfig
from base.dependencies import (
    add_pair_arguments,
    build_run_config,
    config_parent,
    dumps,
    emit,
    quantizer,
    resolve_documents,
    resolve_pair,
)
from base.exceptions import DomainError
from graphs.domain.models import Graph
from refinement.domain.models import SeparationVerdict, UpdateRule
from refinement.services.epnn import epnn_distinguish
from refinement.services.equi import equi_distinguish
from refinement.services.wl import wl_distinguish


class SeparationMode(Enum):
    """Тест различения."""

    WL1 = "wl1"
    EPNN = "epnn"
    EQUI = "equi"


def default_rules(config: RunConfig) -> List[UpdateRule]:
    """proof_rule и по одной случайной таблице на каждый seed."""
    return [UpdateRule.proof_rule()] + [UpdateRule.random_table(seed) for seed in config.seeds]


def parse_rules(names: Optional[List[str]], config: RunConfig) -> List[UpdateRule]:
    if not names:
        return default_rules(config)
    try:
        return [UpdateRule.parse(name) for name in names]
    except ValueError as e:
        raise DomainError(str(e)) from e


def _wl_verdict(args: argparse.Namespace, config: RunConfig) -> SeparationVerdict:
    if args.builtin:
        raise DomainError("wl1 mode compares graphs; builtin pairs are spectral")
    g1, g2 = resolve_documents(args, config.eig_tol)
    if not isinstance(g1, Graph) or not isinstance(g2, Graph):
        raise DomainError("wl1 mode requires two graph inputs")
    return wl_distinguish(g1, g2, config.max_rounds)


def cmd_separate(args: argparse.Namespace) -> int:
    """Вердикт в JSON; код выхода 0 при различении и 1 иначе."""
    config = build_run_config(args)
    if config.output_format is not OutputFormat.JSON:
        raise DomainError("separate emits JSON only")
    mode = SeparationMode(args.mode)
    if mode is SeparationMode.WL1:
        verdict = _wl_verdict(args, config)
    else:
        a, b = resolve_pair(args, config)
        q = quantizer(config)
        if mode is SeparationMode.EPNN:
            verdict = epnn_distinguish(a, b, config.max_rounds, q)
        else:
            verdict = equi_distinguish(a, b, parse_rules(args.rules, config), config.max_rounds, q)
    emit(dumps({"mode": mode.value, **verdict.to_dict()}), args.out)
    return 0 if verdict.separated else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "separate",
        parents=[config_parent()],
        help="decide whether a refinement test separates two inputs",
    )
    add_pair_arguments(parser)
    parser.add_argument(
        "--mode",
        choices=[m.value for m in SeparationMode],
        default=SeparationMode.EPNN.value,
    )
    parser.add_argument(
        "--rules",
        nargs="+",
        help="equi update rules: zero, proof_rule, random_table(<seed>)",
    )
    parser.add_argument("--out", help="output file (default stdout)")
    parser.set_defaults(func=cmd_separate)

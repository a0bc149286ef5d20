"""Команда counterexample: запись встроенных контрпримеров в файлы."""

import argparse
from pathlib import Path
from typing import Dict, List

from base.dependencies import dumps, emit
from base.exceptions import DomainError
from counterexamples.domain.models import CounterexampleName
from counterexamples.services.services import (
    gen_epnn_counterexample,
    gen_oge_pair,
    gen_orthonormal_counterexample,
    gen_twisted_counterexample,
    oge_report,
)
from graphs.adapters.parsers import serialize_matrix
from spectral.adapters.serializers import serialize_spectral_pair

PAIR_GENERATORS = {
    CounterexampleName.EPNN: (gen_epnn_counterexample, ("U.json", "V.json")),
    CounterexampleName.ORTHONORMAL: (gen_orthonormal_counterexample, ("U_tilde.json", "V_tilde.json")),
    CounterexampleName.TWISTED: (gen_twisted_counterexample, ("U_twisted.json", "V_twisted.json")),
}


def fixture_files(name: CounterexampleName) -> Dict[str, str]:
    """Содержимое файлов набора по именам."""
    if name is CounterexampleName.OGE:
        pair = gen_oge_pair()
        return {"L1.json": serialize_matrix(pair.L1), "L2.json": serialize_matrix(pair.L2)}
    generate, filenames = PAIR_GENERATORS[name]
    return {filename: serialize_spectral_pair(sp) for filename, sp in zip(filenames, generate())}


def cmd_counterexample(args: argparse.Namespace) -> int:
    name = CounterexampleName(args.name)
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise DomainError(f"cannot create {out}: {e}") from e
    written: List[str] = []
    for filename, text in fixture_files(name).items():
        emit(text, out / filename)
        written.append(str(out / filename))

    payload: dict = {"name": name.value, "files": written}
    if args.check:
        if name is not CounterexampleName.OGE:
            raise DomainError("--check is available for the oge fixture only")
        report = oge_report()
        payload["check"] = {**report.model_dump(), "laplacians_isomorphic": report.laplacians_isomorphic}
    emit(dumps(payload))
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("counterexample", help="write a builtin counterexample to files")
    parser.add_argument("name", choices=[n.value for n in CounterexampleName])
    parser.add_argument("--out", default=".", help="output directory")
    parser.add_argument("--check", action="store_true", help="verify the oge fixture with the oracles")
    parser.set_defaults(func=cmd_counterexample)

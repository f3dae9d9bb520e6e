# Copyright 2026 The biext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
""" The `biext` command line.

Every subcommand writes one JSON report (sorted keys, two-space indent) and exits with 0 on success, 1 when a
computation or a property check fails and 2 on invalid input.
"""
import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..config import Config
from ..exact.lattice import smith_invariants
from ..exceptions import COMPUTATION_ERRORS, BiextError, InvalidMHSError, MotiveFileError, SourceMismatchError
from ..hodge.mhs import tate
from ..hodge.profile import gr_profile
from ..hodge.validation import ValidationReport, validate_mhs
from ..homspace.biext import biext_from_map
from ..homspace.decompose import symmetric_split_report, thmotimes_rank_report
from ..homspace.hom import filtration_violations, hom_lattice, hom_multilinear
from ..homspace.pairing import is_unimodular, pairing_matrix, pullback_pairing, weil_pairing
from ..motives.builders import cartier_dual
from ..realize.de_rham import curvature
from ..realize.modn import commute_check, reduce_map_mod_n
from ..utils import logging
from .expressions import evaluate_expression
from .motive_file import MotiveFile, builtin_motive_file, canonical_json
from .suites import SUITES, run_suites


logger = logging.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

Outcome = Tuple[Dict[str, Any], int]


def _names(value: str) -> List[str]:
    names = [name.strip() for name in value.split(",") if name.strip()]
    if not names:
        raise argparse.ArgumentTypeError("expected a comma separated list of motive names")
    return names


def _modulus(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid modulus {value!r}")


def _seed(value: str) -> int:
    try:
        seed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {value!r}")
    if seed < 0:
        raise argparse.ArgumentTypeError("the seed must be non-negative")
    return seed


def _load(args: argparse.Namespace) -> MotiveFile:
    if args.builtin and args.file:
        raise MotiveFileError("Give either a motive file or --builtin, not both")
    if args.builtin:
        return builtin_motive_file()
    if not args.file:
        raise MotiveFileError("A motive file or --builtin is required")
    return MotiveFile.from_path(args.file)


def validate_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    motives = {}
    for name in motive_file.motives:
        try:
            report = validate_mhs(motive_file.motive(name))
        except InvalidMHSError as error:
            report = error.report or ValidationReport()
            if report.ok:
                report.add("builder", detail=str(error))
        motives[name] = report.to_dict()
    maps = {}
    for name in motive_file.maps:
        phi, sources, target = motive_file.map(name)
        maps[name] = {"violations": filtration_violations(hom_multilinear(sources, target), phi)}
        maps[name]["morphism"] = not maps[name]["violations"]
    ok = all(report["ok"] for report in motives.values())
    return {"ok": ok, "motives": motives, "maps": maps}, EXIT_OK if ok else EXIT_INVALID


def hom_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    lattice = hom_multilinear(motive_file.motives_named(args.sources), motive_file.motive(args.target))
    report = lattice.to_report()
    report["sources"] = list(args.sources)
    report["target"] = args.target
    if args.split_sym:
        report["split"] = symmetric_split_report(lattice).to_dict()
    return report, EXIT_OK


def dual_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    dual = cartier_dual(motive_file.motive(args.motive))
    report = dual.describe()
    report["motive"] = args.motive
    return report, EXIT_OK


def pairing_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    structure = motive_file.motive(args.motive)
    pairing = weil_pairing(structure)
    report: Dict[str, Any] = {
        "motive": args.motive,
        "weil_pairing": pairing.to_list(),
        "unimodular": is_unimodular(pairing_matrix(pairing)),
    }
    if args.self_dual:
        phi, sources, target = motive_file.map(args.self_dual)
        if len(sources) != 1 or sources[0] != structure or target != cartier_dual(structure):
            raise SourceMismatchError(f"Map '{args.self_dual}' is not a map {args.motive} -> {args.motive}*")
        hom_lattice(structure, target).require(phi, "pairing --self-dual")
        form = pullback_pairing(phi)
        gram = pairing_matrix(form)
        n = len(gram)
        report["self_duality"] = {
            "map": args.self_dual,
            "gram": [list(row) for row in gram],
            "morphism": hom_multilinear([structure, structure], tate(1, structure.context)).contains(form),
            "skew_symmetric": all(gram[a][b] == -gram[b][a] for a in range(n) for b in range(n)),
            "symmetric": all(gram[a][b] == gram[b][a] for a in range(n) for b in range(n)),
            "nondegenerate": len(smith_invariants(gram, n)) == n if n else True,
            "unimodular": is_unimodular(gram),
        }
    return report, EXIT_OK


def modn_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    phi, sources, target = motive_file.map(args.map)
    lattice = hom_multilinear(sources, target)
    reduced = reduce_map_mod_n(phi, lattice, args.n)
    commutes = commute_check(phi, lattice, args.n)
    report = {"map": args.map, "modulus": args.n, "reduced": reduced.to_list(), "commutes": commutes}
    return report, EXIT_OK if commutes else EXIT_FAILED


def curvature_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    phi, sources, target = motive_file.map(args.map)
    if len(sources) != 2:
        raise SourceMismatchError(f"Map '{args.map}' is not bilinear")
    report = curvature(biext_from_map(phi, hom_multilinear(sources, target)))
    document = report.to_dict()
    document["map"] = args.map
    return document, EXIT_OK if report.ok else EXIT_FAILED


def decompose_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    report = thmotimes_rank_report(motive_file.motives_named(args.sources), motive_file.motive(args.target))
    document = report.to_dict()
    document["equal"] = report.equal
    return document, EXIT_OK


def grprofile_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    structure = evaluate_expression(args.expr, motive_file.motive)
    return {"expression": args.expr, "rank": structure.rank, "gr_profile": gr_profile(structure).as_json()}, EXIT_OK


def check_command(motive_file: MotiveFile, args: argparse.Namespace) -> Outcome:
    if args.suite == "list":
        return {"suites": list(SUITES)}, EXIT_OK
    config = Config(seed=args.seed)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, motive_file, config)
    passed = all(result.passed for result in results)
    report = {"config": config.to_dict(), "passed": passed, "suites": [result.report() for result in results]}
    return report, EXIT_OK if passed else EXIT_FAILED


COMMANDS: Dict[str, Callable[[MotiveFile, argparse.Namespace], Outcome]] = {
    "validate": validate_command,
    "hom": hom_command,
    "dual": dual_command,
    "pairing": pairing_command,
    "modn": modn_command,
    "curvature": curvature_command,
    "decompose": decompose_command,
    "grprofile": grprofile_command,
    "check": check_command,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", nargs="?", help="Path to a JSON motive file.")
    common.add_argument("--builtin", action="store_true", help="Use the built-in motive file instead of a path.")
    common.add_argument("--output", help="Write the report to this path instead of stdout.")
    common.add_argument(
        "--verbosity", choices=["debug", "info", "warning", "error"], help="Level of the logs written to stderr."
    )

    parser = argparse.ArgumentParser(
        prog="biext", description="Exact Hom lattices, biextensions and realizations of 1-motives."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("validate", parents=[common], help="Validate every motive of a file.")

    hom = commands.add_parser("hom", parents=[common], help="Hom(M_1, ..., M_l; M) as an integer lattice.")
    hom.add_argument("--sources", type=_names, required=True, help="Comma separated source motives.")
    hom.add_argument("--target", required=True)
    hom.add_argument("--split-sym", action="store_true", help="Also split into symmetric and antisymmetric maps.")

    dual = commands.add_parser("dual", parents=[common], help="The Cartier dual of a motive.")
    dual.add_argument("--motive", required=True)

    pairing = commands.add_parser("pairing", parents=[common], help="The Weil pairing of a motive.")
    pairing.add_argument("--motive", required=True)
    pairing.add_argument("--self-dual", help="A map M -> M* to pull the pairing back along.")

    modn = commands.add_parser("modn", parents=[common], help="Reduce a map modulo n.")
    modn.add_argument("--map", required=True)
    modn.add_argument("--n", type=_modulus, required=True)

    curvature_parser = commands.add_parser("curvature", parents=[common], help="Curvature of a biextension.")
    curvature_parser.add_argument("--map", required=True)

    decompose = commands.add_parser("decompose", parents=[common], help="Pairwise decomposition of Hom ranks.")
    decompose.add_argument("--sources", type=_names, required=True)
    decompose.add_argument("--target", required=True)

    grprofile = commands.add_parser("grprofile", parents=[common], help="Graded ranks of a motive expression.")
    grprofile.add_argument("--expr", required=True, help="e.g. 'E*E/3 + dual(K)'.")

    check = commands.add_parser("check", parents=[common], help="Run property suites.")
    check.add_argument("--suite", choices=list(SUITES) + ["all", "list"], default="all")
    check.add_argument("--seed", type=_seed, default=0)
    return parser


def _error(error: Exception) -> Dict[str, Any]:
    return {"error": {"type": type(error).__name__, "message": str(error)}}


@dataclass
class CommandResult:
    """
    Exit code and report of one invocation.

    Args:
        code (`int`): 0, 1 or 2.
        document (`Dict[str, Any]`, *optional*): the report; `None` when argument parsing failed or help was shown.
        output (`str`, *optional*): where the report goes, stdout when unset.
    """

    code: int
    document: Optional[Dict[str, Any]] = None
    output: Optional[str] = None

    def payload(self) -> str:
        return canonical_json(self.document) + "\n"


def run_command(argv: Optional[List[str]] = None) -> CommandResult:
    """Parse `argv` and run the subcommand."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return CommandResult(exit_.code if isinstance(exit_.code, int) else EXIT_INVALID)
    if args.verbosity:
        logging.set_verbosity_from_name(args.verbosity)
        if args.verbosity == "debug":
            logging.enable_explicit_format()
        else:
            logging.reset_format()

    document: Dict[str, Any] = {"command": args.command}
    try:
        motive_file = _load(args)
        document["field"] = motive_file.context.to_dict()
        document["input_digest"] = motive_file.input_digest()
        logger.info(f"Running {args.command} on input {document['input_digest']}")
        report, code = COMMANDS[args.command](motive_file, args)
        document["report"] = report
    except COMPUTATION_ERRORS as error:
        logger.error(f"{args.command} failed: {error}")
        document.update(_error(error))
        code = EXIT_FAILED
    except BiextError as error:
        logger.error(f"Invalid input for {args.command}: {error}")
        document.update(_error(error))
        code = EXIT_INVALID
    return CommandResult(code, document, args.output)


def main(argv: Optional[List[str]] = None) -> int:
    result = run_command(argv)
    if result.document is None:
        return result.code
    if result.output:
        with open(result.output, "w", encoding="utf-8") as f:
            f.write(result.payload())
    else:
        sys.stdout.write(result.payload())
    return result.code

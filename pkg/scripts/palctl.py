# scripts/palctl.py
"""
palctl command line
Generates sequences, measures complexities, runs the period and class P
calculus and the verification suite. Data goes to stdout (or --out), logs to stderr.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

# Add project root to path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import ConstructionError, DomainError, InputError, PalctlError
from app.engines.complexity import (
    complexity_ratios,
    maximal_palindromes,
    measure_profile,
    palindrome_inventory,
    profile_to_csv,
)
from app.schemas.run_config import RunConfig
from app.sequences.zoo import make_source
from app.services.report_service import run_report
from app.services.verification import CHECKS, run_check
from app.utils.logger import bind_run_context, get_logger
from app.words.class_p import detect_class_p, normalize_class_p
from app.words.core import Alphabet, is_palindrome
from app.words.morphism_file import format_morphism_file, load_morphism_file
from app.words.periods import classify_palindrome, periods

logger = get_logger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# ------------------------------------------------------------
# ARGUMENTS
# ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="palctl", description="Palindrome complexity lab")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--source", required=True, help="builtin name, sturmian, rote, paperfolding, "
                                                        "rudin-shapiro or file:<morphism-file>")
    source.add_argument("--instructions", help="paperfolding instruction stream, e.g. 0(01)")
    source.add_argument("--cf", help="continued fraction stream, e.g. 1,(2,1)")

    measured = argparse.ArgumentParser(add_help=False)
    measured.add_argument("--max-k", "--k-max", dest="k_max", type=int, default=settings.DEFAULT_K_MAX)
    measured.add_argument("--budget", type=int, default=settings.PALCTL_BUDGET,
                          help="maximum prefix length examined (env PALCTL_BUDGET)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", dest="output_format", choices=["plain", "csv", "json"], default="plain")
    output.add_argument("--out", type=Path, help="write output to this file instead of stdout")

    generate = sub.add_parser("generate", parents=[source, output], help="print a prefix")
    generate.add_argument("--length", type=int, required=True)

    complexity = sub.add_parser("complexity", parents=[source, measured, output], help="fac(k) and pal(k)")
    complexity.add_argument("--ratios", action="store_true", help="emit k pal/fac and pal/sqrt(fac) rows")

    palindromes = sub.add_parser("palindromes", parents=[source, measured, output], help="palindromic factors")
    palindromes.add_argument("--maximal", action="store_true", help="only palindromes a w a never extends")

    period_cmd = sub.add_parser("periods", parents=[output], help="periods of a word")
    period_cmd.add_argument("--word", required=True, help="single-character tokens, or space-separated")

    classp = sub.add_parser("classp", parents=[output], help="class P decompositions of a morphism")
    classp.add_argument("--file", type=Path, required=True)
    classp.add_argument("--normalize", action="store_true")
    classp.add_argument("--test-length", type=int, default=settings.CLASSP_TEST_LENGTH)

    verify = sub.add_parser("verify", parents=[output], help="run one check")
    verify.add_argument("--max-k", "--k-max", dest="k_max", type=int, help="defaults depend on the check")
    verify.add_argument("--budget", type=int, default=settings.PALCTL_BUDGET)
    verify.add_argument("--check", required=True, choices=CHECKS)
    verify.add_argument("--source")
    verify.add_argument("--instructions")
    verify.add_argument("--cf")

    report = sub.add_parser("report", parents=[output], help="consolidated survey report")
    report.add_argument("--budget", type=int, default=settings.PALCTL_BUDGET)
    report.add_argument("--workers", type=int, default=settings.MAX_WORKERS)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        source=getattr(args, "source", None),
        k_max=getattr(args, "k_max", None) or settings.DEFAULT_K_MAX,
        budget=getattr(args, "budget", settings.PALCTL_BUDGET),
        output_format=args.output_format,
        out=args.out,
        instructions=getattr(args, "instructions", None),
        cf=getattr(args, "cf", None),
    )


def _emit(config: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if config.out:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        config.out.write_text(text, encoding="utf-8")
        logger.info("Output written", path=str(config.out), bytes=len(text.encode("utf-8")))
    else:
        sys.stdout.write(text)


def _word_alphabet(text: str) -> Alphabet:
    if not text.strip():
        raise InputError("--word must not be empty")
    tokens = text.split() if " " in text.strip() else list(text.strip())
    return Alphabet(letters=tuple(sorted(set(tokens))))


# ------------------------------------------------------------
# SUBCOMMANDS
# ------------------------------------------------------------

def cmd_generate(args: argparse.Namespace, config: RunConfig) -> int:
    source = make_source(config.source, config.instructions, config.cf)
    prefix = source.alphabet.render(source.prefix(args.length))
    if config.output_format == "json":
        _emit(config, json.dumps({"name": source.name, "length": args.length, "prefix": prefix}, indent=2))
    else:
        _emit(config, prefix)
    return EXIT_OK


def cmd_complexity(args: argparse.Namespace, config: RunConfig) -> int:
    source = make_source(config.source, config.instructions, config.cf)
    profile = measure_profile(source, config.k_max, config.budget)

    if args.ratios:
        rows = complexity_ratios(profile)
        if config.output_format == "json":
            _emit(config, json.dumps([row.model_dump() for row in rows], indent=2))
        else:
            sep = "," if config.output_format == "csv" else " "
            lines = [sep.join(["k", "fac", "pal", "k_pal_over_fac", "pal_squared_over_fac",
                               "pal_over_sqrt_fac", "stable"])]
            for row in rows:
                lines.append(sep.join(str(v) for v in [
                    row.k, row.fac, row.pal,
                    row.k_pal_over_fac or "", row.pal_squared_over_fac or "",
                    "" if row.pal_over_sqrt_fac is None else row.pal_over_sqrt_fac,
                    "true" if row.stable else "false",
                ]))
            _emit(config, "\n".join(lines))
        return EXIT_OK

    if config.output_format == "csv":
        _emit(config, profile_to_csv(profile))
    elif config.output_format == "json":
        _emit(config, profile.model_dump_json(indent=2))
    else:
        lines = [f"# {source.describe()} prefix_len={profile.prefix_len}", "k fac pal stable"]
        for k in range(1, profile.k_max + 1):
            lines.append(f"{k} {profile.fac[k]} {profile.pal[k]} {'true' if profile.stable[k] else 'false'}")
        _emit(config, "\n".join(lines))
    return EXIT_OK


def cmd_palindromes(args: argparse.Namespace, config: RunConfig) -> int:
    source = make_source(config.source, config.instructions, config.cf)
    render = source.alphabet.render

    if args.maximal:
        found = maximal_palindromes(source, config.k_max, config.budget)
        if config.output_format == "json":
            _emit(config, json.dumps([render(w) for w in found], indent=2))
        else:
            _emit(config, "\n".join(f"{len(w)} {render(w)}" for w in found))
        return EXIT_OK

    inventory = palindrome_inventory(source, config.k_max, config.budget)
    if config.output_format == "json":
        _emit(config, inventory.model_dump_json(indent=2))
    else:
        sep = "," if config.output_format == "csv" else " "
        lines = [sep.join(["length", "palindrome", "position"])]
        lines += [sep.join([str(len(p.word)), render(p.word), str(p.position)]) for p in inventory.palindromes]
        _emit(config, "\n".join(lines))
    return EXIT_OK


def cmd_periods(args: argparse.Namespace, config: RunConfig) -> int:
    alphabet = _word_alphabet(args.word)
    w = alphabet.parse(args.word)
    result: Dict[str, object] = {"word": alphabet.render(w), "period": periods(w)[0], "periods": periods(w)}
    if is_palindrome(w):
        record = classify_palindrome(w)
        result["class"] = record.palindrome_class
        if record.twin is not None:
            result["twin"] = alphabet.render(record.twin)

    if config.output_format == "json":
        _emit(config, json.dumps(result, indent=2))
    else:
        lines = [f"period: {result['period']}", "periods: " + " ".join(str(p) for p in result["periods"])]
        if "class" in result:
            lines.append(f"class: {result['class']}")
        if "twin" in result:
            lines.append(f"twin: {result['twin']}")
        _emit(config, "\n".join(lines))
    return EXIT_OK


def cmd_classp(args: argparse.Namespace, config: RunConfig) -> int:
    definition = load_morphism_file(args.file)
    m = definition.morphism

    if args.normalize:
        try:
            normalized = normalize_class_p(m, args.test_length)
        except DomainError as e:
            logger.error("Normalization not applicable", error=str(e))
            return EXIT_USAGE
        except ConstructionError as e:
            logger.error("Normalization failed", error=str(e))
            return EXIT_FAIL
        comment = f"normalized from {m.describe()}; power {normalized.power}"
        _emit(config, format_morphism_file(normalized.morphism, normalized.seed, comment))
        return EXIT_OK

    decompositions = detect_class_p(m)
    if config.output_format == "json":
        _emit(config, json.dumps([d.model_dump() for d in decompositions], indent=2))
    elif decompositions:
        _emit(config, "\n".join(d.describe(m) for d in decompositions))
    else:
        _emit(config, f"{m.describe()}: not in class P")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    report = run_check(
        args.check,
        source=config.source,
        k_max=args.k_max,
        budget=config.budget,
        instructions=config.instructions,
        cf=config.cf,
    )
    _emit(config, report.model_dump_json(indent=2))
    return report.exit_code


def cmd_report(args: argparse.Namespace, config: RunConfig) -> int:
    report = run_report(config.budget, args.workers)
    _emit(config, report.model_dump_json(indent=2))
    return EXIT_FAIL if report.summary["fail"] else EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], int]] = {
    "generate": cmd_generate,
    "complexity": cmd_complexity,
    "palindromes": cmd_palindromes,
    "periods": cmd_periods,
    "classp": cmd_classp,
    "verify": cmd_verify,
    "report": cmd_report,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv and run one subcommand

    Returns:
        0 on success or pass, 1 on a failed check, 2 on usage errors,
        malformed input and not-applicable checks
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = _run_config(args)
    except ValidationError as e:
        sys.stderr.write(f"error: {e.errors()[0]['msg']}\n")
        return EXIT_USAGE

    bind_run_context(subcommand=config.subcommand, source=config.source)
    try:
        return COMMANDS[args.subcommand](args, config)
    except PalctlError as e:
        logger.error("Command failed", error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

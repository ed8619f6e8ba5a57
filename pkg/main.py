import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

# ---------------------------------
# Cargar variables del entorno
# ---------------------------------
load_dotenv()

from mot2 import __version__
from mot2.config import BUILD_ID, configure_logging, write_report
from mot2.errors import Mot2Error

# ---------------------------------
# IMPORT DE COMANDOS
# ---------------------------------
from commands import blocks, export, verify

COMMANDS = (verify, blocks, export)

log = logging.getLogger("mot2.main")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mot2",
        description="Exact checks for biset bicategories, permutation bimodules, Mackey functors and blocks.",
    )
    parser.add_argument("--version", action="version", version=f"mot2 {__version__} (build {BUILD_ID})")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for mod in COMMANDS:
        mod.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sale con 2 en errores de uso
        return int(e.code or 0)

    configure_logging(getattr(args, "verbose", False))

    # ---------------------------------
    # Ejecutar comando
    # ---------------------------------
    try:
        cfg = args.make_config(args)
        report, lines = args.handler(cfg, args)
        for line in lines:
            print(line)
        path = write_report(report, cfg.json_path)
        if path is not None:
            log.info("report written to %s", path)
    except Mot2Error as e:
        print(f"[ERROR] {e.detail}", file=sys.stderr)
        return e.exit_code

    return 0 if report.get("status") == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())

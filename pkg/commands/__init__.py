"""
Sub-comandos de la CLI; cada modulo expone ``register(subparsers)``.
"""

import argparse

from mot2.config import RunConfig, build_config


def add_common_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="catalog name (S3, C4, ...) or inline presentation 'NAME = perm(N): ...'")
    p.add_argument("--group-file", dest="group_file", help="file whose first line is a presentation")
    p.add_argument("--field", help="Fp:<p>, F<p> or Q")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, help="random instances per sampled property")
    p.add_argument("--max-order", dest="max_order", type=int, help="closure bound for presentations")
    p.add_argument("--json", dest="json_path", help="write the full report here")
    p.add_argument("--timings", action="store_true", default=None, help="add per-check seconds to the report")
    p.add_argument("-v", "--verbose", action="store_true")


def config_from_args(args: argparse.Namespace, **extra) -> RunConfig:
    return build_config(
        group=args.group,
        group_file=args.group_file,
        field=args.field,
        seed=args.seed,
        samples=args.samples,
        max_order=args.max_order,
        json_path=args.json_path,
        timings=args.timings,
        **extra,
    )

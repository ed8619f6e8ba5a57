import argparse
from typing import Any, Dict, List, Tuple

from commands import add_common_arguments, config_from_args
from mot2.burnside import (
    brute_force_idempotents,
    center_group_algebra,
    crossed_burnside,
    motivic_decomposition_report,
)
from mot2.config import BUILD_ID, RunConfig
from mot2.report import envelope

NAME = "blocks"


def register(subparsers) -> None:
    p = subparsers.add_parser(NAME, help="block idempotents, rho_G and lifts")
    add_common_arguments(p)
    p.set_defaults(handler=run, make_config=config_from_args)


def _oracle(A, count: int) -> Dict[str, Any]:
    """Brute-force idempotent count against 2^(number of primitive idempotents)."""
    if not A.field.is_prime_field:
        return {"checked": False, "why": "no finite oracle over Q"}
    found = brute_force_idempotents(A)
    if found is None:
        return {"checked": False, "why": f"{A.field.p}^{A.dim} elements above the oracle limit"}
    return {"checked": True, "idempotents": len(found), "expected": 2 ** count, "ok": len(found) == 2 ** count}


def run(cfg: RunConfig, args: argparse.Namespace = None) -> Tuple[Dict[str, Any], List[str]]:
    G = cfg.load_group()
    F = cfg.field_obj
    data = motivic_decomposition_report(G, F, seed=cfg.seed)
    data["oracle"] = {
        "center": _oracle(center_group_algebra(G, F), len(data["blocks"])),
        "xburnside": _oracle(crossed_burnside(G, F), len(data["general_motives"])),
    }
    ok = data["ok"] and all(o.get("ok", True) for o in data["oracle"].values())
    lines = [
        f"{G.name} over {F.spec}: {len(data['blocks'])} block(s), "
        f"xBur dim {data['xburnside_dim']}, Z dim {data['center_dim']}, rho rank {data['rho_rank']}",
        f"lifts found: {sum(1 for l in data['lifts'] if l['lift_is_idempotent'])}/{len(data['lifts'])}",
    ]
    for name, o in data["oracle"].items():
        if o.get("checked"):
            lines.append(f"oracle {name}: {o['idempotents']} idempotents ({'ok' if o['ok'] else 'MISMATCH'})")
    meta = {"command": NAME, "group": G.name, "field": F.spec, "seed": cfg.seed}
    return envelope(data, meta, BUILD_ID, ok), lines

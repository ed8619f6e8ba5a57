"""
export: serializa un artefacto (grupo, tablas de algebra, rho, Mackey).
"""

import argparse
from enum import Enum
from typing import Any, Dict, List, Tuple

from commands import add_common_arguments, config_from_args
from mot2.burnside import burnside_subring, center_group_algebra, crossed_burnside, rho
from mot2.config import BUILD_ID, RunConfig, _safe_enum
from mot2.errors import UsageError
from mot2.groups import all_subgroups, conjugacy_classes_of_subgroups, presentation
from mot2.mackey import hom_decategorify
from mot2.permbimod import coset_gset
from mot2.report import envelope

NAME = "export"


class ExportKind(str, Enum):
    group = "group"
    xburnside = "xburnside"
    burnside = "burnside"
    rho = "rho"
    center = "center"
    mackey = "mackey"


def register(subparsers) -> None:
    p = subparsers.add_parser(NAME, help="serialize an algebraic artifact")
    p.add_argument("kind", help="one of: " + ", ".join(k.value for k in ExportKind))
    add_common_arguments(p)
    p.add_argument("--coset", type=int, default=0,
                   help="mackey: X = Y = G/K with K the n-th subgroup class (0 = trivial subgroup)")
    p.set_defaults(handler=run, make_config=_make_config)


def _make_config(args: argparse.Namespace) -> RunConfig:
    if _safe_enum(ExportKind, args.kind) is None:
        raise UsageError(f"export desconocido '{args.kind}'. Usa: {', '.join(k.value for k in ExportKind)}")
    return config_from_args(args)


def _group_payload(G) -> Dict[str, Any]:
    classes = conjugacy_classes_of_subgroups(G)
    return {
        "name": G.name,
        "presentation": presentation(G),
        "order": G.order,
        "elements": [G.cycles(g) for g in range(G.order)],
        "subgroups": len(all_subgroups(G)),
        "subgroup_classes": [{"order": H.order, "elements": list(H.elements)} for H in classes],
    }


def export_data(cfg: RunConfig, kind: ExportKind, coset: int = 0) -> Dict[str, Any]:
    G = cfg.load_group()
    F = cfg.field_obj
    if kind == ExportKind.group:
        return _group_payload(G)
    if kind == ExportKind.xburnside:
        A = crossed_burnside(G, F)
        return {"algebra": A.to_dict(), "tensor_shape": [A.dim, A.dim, A.dim]}
    if kind == ExportKind.burnside:
        B, _ = burnside_subring(G, F)
        return {"algebra": B.to_dict(), "tensor_shape": [B.dim, B.dim, B.dim]}
    if kind == ExportKind.center:
        Z = center_group_algebra(G, F)
        return {"algebra": Z.to_dict(), "tensor_shape": [Z.dim, Z.dim, Z.dim]}
    if kind == ExportKind.rho:
        return {"rho": rho(G, F).to_dict()}
    classes = conjugacy_classes_of_subgroups(G)
    if not 0 <= coset < len(classes):
        raise UsageError(f"--coset fuera de rango: 0..{len(classes) - 1}")
    X = coset_gset(G, classes[coset])
    return {"mackey": hom_decategorify(G, X, X, F).to_dict()}


def run(cfg: RunConfig, args: argparse.Namespace) -> Tuple[Dict[str, Any], List[str]]:
    kind = ExportKind(args.kind.strip().lower())
    data = export_data(cfg, kind, args.coset)
    meta = {"command": NAME, "kind": kind.value, "group": data.get("name") or cfg.group, "field": cfg.field}
    lines = [f"export {kind.value}: {', '.join(sorted(data))}"]
    if "tensor_shape" in data:
        lines.append(f"structure tensor {'x'.join(str(n) for n in data['tensor_shape'])}")
    if "rho" in data:
        lines.append(f"rho matrix {data['rho']['shape'][0]}x{data['rho']['shape'][1]}")
    return envelope(data, meta, BUILD_ID, True), lines

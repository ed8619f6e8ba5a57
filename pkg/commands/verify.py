"""
verify: corre las suites seleccionadas y agrega un reporte pass/fail.

Cada suite recorre su lista de checks sobre el grupo configurado (y, para
las propiedades muestreadas, sobre objetos aleatorios sembrados).
"""

import argparse
import logging
import random
from typing import Any, Callable, Dict, List, Tuple

from commands import add_common_arguments, config_from_args
from mot2.bisets import identity_biset
from mot2.burnside import (
    brute_force_idempotents,
    center_group_algebra,
    crossed_burnside,
    group_algebra_to_center,
    motivic_decomposition_report,
    primitive_idempotents,
    rho,
    rho_via_units,
)
from mot2.config import BUILD_ID, RunConfig, Suite
from mot2.groupoids import from_group
from mot2.groups import FiniteGroup, conjugacy_classes_of_subgroups, index
from mot2.mackey import (
    classical_yoshida_kernel_check,
    hom_decategorify,
    point_gset,
    verify_mackey_axioms,
)
from mot2.permbimod import (
    P_on_2cell,
    coset_gset,
    rank_formula_check,
    tensor_compatibility,
    verify_P_fullness,
    whiskered_matrix,
    yoshida_kernel_check,
)
from mot2.report import CheckLog, envelope
from mot2.sampling import random_biset, random_group, random_span, random_twocell, seeds
from mot2.scalars import Field
from mot2.spans import phi_comparison, realize, varphi_iso
from mot2.twocells import (
    TwoCell,
    adjunction_units,
    cohomological_2cell,
    frobenius_composite,
    hcompose,
    section_defect,
    triangle_composites,
    vcompose,
    whisker,
)

NAME = "verify"

log = logging.getLogger("mot2.verify")

# suites muestreadas con P: mas caras que las de biequivalencia
P_SAMPLES = 20
# kernel check por delta-celdas sobre Id_G solo para grupos chicos
DELTA_KERNEL_MAX_ORDER = 6
SMALL_GROUPS = ("C1", "C2", "C3", "C4", "K4", "S3")
# interchange tensa cuatro 1-celdas: grupos mas chicos
INTERCHANGE_GROUPS = ("C1", "C2", "C3", "K4")


def register(subparsers) -> None:
    p = subparsers.add_parser(NAME, help="run verification suites")
    add_common_arguments(p)
    p.add_argument("--suite", default=None, help="all or a comma list: " + ", ".join(s.value for s in Suite))
    p.set_defaults(handler=run, make_config=_make_config)


def _make_config(args: argparse.Namespace) -> RunConfig:
    cfg = config_from_args(args, suites=args.suite)
    cfg.require_suites()
    return cfg


def _subgroup_reps(G: FiniteGroup):
    return conjugacy_classes_of_subgroups(G)


# ---------------------------------
# Suites
# ---------------------------------
def suite_biequivalence(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    def round_trips():
        bad = []
        for s in seeds(cfg.seed, cfg.samples):
            S = random_biset(random.Random(s))
            f = varphi_iso(S)
            if not f.is_bijective():
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": cfg.samples}, "detail": {"failing_seeds": bad}}

    def phi_vs_joint():
        bad = []
        counts = {"jointly_faithful": 0, "not_jointly_faithful": 0}
        for s in seeds(cfg.seed + 1, cfg.samples):
            sp = random_span(random.Random(s))
            jf = sp.jointly_faithful
            counts["jointly_faithful" if jf else "not_jointly_faithful"] += 1
            if phi_comparison(sp).is_equivalence() != jf:
                bad.append(s)
        return {"ok": not bad, "dims": counts, "detail": {"failing_seeds": bad}}

    def right_free():
        bad = []
        for s in seeds(cfg.seed + 2, cfg.samples):
            sp = random_span(random.Random(s))
            free = realize(sp).is_right_free()
            # solo la implicacion: right-faithful => right-free
            if (sp.right_faithful and not free) or free != sp.u_kills_kernel_of_i:
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": cfg.samples}, "detail": {"failing_seeds": bad}}

    checks.run("biequivalence:varphi-iso", round_trips)
    checks.run("biequivalence:phi-equivalence-iff-jointly-faithful", phi_vs_joint)
    checks.run("biequivalence:realization-right-free", right_free)


def suite_adjunctions(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    for H in _subgroup_reps(G):
        tag = f"|H|={H.order}"

        def triangles(H=H):
            units = adjunction_units(H, F)
            comps = triangle_composites(units)
            failing = []
            for name, cell in comps.items():
                target = units.induction if name.endswith("induction") else units.restriction
                if cell != TwoCell.identity(target, F):
                    failing.append(name)
            return {"ok": not failing, "dims": {"index": units.index}, "detail": {"failing": failing}}

        def frobenius(H=H):
            units = adjunction_units(H, F)
            ok = frobenius_composite(units) == TwoCell.identity(units.id_H, F)
            return {"ok": ok, "dims": {"index": units.index}}

        def coh_kernel(H=H):
            coh = cohomological_2cell(H, F)
            return {"ok": P_on_2cell(coh).is_zero(), "dims": {"terms": len(coh.terms)}}

        checks.run(f"adjunctions:triangles {tag}", triangles)
        checks.run(f"adjunctions:frobenius {tag}", frobenius)
        checks.run(f"adjunctions:P-kills-cohomological {tag}", coh_kernel)
        idx = index(G, H)
        if not F.is_invertible_integer(idx):
            checks.skip(f"adjunctions:separability {tag}", f"[G:H]={idx} is not invertible in {F.spec}")
            continue

        def separability(H=H, idx=idx):
            defect = section_defect(H, F)
            expected = cohomological_2cell(H, F).scale(F.inv(F(idx)))
            units = adjunction_units(H, F)
            sigma_P = P_on_2cell(vcompose(units.eps_l, units.eta_r.scale(F.inv(F(idx)))))
            return {"ok": defect == expected and sigma_P.equals(P_on_2cell(TwoCell.identity(units.id_G, F))),
                    "dims": {"index": idx}, "detail": "eps^l o sigma = id modulo the cohomological 2-cell"}

        checks.run(f"adjunctions:separability {tag}", separability)


def suite_yoshida(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    reps = _subgroup_reps(G)
    for K in reps:
        for L in reps:
            tag = f"K={K.order},L={L.order}"

            def rank_formula(K=K, L=L):
                r = rank_formula_check(G, K, L, F)
                return {"ok": r["ok"], "dims": r}

            def fullness(K=K, L=L):
                r = verify_P_fullness(coset_gset(G, K), coset_gset(G, L), F)
                return {"ok": r["full"], "dims": r}

            checks.run(f"yoshida:rank-formula {tag}", rank_formula)
            checks.run(f"yoshida:P-full {tag}", fullness)

    def classical():
        r = classical_yoshida_kernel_check(G, F)
        return {"ok": r["ok"], "dims": {"objects": len(r["objects"]), "rounds": r["rounds"]}, "detail": r["pairs"]}

    checks.run("yoshida:classical-kernel", classical)

    if G.order <= DELTA_KERNEL_MAX_ORDER:
        def delta_kernel():
            idG = identity_biset(from_group(G))
            r = yoshida_kernel_check(idG, idG, F)
            ok = r["ideal_in_kernel"] and r["kernel_in_ideal"]
            return {"ok": ok, "dims": r}

        checks.run("yoshida:delta-kernel Id_G", delta_kernel)
    else:
        checks.skip("yoshida:delta-kernel Id_G", f"|G|={G.order} above {DELTA_KERNEL_MAX_ORDER}")

    n = min(cfg.samples, P_SAMPLES)

    def vertical():
        bad = []
        for s in seeds(cfg.seed + 3, n):
            rng = random.Random(s)
            groups = (random_group(rng, SMALL_GROUPS), random_group(rng, SMALL_GROUPS))
            U, V, W = (random_biset(rng, 2, groups) for _ in range(3))
            t1, t2 = random_twocell(U, V, F, rng), random_twocell(V, W, F, rng)
            if not P_on_2cell(vcompose(t2, t1)).equals(P_on_2cell(t2) @ P_on_2cell(t1)):
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": n}, "detail": {"failing_seeds": bad}}

    def horizontal():
        bad = []
        for s in seeds(cfg.seed + 4, n):
            rng = random.Random(s)
            A, B, C = (random_group(rng, SMALL_GROUPS) for _ in range(3))
            U, V = random_biset(rng, 2, (A, B)), random_biset(rng, 2, (A, B))
            X = random_biset(rng, 2, (C, A), right_free=True)
            t = random_twocell(U, V, F, rng)
            lhs = P_on_2cell(whisker(t, X, "left"))
            if not lhs.equals(whiskered_matrix(X, P_on_2cell(t), "left")):
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": n}, "detail": {"failing_seeds": bad}}

    def interchange():
        bad = []
        for s in seeds(cfg.seed + 6, n):
            rng = random.Random(s)
            A, B, C = (random_group(rng, INTERCHANGE_GROUPS) for _ in range(3))
            U1, V1 = (random_biset(rng, 2, (A, B), right_free=True) for _ in range(2))
            U2, V2 = (random_biset(rng, 2, (C, A), right_free=True) for _ in range(2))
            t1, t2 = random_twocell(U1, V1, F, rng), random_twocell(U2, V2, F, rng)
            if hcompose(t2, t1) != vcompose(whisker(t1, V2, "left"), whisker(t2, U1, "right")):
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": n}, "detail": {"failing_seeds": bad}}

    def tensor_compat():
        bad = []
        for s in seeds(cfg.seed + 5, n):
            rng = random.Random(s)
            A, B, C = (random_group(rng, SMALL_GROUPS) for _ in range(3))
            U, V = random_biset(rng, 2, (A, B)), random_biset(rng, 2, (B, C))
            r = tensor_compatibility(U, V, F)
            if r["quotient_dim"] != r["tensor_size"]:
                bad.append(s)
        return {"ok": not bad, "dims": {"samples": n}, "detail": {"failing_seeds": bad}}

    checks.run("yoshida:P-vertical-functoriality", vertical)
    checks.run("yoshida:P-horizontal-compatibility", horizontal)
    checks.run("yoshida:interchange", interchange)
    checks.run("yoshida:tensor-compatibility", tensor_compat)


def suite_mackey_axioms(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    reps = _subgroup_reps(G)
    for K in reps:
        for L in reps:
            def axioms(K=K, L=L):
                T = hom_decategorify(G, coset_gset(G, K), coset_gset(G, L), F)
                r = verify_mackey_axioms(T, additivity_with=point_gset(G))
                return {"ok": r["ok"], "dims": r["checked"], "detail": r["failures"]}

            checks.run(f"mackey-axioms:X=G/K(|K|={K.order}),Y=G/L(|L|={L.order})", axioms)


def suite_decat(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    reps = _subgroup_reps(G)

    def orbit_count():
        bad = []
        for K in reps:
            for L in reps:
                X, Y = coset_gset(G, K), coset_gset(G, L)
                T = hom_decategorify(G, X, Y, F)
                for H in T.subgroups:
                    orbits = set()
                    for v in Y.elements:
                        for u in X.elements:
                            orbits.add(min((Y.act_left(h, v), X.act_left(h, u)) for h in H.elements))
                    if T.dim(H) != len(orbits):
                        bad.append([K.order, L.order, H.order])
        return {"ok": not bad, "dims": {"pairs": len(reps) ** 2}, "detail": {"mismatches": bad}}

    def point_values():
        T = hom_decategorify(G, point_gset(G), point_gset(G), F)
        bad = []
        for H in T.subgroups:
            if T.dim(H) != 1:
                bad.append(H.order)
            for K in T.subgroups:
                if K.is_subgroup_of(H):
                    v = T.vectors(H)[0]
                    if T.transfer_vector(K, H, v) != [F(H.order // K.order) * c for c in v]:
                        bad.append([K.order, H.order])
        return {"ok": not bad, "dims": {"subgroups": len(T.subgroups)}, "detail": {"bad": bad}}

    checks.run("decat:dimension-is-orbit-count", orbit_count)
    checks.run("decat:trivial-module-transfer-is-index", point_values)


def suite_blocks(G: FiniteGroup, F: Field, cfg: RunConfig, checks: CheckLog) -> None:
    def decomposition():
        r = motivic_decomposition_report(G, F, seed=cfg.seed)
        return {"ok": r["ok"], "dims": {"blocks": len(r["blocks"]), "general": len(r["general_motives"]),
                                        "xburnside": r["xburnside_dim"], "center": r["center_dim"]}}

    def rho_units():
        A = crossed_burnside(G, F)
        Z = center_group_algebra(G, F)
        hom = rho(G, F, A, Z)
        bad = []
        for n, x in enumerate(A.labels):
            coeffs = rho_via_units(x.subgroup, x.element, F)
            if group_algebra_to_center(G, Z, coeffs) != hom.columns[n]:
                bad.append(n)
        return {"ok": not bad, "dims": {"basis": A.dim}, "detail": {"mismatches": bad}}

    def oracle():
        Z = center_group_algebra(G, F)
        found = brute_force_idempotents(Z)
        blocks = primitive_idempotents(Z, cfg.seed)
        return {"ok": found is not None and len(found) == 2 ** len(blocks),
                "dims": {"blocks": len(blocks), "idempotents": len(found or [])}}

    checks.run("blocks:decomposition", decomposition)
    checks.run("blocks:rho-via-units", rho_units)
    if F.is_prime_field and brute_force_idempotents(center_group_algebra(G, F)) is not None:
        checks.run("blocks:brute-force-oracle", oracle)
    else:
        checks.skip("blocks:brute-force-oracle", "oracle only over small finite fields")


SUITES: Dict[Suite, Callable[[FiniteGroup, Field, RunConfig, CheckLog], None]] = {
    Suite.biequivalence: suite_biequivalence,
    Suite.adjunctions: suite_adjunctions,
    Suite.yoshida: suite_yoshida,
    Suite.mackey_axioms: suite_mackey_axioms,
    Suite.decat: suite_decat,
    Suite.blocks: suite_blocks,
}


def run(cfg: RunConfig, args: argparse.Namespace = None) -> Tuple[Dict[str, Any], List[str]]:
    G = cfg.load_group()
    F = cfg.field_obj
    checks = CheckLog(timings=cfg.timings)
    for suite in cfg.require_suites():
        log.info("suite %s on %s over %s", suite.value, G.name, F.spec)
        SUITES[suite](G, F, cfg, checks)
    summary = checks.summary()
    lines = [f"{G.name} over {F.spec}: {summary['pass']} pass, {summary['fail']} fail, {summary['skipped']} skipped"]
    lines += [f"  FAIL {e['name']}" for e in checks.entries if e["status"] == "fail"]
    data = {"checks": checks.entries, "summary": summary}
    meta = {"command": NAME, "group": G.name, "field": F.spec, "seed": cfg.seed,
            "samples": cfg.samples, "suites": [s.value for s in cfg.suites]}
    return envelope(data, meta, BUILD_ID, checks.ok), lines

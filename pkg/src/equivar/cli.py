"""Command line interface.

Every subcommand prints a deterministic JSON document with a top-level
"schema" field (stable key order, no timestamps, so identical invocations
are byte-identical).  Exit codes: 0 on success, 1 when a requested
verification fails (the report then contains a minimal counterexample),
2 on argument errors.
"""

import argparse
import json
import os
import random
import re
import sys

from . import boxnorm, burnside, groups, hr, mackey, tambara, witt
from .burnside import BurnsideElement
from .gsets import coinduction_fixed_point_count, trivial_gset
from .mackey import mackey_iso, norm_quotient_presentation, realize


class CliError(Exception):
    """Argument-level error; maps to exit code 2."""


def parse_group(spec):
    """'dihedral:<m>' -> the dihedral group of order 2m."""
    parts = spec.split(":")
    if len(parts) != 2 or parts[0] != "dihedral":
        raise CliError("unsupported group %r; expected dihedral:<m>" % spec)
    try:
        m = int(parts[1])
    except ValueError:
        raise CliError("bad group parameter in %r" % spec)
    if m < 1:
        raise CliError("dihedral parameter must be >= 1")
    return groups.dihedral(m)


def parse_subgroup(g, s):
    """Subgroup names: e, G, mu_<k>, D_<2k> (underscores optional), ztau."""
    t = s.replace("_", "").lower()
    if t == "e":
        return (0,)
    if t == "g":
        return tuple(range(g.n))
    if t == "ztau":
        return g.zeta_tau_subgroup()
    try:
        if t.startswith("mu"):
            k = int(t[2:])
            if k < 1 or g.m % k:
                raise CliError("mu_%d is not a subgroup of dihedral:%d"
                               % (k, g.m))
            return g.mu(k)
        if t.startswith("d"):
            n2 = int(t[1:])
            if n2 % 2 or n2 < 2 or g.m % (n2 // 2):
                raise CliError("D_%d is not a standard subgroup of dihedral:%d"
                               % (n2, g.m))
            return g.d2(n2 // 2)
    except ValueError:
        pass
    raise CliError("cannot parse subgroup %r" % s)


_TERM_RE = re.compile(r"^(-?\d+)?\*?(?:\[G/([A-Za-z_0-9]+)\])?$")


def parse_class_expr(g, s):
    """Burnside elements in bracket syntax: '2*[G/D2] + [G/mu_3] - 1'.

    A bare integer n means n*[G/G].
    """
    total = BurnsideElement.zero(g)
    compact = s.replace(" ", "").replace("-", "+-")
    for term in filter(None, compact.split("+")):
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise CliError("cannot parse term %r in %r" % (term, s))
        k = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            total = total + BurnsideElement.one(g).scale(k)
        else:
            sub = parse_subgroup(g, m.group(2))
            ci = g.class_index_of(tuple(sorted(sub)))
            total = total + BurnsideElement.basis(g, ci).scale(k)
    return total


_RINGS = {
    "constZ": hr.esigma_constant_Z,
    "Z4": lambda: hr.from_ring_with_anti_involution(hr.ring_Zn(4)),
    "Z6": lambda: hr.from_ring_with_anti_involution(hr.ring_Zn(6)),
    "Zi": lambda: hr.from_ring_with_anti_involution(hr.ring_Zi()),
}


def parse_ring(name, need_presentation=False):
    if name not in _RINGS:
        raise CliError("unknown ring %r; choose from %s"
                       % (name, "/".join(sorted(_RINGS))))
    M = _RINGS[name]()
    if need_presentation and M.pres is None:
        raise CliError("ring %s is not additively cyclic; no span "
                       "presentation is available for this computation" % name)
    return M


def _level_name(g, rep):
    if hasattr(g, "subgroup_name"):
        return g.subgroup_name(rep)
    return g.describe_subgroup(rep)


def class_names(g):
    return [_level_name(g, c.representative) for c in g.subgroup_classes()]


def diagram_json(diag):
    """Serialized Lewis diagram: levels, res, tr, Weyl actions."""
    g = diag.group
    names = [_level_name(g, c.representative) for c in diag.classes]
    levels = []
    for i, name in enumerate(names):
        rank, torsion = diag.values[i].iso_invariants()
        levels.append({
            "subgroup": name,
            "invariant_factors": {"rank": rank, "torsion": torsion},
            "weyl": [{"element": g.labels[lab], "matrix": hom.matrix}
                     for lab, hom in diag.weyl.get(i, [])],
        })
    res = {"%s<%s" % (names[b], names[a]): diag.res[(a, b)].matrix
           for (a, b) in sorted(diag.res)}
    tr = {"%s<%s" % (names[a], names[b]): diag.tr[(a, b)].matrix
          for (a, b) in sorted(diag.tr)}
    return {"group": "dihedral:%d" % g.m if hasattr(g, "m") else str(g.n),
            "levels": levels, "res": res, "tr": tr}


def emit(doc):
    print(json.dumps(doc, indent=2))


def _element_json(b):
    return {"coeffs": list(b.coeffs), "describe": b.describe()}


# ---------------------------------------------------------------------------
# subcommands


def cmd_marks(args):
    g = parse_group(args.group)
    emit({
        "schema": "equivar/marks/v1",
        "group": args.group,
        "classes": class_names(g),
        "table": burnside.marks_matrix(g),
    })
    return 0


def cmd_burnside(args):
    g = parse_group(args.group)
    a = parse_class_expr(g, args.a)
    b = parse_class_expr(g, args.b)
    prod = a * b
    emit({
        "schema": "equivar/burnside/v1",
        "group": args.group,
        "classes": class_names(g),
        "a": _element_json(a),
        "b": _element_json(b),
        "product": _element_json(prod),
    })
    return 0


def cmd_coinduce(args):
    g = parse_group(args.group)
    h = parse_subgroup(g, args.sub)
    labels = [t for t in args.labels.split(",") if t]
    if not labels:
        raise CliError("--labels must name at least one point")
    hgrp, _ = g.subgroup_as_group(h)
    t = trivial_gset(hgrp, len(labels))
    marks = [coinduction_fixed_point_count(g, h, t, cls.representative)
             for cls in g.subgroup_classes()]
    dec = BurnsideElement.from_marks(g, marks)
    assert dec.is_effective()
    names = class_names(g)
    orbits = [{"stabilizer": names[i], "count": c}
              for i, c in enumerate(dec.coeffs) if c]
    emit({
        "schema": "equivar/coinduce/v1",
        "group": args.group,
        "sub": args.sub,
        "labels": labels,
        "fixed": marks[-1],
        "orbits": orbits,
    })
    return 0


def cmd_norm(args):
    g = parse_group(args.group)
    if g.m % 2 == 0:
        raise CliError("norm from D_2 needs an odd dihedral parameter")
    h = parse_subgroup(g, args.from_sub)
    if h != g.d2(1):
        raise CliError("only --from D2 is supported for the norm pipeline")
    if args.functor != "constZ":
        raise CliError("only --functor constZ is supported")
    pres, diag = boxnorm.norm_constant_z(g.m, budget=args.budget)
    doc = {
        "schema": "equivar/norm/v1",
        "group": args.group,
        "from": args.from_sub,
        "functor": args.functor,
        "diagram": diagram_json(diag),
    }
    code = 0
    if args.compare == "burnside-quotient":
        cert = mackey_iso(diag, realize(norm_quotient_presentation(g)))
        doc["compare"] = {"target": "A/(2 - [G/mu_m])", "status": cert.status}
        if cert.status != "isomorphic":
            code = 1
    emit(doc)
    return code


def cmd_reciprocity(args):
    g = parse_group(args.group)
    h = parse_subgroup(g, args.sub)
    expr = tambara.reciprocity_sum(g, h, budget=args.budget)
    doc = {
        "schema": "equivar/reciprocity/v1",
        "group": args.group,
        "sub": args.sub,
        "summands": len(expr.summands()),
        "text": expr.text(g),
    }
    if args.latex:
        doc["latex"] = expr.latex(g)
    code = 0
    if args.verify:
        failures = []
        inst = tambara.BurnsideInstance(g)
        hgrp = inst.level(h)[0]
        rng = random.Random(7)
        pairs = [(inst.one(h).scale(2), inst.one(h))]
        pairs += [tambara.random_effective_pair(hgrp, rng) for _ in range(3)]
        for a, b in pairs:
            got = tambara.evaluate(expr, inst, {"a": a, "b": b})
            want = tambara.brute_force_norm_of_sum(inst, h, a, b)
            if got != want:
                failures.append({
                    "instance": "burnside",
                    "a": _element_json(a), "b": _element_json(b),
                    "expected": _element_json(want), "got": _element_json(got),
                })
        for mod in (0, 4, 6):
            fp = tambara.FixedPointInstance(g, mod)
            for a, b in ((2, 1), (3, 2)):
                got = tambara.evaluate(expr, fp, {"a": a, "b": b})
                want = tambara.brute_force_norm_of_sum(fp, h, a, b)
                if got != want:
                    failures.append({
                        "instance": "fixed-points mod %d" % mod,
                        "a": a, "b": b, "expected": want, "got": got,
                    })
        doc["verified"] = not failures
        if failures:
            doc["counterexamples"] = failures
            code = 1
    emit(doc)
    return code


def cmd_hr0(args):
    if args.m < 1 or args.m % 2 == 0:
        raise CliError("--m must be an odd positive integer")
    M = parse_ring(args.ring, need_presentation=True)
    diag = hr.hr0(M, args.m, budget=args.budget)
    doc = {
        "schema": "equivar/hr0/v1",
        "ring": args.ring,
        "m": args.m,
        "diagram": diagram_json(diag),
    }
    code = 0
    if args.ring == "constZ":
        g = groups.dihedral(args.m)
        target = realize(norm_quotient_presentation(g)) if args.m > 1 \
            else realize(mackey.constant_Z())
        cert = mackey_iso(diag, target)
        doc["compare"] = {"target": "A/(2 - [G/mu_m])", "status": cert.status}
        if cert.status != "isomorphic":
            code = 1
    emit(doc)
    return code


def cmd_hr(args):
    if args.m < 1 or args.m % 2 == 0:
        raise CliError("--m must be an odd positive integer")
    if args.degree < 0:
        raise CliError("--degree must be >= 0")
    M = parse_ring(args.ring, need_presentation=True)
    top = args.degree + 1
    cx = hr.hr_complex(M, args.m, top_degree=top, budget=args.budget)
    checks = {
        "d_squared_zero": cx.check_d_squared(),
        "simplicial_identities": cx.check_simplicial_identities(),
    }
    hom = hr.hr_homology(M, args.m, top_degree=top, budget=args.budget)
    doc = {
        "schema": "equivar/hr/v1",
        "ring": args.ring,
        "m": args.m,
        "degree": args.degree,
        "complex_checks": checks,
        "homology": [{"degree": n, "diagram": diagram_json(hn)}
                     for n, hn in enumerate(hom[:args.degree + 1])],
    }
    code = 0 if all(checks.values()) else 1
    emit(doc)
    return code


def cmd_witt(args):
    if args.p % 2 == 0 or args.p < 3:
        raise CliError("--p must be an odd prime")
    if args.levels < 1:
        raise CliError("--levels must be >= 1")
    M = parse_ring(args.ring, need_presentation=True)
    K = args.levels - 1
    tower = witt.WittTower(M, args.p, K)
    doc = {
        "schema": "equivar/witt/v1",
        "ring": args.ring,
        "p": args.p,
        "levels": [
            {"k": k,
             "invariant_factors": [list(v.iso_invariants())
                                   for v in w.values]}
            for k, w in enumerate(tower.witt)],
    }
    ops = [t for t in (args.ops or "").split(",") if t]
    maps = {}
    for op in ops:
        if op not in ("R", "F", "V"):
            raise CliError("unknown operator %r; choose from R,F,V" % op)
        table = getattr(tower, op)
        maps[op] = [{"stage": k,
                     "bottom": table[k]["bottom"].matrix,
                     "top": table[k]["top"].matrix}
                    for k in sorted(table)]
    if maps:
        doc["maps"] = maps
    code = 0
    if K >= 1:
        fv = {k: tower.check_fv_is_p(k) for k in range(1, K + 1)}
        rf = {k: tower.check_rf_commute(k) for k in range(2, K + 1)}
        doc["fv_is_p"] = {str(k): v for k, v in sorted(fv.items())}
        doc["rf_commutes"] = {str(k): v for k, v in sorted(rf.items())}
        if not (all(fv.values()) and all(rf.values())):
            code = 1
    if args.coinvariants:
        co = witt.witt_coinvariants_F(M, args.p, K)
        co.pop("tower")
        doc["coinvariants_F"] = co
    if args.ring == "constZ":
        rep = witt.compare_with_classical(tower)
        doc["classical_comparison"] = rep
        if not rep["agrees"]:
            code = 1
    emit(doc)
    return code


# ---------------------------------------------------------------------------
# check: curated verification suite


def _check_coinduction_decomposition():
    for p in (3, 5, 7):
        g = groups.dihedral(p)
        h = g.d2(1)
        inst = tambara.BurnsideInstance(g)
        one = inst.one(h)
        val = tambara.brute_force_norm_of_sum(inst, h, one, one)
        grp, _, pos = inst.level(tuple(range(g.n)))
        c, d = burnside.c_p_d_p(p)
        d2_rel = tuple(sorted(pos[x] for x in h))
        exp = BurnsideElement.one(grp).scale(2) \
            + BurnsideElement.basis(grp, grp.class_index_of(d2_rel)).scale(2 * c) \
            + BurnsideElement.basis(grp, grp.class_index_of((pos[0],))).scale(d)
        if val != exp:
            return False, {"p": p, "expected": _element_json(exp),
                           "got": _element_json(val)}
    return True, {"primes": [3, 5, 7]}


def _check_reciprocity_dihedral():
    for p in (3, 5, 7):
        g = groups.dihedral(p)
        general = tambara.reciprocity_sum(g, g.d2(1)).canonical().key()
        direct = tambara.reciprocity_sum_dihedral(p).canonical().key()
        if general != direct:
            return False, {"p": p}
    return True, {"primes": [3, 5, 7]}


def _check_norm_theorem():
    for m in (3, 5, 9):
        try:
            boxnorm.norm_constant_z(m)
        except ArithmeticError as e:
            return False, {"m": m, "error": str(e)}
    return True, {"m": [3, 5, 9]}


def _check_conjugation_independence():
    cert = hr.conjugation_independence_check(3)
    return cert.status == "isomorphic", {"m": 3, "status": cert.status}


def _check_hr0_canonical():
    M = hr.esigma_constant_Z()
    for m in (1, 3):
        g = groups.dihedral(m)
        target = realize(norm_quotient_presentation(g)) if m > 1 \
            else realize(mackey.constant_Z())
        cert = mackey_iso(hr.hr0(M, m), target)
        if cert.status != "isomorphic":
            return False, {"m": m, "status": cert.status}
    return True, {"m": [1, 3]}


def _check_hr_homology():
    M = hr.esigma_constant_Z()
    cx = hr.hr_complex(M, 3, top_degree=3)
    if not (cx.check_d_squared() and cx.check_simplicial_identities()):
        return False, {"m": 3, "reason": "complex identities failed"}
    hom = hr.hr_homology(M, 3, top_degree=3)
    cert = mackey_iso(hom[0],
                      realize(norm_quotient_presentation(groups.dihedral(3))))
    if cert.status != "isomorphic":
        return False, {"m": 3, "degree": 0, "status": cert.status}
    for n in (1, 2):
        if not all(v.is_zero_group() for v in hom[n].values):
            return False, {"m": 3, "degree": n,
                           "invariants": hom[n].invariants()}
    return True, {"m": 3, "degrees": [0, 1, 2]}


def _check_phi_compatibility():
    rep = hr.phi_compatibility_check(hr.esigma_constant_Z(), 3, 3,
                                     top_degree=1)
    return rep.ok, {"m": 3, "d": 3,
                    "statuses": [c.status for c in rep.degree_certs]}


def _check_witt_tower():
    tower = witt.WittTower(hr.esigma_constant_Z(), 3, 2)
    inv = tower.witt_invariants()
    for k, t in enumerate(inv):
        for lev in t:
            if lev != (k + 1, []):
                return False, {"stage": k + 1, "invariants": inv}
    if not (tower.check_fv_is_p(1) and tower.check_fv_is_p(2)
            and tower.check_rf_commute(2)):
        return False, {"reason": "operator identity failed"}
    rep = witt.compare_with_classical(tower)
    return rep["agrees"], {"p": 3, "stages": 3, "classical": rep["checks"]}


def _check_mackey_axiom():
    diag = realize(norm_quotient_presentation(groups.dihedral(3)))
    return mackey.check_mackey_axiom(diag), {"m": 3}


_PAPER_SUITE = [
    ("coinduction-decomposition", _check_coinduction_decomposition),
    ("reciprocity-dihedral", _check_reciprocity_dihedral),
    ("norm-theorem", _check_norm_theorem),
    ("conjugation-independence", _check_conjugation_independence),
    ("hr0-canonical", _check_hr0_canonical),
    ("hr-homology", _check_hr_homology),
    ("phi-compatibility", _check_phi_compatibility),
    ("witt-tower", _check_witt_tower),
    ("mackey-axiom", _check_mackey_axiom),
]


def cmd_check(args):
    if args.suite != "paper-suite":
        raise CliError("unknown suite %r; available: paper-suite" % args.suite)
    results = []
    all_pass = True
    for name, fn in _PAPER_SUITE:
        ok, detail = fn()
        all_pass = all_pass and ok
        results.append({"name": name, "pass": ok, "detail": detail})
    emit({
        "schema": "equivar/check/v1",
        "suite": args.suite,
        "results": results,
        "all_pass": all_pass,
    })
    for r in results:
        print("%-28s %s" % (r["name"], "PASS" if r["pass"] else "FAIL"),
              file=sys.stderr)
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="equivar",
        description="Exact equivariant algebra over dihedral groups.")
    parser.add_argument("--jobs", type=int,
                        default=int(os.environ.get("EQUIVAR_JOBS", "1")),
                        help="worker count (computation is sequential; "
                             "values > 1 are accepted and ignored)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("marks", help="table of marks")
    p.add_argument("--group", required=True)
    p.set_defaults(fn=cmd_marks)

    p = sub.add_parser("burnside", help="Burnside ring arithmetic")
    p.add_argument("action", choices=["mul"])
    p.add_argument("--group", required=True)
    p.add_argument("--a", required=True, help="class expression, e.g. '2*[G/D2]+[G/mu_3]'")
    p.add_argument("--b", required=True)
    p.set_defaults(fn=cmd_burnside)

    p = sub.add_parser("coinduce", help="decompose a coinduced G-set")
    p.add_argument("--group", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--labels", default="a,b")
    p.set_defaults(fn=cmd_coinduce)

    p = sub.add_parser("norm", help="multiplicative norm of a Mackey functor")
    p.add_argument("--group", required=True)
    p.add_argument("--from", dest="from_sub", required=True)
    p.add_argument("--functor", default="constZ")
    p.add_argument("--compare", choices=["burnside-quotient"], default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_norm)

    p = sub.add_parser("reciprocity", help="symbolic norm-of-sum expansion")
    p.add_argument("--group", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--latex", action="store_true")
    p.add_argument("--json", action="store_true",
                   help="accepted for compatibility; output is always JSON")
    p.add_argument("--budget", type=int,
                   default=tambara.DIRECT_ENUMERATION_LIMIT)
    p.set_defaults(fn=cmd_reciprocity)

    p = sub.add_parser("hr0", help="zeroth Real Hochschild homology")
    p.add_argument("--ring", default="constZ", choices=sorted(_RINGS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_hr0)

    p = sub.add_parser("hr", help="Real Hochschild complex and homology")
    p.add_argument("action", choices=["homology"])
    p.add_argument("--ring", default="constZ", choices=sorted(_RINGS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_hr)

    p = sub.add_parser("witt", help="p-typical Real Witt vector tower")
    p.add_argument("--ring", default="constZ", choices=sorted(_RINGS))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--ops", default=None, help="comma list from R,F,V")
    p.add_argument("--coinvariants", action="store_true")
    p.set_defaults(fn=cmd_witt)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite")
    p.set_defaults(fn=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.fn(args)
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

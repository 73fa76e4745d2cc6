"""sphere-forge command line.

    sphere-forge WORKSPACE COMMAND [ARGS] [--format json|dot] [--seed N]
                 [--probes a,b,...] [--roster a,b,...]

Output goes to standard output as JSON (sorted keys, schema "sphere-forge/1");
logs go to standard error.  Exit codes: 0 success, 1 failed verification or
certification, 2 usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .derived import hom_dims, serre
from .nbhd import (
    FLAVORS,
    NotFrobeniusMemberError,
    NotSpherelikeError,
    asphericity,
    detect,
    frb_codomain_member,
    frb_decompose,
    frbO_member,
    frbOd_member,
    poset_build,
    sph_subcat_member,
    sphO_member,
)
from .quiver import QuiverError
from .sodtwist import (
    CertificationError,
    ExceptionalSequenceError,
    NotInImageError,
    left_mutation,
    p_operator,
    right_mutation,
    sod_project,
    twist_object,
)
from .verify import SUITES, run_suite
from .workspace import SCHEMA, Workspace, WorkspaceError, dims_to_json, dobject_to_json, load, summary

log = logging.getLogger("sphereforge")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _names(value: str | None) -> list[str] | None:
    if not value:
        return None
    return [v.strip() for v in value.split(",") if v.strip()]


def _obj_json(x) -> dict:
    return {"summary": summary(x), "object": dobject_to_json(x), "zero": x.is_zero()}


# -- commands ------------------------------------------------------------

def cmd_hom(ws: Workspace, args) -> dict:
    return {"x": args.x, "y": args.y, "dims": dims_to_json(hom_dims(ws.obj(args.x), ws.obj(args.y)))}


def cmd_serre(ws: Workspace, args) -> dict:
    return {"x": args.x, "serre": _obj_json(serre(ws.obj(args.x)))}


def cmd_detect(ws: Workspace, args) -> dict:
    return {"x": args.x, "profile": detect(ws.obj(args.x)).to_json()}


def cmd_twist(ws: Workspace, args) -> dict:
    return {"a": args.a, "x": args.x, "twist": _obj_json(twist_object(ws.obj(args.a), ws.obj(args.x)))}


def cmd_mutate(ws: Workspace, args) -> dict:
    fn = left_mutation if args.command == "mutate-left" else right_mutation
    return {"e": args.e, "x": args.x, "mutation": _obj_json(fn(ws.obj(args.e), ws.obj(args.x)))}


def cmd_sod_project(ws: Workspace, args) -> dict:
    tri = sod_project(ws.embedding(args.emb), ws.obj(args.x))
    return {
        "embedding": args.emb,
        "x": args.x,
        "FR": _obj_json(tri.fr_obj),
        "T": _obj_json(tri.t_obj),
        "T'": _obj_json(tri.tp_obj),
        "FL": _obj_json(tri.fl_obj),
    }


def cmd_p_op(ws: Workspace, args) -> dict:
    return {"embedding": args.emb, "x": args.x, "P": _obj_json(p_operator(ws.embedding(args.emb), ws.obj(args.x)))}


def cmd_asphericity(ws: Workspace, args) -> dict:
    asp = asphericity(ws.obj(args.a), args.d)
    return {"a": args.a, "asphericity": asp.to_json(), "Q": _obj_json(asp.q_a)}


def cmd_member(ws: Workspace, args) -> dict:
    flavor = args.flavor
    if flavor not in FLAVORS:
        raise UsageError(f"unknown flavor {flavor!r} (expected one of {', '.join(FLAVORS)})")
    b = ws.obj(args.b)
    if flavor == "sph-subcat":
        a = ws.obj(args.a)
        prof = detect(a)
        if prof.kind != "spherelike":
            raise NotSpherelikeError(f"{args.a} is not spherelike")
        member = sph_subcat_member(b, asphericity(a, prof.degree))
    else:
        if args.emb == "-":
            raise UsageError(f"flavor {flavor} needs an embedding")
        emb = ws.embedding(args.emb)
        if flavor == "frb-codomain":
            member = frb_codomain_member(emb, b)
        else:
            a = ws.obj(args.a)
            fn = {"frbO": frbO_member, "frbOd": frbOd_member, "sphO": sphO_member}[flavor]
            member = fn(emb, a, b)
    return {"flavor": flavor, "embedding": args.emb, "a": args.a, "b": args.b, "member": member}


def cmd_decompose(ws: Workspace, args) -> dict:
    d = frb_decompose(ws.embedding(args.emb), ws.obj(args.b), seed=args.seed)
    return {"embedding": args.emb, "b": args.b,
            "image_part": _obj_json(d.image_part), "orthogonal_part": _obj_json(d.orthogonal_part)}


def cmd_poset(ws: Workspace, args):
    cfg = ws.verify.get("embeddings", {}).get(args.emb, {})
    emb = ws.embedding(args.emb)
    roster = _names(args.roster) or cfg.get("roster")
    probes = _names(args.probes) or ws.verify.get("probes")
    if not roster:
        raise UsageError("poset needs --roster (or a roster in the workspace)")
    if not probes:
        raise UsageError("poset needs --probes (or probes in the workspace)")
    pos = poset_build(emb, [(n, ws.obj(n)) for n in roster], [(n, ws.obj(n)) for n in probes], args.flavor)
    if args.format == "dot":
        return pos.to_dot()
    return {"embedding": args.emb, "poset": pos.to_json(),
            "laws": {"maximum": pos.maximum_ok(), "meet": pos.meet_law_ok(), "antisymmetric": pos.antisymmetric()}}


def cmd_verify(ws: Workspace, args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = [run_suite(ws, n, seed=args.seed, probes=_names(args.probes), roster=_names(args.roster)) for n in names]
    return {"suites": reports, "passed": all(r["passed"] for r in reports)}


# -- parser --------------------------------------------------------------

def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "dot"), default=d("json"), help="output format")
    parser.add_argument("--seed", type=int, default=d(None), help="seed for randomized isomorphism tests")
    parser.add_argument("--probes", default=d(None), help="comma-separated probe object names")
    parser.add_argument("--roster", default=d(None), help="comma-separated roster object names")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False), help="log to standard error")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphere-forge", description="Derived-category computations on quiver workspaces.")
    p.add_argument("workspace", help="workspace JSON file")
    _common(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, *positional, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            if isinstance(arg, tuple):
                sp.add_argument(arg[0], **arg[1])
            else:
                sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("hom", cmd_hom, "x", "y", help="graded Hom dimensions")
    add("serre", cmd_serre, "x", help="apply the Serre functor")
    add("detect", cmd_detect, "x", help="exceptional / spherelike / Calabi-Yau profile")
    add("twist", cmd_twist, "a", "x", help="twist of X by the object A")
    add("mutate-left", cmd_mutate, "e", "x", help="left mutation of X through E")
    add("mutate-right", cmd_mutate, "e", "x", help="right mutation of X through E")
    add("sod-project", cmd_sod_project, "emb", "x", help="both projection triangles")
    add("p-op", cmd_p_op, "emb", "x", help="the comparison operator F R T'")
    add("asphericity", cmd_asphericity, "a", ("d", {"type": int}), help="asphericity triangle of A")
    add("member", cmd_member, "flavor", "emb", "a", "b", help=f"neighbourhood membership ({', '.join(FLAVORS)})")
    add("decompose", cmd_decompose, "emb", "b", help="Frobenius codomain decomposition")
    sp = add("poset", cmd_poset, "emb", help="neighbourhood poset over a roster")
    sp.add_argument("--flavor", choices=("frbO", "frbOd", "sphO", "sph-subcat"), default="frbO")
    add("verify", cmd_verify, ("suite", {"choices": list(SUITES) + ["all"]}), help="run a verification suite")
    return p


def _emit(payload, command: str, fmt: str) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
        return
    out = {"schema": SCHEMA, "command": command}
    out.update(payload)
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.format == "dot" and args.command != "poset":
        log.error("--format dot is only available for poset")
        return EXIT_USAGE
    try:
        ws = load(args.workspace)
        if args.seed is None:
            args.seed = ws.seed
        payload = args.func(ws, args)
    except (WorkspaceError, UsageError, QuiverError, ExceptionalSequenceError, NotInImageError,
            NotSpherelikeError, NotFrobeniusMemberError) as e:
        log.error("%s", e)
        _emit({"error": str(e)}, args.command, "json")
        return EXIT_USAGE
    except CertificationError as e:
        log.error("certification failed: %s", e)
        _emit({"error": str(e)}, args.command, "json")
        return EXIT_FAIL
    _emit(payload, args.command, args.format)
    if args.command == "verify" and not payload["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``minsphere verify|curvature|sequence|check-w|mixed-pair``.

Exit status is 0 when every check passes, 1 when some check fails and 2 on
input errors (unreadable files, unknown fixtures, violated preconditions).
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from . import construct as C
from .curves import VectorCurve, isotropy_conditions, osculating_flag, quadric_residual
from .errors import PreconditionError, ZeroMetric
from .fixtures import DATA_DIR, load_catalog
from .geometry import degree_relation_check, gauss_curvature, pair_geometry, sff_norm
from .verify import VerificationReport, to_jsonable, verify_fixture

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_curve(path: str) -> VectorCurve:
    try:
        return VectorCurve.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed curve file {path}: {exc}") from exc


def _read_matrix(path: str):
    try:
        return C.matrix_from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix file {path}: {exc}") from exc


def _say(ns, text: str) -> None:
    """Human-readable output, suppressed when stdout carries the JSON report."""
    if ns.json != "-":
        print(text)


def _emit(reports: List[VerificationReport], json_path: Optional[str], extra: dict = None) -> int:
    payload = {"reports": [r.to_json() for r in reports]}
    if extra:
        payload.update(extra)
    text = json.dumps(payload, indent=1, sort_keys=True)
    if json_path == "-":
        print(text)
    else:
        for r in reports:
            print(r.text())
        if json_path:
            Path(json_path).write_text(text + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- verify ----------------------------------------------------------------------

def _verify_one(args):
    directory, fid = args
    for fx in load_catalog(directory):
        if fx.id == fid:
            return verify_fixture(fx)
    raise KeyError(fid)


def cmd_verify(ns) -> int:
    directory = Path(ns.fixtures) if ns.fixtures else DATA_DIR
    try:
        catalog = load_catalog(directory)
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"cannot load fixture catalog from {directory}: {exc}") from exc
    known = [f.id for f in catalog]
    if ns.all:
        ids = known
    else:
        if not ns.ids:
            raise InputError("name at least one fixture or pass --all")
        unknown = [i for i in ns.ids if i not in known]
        if unknown:
            raise InputError(f"unknown fixture(s): {', '.join(unknown)}; known: {', '.join(known)}")
        ids = ns.ids
    if ns.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as ex:
            reports = list(ex.map(_verify_one, [(directory, i) for i in ids]))
    else:
        by_id = {f.id: f for f in catalog}
        reports = [verify_fixture(by_id[i]) for i in ids]
    return _emit(reports, ns.json)


# -- curvature --------------------------------------------------------------------

def cmd_curvature(ns) -> int:
    f = _read_curve(ns.curve)
    if ns.mode == "real-pair":
        phi = C.assemble_real_pair(f)
    else:
        if not ns.partner:
            raise InputError("sum-pair mode needs --partner")
        phi = C.assemble_sum_pair(f, _read_curve(ns.partner))
    t = pair_geometry(phi)
    k = gauss_curvature(t.lambda2)
    b = sff_norm(t)
    rep = VerificationReport(Path(ns.curve).name)
    kc, bc = k.is_constant(), b.is_constant()
    _say(ns, f"lambda2 = {t.lambda2}")
    _say(ns, f"K = {k}" + (" (constant)" if kc is not None else ""))
    _say(ns, f"|B|^2 = {b}" + (" (constant)" if bc is not None else ""))
    rep.add("gauss_curvature", "K = -(2/lambda2) d dbar log lambda2", True, None, k)
    rep.add("sff_norm", "|B|^2 = 4 tr P P^*", True, None, b)
    if ns.json:
        extra = {"lambda2": t.lambda2.to_json(), "K": k.to_json(), "sff_norm": b.to_json(),
                 "K_constant": to_jsonable(kc), "sff_constant": to_jsonable(bc)}
        text = json.dumps({"reports": [rep.to_json()], **extra}, indent=1, sort_keys=True)
        if ns.json == "-":
            print(text)
        else:
            Path(ns.json).write_text(text + "\n")
    return EXIT_OK


# -- sequence ------------------------------------------------------------------

def cmd_sequence(ns) -> int:
    f = _read_curve(ns.curve)
    flag = osculating_flag(f, ns.steps)
    rep = VerificationReport(Path(ns.curve).name)
    _say(ns, " i  degree  l_i")
    for i, (d, l) in enumerate(zip(flag.degrees, flag.l_coeffs)):
        _say(ns, f"{i:2d}  {d:6d}  {l}")
    for r in degree_relation_check(flag):
        rep.add(f"degree_relation[{r.index}]", "d_{i-1} - 2 d_i + d_{i+1} = -2", r.passed, -2, r.value)
    iso = isotropy_conditions(f, ns.steps)
    _say(ns, "isotropy: " + ", ".join("true" if b else "false" for b in iso))
    extra = {"degrees": flag.degrees, "l": [l.to_json() for l in flag.l_coeffs], "isotropy": iso}
    return _emit([rep], ns.json, extra)


# -- check-w ----------------------------------------------------------------------

_PATTERN_DEGREE = {"cubic": 3, "conic": 2, "zero-block": 2}


def cmd_check_w(ns) -> int:
    m = _read_matrix(ns.matrix)
    w = C.mat_mul(C.transpose(m), m) if ns.from_u else m
    sw = C.SymmetricUnitary(w)
    pr = C.w_pattern_check(sw, ns.pattern)
    rep = VerificationReport(Path(ns.matrix).name)
    for r in pr.results:
        rep.add(f"{ns.pattern}: {r.constraint}", f"{ns.pattern} W pattern", r.passed, r.expected, r.value,
                None if r.passed else r.entries)
    deg = ns.m if ns.m is not None else _PATTERN_DEGREE[ns.pattern]
    residuals = [C.fundamental_identity_from_w(sw, deg, i) for i in range(3)]
    _say(ns, "fundamental identities tr W V_0 V_i^T, i = 0, 1, 2:")
    for i, r in enumerate(residuals):
        _say(ns, f"  i={i}: {'0' if r.is_zero() else r}")
    extra = {"fundamental_residuals": [r.to_json() for r in residuals]}
    return _emit([rep], ns.json, extra)


# -- mixed-pair ---------------------------------------------------------------------

def cmd_mixed_pair(ns) -> int:
    seed = _read_curve(ns.seed)
    f1 = C.mixed_pair_seed(seed)
    rep = VerificationReport(Path(ns.seed).name)
    q = quadric_residual(f1)
    rep.add("quadric", "F1 lies on the quadric", q.is_zero(), 0, q)
    iso = isotropy_conditions(f1, 2)
    rep.add("contact_order_0", "bilinear self-contact of order 0 vanishes", iso[0], True, iso[0])
    rep.add("contact_order_1", "bilinear self-contact of order 1 vanishes", iso[1], True, iso[1])
    _say(ns, "F1 = " + ", ".join(str(c) for c in f1))
    _say(ns, "contact order 2 vanishes: " + ("true" if iso[2] else "false"))
    if ns.out:
        Path(ns.out).write_text(json.dumps(f1.to_json(), indent=1, sort_keys=True) + "\n")
    return _emit([rep], ns.json, {"curve": f1.to_json(), "isotropy": iso})


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the machine-readable report ('-' for stdout)")
    p = argparse.ArgumentParser(prog="minsphere", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="verify bundled fixtures")
    v.add_argument("ids", nargs="*")
    v.add_argument("--all", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--fixtures", metavar="DIR", help="fixture directory (default: bundled)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("curvature", parents=[common], help="curvature of a real or sum pair")
    c.add_argument("curve")
    c.add_argument("--mode", choices=["real-pair", "sum-pair"], default="real-pair")
    c.add_argument("--partner")
    c.set_defaults(func=cmd_curvature)

    s = sub.add_parser("sequence", parents=[common], help="osculating degrees and isotropy")
    s.add_argument("curve")
    s.add_argument("--steps", "-k", type=int, default=2)
    s.set_defaults(func=cmd_sequence)

    w = sub.add_parser("check-w", parents=[common], help="check a W matrix against a pattern")
    w.add_argument("matrix")
    w.add_argument("--pattern", required=True, choices=sorted(C.PATTERNS))
    w.add_argument("--from-u", action="store_true", help="the file holds U; check W = U^T U")
    w.add_argument("--m", type=int, help="Veronese degree for the fundamental identities")
    w.set_defaults(func=cmd_check_w)

    m = sub.add_parser("mixed-pair", parents=[common], help="build F1 from a polynomial seed")
    m.add_argument("seed")
    m.add_argument("--out", help="write F1 as a curve file")
    m.set_defaults(func=cmd_mixed_pair)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (InputError, PreconditionError, ZeroMetric, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

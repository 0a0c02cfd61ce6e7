"""Command-line interface: ``kerdock-lab <group> <command> ...``.

Exit codes: 0 when every check passes, 1 on a claim mismatch, 2 on a usage
or input error.  Verification commands print one PASS/FAIL line per check
and write a run manifest (to ``--manifest`` or, by default, stderr).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from pathlib import Path

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS")


def _cap_threads() -> None:
    """Apply ``KERDOCK_LAB_THREADS`` to the BLAS pools; must run before numpy loads."""
    n = os.environ.get("KERDOCK_LAB_THREADS")
    if n:
        for var in _THREAD_VARS:
            os.environ.setdefault(var, n)


class UsageError(Exception):
    pass


# -- deterministic output --------------------------------------------------------


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def matrix_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _cell(x) -> str:
    from fractions import Fraction

    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def export(obj, fmt: str, path: str | None = None, matrix: str | None = None) -> str:
    """Serialize a JSON-able object or a named matrix of it; write to ``path`` if given."""
    if fmt == "json":
        text = dumps(obj)
    elif fmt == "csv":
        if matrix is None:
            raise UsageError("CSV export needs a matrix name")
        if matrix not in obj:
            raise UsageError(f"no matrix {matrix!r} to export")
        text = matrix_csv(obj[matrix])
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if path:
        Path(path).write_text(text)
    return text


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class Manifest:
    def __init__(self, command: str, parameters: dict, inputs=()):
        self.command = command
        self.parameters = parameters
        self.inputs = {str(p): _sha256(p) for p in inputs if Path(p).is_file()}
        self.outputs: list[str] = []
        self.checks: list[dict] = []
        self._t0 = time.perf_counter()

    def check(self, claim: str, passed: bool, detail: str = "", seconds: float | None = None) -> None:
        entry = {"claim": claim, "passed": bool(passed), "detail": detail}
        if seconds is not None:
            entry["seconds"] = round(seconds, 3)
        self.checks.append(entry)
        status = "PASS" if passed else "FAIL"
        print(f"{status} {claim}" + (f": {detail}" if detail else ""), flush=True)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c["passed"] for c in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": self.checks,
            "passed": self.passed,
            "wall_time": round(time.perf_counter() - self._t0, 3),
        }

    def emit(self, path: str | None) -> int:
        text = dumps(self.to_json())
        if path:
            Path(path).write_text(text)
        else:
            sys.stderr.write(text)
        return EXIT_OK if self.passed else EXIT_MISMATCH


def _write(path: str | Path, obj, manifest: Manifest | None = None) -> None:
    Path(path).write_text(dumps(obj))
    if manifest is not None:
        manifest.outputs.append(str(path))


# -- code ------------------------------------------------------------------------

CODE_FAMILIES = ("z4-kerdock", "z4-kerdock-short", "binary-kerdock", "simplex-punctured")


def cmd_code_build(args) -> int:
    from kerdock_lab import codes

    if args.family != "simplex-punctured" and args.m not in (3, 5, 7):
        raise UsageError("--m must be an odd integer between 3 and 7 for Kerdock families")
    code = {
        "z4-kerdock": lambda: codes.build_full_z4_kerdock(args.m),
        "z4-kerdock-short": lambda: codes.build_shortened_kerdock(args.m),
        "binary-kerdock": lambda: codes.build_binary_kerdock(args.m),
        "simplex-punctured": codes.build_punctured_simplex_14_4,
    }[args.family]()
    for p in args.shorten or []:
        code = code.shorten(p)
    for p in args.puncture or []:
        code = code.puncture(p)
    export(code.to_json(), "json", args.out)
    return EXIT_OK


def _load_code(path: str):
    from kerdock_lab.codes import Code

    try:
        return Code.from_json(_load_json(path))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{path}: not a code file ({exc})") from exc


def cmd_code_stats(args) -> int:
    from kerdock_lab.codes import distance_distribution
    from kerdock_lab.schemes.builders import lee_distance_matrix

    code = _load_code(args.file)
    out = {"alphabet": code.alphabet, "length": code.length, "size": code.size,
           "weights": {str(k): v for k, v in code.weight_distribution().items()}}
    if code.alphabet == "F2":
        dist = distance_distribution(code.words)
    else:
        import numpy as np

        vals, counts = np.unique(lee_distance_matrix(code.words), return_counts=True)
        dist = {int(v): int(c) for v, c in zip(vals, counts)}
    out["distances"] = {str(k): v for k, v in sorted(dist.items())}
    sys.stdout.write(export(out, "json", args.out))
    return EXIT_OK


# -- scheme ------------------------------------------------------------------------


def _load_scheme(path: str):
    from kerdock_lab.schemes.partition import RelationPartition

    obj = _load_json(path)
    try:
        return RelationPartition.from_json(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _closed_form(family: str, N: int):
    from kerdock_lab.schemes.closed_form import closed_form

    try:
        return closed_form(family, N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_scheme_verify(args) -> int:
    from kerdock_lab.schemes.parameters import SchemeAxiomError, compare_to_reference, verify_scheme

    man = Manifest("scheme verify", {"expect": args.expect, "family": args.family, "N": args.N}, [args.file])
    rp = _load_scheme(args.file)
    try:
        params = verify_scheme(rp)
    except SchemeAxiomError as exc:
        man.check("scheme.axioms", False, str(exc))
        return man.emit(args.manifest)
    man.check("scheme.axioms", True, f"n={params.n}, d={params.d}")
    if args.expect == "closed-form":
        if not (args.family and args.N):
            raise UsageError("--expect closed-form needs --family and --N")
        diffs = compare_to_reference(params, _closed_form(args.family, args.N))
        man.check(f"closed-form.{args.family}", not diffs, "; ".join(diffs))
    if args.out:
        _write(args.out, params.to_json(), man)
    return man.emit(args.manifest)


def cmd_scheme_eigen(args) -> int:
    from kerdock_lab.schemes.parameters import verify_scheme

    params = verify_scheme(_load_scheme(args.file))
    if args.align:
        from kerdock_lab.schemes.parameters import align_eigenspaces

        if not args.N:
            raise UsageError("--align needs --N")
        aligned = align_eigenspaces(params, _closed_form(args.align, args.N))
        if aligned is None:
            print(f"kerdock-lab: no eigenspace order matches the {args.align} table", file=sys.stderr)
            return EXIT_MISMATCH
        params = aligned
    params = params.to_json()
    matrix = args.matrix if args.format == "csv" else None
    sys.stdout.write(export(params, args.format, args.out, matrix))
    return EXIT_OK


# -- mub / design / bound ----------------------------------------------------------------


def cmd_mub_from_code(args) -> int:
    import numpy as np

    from kerdock_lab.mub.config import build_X, build_Y, build_Z
    from kerdock_lab.mub.lines import NotKerdockLikeError, NotMaximalMUBError, code_to_lines, group_into_bases

    code = _load_code(args.file)
    if code.alphabet != "F2":
        raise UsageError("mub from-code needs a binary code")
    man = Manifest("mub from-code", {"configs": args.configs}, [args.file])
    try:
        lines = code_to_lines(code)
        bases = group_into_bases(lines)
    except (NotKerdockLikeError, NotMaximalMUBError) as exc:
        man.check("mub.bijection", False, str(exc))
        return man.emit(args.manifest)
    man.check("mub.bijection", len(bases) == lines.N // 2 + 1, f"{len(bases)} bases")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write(out / "lines.json", {"N": lines.N, "vectors": lines.vectors.astype(np.int64).tolist()}, man)
    _write(out / "bases.json", [b.astype(np.int64).tolist() for b in bases], man)
    X = build_X(lines)
    configs = {"X": X, "Z": build_Z(X), "Y": build_Y(X)}
    for name in args.configs.split(","):
        if name not in configs:
            raise UsageError(f"unknown configuration {name!r}")
        cfg = configs[name]
        _write(out / f"config_{name}.json", cfg.to_json(), man)
        _write(out / f"scheme_{name}.json", cfg.scheme_partition().to_json(), man)
    return man.emit(args.manifest)


def _load_config(path: str):
    from kerdock_lab.mub.config import SphericalConfig

    try:
        return SphericalConfig.from_json(_load_json(path))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_design_strength(args) -> int:
    from kerdock_lab.mub.design import design_strength, moment_table

    cfg = _load_config(args.file)
    man = Manifest("design strength", {"t_max": args.t_max}, [args.file])
    t = design_strength(cfg, args.t_max)
    moments = moment_table(cfg, args.t_max)
    detail = f"strength {t}; moments " + ", ".join(f"{k}:{v}" for k, v in moments.items())
    if args.expect is not None:
        man.check("design.strength", t == args.expect, detail)
    else:
        man.check("design.strength", True, detail)
    return man.emit(args.manifest)


def cmd_bound_delsarte(args) -> int:
    from kerdock_lab.algebra.numbers import frac_str
    from kerdock_lab.mub.design import delsarte_bound

    try:
        r = delsarte_bound(args.N, args.length)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {
        "N": r.N,
        "length": r.length,
        "distances": list(r.distances),
        "coefficients": [frac_str(c) for c in r.coefficients],
        "ratios": [frac_str(c) for c in r.ratios],
        "bound": frac_str(r.bound),
    }
    sys.stdout.write(export(out, "json", args.out))
    return EXIT_OK


# -- lattice ---------------------------------------------------------------------------


def cmd_lattice_construction_a(args) -> int:
    from kerdock_lab.lattices import NonLinearCodeError, construction_a

    try:
        lat = construction_a(_load_code(args.file), args.scale)
    except (NonLinearCodeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    text = export(lat.to_json(), "json", args.out)
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lattice_theta(args) -> int:
    from kerdock_lab.lattices import IntegerLattice, theta_prefix

    try:
        lat = IntegerLattice.from_json(_load_json(args.file))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{args.file}: {exc}") from exc
    note = "coordinates as stored; squared norms x.x"
    sys.stdout.write(export(theta_prefix(lat, args.max_norm, scale_note=note).to_json(), "json", args.out))
    return EXIT_OK


def cmd_lattice_bw16(args) -> int:
    import numpy as np

    from kerdock_lab.lattices import bw16_membership_check
    from kerdock_lab.mub.config import build_X
    from kerdock_lab.mub.lines import SignedLineSet

    path = Path(args.mubdir) / "lines.json"
    obj = _load_json(str(path))
    lines = SignedLineSet(int(obj["N"]), np.array(obj["vectors"], dtype=np.int8))
    if lines.N != 16:
        raise UsageError("the Barnes-Wall check is for N = 16")
    man = Manifest("lattice bw16-check", {}, [path])
    r = bw16_membership_check(build_X(lines))
    man.check("lattice.bw16", r.passed, f"minimum {r.minimum}, minimal vectors {r.minimal_count}, witness {r.witness}")
    if args.out:
        _write(args.out, r.to_json(), man)
    return man.emit(args.manifest)


# -- full verification run ---------------------------------------------------------------


def cmd_verify_all(args) -> int:
    from kerdock_lab.verify import verify_claims

    man = Manifest("verify-paper", {"m": args.m})
    verify_claims(args.m, progress=lambda r: man.check(r.claim, r.passed, r.detail, r.seconds))
    return man.emit(args.manifest)


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kerdock-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True)

    def leaf(parent, name, fn, help_, manifest=False):
        sp = parent.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        if manifest:
            sp.add_argument("--manifest", help="write the run manifest here instead of stderr")
        return sp

    code = sub.add_parser("code", help="build and inspect codes").add_subparsers(dest="cmd", required=True)
    sp = leaf(code, "build", cmd_code_build, "construct a code and write it as JSON")
    sp.add_argument("--family", choices=CODE_FAMILIES, required=True)
    sp.add_argument("--m", type=int, default=3)
    sp.add_argument("--shorten", type=int, action="append", metavar="P")
    sp.add_argument("--puncture", type=int, action="append", metavar="P")
    sp.add_argument("--out", required=True)
    sp = leaf(code, "stats", cmd_code_stats, "weight and distance distributions")
    sp.add_argument("file")
    sp.add_argument("--out")

    scheme = sub.add_parser("scheme", help="association schemes").add_subparsers(dest="cmd", required=True)
    sp = leaf(scheme, "verify", cmd_scheme_verify, "check scheme axioms and optional closed form", True)
    sp.add_argument("file")
    sp.add_argument("--expect", choices=["closed-form"])
    sp.add_argument("--family", choices=["Y", "Y-dual", "Z", "X"])
    sp.add_argument("--N", type=int)
    sp.add_argument("--out", help="write the parameter report")
    sp = leaf(scheme, "eigen", cmd_scheme_eigen, "parameters of a scheme file")
    sp.add_argument("file")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--matrix", default="P", choices=["P", "Q"], help="matrix for CSV output")
    sp.add_argument("--align", choices=["Y", "Y-dual", "Z", "X"], help="order eigenspaces as in this closed form")
    sp.add_argument("--N", type=int)
    sp.add_argument("--out")

    mub = sub.add_parser("mub", help="MUB configurations").add_subparsers(dest="cmd", required=True)
    sp = leaf(mub, "from-code", cmd_mub_from_code, "lines, bases and X/Z/Y configurations of a code", True)
    sp.add_argument("file")
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--configs", default="X,Z,Y")

    dz = sub.add_parser("design", help="spherical designs").add_subparsers(dest="cmd", required=True)
    sp = leaf(dz, "strength", cmd_design_strength, "design strength of a configuration", True)
    sp.add_argument("file")
    sp.add_argument("--t-max", type=int, default=7)
    sp.add_argument("--expect", type=int, help="fail unless the strength equals this")

    bd = sub.add_parser("bound", help="linear-programming bounds").add_subparsers(dest="cmd", required=True)
    sp = leaf(bd, "delsarte", cmd_bound_delsarte, "Krawtchouk expansion and bound")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--length", type=int)
    sp.add_argument("--out")

    lat = sub.add_parser("lattice", help="integer lattices").add_subparsers(dest="cmd", required=True)
    sp = leaf(lat, "construction-a", cmd_lattice_construction_a, "construction A of a binary linear code")
    sp.add_argument("file")
    sp.add_argument("--scale", type=int, default=1)
    sp.add_argument("--out")
    sp = leaf(lat, "theta", cmd_lattice_theta, "theta coefficients of a lattice file")
    sp.add_argument("file")
    sp.add_argument("--max-norm", type=int, default=8)
    sp.add_argument("--out")
    sp = leaf(lat, "bw16-check", cmd_lattice_bw16, "minimal-vector check for N = 16", True)
    sp.add_argument("mubdir")
    sp.add_argument("--out")

    sp = sub.add_parser("verify-paper", help="run every closed-form check for m")
    sp.set_defaults(fn=cmd_verify_all)
    sp.add_argument("--m", type=int, choices=[3, 5], required=True)
    sp.add_argument("--manifest")
    return p


def main(argv=None) -> int:
    _cap_threads()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"kerdock-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

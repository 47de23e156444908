"""Command-line front end.

Problem files are JSON with a version tag; every arithmetic number is a
string "p/q" so parsing is lossless.  Polynomials are coefficient
arrays constant term first, matrices row-major arrays of arrays, field
elements coefficient arrays in the power basis.  All commands are
deterministic: the machine output (--json) is canonical JSON with
sorted keys and round-trips byte-identically.

Exit codes: 0 success, 2 validation or input error, 3 internal error.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import FileFormatError, HodgekitError, InternalError, ValidationError
from .exactmath import Matrix, nf_create, nf_embeddings
from .hodge import (endomorphism_field, hodge_classes_tensor_square,
                    transcendental_lattice, validate_period)
from .ksympl import (KSymplecticCandidate, check_torus, clifford_operators,
                     divisibility_bound, subvariety_bound, torus_bound,
                     verify_k_symplectic)
from .perdom import PeriodPath, griffiths_check
from .qforms import QuadraticSpace
from .symalg import build_tha

FORMAT_VERSION = "1"
KINDS = ("k3period", "ksymplectic", "bounds", "path")


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _fraction(value, where):
    if not isinstance(value, str) or not _RATIONAL_RE.match(value):
        raise FileFormatError(
            f"{where}: numbers must be strings like \"p/q\", got {value!r}")
    return Fraction(value)


def _fraction_list(values, where):
    if not isinstance(values, list):
        raise FileFormatError(f"{where}: expected an array")
    return [_fraction(v, where) for v in values]


def _matrix(values, where):
    if not isinstance(values, list) or not values:
        raise FileFormatError(f"{where}: expected a nonempty array of rows")
    rows = [_fraction_list(r, where) for r in values]
    if len({len(r) for r in rows}) != 1:
        raise FileFormatError(f"{where}: ragged matrix")
    return Matrix(rows)


def load_problem_file(path):
    """Parse and validate a problem file; returns (kind, payload dict)."""
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError("top level must be an object")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise FileFormatError(
            f"unknown format version {version!r}; expected {FORMAT_VERSION!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FileFormatError(f"unknown kind {kind!r}; expected one of {KINDS}")
    allowed = {
        "k3period": {"version", "kind", "gram", "field", "embedding", "omega"},
        "ksymplectic": {"version", "kind", "psis"},
        "bounds": {"version", "kind", "d", "e", "dim_h1"},
        "path": {"version", "kind", "gram", "coords"},
    }[kind]
    extra = set(doc) - allowed
    if extra:
        raise FileFormatError(f"unknown keys for kind {kind}: {sorted(extra)}")
    return kind, doc


def build_period(doc, precision_start=64):
    """K3 period from a parsed k3period document."""
    for key in ("gram", "field", "embedding", "omega"):
        if key not in doc:
            raise FileFormatError(f"k3period file is missing {key!r}")
    gram = _matrix(doc["gram"], "gram")
    space = QuadraticSpace(gram)
    field = nf_create(_fraction_list(doc["field"], "field"))
    embs = nf_embeddings(field)
    idx = doc["embedding"]
    if not isinstance(idx, int) or not 0 <= idx < len(embs):
        raise FileFormatError(
            f"embedding index must be an integer in 0..{len(embs) - 1}")
    omega_rows = doc["omega"]
    if not isinstance(omega_rows, list) or len(omega_rows) != space.dim:
        raise FileFormatError("omega must list one field element per dimension")
    omega = tuple(field.element(_fraction_list(r, "omega")) for r in omega_rows)
    return validate_period(space, field, embs[idx], omega,
                           precision_start=precision_start)


def build_candidate(doc):
    if "psis" not in doc:
        raise FileFormatError("ksymplectic file is missing 'psis'")
    psis = doc["psis"]
    if not isinstance(psis, list) or not psis:
        raise FileFormatError("psis must be a nonempty array of matrices")
    return KSymplecticCandidate(tuple(_matrix(m, "psis") for m in psis))


def build_path(doc):
    for key in ("gram", "coords"):
        if key not in doc:
            raise FileFormatError(f"path file is missing {key!r}")
    space = QuadraticSpace(_matrix(doc["gram"], "gram"))
    coords = doc["coords"]
    if not isinstance(coords, list):
        raise FileFormatError("coords must be an array of polynomials")
    from .exactmath.unipoly import normalize

    polys = tuple(normalize(_fraction_list(c, "coords")) for c in coords)
    return PeriodPath(space, polys)


@dataclass(frozen=True)
class Report:
    command: str
    status: str
    sections: tuple  # ((title, ((key, value), ...)), ...)

    @property
    def machine(self):
        return {
            "command": self.command,
            "status": self.status,
            "sections": {title: dict(rows) for title, rows in self.sections},
        }

    def machine_bytes(self):
        return (json.dumps(self.machine, sort_keys=True,
                           separators=(",", ":")) + "\n").encode()

    def human(self):
        lines = [f"hodgekit {self.command}: {self.status}"]
        for title, rows in self.sections:
            lines.append(f"[{title}]")
            for key, value in rows:
                lines.append(f"  {key}: {value}")
        return "\n".join(lines) + "\n"

    @property
    def exit_code(self):
        return 0 if self.status == "ok" else 2


def _fmt_fraction(x):
    return str(Fraction(x))


def _fmt_vector(v):
    return [_fmt_fraction(c) for c in v]


def _fmt_matrix(m):
    return [[_fmt_fraction(c) for c in row] for row in m.entries]


def cmd_classify(period, seed=0):
    h = transcendental_lattice(period)
    ef = endomorphism_field(h, seed=seed)
    classes = hodge_classes_tensor_square(h)
    sections = (
        ("space", (
            ("dim_v", period.dim),
            ("field_degree", period.field.degree),
        )),
        ("transcendental_lattice", (
            ("dim_t", h.dim_t),
            ("dim_alg", h.alg.rows),
            ("basis", _fmt_matrix(h.trans)),
        )),
        ("endomorphism_field", (
            ("e", ef.e),
            ("classification", ef.classification),
            ("primitive_minpoly", _fmt_vector(ef.primitive_minpoly)),
            ("dim_fixed_subalgebra", len(ef.fixed_subalgebra)
             if ef.classification == "CM" else ef.e),
            ("mt_family", ef.mt.family),
            ("mt_rank", ef.mt.rank),
            ("hodge_classes_dim", len(classes)),
        )),
    )
    return Report("classify", "ok", sections)


def cmd_tha(period, n, seed=0):
    h = transcendental_lattice(period)
    ef = endomorphism_field(h, seed=seed)
    tha = build_tha(h, ef, n)
    sections = (
        ("transcendental_hodge_algebra", (
            ("mode", tha.mode),
            ("n", tha.n),
            ("e", tha.e),
            ("rank_over_e", tha.estructure.rank),
            ("graded_dims_e", list(tha.graded_dims_e)),
            ("graded_dims_q", list(tha.graded_dims_q)),
        )),
    )
    return Report("tha", "ok", sections)


def cmd_ksympl(cand, seed=0):
    report = verify_k_symplectic(cand, seed=seed)
    if not report.ok:
        sections = (
            ("verification", (
                ("ok", False),
                ("failure_reason", report.failure_reason),
                ("dim_v", cand.v_dim),
                ("k", cand.k),
            )),
        )
        return Report("ksympl", "error", sections)
    base = _default_base_point(report.quadric)
    cliff = clifford_operators(cand, report, base)
    bound = divisibility_bound(cand.k)
    sections = (
        ("verification", (
            ("ok", True),
            ("dim_v", cand.v_dim),
            ("k", cand.k),
            ("quadric", _fmt_matrix(report.quadric)),
            ("scalar", _fmt_fraction(report.scalar)),
            ("rank_on_quadric", report.rank_on_quadric),
            ("witness_field", _fmt_vector(report.witness_field_poly)
             if report.witness_field_poly else None),
        )),
        ("clifford", (
            ("base_point", _fmt_vector(cliff.base_point)),
            ("operator_squares", [_fmt_fraction(s) for s in cliff.squares]),
        )),
        ("divisibility", (
            ("bound", bound),
            ("divides", cand.v_dim % bound == 0),
        )),
    )
    return Report("ksympl", "ok", sections)


def _default_base_point(quadric):
    """First standard basis vector, or pair sum, that is anisotropic."""
    k = quadric.rows
    for i in range(k):
        if quadric.entries[i][i] != 0:
            return tuple(Fraction(int(i == j)) for j in range(k))
    for i in range(k):
        for j in range(i + 1, k):
            if quadric.entries[i][j] != 0:
                return tuple(Fraction(int(a == i or a == j)) for a in range(k))
    raise InternalError("nondegenerate quadric with no anisotropic vector")


def cmd_bounds(d, e=None, dim_h1=None):
    bound = torus_bound(d)
    rows = [("d", d), ("torus_bound", bound)]
    if dim_h1 is not None:
        rows.append(("dim_h1", dim_h1))
        rows.append(("h1_divisible", check_torus(d, dim_h1)))
        if dim_h1 % 2 == 0:
            rows.append(("complex_dim", dim_h1 // 2))
            rows.append(("complex_dim_divisible", (dim_h1 // 2) % bound == 0))
        else:
            rows.append(("complex_dim", None))
            rows.append(("complex_dim_divisible", None))
    sections = [("torus", tuple(rows))]
    if e is not None:
        sections.append(("subvariety", (
            ("e", e),
            ("bound", subvariety_bound(d, e)),
        )))
    return Report("bounds", "ok", tuple(sections))


def cmd_check_path(path):
    griffiths_check(path)
    sections = (
        ("path", (
            ("dim", path.space.dim),
            ("isotropic", True),
            ("derivative_identity", True),
        )),
    )
    return Report("perdom.check-path", "ok", sections)


def error_report(command, exc):
    status = "internal-error" if isinstance(exc, InternalError) else "error"
    sections = (
        ("error", (
            ("class", type(exc).__name__),
            ("message", str(exc)),
        )),
    )
    return Report(command, status, sections)


def _emit(report, as_json):
    out = report.machine_bytes() if as_json else report.human().encode()
    sys.stdout.buffer.write(out)
    sys.stdout.buffer.flush()


def _run_command(command, worker, args):
    try:
        report = worker()
    except InternalError as exc:
        _emit(error_report(command, exc), args.json)
        return 3
    except HodgekitError as exc:
        _emit(error_report(command, exc), args.json)
        return 2
    if getattr(args, "check", None):
        try:
            with open(args.check, "rb") as fh:
                expected = fh.read()
        except OSError as exc:
            _emit(error_report(command, FileFormatError(str(exc))), args.json)
            return 2
        if expected != report.machine_bytes():
            _emit(error_report(command, ValidationError(
                "check failed: machine output differs from the recorded run")),
                args.json)
            return 2
    _emit(report, args.json)
    return report.exit_code


def _common_flags(parser):
    parser.add_argument("--json", action="store_true",
                        help="print canonical machine JSON only")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized self-checks (default 0)")
    parser.add_argument("--precision-start", type=int, default=64,
                        help="initial interval precision in bits (default 64)")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="hodgekit",
        description="exact K3-type Hodge structure and k-symplectic toolkit")
    parser.add_argument("--version", action="version",
                        version=f"hodgekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify",
                       help="transcendental lattice and endomorphism field")
    p.add_argument("file")
    p.add_argument("--check", metavar="MACHINE_JSON",
                   help="re-run and diff against recorded machine output")
    _common_flags(p)

    p = sub.add_parser("tha", help="transcendental Hodge algebra dimensions")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True,
                   help="half the complex dimension of the manifold")
    _common_flags(p)

    p = sub.add_parser("ksympl", help="verify a k-symplectic structure")
    p.add_argument("file")
    _common_flags(p)

    p = sub.add_parser("bounds", help="divisibility and dimension bounds")
    p.add_argument("--d", type=int, required=True,
                   help="essential dimension of the deformation family")
    p.add_argument("--e", type=int, default=None,
                   help="degree of the endomorphism field")
    p.add_argument("--dim-h1", type=int, default=None,
                   help="dim H^1 of the candidate torus")
    _common_flags(p)

    p = sub.add_parser("perdom", help="period-domain checks")
    psub = p.add_subparsers(dest="perdom_command", required=True)
    pc = psub.add_parser("check-path",
                         help="verify the transversality identity on a path")
    pc.add_argument("file")
    _common_flags(pc)

    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    command = args.command

    if command == "classify":
        def worker():
            kind, doc = load_problem_file(args.file)
            if kind != "k3period":
                raise FileFormatError(f"classify needs a k3period file, got {kind}")
            period = build_period(doc, precision_start=args.precision_start)
            return cmd_classify(period, seed=args.seed)
        return _run_command(command, worker, args)

    if command == "tha":
        if args.n < 1:
            print("error: --n must be at least 1", file=sys.stderr)
            return 2

        def worker():
            kind, doc = load_problem_file(args.file)
            if kind != "k3period":
                raise FileFormatError(f"tha needs a k3period file, got {kind}")
            period = build_period(doc, precision_start=args.precision_start)
            return cmd_tha(period, args.n, seed=args.seed)
        return _run_command(command, worker, args)

    if command == "ksympl":
        def worker():
            kind, doc = load_problem_file(args.file)
            if kind != "ksymplectic":
                raise FileFormatError(f"ksympl needs a ksymplectic file, got {kind}")
            return cmd_ksympl(build_candidate(doc), seed=args.seed)
        return _run_command(command, worker, args)

    if command == "bounds":
        def worker():
            if args.d < 0:
                raise ValidationError("--d must be nonnegative")
            if args.e is not None and args.e < 1:
                raise ValidationError("--e must be at least 1")
            if args.dim_h1 is not None and args.dim_h1 < 0:
                raise ValidationError("--dim-h1 must be nonnegative")
            return cmd_bounds(args.d, args.e, args.dim_h1)
        return _run_command(command, worker, args)

    if command == "perdom":
        def worker():
            kind, doc = load_problem_file(args.file)
            if kind != "path":
                raise FileFormatError(f"check-path needs a path file, got {kind}")
            return cmd_check_path(build_path(doc))
        return _run_command("perdom.check-path", worker, args)

    raise AssertionError(f"unhandled command {command}")


if __name__ == "__main__":
    sys.exit(main())

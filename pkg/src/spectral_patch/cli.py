"""Command-line interface.

Subcommands: classify, spectral, monodromy, section, sample, roundtrip.
Documents arrive through --input (a path, or '-' for stdin); see
spectral_patch.documents for the schemas. Reports are printed to stdout as
JSON (CSV for sample); every diagnostic line goes to stderr. Output is
byte-identical across runs for identical input.

Exit codes:
    0   success
    1   verification failed (round trip out of tolerance)
    2   malformed input
    3   numeric failure (no convergence, ambiguous continuation)
    4   degenerate input (non-reduced curve, no branch points)
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents as doc
from .curves import (
    build_curve,
    companion_from_base,
    monodromy,
    roundtrip_check,
    sheets_at,
)
from .errors import (
    AmbiguousMatching,
    AtBranchPoint,
    DocumentError,
    NoBranchPoints,
    NoConvergence,
    NonReducedCurve,
    SpectralPatchError,
)
from .matrix import hitchin_map
from .moduli import classify_2x2, is_semisimple, moduli_point, normal_form

#: Verification threshold for the roundtrip command.
ROUNDTRIP_COEFF_TOL = 1e-6

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_MALFORMED = 2
EXIT_NUMERIC = 3
EXIT_DEGENERATE = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-patch",
        description="Similarity classes and spectral covers of small polynomial matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", required=True, help="JSON document path, or - for stdin")
        return p

    with_input(sub.add_parser("classify", help="classify a constant 2x2 matrix"))
    with_input(sub.add_parser("spectral", help="characteristic data and branch points"))
    mono = with_input(sub.add_parser("monodromy", help="sheet permutation around a branch point"))
    mono.add_argument("--bp-index", type=int, default=0, help="branch point index (default 0)")
    sect = with_input(sub.add_parser("section", help="companion matrix from base coefficients"))
    sect.add_argument("--rank", type=int, default=None, help="expected rank of the base")
    samp = with_input(sub.add_parser("sample", help="CSV sheet samples over a grid"))
    samp.add_argument("--grid-n", type=int, default=16, help="nodes per axis (2..512)")
    samp.add_argument("--re-min", type=float, required=True)
    samp.add_argument("--re-max", type=float, required=True)
    samp.add_argument("--im-min", type=float, required=True)
    samp.add_argument("--im-max", type=float, required=True)
    with_input(sub.add_parser("roundtrip", help="verify the spectral correspondence"))
    return parser


def _read_document(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise DocumentError("cannot read %s: %s" % (args.input, exc)) from exc
    return doc.load_json(text)


def _emit(report: dict):
    sys.stdout.write(doc.dump_report(report) + "\n")


def _fail(command: str, code: int, diagnostics) -> int:
    lines = list(diagnostics) or ["unspecified failure"]
    _emit(doc.report_dict(command, "error", None, lines))
    for line in lines:
        print(line, file=sys.stderr)
    return code


def _eigen_payload(eigen) -> list[dict]:
    return [
        {"value": doc.pair(v), "multiplicity": m} for v, m in eigen.values
    ]


def _branch_payload(curve) -> list[dict]:
    return [
        {"point": doc.pair(b), "multiplicity": m} for b, m in curve.branch_points
    ]


def cmd_classify(args) -> int:
    parsed = doc.parse_matrix_document(_read_document(args))
    m, cfg = parsed.matrix, parsed.config
    problems = []
    if m.rank != 2:
        problems.append("classify needs rank 2, got %d" % m.rank)
    if m.max_entry_degree() > 0:
        problems.append("classify needs constant entries (degree <= 0)")
    if problems:
        raise DocumentError(problems)
    a = m.as_const()
    cls = classify_2x2(a, cfg)
    payload = {
        "kind": cls.kind.value,
        "eigenvalues": _eigen_payload(cls.eigen),
        "stable": is_semisimple(a, cfg),
        "normal_form": doc.const_entries(normal_form(a, cfg)),
        "moduli": {
            "trace": doc.pair(moduli_point(cls.eigen).trace),
            "determinant": doc.pair(moduli_point(cls.eigen).determinant),
        },
    }
    _emit(doc.report_dict("classify", "ok", payload, []))
    return EXIT_OK


def cmd_spectral(args) -> int:
    parsed = doc.parse_matrix_document(_read_document(args))
    curve = build_curve(parsed.matrix, parsed.config)
    payload = {
        "rank": curve.rank,
        "char_coefficients": [doc.poly_pairs(p) for p in curve.char.coeffs],
        "discriminant": doc.poly_pairs(curve.disc),
        "branch_points": _branch_payload(curve),
    }
    _emit(doc.report_dict("spectral", "ok", payload, []))
    return EXIT_OK


def cmd_monodromy(args) -> int:
    parsed = doc.parse_matrix_document(_read_document(args))
    curve = build_curve(parsed.matrix, parsed.config)
    if not curve.branch_points:
        raise NoBranchPoints("curve has no branch points")
    if not (0 <= args.bp_index < len(curve.branch_points)):
        raise DocumentError(
            "bp-index %d out of range 0..%d"
            % (args.bp_index, len(curve.branch_points) - 1)
        )
    result = monodromy(curve, args.bp_index, parsed.config, nodes=parsed.loop_nodes)
    payload = {
        "branch_point": doc.pair(result.branch_point),
        "permutation": list(result.perm),
        "loop": {
            "center": doc.pair(result.branch_point),
            "radius": result.radius,
            "nodes": result.nodes,
        },
    }
    _emit(doc.report_dict("monodromy", "ok", payload, []))
    return EXIT_OK


def cmd_section(args) -> int:
    base = doc.parse_base_document(_read_document(args), args.rank)
    comp = companion_from_base(base)
    back = hitchin_map(comp)
    err = 0.0
    for pa, pb in zip(base.coeffs, back.coeffs):
        width = max(len(pa.coeffs), len(pb.coeffs))
        for i in range(width):
            ca = pa.coeffs[i] if i < len(pa.coeffs) else 0j
            cb = pb.coeffs[i] if i < len(pb.coeffs) else 0j
            err = max(err, abs(ca - cb))
    payload = {
        "rank": comp.rank,
        "companion": doc.polymatrix_entries(comp),
        "max_coeff_error": err,
    }
    _emit(doc.report_dict("section", "ok", payload, []))
    return EXIT_OK


def _axis(lo: float, hi: float, n: int) -> list[float]:
    if lo == hi:
        return [lo]
    return [lo + k * (hi - lo) / (n - 1) for k in range(n)]


def cmd_sample(args) -> int:
    parsed = doc.parse_matrix_document(_read_document(args))
    problems = []
    if not (2 <= args.grid_n <= 512):
        problems.append("grid-n must lie in 2..512, got %d" % args.grid_n)
    if args.re_min > args.re_max:
        problems.append("re-min exceeds re-max")
    if args.im_min > args.im_max:
        problems.append("im-min exceeds im-max")
    if problems:
        raise DocumentError(problems)
    curve = build_curve(parsed.matrix, parsed.config)
    cfg = parsed.config
    re_axis = _axis(args.re_min, args.re_max, args.grid_n)
    im_axis = _axis(args.im_min, args.im_max, args.grid_n)
    out = sys.stdout
    out.write("z_re,z_im,sheet,lambda_re,lambda_im\n")
    skipped = 0
    for im in im_axis:
        for re in re_axis:
            z = complex(re, im)
            try:
                sheets = sheets_at(curve, z, cfg)
            except AtBranchPoint:
                skipped += 1
                continue
            for idx, lam in enumerate(sheets):
                out.write(
                    "%s,%s,%d,%s,%s\n"
                    % (repr(re), repr(im), idx, repr(lam.real), repr(lam.imag))
                )
    if skipped:
        print(
            "skipped %d grid point(s) at or near the branch locus" % skipped,
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    parsed = doc.parse_matrix_document(_read_document(args))
    report = roundtrip_check(parsed.matrix, parsed.config)
    passed = (
        report.max_coeff_error <= ROUNDTRIP_COEFF_TOL
        and report.pointwise_class_agreement
    )
    payload = {
        "max_coeff_error": report.max_coeff_error,
        "pointwise_class_agreement": report.pointwise_class_agreement,
        "sample_count": report.sample_count,
        "passed": passed,
    }
    diagnostics = []
    if not passed:
        diagnostics.append(
            "round trip failed: max_coeff_error=%r agreement=%r"
            % (report.max_coeff_error, report.pointwise_class_agreement)
        )
    _emit(doc.report_dict("roundtrip", "ok" if passed else "error", payload, diagnostics))
    for line in diagnostics:
        print(line, file=sys.stderr)
    return EXIT_OK if passed else EXIT_VERIFY


_HANDLERS = {
    "classify": cmd_classify,
    "spectral": cmd_spectral,
    "monodromy": cmd_monodromy,
    "section": cmd_section,
    "sample": cmd_sample,
    "roundtrip": cmd_roundtrip,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except DocumentError as exc:
        return _fail(args.command, EXIT_MALFORMED, exc.diagnostics)
    except (NoConvergence, AmbiguousMatching, AtBranchPoint) as exc:
        return _fail(args.command, EXIT_NUMERIC, [str(exc)])
    except (NonReducedCurve, NoBranchPoints) as exc:
        return _fail(args.command, EXIT_DEGENERATE, [str(exc)])
    except SpectralPatchError as exc:
        # Remaining library errors (rank bounds, degree caps, zero
        # polynomials) all trace back to the input document.
        return _fail(args.command, EXIT_MALFORMED, [str(exc)])


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

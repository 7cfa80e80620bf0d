"""Command-line front end.

Subcommands: gen, double, ops, spectrum, parity, cheeger, sweep, verify, demo.
Results go to standard output (or -o FILE); standard error carries
diagnostics only.  Exit status: 0 success, 1 failure (one structured error
line), 2 usage error.  `verify` exits 0 only when the Cheeger bounds hold.
"""

import argparse
import math
import sys

from . import graphs
from .cheeger import DEFAULT_MAX_N, cheeger_exact, sweep_cut, verify_theorem
from .errors import ReflapError
from .graphs import double, generate, parse_graph, serialize_graph
from .operators import assemble
from .spectra import dirichlet_spectrum, parity_classify, reflected_spectrum


def _format_json(obj, indent=0):
    """Minimal JSON writer: floats with 17 significant digits, stable key order."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            '%s  "%s": %s' % (pad, k, _format_json(v, indent + 1))
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        inner = ", ".join(_format_json(v, indent) for v in obj)
        return "[" + inner + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return "%.17g" % obj
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return '"%s"' % str(obj).replace("\\", "\\\\").replace('"', '\\"')


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path):
    if path is None:
        raise ReflapError("this subcommand requires -i FILE")
    with open(path) as fh:
        return parse_graph(fh.read())


def _parse_boundary_flag(value):
    if value is None or value in ("none", "endpoints", "cols", "rows", "bridge"):
        return value
    return [int(p) for p in value.replace(",", " ").split()]


def _cut_dict(cut):
    return {
        "subset": list(cut.subset),
        "cut_measure": {
            "num": cut.cut_measure.numerator,
            "den": cut.cut_measure.denominator,
            "real": float(cut.cut_measure),
        },
        "vol_s": float(cut.vol_s),
        "vol_complement": float(cut.vol_complement),
        "ratio": {
            "num": cut.ratio.numerator,
            "den": cut.ratio.denominator,
            "real": float(cut.ratio),
        },
    }


def _matrix_rows(m):
    return [[float(x) for x in row] for row in m]


def cmd_gen(args):
    boundary = _parse_boundary_flag(args.boundary) or "none"
    sizes = [int(s) for s in args.sizes]
    g = generate(args.kind, *sizes, boundary=boundary)
    return serialize_graph(g, comments=["%s %s" % (args.kind, " ".join(args.sizes))])


def cmd_double(args):
    g = _load_graph(args.input)
    dg = double(g)
    comments = ["doubled graph"] + [
        "mirror %d %d" % (v, u) for v, u in sorted(dg.mirror.items())
    ]
    return serialize_graph(dg.graph, comments=comments)


def cmd_ops(args):
    g = _load_graph(args.input)
    ops = assemble(g)
    named = [
        ("ordering", [int(v) for v in ops.ordering]),
        ("r", _matrix_rows(ops.r)),
        ("d", [float(x) for x in ops.d]),
        ("q", [float(x) for x in ops.q]),
        ("l", _matrix_rows(ops.l)),
        ("l_boundary", _matrix_rows(ops.l_boundary)),
        ("l_r", _matrix_rows(ops.l_r)),
        ("l_r_norm", _matrix_rows(ops.l_r_norm)),
        ("sym", _matrix_rows(ops.sym)),
        ("l_d", _matrix_rows(ops.l_d)),
    ]
    if args.format == "json":
        return _format_json(dict(named)) + "\n"
    lines = []
    for name, value in named:
        lines.append("%s:" % name)
        if value and isinstance(value[0], list):
            for row in value:
                lines.append("  " + " ".join("%g" % x for x in row))
        else:
            lines.append("  " + " ".join("%g" % x for x in value))
    return "\n".join(lines) + "\n"


def _spectrum_dict(eigenvalues, eigenvectors, residuals):
    return {
        "eigenvalues": [float(x) for x in eigenvalues],
        "eigenvectors": [float(x) for x in eigenvectors.flatten()],
        "residuals": [float(x) for x in residuals],
    }


def cmd_spectrum(args):
    g = _load_graph(args.input)
    if args.kind == "dirichlet":
        spec = dirichlet_spectrum(g, tol=args.tol)
        data = _spectrum_dict(spec.eigenvalues, spec.eigenvectors, spec.residuals)
    else:
        rs = reflected_spectrum(g, tol=args.tol)
        data = _spectrum_dict(
            rs.eigenvalues, rs.eigenvectors, rs.spectrum.residuals
        )
        data["sweep_vectors"] = [float(x) for x in rs.sweep_vectors.flatten()]
    if args.format == "json":
        return _format_json(data) + "\n"
    return (
        "eigenvalues: "
        + " ".join("%.12g" % x for x in data["eigenvalues"])
        + "\n"
    )


def cmd_parity(args):
    g = _load_graph(args.input)
    dg = double(g)
    report = parity_classify(dg, tol=args.tol)
    data = {
        "even_count": report.even_count,
        "odd_count": report.odd_count,
        "clusters": [
            {
                "eigenvalue": c.eigenvalue,
                "multiplicity": c.multiplicity,
                "even_dim": c.even_dim,
                "odd_dim": c.odd_dim,
            }
            for c in report.clusters
        ],
    }
    if args.format == "json":
        return _format_json(data) + "\n"
    lines = ["even %d odd %d" % (report.even_count, report.odd_count)]
    for c in report.clusters:
        lines.append(
            "eigenvalue %.12g multiplicity %d even %d odd %d"
            % (c.eigenvalue, c.multiplicity, c.even_dim, c.odd_dim)
        )
    return "\n".join(lines) + "\n"


def cmd_cheeger(args):
    g = _load_graph(args.input)
    h_r, cut = cheeger_exact(g, max_n=args.max_n)
    data = {
        "h_r": {"num": h_r.numerator, "den": h_r.denominator, "real": float(h_r)},
        "optimal": _cut_dict(cut),
    }
    if args.format == "json":
        return _format_json(data) + "\n"
    return "h_r = %d/%d = %.12g at S = %s\n" % (
        h_r.numerator,
        h_r.denominator,
        float(h_r),
        list(cut.subset),
    )


def cmd_sweep(args):
    g = _load_graph(args.input)
    rs = reflected_spectrum(g, tol=args.tol)
    cut = sweep_cut(g, rs.sweep_vectors[:, 1])
    data = {"lambda_r": rs.lambda_r, "sweep": _cut_dict(cut)}
    if args.format == "json":
        return _format_json(data) + "\n"
    return "sweep ratio = %.12g at S = %s\n" % (float(cut.ratio), list(cut.subset))


def cmd_verify(args):
    g = _load_graph(args.input)
    report = verify_theorem(g, max_n=args.max_n, tol=args.tol)
    data = {
        "h_r": {
            "num": report.h_r.numerator,
            "den": report.h_r.denominator,
            "real": float(report.h_r),
        },
        "lambda_r": report.lambda_r,
        "upper": report.upper,
        "lower": report.lower,
        "holds": report.holds,
        "sweep_ok": report.sweep_ok,
        "optimal_subset": list(report.optimal.subset),
        "sweep_subset": list(report.sweep.subset),
        "sweep_ratio": float(report.sweep.ratio),
    }
    if args.format == "json":
        text = _format_json(data) + "\n"
    else:
        text = (
            "lambda_r = %.12g\nh_r = %d/%d = %.12g\n"
            "bounds: %.12g >= %.12g >= %.12g -> %s\n"
            % (
                report.lambda_r,
                report.h_r.numerator,
                report.h_r.denominator,
                float(report.h_r),
                report.upper,
                float(report.h_r),
                report.lower,
                "holds" if report.holds else "VIOLATED",
            )
        )
    return text, 0 if report.holds else 1


def _grid_demo_graph(args):
    rows, cols = args.rows, args.cols
    boundary = _parse_boundary_flag(args.boundary)
    if boundary is None:
        boundary = "cols"
    return graphs.grid_graph(rows, cols, boundary=boundary), rows, cols


def cmd_demo(args):
    if args.name == "figure4":
        g, rows, cols = _grid_demo_graph(args)
        plain = graphs.new_boundary_graph(g.n, sorted(g.edges), [])
        rs_plain = reflected_spectrum(plain)
        rs_bdry = reflected_spectrum(g)
        psi = rs_plain.eigenvectors[:, 1]
        psi_r = rs_bdry.eigenvectors[:, 1]
        cut_psi = sweep_cut(plain, rs_plain.sweep_vectors[:, 1])
        cut_psi_r = sweep_cut(g, rs_bdry.sweep_vectors[:, 1])
        lines = [
            "# grid %d x %d, boundary = %s" % (rows, cols, sorted(g.boundary)),
            "# columns: vertex x y psi psi_r",
            "# psi_cut: " + " ".join(str(v) for v in cut_psi.subset),
            "# psi_r_cut: " + " ".join(str(v) for v in cut_psi_r.subset),
        ]
        for v in range(g.n):
            lines.append(
                "%d %d %d %.17g %.17g"
                % (v, v % cols, v // cols, psi[v], psi_r[v])
            )
        return "\n".join(lines) + "\n"

    if args.name == "figure5":
        k, b = args.clique, args.bridge
        g = graphs.barbell_graph(k, b, boundary="bridge")
        rs = reflected_spectrum(g)
        psi_r = rs.eigenvectors[:, 1]
        interior = set(g.interior())
        hi = max(range(g.n), key=lambda v: psi_r[v])
        lo = min(range(g.n), key=lambda v: psi_r[v])
        coords = _barbell_coords(k, b)
        lines = [
            "# barbell clique=%d bridge=%d, boundary = %s" % (k, b, sorted(g.boundary)),
            "# columns: vertex x y psi_r",
            "# argmax: %d interior=%s" % (hi, hi in interior),
            "# argmin: %d interior=%s" % (lo, lo in interior),
        ]
        for v in range(g.n):
            x, y = coords[v]
            lines.append("%d %.6f %.6f %.17g" % (v, x, y, psi_r[v]))
        return "\n".join(lines) + "\n"

    raise ReflapError("unknown demo %r" % args.name)


def _barbell_coords(k, b):
    """Plot layout: cliques on circles left and right, bridge on the x axis."""
    span = (b + 1) / 2.0 + 1.0
    coords = []
    for i in range(k):
        ang = 2.0 * math.pi * i / k
        coords.append((-span + math.cos(ang), math.sin(ang)))
    for i in range(b):
        coords.append((-span + 1.0 + (i + 1) * (2.0 * span - 2.0) / (b + 1), 0.0))
    for i in range(k):
        ang = 2.0 * math.pi * i / k
        coords.append((span + math.cos(ang), math.sin(ang)))
    return coords


def build_parser():
    parser = argparse.ArgumentParser(
        prog="reflap",
        description="Reflected Neumann graph Laplacians and Cheeger bounds",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("-i", "--input", help="graph file")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
        p.add_argument("--boundary", help="none|endpoints|cols|rows|bridge|LIST")

    p_gen = sub.add_parser("gen", help="generate a named graph")
    p_gen.add_argument("kind", choices=["path", "cycle", "grid", "barbell"])
    p_gen.add_argument("sizes", nargs="+", help="generator size arguments")
    common(p_gen, needs_input=False)

    for name in ["double", "ops", "spectrum", "parity", "cheeger", "sweep", "verify"]:
        p = sub.add_parser(name)
        common(p)
    sub.choices["spectrum"].add_argument(
        "--kind", choices=["reflected", "dirichlet"], default="reflected"
    )

    p_demo = sub.add_parser("demo", help="emit plot-ready data for the figure demos")
    p_demo.add_argument("name", choices=["figure4", "figure5"])
    p_demo.add_argument("--rows", type=int, default=4)
    p_demo.add_argument("--cols", type=int, default=6)
    p_demo.add_argument("--clique", type=int, default=6)
    p_demo.add_argument("--bridge", type=int, default=4)
    common(p_demo, needs_input=False)
    return parser


_HANDLERS = {
    "gen": cmd_gen,
    "double": cmd_double,
    "ops": cmd_ops,
    "spectrum": cmd_spectrum,
    "parity": cmd_parity,
    "cheeger": cmd_cheeger,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "demo": cmd_demo,
}


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _HANDLERS[args.subcommand](args)
    except ReflapError as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 1
    if isinstance(result, tuple):
        text, status = result
    else:
        text, status = result, 0
    _emit(text, args.output)
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

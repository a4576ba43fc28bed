"""Command-line front end: cellulation checks, degeneracy certificates, sampling sweeps."""
from __future__ import annotations

import argparse
import os
import sys

from . import reporting
from .bipartition import (CellulationError, abc_partition, cellulate,
                          manifold_generator, torus_checkerboard,
                          verify_cellulation)
from .correctability import (PlacementError, certify_degeneracy_bound,
                             certify_from_regions, hemisphere_partition,
                             homogeneous_sweep, planted_control_code)
from .entropy import verify_fact1_chain
from .layout import layout_from_complex, torus_lattice_layout
from .simplicial import chain_boundary, export_off
from .stabilizer import (fracton_code, stacked_layers, surface_code_on_complex,
                         toric_code)

MANIFOLDS = ("sphere", "torus", "torus3", "genus_surface", "klein_bottle",
             "projective_plane")
CUBICAL_D = {"torus": 2, "torus3": 3}
CODES = ("toric2", "toric3", "xcube", "cubic1", "checkerboard", "stacked",
         "planted", "sphere-surface")


def _build_code(family: str, L: int):
    if family == "toric2":
        return toric_code(2, L)
    if family == "toric3":
        return toric_code(3, L)
    if family == "stacked":
        return stacked_layers(L)
    if family == "planted":
        layout = torus_lattice_layout(2, L)
        return planted_control_code(layout), layout
    if family == "checkerboard":
        return fracton_code("checkerboard_model", L)
    return fracton_code(family, L)


def _print_checks(report) -> None:
    for line in report.lines():
        print("  " + line)


def cmd_cellulate(args) -> int:
    out = reporting.resolve_out_dir(args.out)
    pipeline_items = []
    pipe = None
    if args.blocks is not None:
        d = CUBICAL_D.get(args.manifold)
        if d is None:
            print("checkerboard cellulations exist for torus (d=2) and "
                  "torus3 (d=3), not %r" % args.manifold, file=sys.stderr)
            return 2
        try:
            c = torus_checkerboard(d, args.blocks)
        except (CellulationError, ValueError) as exc:
            print("cellulation failed: %s" % exc, file=sys.stderr)
            return 1
        L = args.L if args.L is not None else 4 * args.blocks
        try:
            layout = torus_lattice_layout(d, L)
        except ValueError as exc:
            print("layout failed: %s" % exc, file=sys.stderr)
            return 2
        stem = os.path.join(out, "cellulation_%s_b%d_L%d" % (args.manifold,
                                                             args.blocks, L))
        pipeline_items += [
            ("path", "checkerboard"),
            ("blocks_per_axis", args.blocks),
            ("lattice_extent", L),
        ]
    else:
        params = {}
        if args.manifold == "genus_surface":
            params["genus"] = args.genus
        if args.manifold in ("torus3", "klein_bottle"):
            params["grid"] = args.grid
        try:
            M = manifold_generator(args.manifold, **params)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        try:
            pipe = cellulate(M, shortcut=(args.path == "orientable"))
        except CellulationError as exc:
            print("cellulation failed: %s" % exc, file=sys.stderr)
            return 1
        c = pipe.cellulation
        layout = layout_from_complex(c.base, refine=args.refine)
        stem = os.path.join(out, "cellulation_%s_%s" % (args.manifold,
                                                        args.path))
        boundary_exact = chain_boundary(c.partition) == c.defect
        pipeline_items += [
            ("path", args.path),
            ("dimension", c.d),
            ("base_top_simplices", len(c.base.simplices[c.d])),
            ("boundary_identity", "exact" if boundary_exact else "BROKEN"),
            ("defect_chain_size", c.defect.weight()),
        ]
        if pipe.pairs is not None:
            pipeline_items.append(
                ("partner_matching",
                 "perfect (%d disjoint pairs)" % len(pipe.pairs)))
        if not boundary_exact:
            print("boundary identity failed to verify", file=sys.stderr)
            return 1
    counts = c.color_counts()
    pipeline_items += [
        ("cells", c.n_cells()),
        ("red_cells", counts["red"]),
        ("blue_cells", counts["blue"]),
    ]
    try:
        report = verify_cellulation(c, layout, args.r_skel, args.r_sep)
    except ValueError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return 2
    check_items = [(name, "%s (%s)" % ("pass" if ok else "FAIL", detail))
                   for name, ok, detail in report.checks]
    stat_items = sorted(report.stats.items())
    reporting.write_report(
        stem + ".txt", "cellulation %s" % args.manifold,
        [("pipeline", pipeline_items),
         ("verification",
          [("r_skel", args.r_skel), ("r_sep", args.r_sep),
           ("passed", report.passed)] + check_items),
         ("stats", stat_items)])
    reporting.write_tsv(
        stem + ".tsv", ("check", "passed", "detail"),
        [(name, ok, detail) for name, ok, detail in report.checks])
    reporting.cellulation_figure(c, stem + ".png",
                                 "%s cellulation" % args.manifold)
    if args.export_off and pipe is not None and c.base.dim <= 3:
        colors = None
        if c.d == 2 and c.cell_of_top is not None:
            rgb = {"red": (0.75, 0.22, 0.17), "blue": (0.18, 0.37, 0.64)}
            colors = {i: rgb[c.colors[cell]]
                      for i, cell in enumerate(c.cell_of_top)}
        with open(stem + ".off", "w") as fh:
            fh.write(export_off(c.base, colors))
    print("cellulation of %s: %d cells (%d red / %d blue)"
          % (args.manifold, c.n_cells(), counts["red"], counts["blue"]))
    _print_checks(report)
    print("report: %s" % (stem + ".txt"))
    if report.passed:
        return 0
    return 0 if args.allow_failures else 1


def _infeasible(A, B, layout) -> bool:
    return not A and not B and layout.n > 0


def cmd_certify(args) -> int:
    out = reporting.resolve_out_dir(args.out)
    if args.code == "sphere-surface":
        K = manifold_generator("sphere")
        code, layout = surface_code_on_complex(K)
        qA, qB, qC = hemisphere_partition(K)
        cert = certify_from_regions(code, qA, qB, qC)
        stem = os.path.join(out, "certificate_sphere_surface")
        config_items = [("code", args.code), ("qubits", code.n)]
        A, B, C = qA, qB, qC
    else:
        try:
            code, layout = _build_code(args.code, args.L)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        d = layout.d
        r_skel = args.r_skel if args.r_skel is not None else (2.0 if d == 2
                                                              else 1.0)
        try:
            c = torus_checkerboard(d, args.blocks)
        except (CellulationError, ValueError) as exc:
            print("cellulation failed: %s" % exc, file=sys.stderr)
            return 1
        try:
            report = verify_cellulation(c, layout, r_skel, args.r_sep)
        except ValueError as exc:
            print("cellulation checks failed: %s" % exc, file=sys.stderr)
            return 2
        if not report.passed:
            failed = [name for name, ok, _ in report.checks if not ok]
            print("cellulation checks failed: %s" % ", ".join(failed),
                  file=sys.stderr)
            return 1
        A, B, C = abc_partition(c, layout, r_skel)
        if _infeasible(A, B, layout):
            print("partition infeasible: the belt C covers every qudit at "
                  "r_skel = %g; rerun with a smaller --r-skel" % r_skel,
                  file=sys.stderr)
            return 1
        cert = certify_degeneracy_bound(code, layout, c, r_skel,
                                        r_sep=args.r_sep)
        qA = code.qubits_on_qudits(A)
        qB = code.qubits_on_qudits(B)
        qC = code.qubits_on_qudits(C)
        stem = os.path.join(out, "certificate_%s_L%d_b%d" % (args.code,
                                                             args.L,
                                                             args.blocks))
        config_items = [("code", args.code), ("L", args.L),
                        ("blocks_per_axis", args.blocks),
                        ("r_skel", r_skel), ("r_sep", args.r_sep),
                        ("qubits", code.n)]
    fact1 = verify_fact1_chain(code, qA, qB, qC)
    k = cert.log2_degeneracy
    cert_items = [
        ("log2_degeneracy", k),
        ("bound", cert.detail),
        ("region_A_qubits", len(qA)),
        ("region_B_qubits", len(qB)),
        ("region_C_qubits", len(qC)),
        ("A_correctable", cert.a_correctable),
        ("B_correctable", cert.b_correctable),
        ("holds", cert.holds),
        ("applicable", cert.applicable),
    ]
    if k <= 30:
        cert_items.insert(1, ("degeneracy_D", 1 << k))
    if qC:
        cert_items.append(("saturation_ratio", k / len(qC)))
    entropy_items = [(name, "%s = %d %s %d -> %s"
                      % (ltxt, lval, rel, rval, "pass" if ok else "FAIL"))
                     for name, ltxt, lval, rel, rval, ok in fact1.steps]
    for i, note in enumerate(fact1.notes):
        entropy_items.append(("note_%d" % i, note))
    entropy_items.append(("all_steps_hold", fact1.passed))
    reporting.write_report(stem + ".txt", "degeneracy certificate %s"
                           % args.code,
                           [("config", config_items),
                            ("certificate", cert_items),
                            ("entropy_chain", entropy_items)])
    reporting.write_tsv(stem + ".tsv",
                        ("step", "lhs", "value", "relation", "bound", "holds"),
                        [(name, ltxt, lval, rel, rval, ok)
                         for name, ltxt, lval, rel, rval, ok in fact1.steps])
    reporting.partition_figure(layout, A, B, C, stem + ".png",
                               "%s qudit partition" % args.code)
    print("certificate for %s: %s" % (args.code, cert.detail))
    if k <= 30:
        print("degeneracy D = %d" % (1 << k))
    for line in fact1.lines():
        print("  " + line)
    print("report: %s" % (stem + ".txt"))
    if cert.holds and fact1.passed:
        return 0
    if args.expect_inapplicable and not cert.applicable:
        return 0
    print("certificate did not close: %s" % cert.detail, file=sys.stderr)
    return 1


def cmd_sweep(args) -> int:
    out = reporting.resolve_out_dir(args.out)
    try:
        code, layout = _build_code(args.code, args.L)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    try:
        rep = homogeneous_sweep(code, layout, ball_radius=args.radius,
                                n_balls=args.balls, samples=args.samples,
                                seed=args.seed)
    except PlacementError as exc:
        print("placement failed: %s" % exc, file=sys.stderr)
        return 1
    stem = os.path.join(out, "sweep_%s_L%d_r%g_b%d_s%d"
                        % (args.code, args.L, args.radius, args.balls,
                           args.seed))
    bad = {idx for idx, _ in rep.counterexamples}
    result_items = [
        ("samples", rep.samples),
        ("fraction_correctable", rep.fraction_correctable),
        ("counterexamples", len(rep.counterexamples)),
        ("regions_shrunk_by_neighborhood", rep.shrunk_regions),
    ]
    witness_items = [("sample_%d_witness" % idx, w.to_string())
                     for idx, w in rep.counterexamples]
    reporting.write_report(
        stem + ".txt", "correctability sweep %s" % args.code,
        [("config",
          [("code", args.code), ("L", args.L), ("qubits", code.n),
           ("ball_radius", rep.ball_radius), ("n_balls", rep.n_balls),
           ("samples", rep.samples), ("seed", rep.seed)]),
         ("results", result_items + witness_items)])
    reporting.write_tsv(stem + ".tsv",
                        ("sample", "region_qudits", "correctable"),
                        [(i, size, i not in bad)
                         for i, size in enumerate(rep.region_sizes)])
    reporting.sweep_figure(rep, stem + ".png",
                           "%s L=%d sweep" % (args.code, args.L))
    print("sweep of %s (L=%d): fraction correctable = %s over %d samples"
          % (args.code, args.L, repr(rep.fraction_correctable), rep.samples))
    for idx, w in rep.counterexamples[:5]:
        print("  sample %d violated by %s" % (idx, w.to_string()
                                              if code.n <= 80 else
                                              "weight-%d operator" % w.weight()))
    print("report: %s" % (stem + ".txt"))
    if rep.passed() or args.allow_failures:
        return 0
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="topocert",
        description="Two-colored manifold cellulations and degeneracy-bound "
                    "certificates for stabilizer codes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cellulate",
                       help="build and verify a two-colored cellulation")
    c.add_argument("--manifold", required=True, choices=MANIFOLDS)
    c.add_argument("--path", choices=("general", "orientable"),
                   default="general",
                   help="general two-subdivision route or orientable shortcut")
    c.add_argument("--genus", type=int, default=2,
                   help="genus for genus_surface")
    c.add_argument("--grid", type=int, default=3,
                   help="grid size for torus3 / klein_bottle")
    c.add_argument("--refine", type=int, default=0,
                   help="extra barycentric refinements for the qudit layout")
    c.add_argument("--blocks", type=int, default=None,
                   help="use an even checkerboard with this many blocks per "
                        "axis instead of the simplicial route")
    c.add_argument("--L", type=int, default=None,
                   help="lattice extent for the checkerboard route")
    c.add_argument("--r-skel", type=float, default=2.0, dest="r_skel",
                   help="skeleton-neighborhood radius in units of a")
    c.add_argument("--r-sep", type=float, default=2.0, dest="r_sep",
                   help="required component separation in units of a")
    c.add_argument("--export-off", action="store_true", dest="export_off",
                   help="also write an OFF mesh of the base complex")
    c.add_argument("--allow-failures", action="store_true",
                   dest="allow_failures")
    c.add_argument("--out", default=None, help="output directory")

    t = sub.add_parser("certify",
                       help="certify log2 D <= |C| for a stabilizer code")
    t.add_argument("--code", required=True, choices=CODES)
    t.add_argument("--L", type=int, default=8, help="lattice extent")
    t.add_argument("--blocks", type=int, default=2,
                   help="checkerboard blocks per axis")
    t.add_argument("--r-skel", type=float, default=None, dest="r_skel",
                   help="belt radius in units of a (default 2 in d=2, "
                        "1 in d=3)")
    t.add_argument("--r-sep", type=float, default=2.0, dest="r_sep")
    t.add_argument("--expect-inapplicable", action="store_true",
                   dest="expect_inapplicable",
                   help="exit 0 when the hypotheses fail as expected")
    t.add_argument("--out", default=None)

    s = sub.add_parser("sweep",
                       help="sample disjoint-ball regions and test "
                            "correctability")
    s.add_argument("--code", required=True,
                   choices=tuple(x for x in CODES if x != "sphere-surface"))
    s.add_argument("--L", type=int, default=8)
    s.add_argument("--balls", type=int, default=2)
    s.add_argument("--radius", type=float, default=2.0,
                   help="ball radius in units of a")
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--allow-failures", action="store_true",
                   dest="allow_failures")
    s.add_argument("--out", default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "cellulate":
        return cmd_cellulate(args)
    if args.command == "certify":
        return cmd_certify(args)
    return cmd_sweep(args)


if __name__ == "__main__":
    sys.exit(main())

"""Tests for the file-report writers and figure renderers."""

import os

import pytest

from topocert.bipartition import cellulate, manifold_generator, torus_checkerboard
from topocert.correctability import homogeneous_sweep
from topocert.layout import layout_from_complex, torus_lattice_layout
from topocert.reporting import (cellulation_figure, format_value,
                                partition_figure, resolve_out_dir,
                                sweep_figure, write_report, write_tsv)
from topocert.stabilizer import toric_code

pytestmark = pytest.mark.filterwarnings("ignore::topocert.layout.LayoutScaleWarning")


def test_format_value():
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(0.5) == "0.5"
    assert format_value(1 / 3) == repr(1 / 3)
    assert format_value(7) == "7"
    assert format_value("x y") == "x y"


def test_resolve_out_dir(tmp_path, monkeypatch):
    monkeypatch.delenv("TOPOCERT_OUT", raising=False)
    assert resolve_out_dir(str(tmp_path)) == str(tmp_path)
    assert resolve_out_dir(None) == "."
    monkeypatch.setenv("TOPOCERT_OUT", "/somewhere")
    assert resolve_out_dir(None) == "/somewhere"
    assert resolve_out_dir(str(tmp_path)) == str(tmp_path)


def test_write_report_layout(tmp_path):
    path = str(tmp_path / "r.txt")
    write_report(path, "demo", [("alpha", [("k", 1), ("flag", True)]),
                                ("beta", [("ratio", 0.25)])])
    with open(path) as fh:
        text = fh.read()
    assert text == ("# demo\n\n[alpha]\nk = 1\nflag = true\n\n"
                    "[beta]\nratio = 0.25\n")


def test_write_tsv(tmp_path):
    path = str(tmp_path / "t.tsv")
    write_tsv(path, ("a", "b"), [(1, True), ("x", 0.5)])
    with open(path) as fh:
        lines = fh.read().splitlines()
    assert lines == ["a\tb", "1\ttrue", "x\t0.5"]


def _png_bytes(path: str) -> bytes:
    with open(path, "rb") as fh:
        data = fh.read()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    return data


def test_partition_figure_lattice_deterministic(tmp_path):
    lay = torus_lattice_layout(2, 8)
    A = list(range(10))
    B = list(range(10, 20))
    C = list(range(20, lay.n))
    p1, p2 = str(tmp_path / "p1.png"), str(tmp_path / "p2.png")
    partition_figure(lay, A, B, C, p1, "demo")
    partition_figure(lay, A, B, C, p2, "demo")
    assert _png_bytes(p1) == _png_bytes(p2)


def test_partition_figure_3d(tmp_path):
    lay = torus_lattice_layout(3, 4)
    ids = list(range(lay.n))
    path = str(tmp_path / "p3.png")
    partition_figure(lay, ids[:5], ids[5:10], ids[10:], path)
    _png_bytes(path)


def test_partition_figure_bar_fallback(tmp_path):
    # a mesh whose complex has no embedding coordinates
    K = manifold_generator("torus")
    lay = layout_from_complex(K)
    assert lay.position(0) is None
    ids = list(range(lay.n))
    path = str(tmp_path / "bars.png")
    partition_figure(lay, ids[:4], ids[4:8], ids[8:], path)
    _png_bytes(path)


def test_cellulation_figures(tmp_path):
    grid = str(tmp_path / "grid.png")
    cellulation_figure(torus_checkerboard(2, 4), grid)
    _png_bytes(grid)
    bars = str(tmp_path / "cells.png")
    cellulation_figure(cellulate(manifold_generator("sphere")).cellulation, bars)
    _png_bytes(bars)


def test_sweep_figure(tmp_path):
    code, lay = toric_code(2, 8)
    rep = homogeneous_sweep(code, lay, 2.0, 2, 6, seed=1)
    path = str(tmp_path / "sweep.png")
    sweep_figure(rep, path, "demo")
    _png_bytes(path)

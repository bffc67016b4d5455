"""Byte-identical CLI outputs against frozen golden files."""

import contextlib
import io
import pathlib

import pytest

from steiner_lab.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden"
TRIANGLE = str(GOLDEN / "triangle.json")


def capture(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert run(argv) == 0
    return buf.getvalue()


@pytest.mark.parametrize(
    "name,argv",
    [
        ("oriental2_dim1.json", ["oriental", "2", "--dim", "1"]),
        ("nerve_triangle_cap2.txt", ["nerve", TRIANGLE, "--cap", "2"]),
        ("tensor_triangle_squared.json", ["tensor", TRIANGLE, TRIANGLE]),
        (
            "slice_simplicial_vertex0.json",
            ["slice-simplicial", TRIANGLE, "0", "--cap", "2"],
        ),
    ],
)
def test_cli_output_matches_golden_file(name, argv):
    assert capture(argv) == (GOLDEN / name).read_text()


def test_golden_outputs_are_reproducible(tmp_path):
    for argv in (["oriental", "2", "--counts"], ["tensor", TRIANGLE, TRIANGLE]):
        assert capture(argv) == capture(argv)

import random
from pathlib import Path

import pytest

from oneplanar import drawing as dr
from oneplanar import io
from oneplanar.corpus import random_drawing
from oneplanar.errors import InvalidDrawing, ParseError

DATA = Path(__file__).parent / "data"


def test_golden_k2222(k2222):
    assert io.format_drawing(k2222) == (DATA / "k2222.1p").read_text()


def test_canonical_anchor(k2222):
    for line in io.format_drawing(k2222).splitlines():
        if line.startswith("rot "):
            nbrs = [int(t) for t in line.split(":")[1].split()]
            assert nbrs[0] == min(nbrs)


def test_file_roundtrip(tmp_path, odd_pair):
    path = tmp_path / "d.1p"
    io.write_drawing(odd_pair, path)
    assert b"\r" not in path.read_bytes()
    assert io.read_drawing(path) == io.canonical(odd_pair)


def test_random_roundtrips():
    rng = random.Random(4)
    for _ in range(100):
        d = random_drawing(rng, rng.randint(3, 12))
        text = io.format_drawing(d)
        assert io.format_drawing(io.parse_drawing(text)) == text


def test_comments_ignored():
    text = "# a triangle\noneplane 1\nvertices 3\nv 0 T\nv 1 T  # corner\nv 2 T\nrot 0: 1 2\nrot 1: 2 0\nrot 2: 0 1\nend\n"
    d = io.parse_drawing(text)
    assert dr.crossing_count(d) == 0 and d.n == 3


TRIANGLE = ["oneplane 1", "vertices 3", "v 0 T", "v 1 T", "v 2 T", "rot 0: 1 2", "rot 1: 2 0", "rot 2: 0 1", "end"]


@pytest.mark.parametrize(
    "edit, line",
    [
        ((0, "oneplane 2"), 1),
        ((1, "vertex 3"), 2),
        ((3, "v 1 Q"), 4),
        ((3, "v 0 T"), 4),
        ((5, "rot 0 1 2"), 6),
        ((8, "end x"), 9),
    ],
)
def test_parse_errors_have_line_numbers(edit, line):
    lines = list(TRIANGLE)
    i, text = edit
    lines[i] = text
    with pytest.raises(ParseError) as exc:
        io.parse_drawing("\n".join(lines) + "\n")
    assert exc.value.line == line


def test_truncated():
    with pytest.raises(ParseError):
        io.parse_drawing("\n".join(TRIANGLE[:-1]))


def test_missing_twin_is_a_parse_error():
    lines = list(TRIANGLE)
    lines[5] = "rot 0: 1"
    with pytest.raises(ParseError):
        io.parse_drawing("\n".join(lines) + "\n")


def test_fakes_must_follow_true_vertices():
    text = "oneplane 1\nvertices 2\nv 0 F\nv 1 T\nrot 0: 1\nrot 1: 0\nend\n"
    with pytest.raises(ParseError):
        io.parse_drawing(text)


def test_invalid_drawing_refused_with_code():
    text = "oneplane 1\nvertices 4\nv 0 T\nv 1 T\nv 2 T\nv 3 T\nrot 0: 1\nrot 1: 0\nrot 2: 3\nrot 3: 2\nend\n"
    with pytest.raises(InvalidDrawing) as exc:
        io.parse_drawing(text)
    assert exc.value.code == dr.NOT_CONNECTED
    assert io.parse_drawing(text, check=False).n == 4


def test_shared_endpoint_crossing_in_file():
    text = ("oneplane 1\nvertices 4\nv 0 T\nv 1 T\nv 2 T\nv 3 F\n"
            "rot 0: 3 1 2\nrot 1: 0 3 2\nrot 2: 0 1 3\nrot 3: 0 1 0 2\nend\n")
    with pytest.raises(InvalidDrawing) as exc:
        io.parse_drawing(text)
    assert exc.value.code == dr.SHARED_ENDPOINT_CROSSING

"""Plain-text group file parsing."""

import pytest

from fitlab.errors import InvalidPermutation, ParseError
from fitlab.groupfile import parse_group_file, read_group_file

S3_TEXT = """\
# two transpositions of three points
degree 3
gen 2 1 3
gen 2 3 1
"""


def test_parse_s3():
    g = parse_group_file(S3_TEXT, name="probe")
    assert g.order == 6
    assert g.degree == 3
    assert g.name == "probe"


def test_parse_klein_four():
    g = parse_group_file("degree 4\ngen 2 1 4 3\ngen 3 4 1 2\n")
    assert g.order == 4
    assert all(g.mul_t(x, x) == g.identity_t for x in g.tuples)


def test_blank_lines_and_comments_ignored():
    text = "\n# header\n\ndegree 3\n\n# a generator\ngen 2 1 3\n\n"
    assert parse_group_file(text).order == 2


def test_non_bijective_generator():
    with pytest.raises(InvalidPermutation):
        parse_group_file("degree 3\ngen 2 2 1\n")


def test_missing_degree_line():
    with pytest.raises(ParseError) as exc:
        parse_group_file("gen 2 1 3\n")
    assert "line 1" in str(exc.value)


def test_degree_not_integer():
    with pytest.raises(ParseError) as exc:
        parse_group_file("degree three\ngen 2 1 3\n")
    assert "line 1" in str(exc.value)


def test_degree_must_be_positive():
    with pytest.raises(ParseError):
        parse_group_file("degree 0\n")


def test_wrong_image_count_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_group_file("degree 3\ngen 2 1\n")
    assert "line 2" in str(exc.value)


def test_image_out_of_range():
    with pytest.raises(ParseError):
        parse_group_file("degree 3\ngen 2 1 4\n")


def test_images_must_be_integers():
    with pytest.raises(ParseError) as exc:
        parse_group_file("degree 3\ngen a b c\n")
    assert "line 2" in str(exc.value)


def test_stray_keyword_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_group_file("degree 3\nperm 2 1 3\n")
    assert "line 2" in str(exc.value)


def test_no_generators():
    with pytest.raises(ParseError):
        parse_group_file("degree 3\n# nothing else\n")


def test_empty_file():
    with pytest.raises(ParseError):
        parse_group_file("")


def test_read_group_file_uses_stem_name(tmp_path):
    path = tmp_path / "dihedral6.grp"
    path.write_text("degree 3\ngen 2 3 1\ngen 1 3 2\n", encoding="utf-8")
    g = read_group_file(path)
    assert g.name == "dihedral6"
    assert g.order == 6


def test_read_group_file_explicit_name(tmp_path):
    path = tmp_path / "x.grp"
    path.write_text(S3_TEXT, encoding="utf-8")
    assert read_group_file(path, name="mine").name == "mine"

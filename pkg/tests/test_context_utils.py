import os

import numpy as np
import pytest

from ordinalmotifs.engine.exceptions import ContextFormatError
from ordinalmotifs.engine.scale import ScaleFamily, build_scale
from ordinalmotifs.utils.context_utils import (
    BURMEISTER, CSV, detect_format, parse_context, read_context, serialize_context, write_context)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_read_burmeister_identity():
    context = read_context(fixture("nominal3.cxt"))
    assert context.objects == ("1", "2", "3")
    assert context.attributes == ("a", "b", "c")
    assert np.array_equal(context.incidence, build_scale(ScaleFamily.NOMINAL, 3).incidence)
    assert len(context.extents()) == 5


def test_read_csv_matrix():
    context = read_context(fixture("boolean3.csv"))
    assert context == build_scale(ScaleFamily.CONTRANOMINAL, 3)
    assert len(context.extents()) == 8


def test_name_line_is_optional():
    named = read_context(fixture("crown_sample.cxt"))
    assert named.objects == ("Basil", "Sauces", "Mugwort", "Thyme")
    bare = parse_context("B\n2\n1\n\ng\nh\nm\nX\n.\n", BURMEISTER)
    assert bare.objects == ("g", "h")
    assert bare.attributes == ("m",)
    assert bare.incidence.tolist() == [[True], [False]]


def test_lowercase_cross_and_crlf():
    context = parse_context(b"B\r\n\r\n1\r\n2\r\n\r\ng\r\nm\r\nn\r\nx.\r\n", BURMEISTER)
    assert context.incidence.tolist() == [[True, False]]


@pytest.mark.parametrize("text, line", [
    ("A\n\n1\n1\n\ng\nm\nX\n", 1),
    ("B\n\n1\n1\n\ng\nm\nXX\n", 8),
    ("B\n\n1\n1\n\ng\nm\n?\n", 8),
])
def test_burmeister_errors_carry_line_numbers(text, line):
    with pytest.raises(ContextFormatError) as info:
        parse_context(text, BURMEISTER)
    assert info.value.line == line
    assert str(info.value).startswith("line %d: " % line)


def test_truncated_burmeister():
    with pytest.raises(ContextFormatError):
        parse_context("B\n\n2\n1\n\ng\nh\nm\nX\n", BURMEISTER)


@pytest.mark.parametrize("text, format, line", [
    ("B\n\n2\n1\n\ng\ng\nm\nX\n.\n", BURMEISTER, 7),
    ("B\n\n1\n2\n\ng\nm\nm\nX.\n", BURMEISTER, 8),
    (",m,m\ng,1,0\n", CSV, 1),
    (",m\ng,1\ng,0\n", CSV, 3),
    ("\n,m\ng,1\ng,1\n", CSV, 4),
    (",m\n\n\ng,1\nh,2\n", CSV, 5),
])
def test_format_errors_name_the_physical_line(text, format, line):
    with pytest.raises(ContextFormatError) as info:
        parse_context(text, format)
    assert info.value.line == line


def test_blank_csv_lines_are_skipped():
    context = parse_context("\n,m,n\n\ng,1,0\n\nh,0,1\n", CSV)
    assert context.objects == ("g", "h")
    assert context.incidence.tolist() == [[True, False], [False, True]]


def test_bad_csv_cell():
    with pytest.raises(ContextFormatError) as info:
        parse_context(",m\ng,1\nh,yes\n", CSV)
    assert info.value.line == 3


def test_empty_object_set_has_one_extent():
    context = parse_context("B\n\n0\n2\n\nm\nn\n", BURMEISTER)
    assert context.shape == (0, 2)
    assert context.extents() == [0]


def test_detect_format():
    assert detect_format("spices.CXT") == BURMEISTER
    assert detect_format("table.csv") == CSV
    assert detect_format("stdin", b"B\n\n1\n") == BURMEISTER
    assert detect_format("stdin", b",m\ng,1\n") == CSV


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_context("", "json")
    with pytest.raises(ValueError):
        serialize_context(build_scale(ScaleFamily.NOMINAL, 2), "json")


def test_burmeister_text_layout():
    text = serialize_context(build_scale(ScaleFamily.ORDINAL, 2), BURMEISTER)
    assert text == "B\n\n2\n2\n\n1\n2\n1\n2\nXX\n.X\n"


@pytest.mark.parametrize("format, suffix", [(BURMEISTER, ".cxt"), (CSV, ".csv")])
def test_write_then_read(tmp_path, format, suffix):
    context = read_context(fixture("crown_sample.cxt"))
    path = tmp_path / ("out" + suffix)
    write_context(context, path, format)
    assert read_context(path) == context

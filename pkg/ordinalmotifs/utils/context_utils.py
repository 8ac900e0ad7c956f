"""Reading and writing formal contexts in Burmeister (.cxt) and CSV form."""
import io
import logging
import os

import pandas as pd

from ordinalmotifs.engine.context import FormalContext
from ordinalmotifs.engine.exceptions import ContextFormatError, ContextMismatchError

logger = logging.getLogger(__name__)

BURMEISTER = "burmeister"
CSV = "csv"
FORMATS = (BURMEISTER, CSV)

_SUFFIXES = {".cxt": BURMEISTER, ".csv": CSV}


def parse_context(data, format):
    text = _decode(data)
    if format == BURMEISTER:
        return _parse_burmeister(text)
    if format == CSV:
        return _parse_csv(text)
    raise ValueError("format must be one of %s, got %r" % (", ".join(FORMATS), format))


def serialize_context(context, format=BURMEISTER):
    if format == BURMEISTER:
        lines = ["B", "", str(len(context.objects)), str(len(context.attributes)), ""]
        lines.extend(context.objects)
        lines.extend(context.attributes)
        lines.extend("".join("X" if cell else "." for cell in row) for row in context.incidence)
        return "\n".join(lines) + "\n"
    if format == CSV:
        frame = pd.DataFrame(context.incidence.astype(int), index=list(context.objects),
                             columns=list(context.attributes))
        return frame.to_csv(index_label="", lineterminator="\n")
    raise ValueError("format must be one of %s, got %r" % (", ".join(FORMATS), format))


def detect_format(path, data=b""):
    suffix = os.path.splitext(str(path))[1].lower()
    if suffix in _SUFFIXES:
        return _SUFFIXES[suffix]
    first = data.lstrip(b"\xef\xbb\xbf").split(b"\n", 1)[0].strip()
    return BURMEISTER if first == b"B" else CSV


def read_context(path, format="auto"):
    with open(path, "rb") as f:
        data = f.read()
    if format == "auto":
        format = detect_format(path, data)
    context = parse_context(data, format)
    logger.info("read %s context %s with %d objects and %d attributes", format, path, *context.shape)
    return context


def write_context(context, path, format=BURMEISTER):
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(serialize_context(context, format))


def _decode(data):
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise ContextFormatError("input is not valid UTF-8 (%s)" % e.reason) from None


def _is_count(line):
    return line.strip().isdigit()


def _parse_burmeister(text):
    lines = [line.rstrip("\r") for line in text.split("\n")]
    if lines[0].strip() != "B":
        raise ContextFormatError("expected 'B' on the first line", 1)
    i = 1
    # optional name line
    if len(lines) > 3 and (not _is_count(lines[1]) or all(_is_count(line) for line in lines[1:4])):
        i = 2
    if len(lines) < i + 2 or not (_is_count(lines[i]) and _is_count(lines[i + 1])):
        raise ContextFormatError("expected object and attribute counts", i + 1)
    n_objects, n_attributes = int(lines[i]), int(lines[i + 1])
    i += 2
    if i < len(lines) and not lines[i].strip():
        i += 1
    expected = n_objects + n_attributes + n_objects
    body = lines[i:i + expected]
    if len(body) < expected:
        raise ContextFormatError(
            "file ends after %d of %d name and incidence lines" % (len(body), expected), len(lines))
    if any(line.strip() for line in lines[i + expected:]):
        raise ContextFormatError("unexpected content after the incidence rows", i + expected + 1)
    objects = [line.strip() for line in body[:n_objects]]
    attributes = [line.strip() for line in body[n_objects:n_objects + n_attributes]]
    _check_unique(objects, range(i + 1, i + 1 + n_objects), "object")
    _check_unique(attributes, range(i + 1 + n_objects, i + 1 + n_objects + n_attributes), "attribute")
    rows = []
    first_row = i + n_objects + n_attributes
    for offset, line in enumerate(body[n_objects + n_attributes:]):
        line_number = first_row + offset + 1
        cells = line.strip()
        if len(cells) != n_attributes:
            raise ContextFormatError("row has %d cells, expected %d" % (len(cells), n_attributes), line_number)
        bad = [c for c in cells if c not in ".Xx"]
        if bad:
            raise ContextFormatError("unexpected cell %r (use '.' or 'X')" % bad[0], line_number)
        rows.append([c in "Xx" for c in cells])
    return _build(objects, attributes, rows)


def _parse_csv(text):
    physical = text.split("\n")
    skipped = next((n for n, line in enumerate(physical) if line.strip()), len(physical))
    try:
        frame = pd.read_csv(io.StringIO("\n".join(physical[skipped:])), header=None, dtype=str,
                            keep_default_na=False, skip_blank_lines=False)
    except pd.errors.EmptyDataError:
        raise ContextFormatError("CSV input is empty", 1) from None
    except pd.errors.ParserError as e:
        raise ContextFormatError("malformed CSV (%s)" % e) from None
    # frame row r is physical line skipped + r + 1; inner blank lines stay as empty rows
    records = [(line, [_cell(value) for value in values])
               for line, values in enumerate(frame.itertuples(index=False), skipped + 1)]
    records = [(line, cells) for line, cells in records if any(cells)]
    if not records:
        raise ContextFormatError("CSV input is empty", 1)
    header_line, header = records[0]
    attributes = header[1:]
    _check_unique(attributes, [header_line] * len(attributes), "attribute")
    objects, lines, rows = [], [], []
    for line, cells in records[1:]:
        bad = [cell for cell in cells[1:] if cell not in ("0", "1")]
        if bad:
            raise ContextFormatError("unexpected cell %r (use 0 or 1)" % bad[0], line)
        objects.append(cells[0])
        lines.append(line)
        rows.append([cell == "1" for cell in cells[1:]])
    _check_unique(objects, lines, "object")
    return _build(objects, attributes, rows)


def _check_unique(labels, lines, kind):
    seen = set()
    for label, line in zip(labels, lines):
        if label in seen:
            raise ContextFormatError("duplicate %s label %r" % (kind, label), line)
        seen.add(label)


def _cell(value):
    return value.strip() if isinstance(value, str) else ""


def _build(objects, attributes, rows):
    try:
        return FormalContext(objects, attributes, rows)
    except ContextMismatchError as e:
        raise ContextFormatError(str(e)) from None

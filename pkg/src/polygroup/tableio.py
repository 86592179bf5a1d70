"""Flat file formats for operation tables and fuzzy sets.

Table files carry one header line ``nary <size> <arity>`` followed by
``size**arity`` whitespace-separated integers, the operation values in
row-major order (last argument varies fastest).  Line breaks are
insignificant after the header; ``#`` starts a comment.

Fuzzy files carry one ``<element> <value>`` pair per line plus an
optional ``default <value>`` line, values being integers, ``p/q``
fractions, or decimals, read exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .membership import parse_membership, render


def _strip(line):
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def read_table_file(path):
    """Read a table file; returns (size, arity, entries)."""
    with open(path, "r", encoding="utf-8") as fp:
        lines = fp.readlines()
    header_index = None
    for i, raw in enumerate(lines):
        if _strip(raw):
            header_index = i
            break
    if header_index is None:
        raise ParseError("empty table file", 1, 1)
    header = _strip(lines[header_index]).split()
    if len(header) != 3 or header[0] != "nary":
        raise ParseError("expected header 'nary <size> <arity>'", header_index + 1, 1)
    try:
        size, arity = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError("non-integer size or arity in header", header_index + 1, 1)
    if size < 1 or arity < 2:
        raise ParseError("header needs size >= 1 and arity >= 2", header_index + 1, 1)
    entries = []
    for i in range(header_index + 1, len(lines)):
        for word in _strip(lines[i]).split():
            try:
                value = int(word)
            except ValueError:
                raise ParseError(f"non-integer table entry {word!r}", i + 1, 1)
            if not 0 <= value < size:
                raise ParseError(f"table entry {value} out of range", i + 1, 1)
            entries.append(value)
    expected = size ** arity
    if len(entries) != expected:
        raise ParseError(
            f"expected {expected} table entries, got {len(entries)}",
            len(lines), 1,
        )
    return size, arity, entries


def write_table_file(path, op):
    """Write an operation's full table; row-major, 16 entries per line."""
    entries = op.table().reshape(-1).tolist()
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(f"nary {op.carrier.size} {op.arity}\n")
        for start in range(0, len(entries), 16):
            fp.write(" ".join(str(e) for e in entries[start:start + 16]) + "\n")


def read_fuzzy_file(path):
    """Read a fuzzy file; returns (entries dict, default or None)."""
    with open(path, "r", encoding="utf-8") as fp:
        lines = fp.readlines()
    entries = {}
    default = None
    for i, raw in enumerate(lines):
        line = _strip(raw)
        if not line:
            continue
        words = line.split()
        if len(words) != 2:
            raise ParseError("expected '<element> <value>' per line", i + 1, 1)
        key, value_text = words
        try:
            value = parse_membership(value_text)
        except (ValueError, TypeError, ZeroDivisionError):
            raise ParseError(f"bad membership value {value_text!r}", i + 1, 1)
        if key == "default":
            if default is not None:
                raise ParseError("duplicate default line", i + 1, 1)
            default = value
        else:
            try:
                element = int(key)
            except ValueError:
                raise ParseError(f"bad element {key!r}", i + 1, 1)
            if element < 0:
                raise ParseError(f"bad element {key!r}", i + 1, 1)
            if element in entries:
                raise ParseError(f"duplicate element {element}", i + 1, 1)
            entries[element] = value
    return entries, default


def write_fuzzy_file(path, mu):
    """Write one '<element> <value>' line per element, in element order.

    Only rational-valued fuzzy sets can be serialized; symbolic values
    produced by fractional powers have no file form.
    """
    values = [mu(x) for x in range(mu.group.size)]
    if not all(isinstance(v, Fraction) for v in values):
        raise TypeError("cannot serialize non-rational membership values")
    with open(path, "w", encoding="utf-8") as fp:
        for x, v in enumerate(values):
            fp.write(f"{x} {render(v)}\n")

"""CDSET: the bit-exact on-disk format for degree sets.

Layout (UTF-8, LF endings)::

    CDSET 1
    group=<S|A|2S|2A>
    n=<decimal>
    count=<decimal number of distinct degrees>
    multiplicity=<0|1>
    <degree>[ <count>]          one line per degree, ascending
    sha256=<hex digest of every preceding line, including newlines>

Readers reject version mismatches, unsorted bodies, count mismatches and
digest mismatches outright; there is no partial read.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

from .groups import DegreeSet, GroupTag


class CdsetError(Exception):
    """Raised for any malformed, truncated or corrupted CDSET file."""


def format_lines(ds: DegreeSet) -> list[str]:
    """The file's lines in order, without newline terminators."""
    lines = [
        "CDSET 1",
        f"group={ds.group.kind.value}",
        f"n={ds.group.n}",
        f"count={len(ds.degrees)}",
        f"multiplicity={1 if ds.has_multiplicity else 0}",
    ]
    if ds.has_multiplicity:
        lines.extend(f"{d} {m}" for d, m in zip(ds.degrees, ds.multiplicities))
    else:
        lines.extend(str(d) for d in ds.degrees)
    lines.append("sha256=" + _digest(lines))
    return lines


def _digest(lines: list[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def dumps(ds: DegreeSet) -> str:
    return "\n".join(format_lines(ds)) + "\n"


def write(ds: DegreeSet, path: str | os.PathLike) -> None:
    Path(path).write_bytes(dumps(ds).encode("utf-8"))


def loads(text: str, source: str = "<string>") -> DegreeSet:
    if not text.endswith("\n"):
        raise CdsetError(f"{source}: missing trailing newline")
    lines = text.split("\n")[:-1]
    if len(lines) < 6:
        raise CdsetError(f"{source}: truncated file")
    if lines[0] != "CDSET 1":
        raise CdsetError(f"{source}: unsupported version line {lines[0]!r}")
    if not lines[-1].startswith("sha256="):
        raise CdsetError(f"{source}: missing digest line")
    stated = lines[-1][len("sha256="):]
    actual = _digest(lines[:-1])
    if stated != actual:
        raise CdsetError(f"{source}: digest mismatch (stated {stated[:12]}..., actual {actual[:12]}...)")

    header = {}
    for i, key in enumerate(("group", "n", "count", "multiplicity"), start=1):
        prefix = key + "="
        if not lines[i].startswith(prefix):
            raise CdsetError(f"{source}: expected {prefix}... on line {i + 1}")
        header[key] = lines[i][len(prefix):]
    try:
        group = GroupTag.parse(header["group"], int(header["n"]))
    except ValueError as exc:
        raise CdsetError(f"{source}: bad group header: {exc}")
    try:
        count = int(header["count"])
    except ValueError:
        raise CdsetError(f"{source}: bad count {header['count']!r}")
    if header["multiplicity"] not in ("0", "1"):
        raise CdsetError(f"{source}: bad multiplicity flag {header['multiplicity']!r}")
    with_mult = header["multiplicity"] == "1"

    body = lines[5:-1]
    if len(body) != count:
        raise CdsetError(f"{source}: count={count} but {len(body)} body lines")
    degrees: list[int] = []
    mults: list[int] = []
    for line in body:
        fields = line.split(" ")
        if len(fields) != (2 if with_mult else 1):
            raise CdsetError(f"{source}: malformed body line {line!r}")
        try:
            d = int(fields[0])
            m = int(fields[1]) if with_mult else 1
        except ValueError:
            raise CdsetError(f"{source}: malformed body line {line!r}")
        if d < 1 or m < 1:
            raise CdsetError(f"{source}: nonpositive entry on line {line!r}")
        if degrees and d <= degrees[-1]:
            raise CdsetError(f"{source}: body not strictly increasing at {d}")
        degrees.append(d)
        mults.append(m)
    return DegreeSet(group, tuple(degrees), tuple(mults) if with_mult else None)


def read(path: str | os.PathLike) -> DegreeSet:
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CdsetError(f"{path}: not valid UTF-8: {exc}")
    return loads(text, source=str(path))

import hashlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chardeg import cdset
from chardeg.degrees import DegreeEngine
from chardeg.groups import DegreeSet, GroupTag, alternating, cover_alternating


def _manual_digest(lines):
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode() + b"\n")
    return h.hexdigest()


def test_golden_a5_file(tmp_path):
    ds = DegreeEngine().degree_set(alternating(5))
    body = ["CDSET 1", "group=A", "n=5", "count=4", "multiplicity=0",
            "1", "3", "4", "5"]
    expected = "\n".join(body + ["sha256=" + _manual_digest(body)]) + "\n"
    assert cdset.dumps(ds) == expected
    path = tmp_path / "a5.cdset"
    cdset.write(ds, path)
    assert path.read_text() == expected
    assert cdset.read(path) == ds


def test_roundtrip_with_multiplicities(tmp_path):
    from chardeg.groups import symmetric
    eng = DegreeEngine()
    for tag in (alternating(12), symmetric(20), cover_alternating(9)):
        ds = (eng.degree_set(tag, True) if not tag.is_cover
              else eng.faithful_degree_set(tag))
        path = tmp_path / f"{tag.label}.cdset"
        cdset.write(ds, path)
        back = cdset.read(path)
        assert back == ds


def test_roundtrip_identity_all_kinds_up_to_25(engine):
    for n in range(1, 26):
        sets = [engine.degree_set(alternating(n), True),
                engine.degree_set(GroupTag.parse("S", n), True)]
        if n >= 4:
            sets.append(engine.faithful_degree_set(cover_alternating(n)))
            sets.append(engine.faithful_degree_set(GroupTag.parse("2S", n)))
        for ds in sets:
            assert cdset.loads(cdset.dumps(ds)) == ds


degree_lists = st.lists(st.integers(1, 10 ** 30), min_size=1, max_size=40,
                        unique=True).map(sorted)


@given(degree_lists, st.booleans())
@settings(max_examples=60)
def test_roundtrip_random_sets(degs, with_mult):
    mult = tuple(1 + (d % 5) for d in degs) if with_mult else None
    ds = DegreeSet(GroupTag.parse("S", 30), tuple(degs), mult)
    assert cdset.loads(cdset.dumps(ds)) == ds


def _valid_text():
    ds = DegreeEngine().degree_set(alternating(5))
    return cdset.dumps(ds)


def test_rejects_truncation():
    text = _valid_text()
    lines = text.splitlines()
    truncated = "\n".join(lines[:-2] + [lines[-1]]) + "\n"
    with pytest.raises(cdset.CdsetError):
        cdset.loads(truncated)
    with pytest.raises(cdset.CdsetError):
        cdset.loads(text[:-1])  # missing final newline


def test_rejects_digest_tampering():
    text = _valid_text().replace("\n3\n", "\n6\n")
    with pytest.raises(cdset.CdsetError, match="digest"):
        cdset.loads(text)


def test_rejects_unsorted_body_even_with_valid_digest():
    body = ["CDSET 1", "group=A", "n=5", "count=4", "multiplicity=0",
            "3", "1", "4", "5"]
    text = "\n".join(body + ["sha256=" + _manual_digest(body)]) + "\n"
    with pytest.raises(cdset.CdsetError, match="increasing"):
        cdset.loads(text)


def test_rejects_bad_headers():
    for mutate in (("CDSET 1", "CDSET 2"), ("group=A", "group=Q"),
                   ("multiplicity=0", "multiplicity=7"),
                   ("count=4", "count=9")):
        body = ["CDSET 1", "group=A", "n=5", "count=4", "multiplicity=0",
                "1", "3", "4", "5"]
        body = [line.replace(*mutate) for line in body]
        text = "\n".join(body + ["sha256=" + _manual_digest(body)]) + "\n"
        with pytest.raises(cdset.CdsetError):
            cdset.loads(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(OSError):
        cdset.read(tmp_path / "absent.cdset")

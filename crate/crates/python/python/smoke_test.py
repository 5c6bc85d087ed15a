"""Smoke test for the aperiod extension module.

Build and install with `maturin develop` from crates/python, or copy the
built cdylib next to this script as aperiod.so, then run:

    python smoke_test.py
"""

import aperiod


def main():
    table = aperiod.full_table(b"CBAACAABCA", b"ABCA")
    assert table[3][1] == 1, table[3]

    rot = aperiod.rotation_distances(b"CBAACAABCA", b"ABCA", 3)
    assert rot[2] == 2, rot

    row = aperiod.last_row_thresholded(b"CBAACAABCA", b"ABCA", 3)
    assert all(v is None or v == table[10][j] for j, v in enumerate(row)), row

    assert aperiod.edit_distance(b"kitten", b"sitting") == 3
    assert aperiod.ed_to_prefix(b"CBAACAABCA", b"CAAB") == 2
    assert aperiod.tau(100, 4, "1/20") == 6
    assert not aperiod.primitive(b"ABAB")
    assert aperiod.canonical_rotation(b"BCA") == 2

    idx = aperiod.LcpIndex(b"CBAACAABCA", b"ABCA")
    assert len(idx) == 27
    assert idx.lcp_text_vs_periodic(6, 0) == 4

    reports = aperiod.recover(b"A" * 64)
    assert [(r.word, r.p, r.distance) for r in reports] == [(b"A", 1, 0)], reports

    s = aperiod.generate(p=5, n=300, edits=3, sigma=3, seed=7)
    assert s == aperiod.generate(p=5, n=300, edits=3, sigma=3, seed=7)
    found = {(r.word, r.distance) for r in aperiod.recover(s)}
    brute = set(aperiod.brute_apr(s[:30]))
    assert brute == {(r.word, r.distance) for r in aperiod.recover(s[:30])}
    assert found, "expected the planted period to be recovered"

    try:
        aperiod.last_row_thresholded(b"AB", b"", 1)
    except ValueError:
        pass
    else:
        raise AssertionError("empty pattern accepted")

    print("smoke test passed:", len(found), "periods in generated corpus")


if __name__ == "__main__":
    main()

import pytest
from hypothesis import given, settings, strategies as st

from semipell.enumeration import oracle_oc, oracle_sp
from semipell.recurrence import (
    CountCache,
    check_plateau_identity,
    check_scaling_identity,
    load_count_cache,
    save_count_cache,
    sp,
    sp_table,
)

# counts for n = 1..15 and m = 2..6, cross-checked against both oracles
TABLE_ROWS = {
    2: [1, 1, 3, 1, 5, 3, 11, 1, 13, 5, 23, 3, 29, 11, 51],
    3: [1, 1, 1, 3, 3, 1, 5, 5, 1, 7, 7, 3, 13, 13, 3],
    4: [1, 1, 1, 1, 3, 3, 3, 1, 5, 5, 5, 1, 7, 7, 7],
    5: [1, 1, 1, 1, 1, 3, 3, 3, 3, 1, 5, 5, 5, 5, 1],
    6: [1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 1, 5, 5, 5],
}


def test_small_binary_counts():
    assert [sp(n, 2) for n in range(1, 11)] == [1, 1, 3, 1, 5, 3, 11, 1, 13, 5]
    assert sp(0, 2) == 1
    assert sp(0, 9) == 1
    assert sp(7, 2) == 11
    assert sp(13, 3) == 13


def test_table_rows():
    for m, row in TABLE_ROWS.items():
        assert [sp(n, m) for n in range(1, 16)] == row


def test_sp_table_shape_and_content():
    rows = sp_table(15, range(2, 7))
    assert len(rows) == 5 and all(len(r) == 15 for r in rows)
    for row, m in zip(rows, range(2, 7)):
        assert row == TABLE_ROWS[m]


def test_counts_match_brute_force():
    for m in (2, 3, 4, 5):
        cache = CountCache(m)
        for n in range(0, 16):
            assert sp(n, m, cache) == len(oracle_sp(n, m))


def test_input_validation():
    with pytest.raises(ValueError):
        sp(-1, 2)
    with pytest.raises(ValueError):
        sp(5, 1)
    with pytest.raises(ValueError):
        sp(5, 2, CountCache(3))  # cache built for another modulus


def test_large_arguments_do_not_recurse():
    # the worklist must cope with a chain of half a million subproblems
    assert sp(10**6, 2) == sp(15625, 2)
    assert sp(10**6, 2) % 2 == 1
    # and with astronomically large weights that collapse by division
    assert sp(2**200, 2) == 1
    assert sp(3**100 * 2, 3) == 1


def test_warm_cache_matches_cold():
    cache = CountCache(3)
    warm = [sp(n, 3, cache) for n in range(0, 300)]
    warm_again = [sp(n, 3, cache) for n in range(0, 300)]
    cold = [sp(n, 3) for n in range(0, 300)]
    assert warm == warm_again == cold
    assert len(cache) >= 300


@given(st.integers(0, 3000), st.integers(2, 9))
@settings(max_examples=60)
def test_count_is_odd_and_scale_invariant(n, m):
    cache = CountCache(m)
    value = sp(n, m, cache)
    assert value % 2 == 1
    assert sp(n * m, m, cache) == value


def test_monotone_odd_bisection():
    # sp(2n+3) = 2 sp(2n+2) + sp(2n+1) > sp(2n+1)
    cache = CountCache(2)
    for n in range(0, 200):
        a, b, c = (sp(2 * n + k, 2, cache) for k in (1, 2, 3))
        assert c == 2 * b + a
        assert c > a


def test_plateau_identity_report():
    for m in (2, 3, 5):
        report = check_plateau_identity(60, m)
        assert report.passed
        assert report.checked == 61 * (m - 1)
    # spot value: the window at n=3, m=3 sits at 1 + 2*(1+1+1)
    assert sp(10, 3) == sp(11, 3) == 7


def test_plateau_initial_window():
    assert [sp(r, 5) for r in range(1, 5)] == [1, 1, 1, 1]


def test_scaling_identity_report():
    for m in (2, 3, 4):
        report = check_scaling_identity(m, 8, m)
        assert report.passed
    # m^j * (m*v + r) carries the count 2v + 1
    assert sp(36, 4) == 5  # j=1, v=2, r=1
    assert len(oracle_oc(36, 4)) == 5
    assert sp(2**9 * 7, 2) == sp(7, 2) == 11


def test_cache_file_roundtrip(tmp_path):
    path = str(tmp_path / "counts.txt")
    caches = {2: CountCache(2), 5: CountCache(5)}
    for n in range(0, 40):
        sp(n, 2, caches[2])
        sp(n, 5, caches[5])
    save_count_cache(path, caches)
    loaded = load_count_cache(path)
    assert set(loaded) == {2, 5}
    assert loaded[2].table == caches[2].table
    assert loaded[5].table == caches[5].table
    # saving what was loaded reproduces the file byte for byte
    again = str(tmp_path / "again.txt")
    save_count_cache(again, loaded)
    assert open(path).read() == open(again).read()


def test_cache_file_is_sorted_single_spaced(tmp_path):
    path = str(tmp_path / "counts.txt")
    cache = CountCache(3)
    sp(25, 3, cache)
    save_count_cache(path, {3: cache})
    lines = open(path).read().splitlines()
    keys = []
    for line in lines:
        fields = line.split(" ")
        assert len(fields) == 3
        assert line == " ".join(str(int(f)) for f in fields)
        keys.append((int(fields[0]), int(fields[1])))
    assert keys == sorted(keys)


@pytest.mark.parametrize(
    "body, complaint",
    [
        ("2 5\n", "three base-10 fields"),
        ("2 x 5\n", "three base-10 fields"),
        ("2  3 5\n", "three base-10 fields"),
        ("2 3 5 \n", "three base-10 fields"),
        ("2 03 5\n", "non-canonical"),
        ("1 3 5\n", "out of range"),
        ("2 3 5\n2 3 7\n", "not sorted"),
        ("3 9 1\n2 3 5\n", "not sorted"),
        ("2 3 5", "trailing newline"),
    ],
)
def test_cache_file_rejects_malformed_lines(tmp_path, body, complaint):
    path = tmp_path / "bad.txt"
    path.write_text(body)
    with pytest.raises(ValueError) as err:
        load_count_cache(str(path))
    assert complaint in str(err.value)
    # the error names the offending line
    assert ":1:" in str(err.value) or ":2:" in str(err.value)

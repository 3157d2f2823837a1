"""Version grammar and total-order properties."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weblibs.semver import SemVer, VersionParseError, compare_versions, parse_version


def test_parse_canonical_triple():
    assert parse_version("1.6.3") == SemVer(1, 6, 3)


def test_parse_two_components_implies_patch_zero():
    assert parse_version("1.2") == SemVer(1, 2, 0)


def test_parse_four_components_folds_into_extra():
    v = parse_version("1.2.3.4")
    assert (v.major, v.minor, v.patch, v.extra) == (1, 2, 3, "4")


def test_parse_suffix():
    assert parse_version("2.0.0-rc1") == SemVer(2, 0, 0, "rc1")
    assert parse_version("1.2-beta") == SemVer(1, 2, 0, "beta")


def test_parse_fourth_component_and_suffix_combine():
    assert parse_version("1.2.3.4-b").extra == "4-b"


@pytest.mark.parametrize(
    "bad",
    ["", "v1..2", "v1.2.3", "1", "1.2.3.4.5", "1.a.2", "1.2.3-", ".1.2", "1.2."],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(VersionParseError):
        parse_version(bad)


def test_roundtrip_identity_on_canonical_strings():
    for text in ("0.0.0", "1.6.3", "10.20.30", "999.0.1"):
        assert str(parse_version(text)) == text


def test_compare_examples():
    assert compare_versions(parse_version("1.2.3"), parse_version("1.2.4")) == -1
    assert compare_versions(parse_version("1.2.3"), parse_version("1.2.3")) == 0
    assert compare_versions(parse_version("2.0.0"), parse_version("1.99.99")) == 1


def test_plain_release_sorts_after_same_triple_with_extra():
    assert parse_version("2.0.0-rc1") < parse_version("2.0.0")
    assert parse_version("2.0.0") > parse_version("2.0.0-rc1")


versions = st.builds(
    SemVer,
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=0, max_value=40),
    st.one_of(st.none(), st.text(alphabet="abrc0123456789", min_size=1, max_size=4)),
)


@given(versions, versions)
def test_antisymmetry(a, b):
    assert compare_versions(a, b) == -compare_versions(b, a)


@given(versions, versions, versions)
def test_transitivity(a, b, c):
    if compare_versions(a, b) <= 0 and compare_versions(b, c) <= 0:
        assert compare_versions(a, c) <= 0


@given(versions, versions)
def test_totality_and_consistency_with_operators(a, b):
    c = compare_versions(a, b)
    assert c in (-1, 0, 1)
    assert (c == 0) == (a == b)
    assert (c < 0) == (a < b)
    assert (c > 0) == (a > b)


@given(versions)
def test_reflexive_equality(a):
    assert compare_versions(a, a) == 0


@given(st.integers(0, 99), st.integers(0, 99), st.integers(0, 99))
def test_parse_serialize_roundtrip_random_triples(major, minor, patch):
    text = f"{major}.{minor}.{patch}"
    assert str(parse_version(text)) == text

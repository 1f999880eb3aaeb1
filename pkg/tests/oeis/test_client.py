"""Tests for the OEIS b-file client and the sequence generators."""

import httpx
import pytest

from stripcomb.errors import OeisError
from stripcomb.oeis import (
    GENERATORS,
    OeisClient,
    generator_for,
    normalize_anumber,
    oeis_check,
    oeis_suite_check,
    parse_bfile,
    resolve_cache_dir,
)

FIBONACCI_BFILE = "# Fibonacci numbers\n" + "".join(f"{i} {v}\n" for i, v in enumerate([0, 1, 1, 2, 3, 5, 8, 13, 21]))


@pytest.fixture
def client(tmp_path):
    """Offline client with an empty cache."""
    return OeisClient(cache_dir=tmp_path)


@pytest.fixture
def http(mocker):
    """Mock HTTP client returning the Fibonacci b-file."""
    mock = mocker.Mock(spec=httpx.Client)
    request = httpx.Request("GET", "https://oeis.org/A000045/b000045.txt")
    mock.get.return_value = httpx.Response(200, text=FIBONACCI_BFILE, request=request)
    return mock


def test_parse_bfile():
    """Test parsing with comments and blank lines."""
    offset, terms = parse_bfile("# header\n\n1 1\n2 1\n3 2\n")
    assert offset == 1
    assert terms == (1, 1, 2)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "0 1\n1 x\n", "0 1\n2 1\n"])
def test_parse_bfile_rejects(text):
    """Test empty, unparsable and gapped b-files."""
    with pytest.raises(OeisError):
        parse_bfile(text, "A000001")


def test_normalize_anumber():
    """Test A-number normalization."""
    assert normalize_anumber("a45") == "A000045"
    assert normalize_anumber("A182522") == "A182522"
    with pytest.raises(OeisError):
        normalize_anumber("fib")
    with pytest.raises(OeisError):
        generator_for("A000001")


def test_cache_dir_precedence(monkeypatch, tmp_path):
    """Test flag over environment over platform default."""
    monkeypatch.setenv("STRIPCOMB_CACHE", str(tmp_path / "env"))
    assert resolve_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"
    assert resolve_cache_dir() == tmp_path / "env"
    monkeypatch.delenv("STRIPCOMB_CACHE")
    assert "stripcomb" in str(resolve_cache_dir())


def test_bundled_fixture(client):
    """Test that offline lookups fall back to the bundled terms."""
    fixture = client.fixture("A000045")
    assert fixture.source == "bundled"
    assert fixture.offset == 0
    assert fixture.terms[:8] == (0, 1, 1, 2, 3, 5, 8, 13)


def test_online_fetch_writes_cache(tmp_path, http):
    """Test fetching, caching and reading back from the cache."""
    fixture = OeisClient(cache_dir=tmp_path, online=True, http=http).fixture("A000045")
    assert fixture.source == "fetched"
    assert fixture.terms == (0, 1, 1, 2, 3, 5, 8, 13, 21)
    assert (tmp_path / "A000045.txt").is_file()
    assert http.get.call_args.args[0] == "https://oeis.org/A000045/b000045.txt"

    cached = OeisClient(cache_dir=tmp_path).fixture("A000045")
    assert cached.source == "cached"
    assert cached.terms == fixture.terms
    assert cached.fetched_at is not None


def test_network_failure_falls_back(tmp_path, mocker):
    """Test that a connection error falls back to local data."""
    http = mocker.Mock(spec=httpx.Client)
    http.get.side_effect = httpx.ConnectError("offline")
    fixture = OeisClient(cache_dir=tmp_path, online=True, http=http).fixture("A000045")
    assert fixture.source == "bundled"


def test_oeis_check_matches(client):
    """Test the Fibonacci strip against A000045."""
    match = oeis_check("A000045", 20, client)
    assert match.matched
    assert match.compared == 20
    assert match.generator == GENERATORS["A000045"].label


def test_oeis_check_reports_first_mismatch(tmp_path, client):
    """Test a corrupted cache entry."""
    (tmp_path / "A000045.txt").write_text("0 0\n1 1\n2 1\n3 2\n4 4\n", encoding="utf-8")
    match = oeis_check("A000045", 4, client)
    assert not match.matched
    assert (match.first_mismatch, match.expected, match.actual) == (3, 4, 3)


def test_prefix_must_be_positive(client):
    """Test rejection of an empty prefix."""
    with pytest.raises(OeisError):
        oeis_check("A000045", 0, client)


def test_suite_against_bundled_terms(client):
    """Test every registered generator against its bundled b-file."""
    report = oeis_suite_check(20, client)
    assert report.passed, report.witness
    assert report.checked_upto["anumber"] == max(GENERATORS)

"""OEIS b-file client: local cache, bundled fixtures and optional network fetch."""

import json
import os
import tempfile
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

import httpx
import platformdirs
from loguru import logger

from stripcomb.errors import OeisError
from stripcomb.models.oeis import OeisFixture, OeisMatch
from stripcomb.models.report import ConjectureReport, check_grid

from .generators import GENERATORS, generator_for, normalize_anumber

BFILE_URL = "https://oeis.org/{anumber}/b{digits}.txt"
CACHE_ENV = "STRIPCOMB_CACHE"


def resolve_cache_dir(flag: Optional[str] = None) -> Path:
    """``--cache-dir`` wins over ``STRIPCOMB_CACHE``, which wins over the platform cache location."""
    if flag:
        return Path(flag)
    env = os.getenv(CACHE_ENV)
    if env:
        return Path(env)
    return Path(platformdirs.user_cache_dir("stripcomb"))


def parse_bfile(text: str, anumber: str = "") -> Tuple[int, Tuple[int, ...]]:
    """Parse ``index value`` lines into ``(offset, terms)``; blank and ``#`` lines are skipped."""
    rows: List[Tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except (IndexError, ValueError):
            raise OeisError(f"{anumber or 'b-file'} line {lineno}: cannot parse {line!r}") from None
    if not rows:
        raise OeisError(f"{anumber or 'b-file'} holds no terms")
    for (prev, _), (index, _) in zip(rows, rows[1:]):
        if index != prev + 1:
            raise OeisError(f"{anumber or 'b-file'} indices jump from {prev} to {index}")
    return rows[0][0], tuple(value for _, value in rows)


class OeisClient:
    """Looks up reference terms; touches the network only when ``online`` is set."""

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        online: bool = False,
        timeout: float = 10.0,
        http: Optional[httpx.Client] = None,
    ):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else resolve_cache_dir()
        self.online = online
        self.timeout = timeout
        self._http = http

    def _cache_paths(self, anumber: str) -> Tuple[Path, Path]:
        return self.cache_dir / f"{anumber}.txt", self.cache_dir / f"{anumber}.json"

    def fixture(self, anumber: str) -> OeisFixture:
        anumber = normalize_anumber(anumber)
        if self.online:
            try:
                return self.fetch(anumber)
            except (httpx.HTTPError, OeisError) as e:
                logger.warning(f"Fetching {anumber} failed, falling back to local data: {e}")
        cached = self._read_cache(anumber)
        if cached is not None:
            return cached
        return self.bundled(anumber)

    def fetch(self, anumber: str) -> OeisFixture:
        anumber = normalize_anumber(anumber)
        url = BFILE_URL.format(anumber=anumber, digits=anumber[1:])
        logger.info(f"Fetching {url}")
        if self._http is not None:
            response = self._http.get(url, timeout=self.timeout)
        else:
            with httpx.Client(follow_redirects=True) as client:
                response = client.get(url, timeout=self.timeout)
        response.raise_for_status()
        offset, terms = parse_bfile(response.text, anumber)
        fetched_at = datetime.now(timezone.utc)
        meta = {"anumber": anumber, "url": url, "fetched_at": fetched_at.isoformat()}
        self._write_cache(anumber, response.text, meta)
        return OeisFixture(anumber, terms, offset, "fetched", fetched_at)

    def bundled(self, anumber: str) -> OeisFixture:
        anumber = normalize_anumber(anumber)
        resource = resources.files("stripcomb.oeis").joinpath("data", f"{anumber}.txt")
        if not resource.is_file():
            raise OeisError(f"no bundled fixture for {anumber}; run with --online to fetch it")
        offset, terms = parse_bfile(resource.read_text(encoding="utf-8"), anumber)
        return OeisFixture(anumber, terms, offset, "bundled")

    def _read_cache(self, anumber: str) -> Optional[OeisFixture]:
        data_path, meta_path = self._cache_paths(anumber)
        if not data_path.is_file():
            return None
        try:
            offset, terms = parse_bfile(data_path.read_text(encoding="utf-8"), anumber)
        except OeisError as e:
            logger.warning(f"Ignoring unreadable cache entry {data_path}: {e}")
            return None
        fetched_at = None
        if meta_path.is_file():
            try:
                fetched_at = datetime.fromisoformat(json.loads(meta_path.read_text(encoding="utf-8"))["fetched_at"])
            except (ValueError, KeyError) as e:
                logger.debug(f"No usable timestamp in {meta_path}: {e}")
        logger.debug(f"Using cached {anumber} from {data_path}")
        return OeisFixture(anumber, terms, offset, "cached", fetched_at)

    def _write_cache(self, anumber: str, text: str, meta: dict) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        data_path, meta_path = self._cache_paths(anumber)
        _atomic_write(data_path, text)
        _atomic_write(meta_path, json.dumps(meta, indent=2))
        logger.debug(f"Cached {anumber} in {data_path}")


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def oeis_check(anumber: str, prefix_len: int = 20, client: Optional[OeisClient] = None) -> OeisMatch:
    """Compare the first ``prefix_len`` generated terms with the reference terms."""
    if prefix_len < 1:
        raise OeisError(f"prefix length must be positive, got {prefix_len}")
    generator = generator_for(anumber)
    fixture = (client or OeisClient()).fixture(generator.anumber)
    reference = fixture.terms[generator.skip : generator.skip + prefix_len]
    if len(reference) < prefix_len:
        logger.warning(f"{generator.anumber} has only {len(reference)} of {prefix_len} requested terms")
    computed = generator.terms(len(reference))
    for i, (expected, actual) in enumerate(zip(reference, computed)):
        if expected != actual:
            logger.error(f"{generator.anumber} differs from {generator.label} at term {i}: {expected} != {actual}")
            return OeisMatch(generator.anumber, generator.label, i, fixture.source, i, expected, actual)
    logger.debug(f"{generator.anumber} matches {generator.label} on {len(reference)} terms ({fixture.source})")
    return OeisMatch(generator.anumber, generator.label, len(reference), fixture.source)


def oeis_suite_check(prefix_len: int = 20, client: Optional[OeisClient] = None) -> ConjectureReport:
    """Every registered generator against its reference terms, as one report."""
    client = client or OeisClient()
    grid = {"anumber": sorted(GENERATORS), "prefix": prefix_len}

    def check(cell):
        match = oeis_check(cell["anumber"], prefix_len, client)
        if match.matched:
            return None
        return {"index": match.first_mismatch, "expected": match.expected, "actual": match.actual}

    return check_grid("oeis", grid, ({"anumber": a} for a in sorted(GENERATORS)), check)

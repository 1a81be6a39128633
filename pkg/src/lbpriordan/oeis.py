"""Cross-match computed terms against OEIS sequences.

Offline lookups search the vendored fixtures shipped in ``data/oeis`` plus any
previously cached live results.  Live lookups hit the public search endpoint
and cache every returned sequence as one JSON file per A-number.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

__all__ = [
    "OEISNetworkError",
    "SEARCH_URL",
    "SeqFixture",
    "cache_dir",
    "load_cached",
    "load_vendored",
    "match",
]

SEARCH_URL = "https://oeis.org/search"
CACHE_ENV = "LBPRIORDAN_OEIS_CACHE"
_ID = re.compile(r"^A\d{6}$")

# transport(url, params, timeout) -> decoded JSON
Transport = Callable[[str, dict, float], object]


class OEISNetworkError(RuntimeError):
    """Live lookup failed at the transport level."""


@dataclass(frozen=True)
class SeqFixture:
    id: str
    terms: tuple[int, ...]
    source: str = field(default="vendored", compare=False)

    def __post_init__(self):
        if not _ID.match(self.id):
            raise ValueError(f"bad OEIS id {self.id!r}")
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise ValueError("fixture has no terms")
        if self.source not in ("vendored", "cached", "live"):
            raise ValueError(f"bad source {self.source!r}")
        object.__setattr__(self, "terms", terms)

    def to_json(self) -> dict:
        d = asdict(self)
        d["terms"] = list(self.terms)
        return d

    @classmethod
    def from_json(cls, data: dict, source: Optional[str] = None) -> "SeqFixture":
        return cls(data["id"], tuple(data["terms"]), source or data.get("source", "vendored"))

    def contains(self, query: Sequence[int]) -> bool:
        q = tuple(query)
        t = self.terms
        return any(t[i:i + len(q)] == q for i in range(len(t) - len(q) + 1))


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or str(Path.home() / ".cache")
    return Path(base) / "lbpriordan" / "oeis"


def load_vendored() -> list[SeqFixture]:
    root = resources.files("lbpriordan") / "data" / "oeis"
    out = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out.append(SeqFixture.from_json(json.loads(entry.read_text()), "vendored"))
    return out


def load_cached(directory: Optional[Path] = None) -> list[SeqFixture]:
    directory = Path(directory) if directory is not None else cache_dir()
    if not directory.is_dir():
        return []
    out = []
    for path in sorted(directory.glob("A*.json")):
        try:
            out.append(SeqFixture.from_json(json.loads(path.read_text()), "cached"))
        except (ValueError, KeyError, json.JSONDecodeError):
            continue
    return out


def _write_cache(fx: SeqFixture, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"{fx.id}.json"
    if target.exists():
        return
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(fx.to_json(), fh)
    os.replace(tmp, target)


def _requests_transport(url: str, params: dict, timeout: float):
    import requests

    try:
        r = requests.get(url, params=params, timeout=timeout)
        r.raise_for_status()
        return r.json()
    except (requests.RequestException, ValueError) as exc:
        raise OEISNetworkError(str(exc)) from exc


def _parse_results(payload) -> list[SeqFixture]:
    # The endpoint has answered both with a bare list and with {"results": [...]}.
    if isinstance(payload, dict):
        payload = payload.get("results") or []
    out = []
    for item in payload or []:
        try:
            ident = f"A{int(item['number']):06d}"
            terms = tuple(int(t) for t in str(item["data"]).split(",") if t.strip())
        except (KeyError, TypeError, ValueError):
            continue
        if terms:
            out.append(SeqFixture(ident, terms, "live"))
    return out


def match(
    terms: Iterable[int],
    mode: str = "offline",
    *,
    transport: Optional[Transport] = None,
    cache: Optional[Path] = None,
    timeout: float = 10.0,
) -> list[SeqFixture]:
    """Fixtures whose terms contain ``terms`` as a contiguous run.

    ``mode="offline"`` never touches the network.  ``mode="live"`` queries the
    search endpoint, caches each hit and returns the hits that really contain
    the query.
    """
    query = [int(t) for t in terms]
    if len(query) < 4:
        raise ValueError("need at least 4 terms to match")
    if mode == "offline":
        seen: dict[str, SeqFixture] = {}
        for fx in load_vendored() + load_cached(cache):
            if fx.contains(query) and fx.id not in seen:
                seen[fx.id] = fx
        return sorted(seen.values(), key=lambda f: f.id)
    if mode != "live":
        raise ValueError(f"unknown mode {mode!r}")
    transport = transport or _requests_transport
    payload = transport(SEARCH_URL, {"q": ",".join(map(str, query)), "fmt": "json"}, timeout)
    hits = [fx for fx in _parse_results(payload) if fx.contains(query)]
    directory = Path(cache) if cache is not None else cache_dir()
    for fx in hits:
        _write_cache(fx, directory)
    return sorted(hits, key=lambda f: f.id)

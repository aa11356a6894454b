"""OEIS b-file client with an on-disk cache, plus count verification.

b-files are plain text "index value" lines; the first index is the sequence
offset. Fetched files are cached verbatim under the cache directory (one file
per sequence id), so test suites can run from committed snapshots without
network access. The RIDERLAB_CACHE environment variable overrides the
default cache location.
"""

from __future__ import annotations

import os
import re
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .counting import count_placements
from .model import Board, PieceSpec

_ID_RE = re.compile(r"^A\d{6}$")
OEIS_URL = "https://oeis.org/{ident}/b{digits}.txt"


@dataclass(frozen=True)
class OeisEntry:
    ident: str
    offset: int
    values: tuple[tuple[int, int], ...]  # (index, value), strictly increasing

    def value_at(self, index: int):
        lo, hi = self.values[0][0], self.values[-1][0]
        if not lo <= index <= hi:
            return None
        n, v = self.values[index - lo]
        if n != index:  # non-contiguous b-file; fall back to search
            for n2, v2 in self.values:
                if n2 == index:
                    return v2
            return None
        return v


class OeisFormatError(ValueError):
    pass


def parse_bfile(text: str, ident: str) -> OeisEntry:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise OeisFormatError(f"{ident}: malformed b-file line {lineno}: {line!r}")
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise OeisFormatError(f"{ident}: non-integer entry on line {lineno}") from exc
        if values and n <= values[-1][0]:
            raise OeisFormatError(f"{ident}: indices not strictly increasing at line {lineno}")
        values.append((n, v))
    if not values:
        raise OeisFormatError(f"{ident}: empty b-file")
    return OeisEntry(ident, values[0][0], tuple(values))


def serialize_bfile(entry: OeisEntry) -> str:
    return "".join(f"{n} {v}\n" for n, v in entry.values)


def default_cache_dir() -> Path:
    env = os.environ.get("RIDERLAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "riderlab" / "oeis"


def oeis_fetch(ident: str, cache_dir=None, offline: bool = False) -> OeisEntry:
    """Return the parsed b-file, fetching and caching it when necessary."""
    if not _ID_RE.match(ident):
        raise ValueError(f"bad OEIS id: {ident!r}")
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = cache / f"{ident}.txt"
    if path.exists():
        return parse_bfile(path.read_text(), ident)
    if offline:
        raise FileNotFoundError(f"{ident} not in cache {cache} and offline=True")
    url = OEIS_URL.format(ident=ident, digits=ident[1:])
    with urllib.request.urlopen(url, timeout=30) as resp:
        text = resp.read().decode()
    entry = parse_bfile(text, ident)  # validate before caching
    cache.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return entry


#: (preset name, q) -> (sequence id, index shift). The count for board size n
#: is compared against the sequence value at index n + shift.
SEQUENCE_MAP: dict[tuple[str, int], tuple[str, int]] = {
    ("rook", 1): ("A000290", 0),
    ("bishop", 1): ("A000290", 0),
    ("queen", 1): ("A000290", 0),
    ("nightrider", 1): ("A000290", 0),
    ("rook", 2): ("A163102", -1),
    ("rook", 3): ("A179058", 0),
    ("rook", 4): ("A179059", 0),
    ("bishop", 2): ("A172123", 0),
    ("bishop", 3): ("A172124", 0),
    ("bishop", 4): ("A172127", 0),
    ("queen", 2): ("A036464", 0),
    ("queen", 3): ("A047659", 0),
    ("queen", 4): ("A061994", 0),
    ("nightrider", 2): ("A172141", 0),
    ("nightrider", 3): ("A173429", 0),
}


@dataclass(frozen=True)
class OeisReport:
    piece: str
    q: int
    ident: str
    checked: tuple[int, ...]
    mismatches: tuple[tuple[int, int, int], ...]  # (n, ours, oeis)
    skipped: tuple[int, ...]  # board sizes outside the b-file range

    @property
    def ok(self) -> bool:
        return not self.mismatches and bool(self.checked)


def verify_against_oeis(piece: PieceSpec, q: int, n_max: int,
                        cache_dir=None, offline: bool = False) -> OeisReport:
    """Compare brute counts against the mapped OEIS sequence, honoring offsets."""
    if piece.name is None or (piece.name, q) not in SEQUENCE_MAP:
        raise KeyError(f"no OEIS mapping for ({piece}, q={q})")
    ident, shift = SEQUENCE_MAP[(piece.name, q)]
    entry = oeis_fetch(ident, cache_dir=cache_dir, offline=offline)
    board = Board.square()
    checked, mismatches, skipped = [], [], []
    for n in range(1, n_max + 1):
        theirs = entry.value_at(n + shift)
        if theirs is None:
            skipped.append(n)
            continue
        ours = count_placements(piece, board, q, n)
        checked.append(n)
        if ours != theirs:
            mismatches.append((n, ours, theirs))
    return OeisReport(str(piece), q, ident, tuple(checked),
                      tuple(mismatches), tuple(skipped))

"""Littlewood-Richardson coefficients by backtracking over LR tableaux."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
from typing import Dict, Optional, Tuple

from .errors import check_bound
from .young import YoungDiagram, contains, diagram_key, partitions_of

logger = logging.getLogger(__name__)

MAX_LR_SIZE = 20
CACHE_FORMAT = "tenscat-lr-cache"
CACHE_VERSION = 1

Key = Tuple[YoungDiagram, YoungDiagram, YoungDiagram]


def canonical_key(lam, mu, nu) -> Key:
    """Key with the two symmetric factors in diagram order."""
    lam, mu, nu = YoungDiagram(lam), YoungDiagram(mu), YoungDiagram(nu)
    if diagram_key(nu) < diagram_key(mu):
        mu, nu = nu, mu
    return (lam, mu, nu)


class LRCache:
    """Thread-safe memo table for LR coefficients, optionally persisted.

    The on-disk format is a JSON object::

        {"format": "tenscat-lr-cache", "version": 1, "checksum": "<sha256>",
         "records": [{"lambda": "[2,1]", "mu": "[1]", "nu": "[1,1]", "value": 1}, ...]}

    ``checksum`` is the SHA-256 of the compact JSON encoding of ``records``.
    Files with a different format, version or checksum are ignored.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._table: Dict[Key, int] = {}

    def __len__(self) -> int:
        with self._lock:
            return len(self._table)

    def get(self, key: Key) -> Optional[int]:
        with self._lock:
            return self._table.get(key)

    def put(self, key: Key, value: int) -> None:
        with self._lock:
            self._table[key] = value

    def clear(self) -> None:
        with self._lock:
            self._table.clear()

    def records(self) -> list:
        with self._lock:
            items = sorted(
                self._table.items(),
                key=lambda kv: tuple(diagram_key(d) for d in kv[0]),
            )
        return [
            {"lambda": str(l), "mu": str(m), "nu": str(n), "value": v}
            for (l, m, n), v in items
        ]

    def save(self, path: str) -> None:
        records = self.records()
        doc = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "checksum": _checksum(records),
            "records": records,
        }
        tmp = f"{path}.tmp{os.getpid()}"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, separators=(",", ":"))
        os.replace(tmp, path)

    def load(self, path: str) -> bool:
        """Merge records from ``path``; return False if the file was rejected."""
        from .parsing import parse_diagram

        if not os.path.exists(path):
            return False
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
            if not text.strip():
                return False
            doc = json.loads(text)
            if doc.get("format") != CACHE_FORMAT or doc.get("version") != CACHE_VERSION:
                logger.warning(
                    "ignoring LR cache %s: unsupported format/version %r/%r",
                    path, doc.get("format"), doc.get("version"),
                )
                return False
            records = doc["records"]
            if doc.get("checksum") != _checksum(records):
                logger.warning("ignoring LR cache %s: checksum mismatch", path)
                return False
            loaded = {}
            for rec in records:
                key = canonical_key(
                    parse_diagram(rec["lambda"]),
                    parse_diagram(rec["mu"]),
                    parse_diagram(rec["nu"]),
                )
                value = rec["value"]
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise ValueError(f"bad value {value!r}")
                loaded[key] = value
        except Exception as exc:  # any defect means the file is not trusted
            logger.warning("ignoring corrupt LR cache %s: %s", path, exc)
            return False
        with self._lock:
            self._table.update(loaded)
        return True


def _checksum(records) -> str:
    blob = json.dumps(records, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


default_cache = LRCache()


def _count_lr_tableaux(outer: YoungDiagram, inner: YoungDiagram, content: YoungDiagram) -> int:
    # Cells in reverse reading order: rows top to bottom, each right to left.
    cells = [
        (r, c)
        for r in range(len(outer))
        for c in range(outer[r] - 1, inner.row(r) - 1, -1)
    ]
    if len(cells) != sum(content):
        return 0
    grid: Dict[Tuple[int, int], int] = {}
    counts = [0] * len(content)
    nletters = len(content)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo, hi = 1, nletters
        if c + 1 < outer[r]:
            hi = min(hi, grid[(r, c + 1)])
        if r > 0 and c >= inner.row(r - 1):
            lo = grid[(r - 1, c)] + 1
        total = 0
        for e in range(lo, hi + 1):
            if counts[e - 1] == content[e - 1]:
                continue
            if e > 1 and counts[e - 1] == counts[e - 2]:
                continue  # lattice word violated
            counts[e - 1] += 1
            grid[(r, c)] = e
            total += rec(idx + 1)
            counts[e - 1] -= 1
        return total

    return rec(0)


def lr_coeff(
    lam: YoungDiagram,
    mu: YoungDiagram,
    nu: YoungDiagram,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> int:
    """N^lam_{mu,nu}: number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = YoungDiagram(lam), YoungDiagram(mu), YoungDiagram(nu)
    check_bound("|lambda|", sum(lam), max_size)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    cache = default_cache if cache is None else cache
    key = canonical_key(lam, mu, nu)
    hit = cache.get(key)
    if hit is not None:
        return hit
    value = _count_lr_tableaux(lam, mu, nu)
    cache.put(key, value)
    return value


def lr_expand_pair(
    mu: YoungDiagram,
    nu: YoungDiagram,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> Dict[YoungDiagram, int]:
    """Nonzero coefficients of s_mu * s_nu, in diagram order."""
    mu, nu = YoungDiagram(mu), YoungDiagram(nu)
    n = sum(mu) + sum(nu)
    check_bound("|mu|+|nu|", n, max_size)
    out = {}
    for lam in partitions_of(n, max_size=max(n, max_size)):
        if not (contains(lam, mu) and contains(lam, nu)):
            continue
        c = lr_coeff(lam, mu, nu, max_size=max_size, cache=cache)
        if c:
            out[lam] = c
    return dict(sorted(out.items(), key=lambda kv: diagram_key(kv[0])))


def skew_expansion(
    outer: YoungDiagram,
    gamma: YoungDiagram,
    *,
    max_size: int = MAX_LR_SIZE,
    cache: Optional[LRCache] = None,
) -> Dict[YoungDiagram, int]:
    """Map nu -> N^outer_{nu,gamma} over nonzero values (internal helper)."""
    outer, gamma = YoungDiagram(outer), YoungDiagram(gamma)
    check_bound("|lambda|", sum(outer), max_size)
    rest = sum(outer) - sum(gamma)
    if rest < 0 or not contains(outer, gamma):
        return {}
    out = {}
    for nu in partitions_of(rest, max_size=max(rest, max_size)):
        if contains(outer, nu):
            c = lr_coeff(outer, nu, gamma, max_size=max_size, cache=cache)
            if c:
                out[nu] = c
    return out

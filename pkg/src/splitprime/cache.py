"""Persistent class-number cache: a flat ``d,h`` CSV file."""

from __future__ import annotations

import csv
import os
from pathlib import Path
from typing import Dict, Iterator, MutableMapping, Optional, Union

from .errors import ValidationError

CACHE_ENV = "SPLITPRIME_CACHE"


class CacheConflictError(ValidationError):
    pass


class ClassNumberCache(MutableMapping[int, int]):
    """Mapping d -> h backed by a CSV file.

    Loading is permissive: blank, malformed or header rows are skipped.
    Two different class numbers for the same d is a hard error, whether
    they come from the file or from a later assignment.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path is not None else None
        self._data: Dict[int, int] = {}
        self._dirty = False
        if self.path is not None and self.path.exists():
            self._load()

    @classmethod
    def from_env(cls, path: Optional[str] = None) -> Optional["ClassNumberCache"]:
        """Cache at ``path``, else at $SPLITPRIME_CACHE, else None."""
        path = path or os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def _load(self) -> None:
        with open(self.path, newline="") as fh:
            for row in csv.reader(fh):
                if len(row) < 2:
                    continue
                try:
                    d, h = int(row[0]), int(row[1])
                except ValueError:
                    continue
                self._set(d, h)
        self._dirty = False

    def _set(self, d: int, h: int) -> None:
        old = self._data.get(d)
        if old is not None and old != h:
            raise CacheConflictError(f"class number cache conflict for d={d}: {old} vs {h}")
        if old is None:
            self._data[d] = h
            self._dirty = True

    def __getitem__(self, d: int) -> int:
        return self._data[d]

    def __setitem__(self, d: int, h: int) -> None:
        self._set(int(d), int(h))

    def __delitem__(self, d: int) -> None:
        del self._data[d]
        self._dirty = True

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def save(self) -> None:
        if self.path is None or not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        with open(tmp, "w", newline="") as fh:
            fh.write("d,h\n")
            for d in sorted(self._data):
                fh.write(f"{d},{self._data[d]}\n")
        os.replace(tmp, self.path)
        self._dirty = False

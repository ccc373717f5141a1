"""OEIS b-file reading and prefix comparison."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import BFileError


@dataclass(frozen=True)
class BFile:
    entries: tuple  # of (index, value)

    def value_at(self, index: int):
        for n, v in self.entries:
            if n == index:
                return v
        return None

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: str) -> BFile:
    entries = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise BFileError(f"expected 'index value', got {raw!r}", line=lineno)
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", line=lineno) from None
        if last is not None and n <= last:
            raise BFileError(f"index {n} does not increase (previous {last})", line=lineno)
        entries.append((n, v))
        last = n
    return BFile(tuple(entries))


def read_bfile(path) -> BFile:
    return parse_bfile(Path(path).read_text())


@dataclass(frozen=True)
class Comparison:
    compared: int
    matched_prefix: int
    mismatch: tuple | None  # (our index, ours, theirs)

    @property
    def ok(self) -> bool:
        return self.mismatch is None and self.compared > 0

    def describe(self) -> str:
        if self.mismatch is None:
            return f"match: {self.matched_prefix} of {self.compared} terms agree"
        i, ours, theirs = self.mismatch
        return (
            f"mismatch at index {i}: ours {ours}, b-file {theirs} "
            f"(longest matching prefix {self.matched_prefix})"
        )


def compare(values, bfile: BFile, offset: int = 0) -> Comparison:
    """Our term ``i`` is compared with b-file index ``offset + i``.

    Comparison stops at the first of our terms with no b-file counterpart.
    """
    lookup = dict(bfile.entries)
    compared = 0
    for i, ours in enumerate(values):
        theirs = lookup.get(offset + i)
        if theirs is None:
            break
        compared += 1
        if ours != theirs:
            return Comparison(compared, i, (i, ours, theirs))
    return Comparison(compared, compared, None)

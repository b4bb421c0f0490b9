"""Binary table cache.

Layout (all integers little-endian):
    b"PTKT"  magic
    u32      format version
    u32      byte length of the function id, then the id in utf-8
    u64      limit N
    N+1 times: u32 magnitude byte length, u8 sign (0 nonnegative, 1 negative), magnitude bytes
Zero is written with magnitude length 0.
"""

from __future__ import annotations

import struct
from pathlib import Path

from .kernels import SequenceTable

MAGIC = b"PTKT"
VERSION = 1


class CacheFormatError(ValueError):
    """A cache file that cannot be read back; ``reason`` is one of bad-magic, bad-version, truncated, corrupt."""

    def __init__(self, reason: str, detail: str, path=None):
        self.reason = reason
        self.detail = detail
        self.path = None if path is None else str(path)
        super().__init__(f"{reason}: {detail}" + (f" ({self.path})" if path else ""))


def encode_table(table: SequenceTable) -> bytes:
    name = table.name.encode("utf-8")
    out = [MAGIC, struct.pack("<II", VERSION, len(name)), name, struct.pack("<Q", table.limit)]
    for v in table.values:
        mag = abs(v)
        raw = mag.to_bytes((mag.bit_length() + 7) // 8, "little")
        out.append(struct.pack("<IB", len(raw), 1 if v < 0 else 0))
        out.append(raw)
    return b"".join(out)


class _Reader:
    def __init__(self, data: bytes, path):
        self.data, self.pos, self.path = data, 0, path

    def take(self, n: int, what: str) -> bytes:
        if self.pos + n > len(self.data):
            raise CacheFormatError("truncated", f"file ends inside {what} at byte {self.pos}", self.path)
        chunk = self.data[self.pos : self.pos + n]
        self.pos += n
        return chunk


def decode_table(data: bytes, path=None, method: str = "cache") -> SequenceTable:
    r = _Reader(data, path)
    if len(data) < 4 or data[:4] != MAGIC:
        raise CacheFormatError("bad-magic", f"expected {MAGIC!r}, found {data[:4]!r}", path)
    r.pos = 4
    (version,) = struct.unpack("<I", r.take(4, "version"))
    if version != VERSION:
        raise CacheFormatError("bad-version", f"expected {VERSION}, found {version}", path)
    (nlen,) = struct.unpack("<I", r.take(4, "id length"))
    try:
        name = r.take(nlen, "function id").decode("utf-8")
    except UnicodeDecodeError as e:
        raise CacheFormatError("corrupt", f"function id is not utf-8: {e}", path) from None
    (limit,) = struct.unpack("<Q", r.take(8, "limit"))
    values = []
    for n in range(limit + 1):
        size, sgn = struct.unpack("<IB", r.take(5, f"header of value {n}"))
        if sgn > 1:
            raise CacheFormatError("corrupt", f"sign byte {sgn} at value {n}", path)
        mag = int.from_bytes(r.take(size, f"value {n}"), "little")
        values.append(-mag if sgn else mag)
    if r.pos != len(data):
        raise CacheFormatError("corrupt", f"{len(data) - r.pos} trailing bytes", path)
    return SequenceTable(name, limit, tuple(values), method)


def write_table(table: SequenceTable, path) -> Path:
    path = Path(path)
    path.write_bytes(encode_table(table))
    return path


def read_table(path) -> SequenceTable:
    path = Path(path)
    return decode_table(path.read_bytes(), path)


def cache_roundtrip(table: SequenceTable, path) -> SequenceTable:
    """Write then read back; the caller compares."""
    write_table(table, path)
    return read_table(path)

"""Canonical byte encodings.

Every hash input that consists of more than one field is packed as a
length-prefixed concatenation (4-byte big-endian length per field) so that
field boundaries can never be confused.  Integers are encoded fixed-width
big-endian.
"""

from __future__ import annotations

from .errors import EncodingError


def lp(field: bytes) -> bytes:
    """Length-prefix a single field (4-byte big-endian length)."""
    if len(field) > 0xFFFFFFFF:
        raise EncodingError("field too long")
    return len(field).to_bytes(4, "big") + field


def pack_fields(*fields: bytes) -> bytes:
    """Concatenate fields, each length-prefixed."""
    return b"".join(lp(f) for f in fields)


def int_to_bytes(value: int, width: int) -> bytes:
    if value < 0 or value >> (8 * width):
        raise EncodingError(f"integer out of range for {width}-byte encoding")
    return value.to_bytes(width, "big")


def bytes_to_int(data: bytes) -> int:
    return int.from_bytes(data, "big")


def u32(value: int) -> bytes:
    return int_to_bytes(value, 4)


def xor_bytes(a: bytes, b: bytes) -> bytes:
    if len(a) != len(b):
        raise EncodingError("xor operands differ in length")
    return bytes(x ^ y for x, y in zip(a, b))


def xor_mask(data: bytes, mask: bytes) -> bytes:
    """XOR `mask` cyclically over `data` (used to blind variable-length blobs
    with a fixed-width secret)."""
    if not mask:
        raise EncodingError("empty mask")
    return bytes(b ^ mask[i % len(mask)] for i, b in enumerate(data))

"""Duplicate-method detection by normalized body comparison.

Two normalization levels are supported:

* type 1: comments and whitespace dropped, lexemes kept verbatim.
* type 2: additionally, identifiers become positional placeholders
  (``ID1``, ``ID2``, ... in first-occurrence order) and literals become ``LIT``.

Methods whose normalized bodies are equal form one clone group. Each group
has a deterministic representative, so test cases can be generated once
per group instead of once per copy.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from epit.java_frontend import LITERALS, TRIVIA, Token, TokenKind

if TYPE_CHECKING:
    from epit.model import MethodRecord


class CloneLevel(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2

    @classmethod
    def coerce(cls, value) -> "CloneLevel":
        if isinstance(value, str):
            value = value.lower().removeprefix("type")
        return cls(int(value))


@dataclass(frozen=True)
class Fingerprint:
    level: CloneLevel
    digest: str
    length: int


def normalize_body(body: Iterable[Token], level=CloneLevel.TYPE1) -> tuple[str, ...]:
    level = CloneLevel.coerce(level)
    significant = [t for t in body if t.kind not in TRIVIA and t.kind is not TokenKind.EOF]
    if level is CloneLevel.TYPE1:
        return tuple(t.lexeme for t in significant)
    names: dict[str, str] = {}
    out = []
    for t in significant:
        if t.kind is TokenKind.IDENTIFIER:
            if t.lexeme not in names:
                names[t.lexeme] = f"ID{len(names) + 1}"
            out.append(names[t.lexeme])
        elif t.kind in LITERALS:
            out.append("LIT")
        else:
            out.append(t.lexeme)
    return tuple(out)


def digest_sequence(seq: Sequence[str]) -> str:
    h = hashlib.sha256()
    for lexeme in seq:
        h.update(lexeme.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


def fingerprint(body: Iterable[Token], level=CloneLevel.TYPE1) -> Fingerprint:
    level = CloneLevel.coerce(level)
    seq = normalize_body(body, level)
    return Fingerprint(level, digest_sequence(seq) if seq else "", len(seq))


def _order_key(m: "MethodRecord"):
    return (m.file_path, m.start_line, m.start_column, m.class_name, m.method_name)


@dataclass(frozen=True)
class CloneGroup:
    group_id: int
    members: tuple["MethodRecord", ...]

    @property
    def representative(self) -> "MethodRecord":
        return min(self.members, key=_order_key)

    @property
    def is_clone(self) -> bool:
        return len(self.members) > 1


def detect_clone_groups(records: Sequence["MethodRecord"], level=CloneLevel.TYPE1) -> list[CloneGroup]:
    """Partition ``records`` into groups of methods with equal normalized bodies.

    Bodiless methods are never grouped with anything. Digest equality is
    confirmed by comparing the full sequences, so a hash collision can't
    merge two different bodies. Groups are numbered in representative order.
    """
    level = CloneLevel.coerce(level)
    # digest -> list of (sequence, members)
    buckets: dict[str, list[tuple[tuple[str, ...], list]]] = {}
    singletons = []
    for rec in records:
        seq = normalize_body(rec.body_tokens, level)
        if not seq:
            singletons.append([rec])
            continue
        slots = buckets.setdefault(digest_sequence(seq), [])
        for existing, members in slots:
            if existing == seq:
                members.append(rec)
                break
        else:
            slots.append((seq, [rec]))

    raw = singletons + [members for slots in buckets.values() for _, members in slots]
    raw = [sorted(members, key=_order_key) for members in raw]
    raw.sort(key=lambda members: _order_key(members[0]))
    return [CloneGroup(i, tuple(members)) for i, members in enumerate(raw)]


def select_representatives(groups: Sequence[CloneGroup]) -> list["MethodRecord"]:
    return [g.representative for g in groups]


def group_index(groups: Sequence[CloneGroup]) -> dict[tuple, int]:
    """Map each member's identity key to its group id."""
    return {m.key: g.group_id for g in groups for m in g.members}

"""Finite commutative semigroups with zero, stored as Cayley tables.

Elements are the dense indices ``0 .. order-1``; ``labels`` maps each index to
a human-readable name. Every :class:`Semigroup` is validated when it is
constructed and its table is read-only afterwards.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import caps as _caps
from .errors import (
    MalformedTable,
    NotAssociative,
    NotCommutative,
    ParseError,
    SizeLimitExceeded,
    ZeroNotAbsorbing,
)

MAX_POWER_SET_N = 20
EMPTY_SET = "∅"
OVERLINE = "̅"

# rows of the associativity cube processed per numpy batch
_ASSOC_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True, eq=False)
class Semigroup:
    table: np.ndarray
    zero: int
    labels: tuple[str, ...]
    description: str = field(default="")

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        """Element index for ``label``; raises KeyError if absent."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def element(self, i: int) -> ElementRef:
        if not 0 <= i < self.order:
            raise IndexError(f"element index {i} out of range for order {self.order}")
        return ElementRef(i, self.labels[i])

    def __eq__(self, other):
        if not isinstance(other, Semigroup):
            return NotImplemented
        return (
            self.zero == other.zero
            and self.labels == other.labels
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.zero, self.labels, self.table.tobytes()))

    def __repr__(self):
        desc = f" {self.description!r}" if self.description else ""
        return f"<Semigroup{desc} order={self.order} zero={self.labels[self.zero]!r}>"


@dataclass(frozen=True)
class ElementRef:
    index: int
    label: str


def _check_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except ValueError as exc:  # ragged nested lists
        raise MalformedTable(f"table is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MalformedTable(f"table must be a non-empty square array, got shape {arr.shape}")
    if arr.dtype == object or not np.issubdtype(arr.dtype, np.integer):
        if arr.size and not all(isinstance(x, (int, np.integer)) and not isinstance(x, bool)
                                for x in arr.ravel()):
            raise MalformedTable("table entries must be integers")
        arr = arr.astype(np.int64)
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise MalformedTable(f"table[{i}][{j}] = {int(arr[i, j])} is not an index in [0, {n})")
    return arr.astype(np.int32 if n < 2**31 else np.int64)


def _first_nonassociative(t: np.ndarray) -> tuple[int, int, int] | None:
    n = t.shape[0]
    rows = max(1, _ASSOC_CHUNK_CELLS // (n * n))
    for start in range(0, n, rows):
        block = t[start:start + rows]          # a*b for a in the block
        left = t[block]                        # (a*b)*c
        right = block[:, t]                    # a*(b*c)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(x) for x in bad[0])
            return start + i, j, k
    return None


def validate(table, zero: int, labels: Sequence[str] | None = None,
             description: str = "") -> Semigroup:
    """Validate a Cayley table and wrap it as an immutable :class:`Semigroup`.

    Checks run cheapest first: shape and range, commutativity, absorbing
    zero, then all ``order**3`` associativity triples. The raised error
    carries the lexicographically first witnessing index tuple.
    """
    t = _check_table(table)
    n = t.shape[0]
    if isinstance(zero, bool) or not isinstance(zero, (int, np.integer)) or not 0 <= zero < n:
        raise MalformedTable(f"zero must be an index in [0, {n}), got {zero!r}")
    zero = int(zero)
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    labels = tuple(labels)
    if len(labels) != n:
        raise MalformedTable(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        seen = set()
        dup = next(x for x in labels if x in seen or seen.add(x))
        raise MalformedTable(f"duplicate label {dup!r}")

    asym = np.argwhere(np.triu(t != t.T))
    if len(asym):
        i, j = (int(x) for x in asym[0])
        raise NotCommutative(i, j)
    leak = np.flatnonzero(t[zero] != zero)
    if len(leak):
        raise ZeroNotAbsorbing(int(leak[0]))
    triple = _first_nonassociative(t)
    if triple is not None:
        raise NotAssociative(*triple)

    t = t.copy()
    t.setflags(write=False)
    return Semigroup(t, zero, labels, description)


def revalidate(s: Semigroup) -> Semigroup:
    """Run the full axiom check again on an existing semigroup."""
    return validate(s.table, s.zero, s.labels, s.description)


def subset_label(mask: int) -> str:
    if mask == 0:
        return EMPTY_SET
    members = [str(b + 1) for b in range(mask.bit_length()) if mask >> b & 1]
    return "{" + ",".join(members) + "}"


def residue_label(a: int) -> str:
    return "".join(ch + OVERLINE for ch in str(a))


def power_set_semigroup(n: int, caps: _caps.Caps | None = None) -> Semigroup:
    """The subsets of ``{1..n}`` under intersection; element ``i`` is bitmask ``i``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_POWER_SET_N:
        raise SizeLimitExceeded("power set n", n, MAX_POWER_SET_N)
    cap = _caps.current(caps).order
    if 2**n > cap:
        raise SizeLimitExceeded("power set order", 2**n, cap)
    idx = np.arange(2**n)
    table = idx[:, None] & idx[None, :]
    labels = [subset_label(i) for i in range(2**n)]
    return validate(table, 0, labels, description=f"P({n})")


def zn_multiplicative(m: int, caps: _caps.Caps | None = None) -> Semigroup:
    """Integers modulo ``m`` under multiplication, zero ``0``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    cap = _caps.current(caps).order
    if m > cap:
        raise SizeLimitExceeded("Z_m order", m, cap)
    idx = np.arange(m)
    table = (idx[:, None] * idx[None, :]) % m
    return validate(table, 0, [residue_label(a) for a in range(m)], description=f"Z{m}")


def direct_product(a: Semigroup, b: Semigroup, caps: _caps.Caps | None = None) -> Semigroup:
    """Componentwise product; pair ``(i, j)`` is stored at index ``i*|b| + j``."""
    na, nb = a.order, b.order
    cap = _caps.current(caps).order
    if na * nb > cap:
        raise SizeLimitExceeded("product order", na * nb, cap)
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la}, {lb})" for la in a.labels for lb in b.labels]
    zero = a.zero * nb + b.zero
    desc = f"{a.description or 'A'} x {b.description or 'B'}"
    return validate(table, zero, labels, description=desc)


def null_semigroup(order: int) -> Semigroup:
    """Every product is zero (index 0)."""
    return validate(np.zeros((order, order), dtype=np.int64), 0,
                    ["0"] + [f"n{i}" for i in range(1, order)], description=f"null({order})")


# -- Cayley-table file format -------------------------------------------------

def to_document(s: Semigroup) -> dict:
    return {
        "order": s.order,
        "zero": s.zero,
        "labels": list(s.labels),
        "table": s.table.tolist(),
    }


def serialize(s: Semigroup) -> str:
    """JSON text with one table row per line, fields in file-format order."""
    rows = ",\n    ".join(json.dumps(row) for row in s.table.tolist())
    return (
        "{\n"
        f'  "order": {s.order},\n'
        f'  "zero": {s.zero},\n'
        f'  "labels": {json.dumps(list(s.labels), ensure_ascii=False)},\n'
        f'  "table": [\n    {rows}\n  ]\n'
        "}\n"
    )


def parse_semigroup(document: str | dict, description: str = "") -> Semigroup:
    """Parse a Cayley-table document (JSON text or an already-decoded dict)."""
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno) from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    for key in ("order", "zero", "labels", "table"):
        if key not in doc:
            raise ParseError(f"missing {key}", field=key)
    order, zero, labels, table = doc["order"], doc["zero"], doc["labels"], doc["table"]
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise ParseError("order must be a positive integer", field="order")
    if isinstance(zero, bool) or not isinstance(zero, int):
        raise ParseError("zero must be an integer", field="zero")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError("labels must be an array of strings", field="labels")
    if len(labels) != order:
        raise ParseError(f"expected {order} labels, got {len(labels)}", field="labels")
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError("table must be an array of arrays", field="table")
    if len(table) != order or any(len(r) != order for r in table):
        raise MalformedTable(f"table is not {order}x{order}")
    return validate(table, zero, labels, description=description)


def load(path: str | Path) -> Semigroup:
    path = Path(path)
    return parse_semigroup(path.read_text(encoding="utf-8"), description=path.name)


def save(s: Semigroup, path: str | Path) -> None:
    Path(path).write_text(serialize(s), encoding="utf-8")


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture such as ``"p3_x_z4.json"``."""
    return Path(__file__).parent / "data" / name

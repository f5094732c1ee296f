"""Canonical file format and bundled base sets.

Sequence-set files are JSON with a fixed serialization profile: UTF-8,
sorted keys, two-space indent, integers only, trailing newline.  Writing
the parse of a canonical file reproduces it byte for byte, which keeps
golden-file tests exact across platforms.

Layout (version 1):

    {
      "alphabet": {"factors": [...], "kind": "plain"|"product", "size": v},
      "meta": { ... },
      "sequences": [[...], ...],
      "version": 1
    }

meta is free-form provenance (construction, parameters, generator) but
floats are rejected everywhere.  The product-alphabet flattening
index = left_coordinate * previous_size + previous_index is part of the
format contract.  The same container carries auxiliary families and
labelings (integer matrices), distinguished by meta["content"].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import Alphabet, Fhs, FhsSet
from .extension import Labeling
from .onecoincidence import OneCoincidenceSet

FORMAT_VERSION = 1


def _check_json_value(value, where: str):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return
    if isinstance(value, float):
        raise ValueError(f"{where}: floats are not allowed in canonical files")
    if isinstance(value, (list, tuple)):
        for k, item in enumerate(value):
            _check_json_value(item, f"{where}[{k}]")
        return
    if isinstance(value, dict):
        for k, item in value.items():
            if not isinstance(k, str):
                raise ValueError(f"{where}: object keys must be strings")
            _check_json_value(item, f"{where}.{k}")
        return
    raise ValueError(f"{where}: unsupported value {value!r}")


def canonical_dumps(payload) -> str:
    _check_json_value(payload, "payload")
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class SequenceSetFile:
    """Parsed file content: alphabet, integer rows, and provenance meta."""

    alphabet: Alphabet
    sequences: tuple[tuple[int, ...], ...]
    meta: dict = field(default_factory=dict)
    version: int = FORMAT_VERSION

    def payload(self) -> dict:
        return {
            "alphabet": {
                "factors": list(self.alphabet.factors),
                "kind": self.alphabet.kind,
                "size": self.alphabet.size,
            },
            "meta": self.meta,
            "sequences": [list(row) for row in self.sequences],
            "version": self.version,
        }

    def to_fhs_set(self) -> FhsSet:
        label = self.meta.get("label")
        return FhsSet(
            tuple(Fhs(row, self.alphabet) for row in self.sequences),
            label=label if isinstance(label, str) else None,
        )


def _require_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_payload(payload, origin: str) -> SequenceSetFile:
    if not isinstance(payload, dict):
        raise ValueError(f"{origin}: top level must be an object")
    for key in ("alphabet", "meta", "sequences", "version"):
        if key not in payload:
            raise ValueError(f"{origin}: missing required field {key!r}")
    version = _require_int(payload["version"], f"{origin}: version")
    if version != FORMAT_VERSION:
        raise ValueError(f"{origin}: unsupported format version {version}")
    alph = payload["alphabet"]
    if not isinstance(alph, dict):
        raise ValueError(f"{origin}: alphabet must be an object")
    size = _require_int(alph.get("size"), f"{origin}: alphabet.size")
    factors = alph.get("factors", [])
    if not isinstance(factors, list):
        raise ValueError(f"{origin}: alphabet.factors must be a list")
    factors = tuple(_require_int(f, f"{origin}: alphabet.factors") for f in factors)
    alphabet = Alphabet(size=size, factors=factors)
    kind = alph.get("kind")
    if kind != alphabet.kind:
        raise ValueError(f"{origin}: alphabet.kind {kind!r} does not match factors")
    rows_in = payload["sequences"]
    if not isinstance(rows_in, list) or not rows_in:
        raise ValueError(f"{origin}: sequences must be a nonempty list")
    rows = []
    for i, row in enumerate(rows_in):
        if not isinstance(row, list):
            raise ValueError(f"{origin}: sequence {i} must be a list")
        parsed = []
        for t, sym in enumerate(row):
            val = _require_int(sym, f"{origin}: sequence {i} position {t}")
            if not 0 <= val < size:
                raise ValueError(
                    f"{origin}: sequence {i} position {t}: symbol {val} >= alphabet size {size}"
                )
            parsed.append(val)
        rows.append(tuple(parsed))
    meta = payload["meta"]
    if not isinstance(meta, dict):
        raise ValueError(f"{origin}: meta must be an object")
    _check_json_value(meta, f"{origin}: meta")
    return SequenceSetFile(alphabet=alphabet, sequences=tuple(rows), meta=meta)


def read_file(path) -> SequenceSetFile:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    return _parse_payload(payload, str(path))


def write_file(f: SequenceSetFile, path) -> None:
    Path(path).write_text(canonical_dumps(f.payload()), encoding="utf-8")


def save_set(s: FhsSet, path, meta: dict | None = None) -> None:
    """Write a sequence set; the set's label lands in meta["label"]."""
    meta = dict(meta or {})
    if s.label is not None and "label" not in meta:
        meta["label"] = s.label
    f = SequenceSetFile(
        alphabet=s.alphabet,
        sequences=tuple(seq.symbols for seq in s.sequences),
        meta=meta,
    )
    write_file(f, path)


def load_set(path) -> FhsSet:
    """Read a sequence set back; validation errors name the offending position."""
    return read_file(path).to_fhs_set()


def save_ocs(ocs: OneCoincidenceSet, path, extra_meta: dict | None = None) -> None:
    meta = {
        "content": "one_coincidence_set",
        "family": ocs.kind,
        "p": ocs.p,
        "a": ocs.a,
        "generator": ocs.generator,
    }
    meta.update(extra_meta or {})
    f = SequenceSetFile(
        alphabet=Alphabet(ocs.modulus),
        sequences=ocs.sequences,
        meta=meta,
    )
    write_file(f, path)


def save_labeling(labeling: Labeling, path) -> None:
    f = SequenceSetFile(
        alphabet=Alphabet(max(1, labeling.capacity)),
        sequences=labeling.values,
        meta={"capacity": labeling.capacity, "content": "labeling"},
    )
    write_file(f, path)


def load_labeling(path) -> Labeling:
    f = read_file(path)
    if f.meta.get("content") != "labeling":
        raise ValueError(f"{path}: not a labeling file (meta.content != 'labeling')")
    cap = _require_int(f.meta.get("capacity"), f"{path}: meta.capacity")
    return Labeling(values=f.sequences, capacity=cap)


# ---------------------------------------------------------------------------
# Bundled base sets
# ---------------------------------------------------------------------------

_BUILTINS: dict[str, tuple[int, tuple[tuple[int, ...], ...]]] = {
    # optimal (26, 7, 4; 3) set over Z_7
    "example1_base": (7, (
        (6, 1, 5, 3, 4, 4, 1, 2, 3, 5, 2, 0, 0, 6, 0, 0, 2, 5, 3, 2, 1, 4, 4, 3, 5, 1),
        (6, 5, 3, 1, 2, 2, 5, 0, 1, 3, 0, 4, 4, 6, 4, 4, 0, 3, 1, 0, 5, 2, 2, 1, 3, 5),
        (6, 3, 1, 5, 0, 0, 3, 4, 5, 1, 4, 2, 2, 6, 2, 2, 4, 1, 5, 4, 3, 0, 0, 5, 1, 3),
    )),
    # optimal (8, 3, 3; 3) set over Z_3
    "example2_base": (3, (
        (0, 2, 2, 1, 0, 1, 1, 2),
        (1, 0, 0, 2, 1, 2, 2, 0),
        (2, 1, 1, 0, 2, 0, 0, 1),
    )),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin(name: str) -> FhsSet:
    """One of the bundled base sets, by name."""
    try:
        size, rows = _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        ) from None
    alph = Alphabet(size)
    return FhsSet(tuple(Fhs(row, alph) for row in rows), label=name)

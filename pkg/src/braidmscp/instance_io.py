"""Parsing and serialization of conjugacy instances, results, and search graphs.

The primary format is line-based plain text so corpora diff cleanly:

    # optional metadata
    n 3
    r 1
    alpha 1
    beta 2

Words are space-separated signed integers with 1 <= |v| <= n-1; the empty
word is the single token "e".  Comment lines start with "#" and round-trip.
A JSON mirror of the same schema is provided for tooling, and explored
search graphs export as an edge list or DOT.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import re
import statistics

from .braid import BraidWord, word_to_text
from .errors import (
    CountMismatch,
    IndexOutOfRange,
    InstanceSyntaxError,
    InvalidParams,
)
from .solver import SummitGraph


@dataclasses.dataclass(frozen=True)
class InstanceFile:
    """A conjugacy instance: two r-tuples of words over the same strand count."""

    n: int
    alpha: tuple[BraidWord, ...]
    beta: tuple[BraidWord, ...]
    metadata: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.alpha or len(self.alpha) != len(self.beta):
            raise InvalidParams("alpha and beta must be non-empty and of equal length")
        for w in self.alpha + self.beta:
            if w.n != self.n:
                raise InvalidParams("instance words must share the strand count")

    @property
    def r(self) -> int:
        return len(self.alpha)


_TOKEN = re.compile(r"\S+")


def _parse_word(body: str, n: int, lineno: int | None, offset: int) -> BraidWord:
    tokens = list(_TOKEN.finditer(body))
    if not tokens:
        raise InstanceSyntaxError("missing word", lineno, offset)
    if len(tokens) == 1 and tokens[0].group() == "e":
        return BraidWord(n, ())
    letters = []
    for m in tokens:
        col = offset + m.start() + 1
        tok = m.group()
        if tok == "e":
            raise InstanceSyntaxError("'e' cannot appear inside a word", lineno, col)
        try:
            v = int(tok)
        except ValueError:
            raise InstanceSyntaxError(f"bad letter token {tok!r}", lineno, col) from None
        if v == 0 or abs(v) > n - 1:
            raise IndexOutOfRange(f"letter {v} out of range 1..{n - 1}", lineno, col)
        letters.append(v)
    return BraidWord(n, tuple(letters))


def _parse_int_line(line: str, key: str, lineno: int) -> int:
    m = re.fullmatch(rf"{key} (\S+)", line)
    if m is None:
        raise InstanceSyntaxError(f"expected '{key} <int>'", lineno, 1)
    try:
        return int(m.group(1))
    except ValueError:
        raise InstanceSyntaxError(f"bad integer {m.group(1)!r}", lineno, len(key) + 2) from None


def parse_instance(text: str) -> InstanceFile:
    """Parse the line format; strict about keywords, indices, and counts."""
    metadata: list[str] = []
    body: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            metadata.append(line[1:].strip())
        elif line.strip():
            body.append((lineno, line))

    if not body:
        raise InstanceSyntaxError("empty instance", 1, 1)
    lineno, line = body[0]
    n = _parse_int_line(line, "n", lineno)
    if n < 2:
        raise InstanceSyntaxError(f"strand count must be at least 2, got {n}", lineno, 3)
    if len(body) < 2:
        raise InstanceSyntaxError("missing 'r' line", lineno, 1)
    lineno, line = body[1]
    r = _parse_int_line(line, "r", lineno)
    if r < 1:
        raise InstanceSyntaxError(f"tuple length must be at least 1, got {r}", lineno, 3)

    alpha: list[BraidWord] = []
    beta: list[BraidWord] = []
    for lineno, line in body[2:]:
        if line.startswith("alpha "):
            if beta:
                raise InstanceSyntaxError("alpha line after beta lines", lineno, 1)
            alpha.append(_parse_word(line[6:], n, lineno, 6))
        elif line.startswith("beta "):
            beta.append(_parse_word(line[5:], n, lineno, 5))
        else:
            raise InstanceSyntaxError(f"unrecognized line {line!r}", lineno, 1)
    if len(alpha) != r or len(beta) != r:
        raise CountMismatch(
            f"declared r={r} but found {len(alpha)} alpha and {len(beta)} beta lines"
        )
    return InstanceFile(n, tuple(alpha), tuple(beta), tuple(metadata))


def write_instance(inst: InstanceFile) -> str:
    """Canonical serialization; parse(write(inst)) == inst."""
    lines = [f"# {m}" for m in inst.metadata]
    lines.append(f"n {inst.n}")
    lines.append(f"r {inst.r}")
    lines.extend(f"alpha {word_to_text(w)}" for w in inst.alpha)
    lines.extend(f"beta {word_to_text(w)}" for w in inst.beta)
    return "\n".join(lines) + "\n"


def instance_to_json(inst: InstanceFile) -> str:
    """JSON mirror of the line schema, words in the same token grammar."""
    return json.dumps(
        {
            "n": inst.n,
            "r": inst.r,
            "alpha": [word_to_text(w) for w in inst.alpha],
            "beta": [word_to_text(w) for w in inst.beta],
            "metadata": list(inst.metadata),
        },
        indent=2,
    )


def instance_from_json(text: str) -> InstanceFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise InstanceSyntaxError(f"bad JSON: {ex}") from None
    try:
        n = int(data["n"])
        r = int(data["r"])
        alpha = [_parse_word(w, n, None, 0) for w in data["alpha"]]
        beta = [_parse_word(w, n, None, 0) for w in data["beta"]]
        metadata = tuple(str(m) for m in data.get("metadata", []))
    except (KeyError, TypeError) as ex:
        raise InstanceSyntaxError(f"bad JSON schema: {ex}") from None
    if n < 2:
        raise InstanceSyntaxError(f"strand count must be at least 2, got {n}")
    if len(alpha) != r or len(beta) != r:
        raise CountMismatch(f"declared r={r} but found {len(alpha)} alpha and {len(beta)} beta words")
    return InstanceFile(n, tuple(alpha), tuple(beta), metadata)


# ---------------------------------------------------------------------------
# Graph and counter exports.
# ---------------------------------------------------------------------------


def key_hash(key: str) -> str:
    """Stable short identifier for a canonical node key."""
    return hashlib.sha256(key.encode()).hexdigest()[:12]


def export_graph(graph: SummitGraph, format: str = "edgelist") -> str:
    """Serialize the explored search tree.

    Edge list: one "src dst word" triple per line, in discovery order.
    DOT: a digraph whose nodes are key hashes and whose edges carry the
    conjugator word as label.
    """
    if format == "edgelist":
        lines = []
        for key, node in graph.nodes.items():
            if node.parent is not None:
                word = word_to_text(_edge_word(node))
                lines.append(f"{key_hash(node.parent)} {key_hash(key)} {word}")
        return "\n".join(lines) + ("\n" if lines else "")
    if format == "dot":
        lines = ["digraph summit {"]
        for key in graph.nodes:
            mark = ' [shape=doublecircle]' if key == graph.root else ""
            lines.append(f'  "{key_hash(key)}"{mark};')
        for key, node in graph.nodes.items():
            if node.parent is not None:
                word = word_to_text(_edge_word(node))
                lines.append(f'  "{key_hash(node.parent)}" -> "{key_hash(key)}" [label="{word}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InvalidParams(f"unknown graph format {format!r}")


def _edge_word(node) -> BraidWord:
    from .braid import simple_to_word

    return simple_to_word(node.edge)


def counters_report(graph: SummitGraph) -> str:
    """Flat key=value report of the search counters."""
    c = graph.counters
    sizes = c.minimal_set_sizes
    lines = [
        f"nodes={len(graph.nodes)}",
        f"nodes_expanded={c.nodes_expanded}",
        f"conjugations={c.conjugations}",
        f"set_size_max={max(sizes) if sizes else 0}",
        f"set_size_mean={statistics.mean(sizes):.3f}" if sizes else "set_size_mean=0.000",
    ]
    return "\n".join(lines) + "\n"

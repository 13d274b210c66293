"""Net and morphism documents: the on-disk JSON format and DOT export.

A net document is a single JSON object:

    {
      "format_version": "1",
      "lineale": "nat",
      "default_weight": "0",
      "places": ["H2", "O2", "H2O"],
      "transitions": ["t"],
      "pre": [["H2", "t", "2"], ["O2", "t", "1"]],
      "post": [["H2O", "t", "2"]]
    }

Arcs are sparse triples (place, transition, value); every pair not
listed takes default_weight, so the relations stay total.  A morphism
document carries "source" and "target" (paths or inline net objects),
"f" mapping source places to target places, and "F" mapping TARGET
transitions to SOURCE transitions -- the backward direction trips
people up, so it is worth repeating: F goes from the target net's
transitions to the source net's.

Malformed JSON or a wrong shape raises DocumentSyntaxError; documents
that parse but refer to unknown labels, repeat arcs, or carry values
outside their lineale raise DocumentSemanticError.  The CLI maps these
to exit codes 2 and 3.

Serialization is canonical: fixed key order, two-space indent, arcs in
row-major (place, transition) order, values in canonical form, one
trailing newline.  Serializing a parsed canonical file reproduces it
byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import (
    DialnetError,
    DocumentSemanticError,
    DocumentSyntaxError,
)
from .finset import FnTable
from .lineale import LinealeValue, format_value, get_lineale
from .petrinet import PetriNet, net_from_arcs

__all__ = [
    "FORMAT_VERSION",
    "NetDocument",
    "MorphismDocument",
    "parse_net_document",
    "serialize_net_document",
    "document_to_net",
    "net_to_document",
    "load_net",
    "save_net",
    "example_path",
    "parse_morphism_document",
    "resolve_morphism_document",
    "export_dot",
]

FORMAT_VERSION = "1"

_NET_KEYS = (
    "format_version",
    "lineale",
    "default_weight",
    "places",
    "transitions",
    "pre",
    "post",
)
_MOR_KEYS = ("format_version", "source", "target", "f", "F")


@dataclass(frozen=True)
class NetDocument:
    """The parsed, still-textual form of a net file."""

    lineale: str
    default_weight: str
    places: tuple[str, ...]
    transitions: tuple[str, ...]
    pre: tuple[tuple[str, str, str], ...]
    post: tuple[tuple[str, str, str], ...]


@dataclass(frozen=True)
class MorphismDocument:
    """A morphism file: two nets plus the forward and backward label maps.

    place_map follows f (source place to target place); transition_map
    follows F (target transition back to source transition).
    """

    source: Union[str, NetDocument]
    target: Union[str, NetDocument]
    place_map: tuple[tuple[str, str], ...]
    transition_map: tuple[tuple[str, str], ...]


def _expect_str(value, where: str) -> str:
    if not isinstance(value, str):
        raise DocumentSyntaxError(f"{where} must be a string")
    return value


def _expect_label_list(value, where: str) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise DocumentSyntaxError(f"{where} must be a list of strings")
    out = []
    for i, item in enumerate(value):
        out.append(_expect_str(item, f"{where}[{i}]"))
    return tuple(out)


def _expect_triples(value, where: str) -> tuple[tuple[str, str, str], ...]:
    if not isinstance(value, list):
        raise DocumentSyntaxError(f"{where} must be a list of triples")
    out = []
    for i, item in enumerate(value):
        if not (isinstance(item, list) and len(item) == 3):
            raise DocumentSyntaxError(
                f"{where}[{i}] must be a [place, transition, value] triple"
            )
        out.append(tuple(_expect_str(x, f"{where}[{i}]") for x in item))
    return tuple(out)


def _check_keys(obj: dict, keys: tuple[str, ...], what: str) -> None:
    missing = [k for k in keys if k not in obj]
    if missing:
        raise DocumentSyntaxError(f"{what} is missing keys: {', '.join(missing)}")
    extra = [k for k in obj if k not in keys]
    if extra:
        raise DocumentSyntaxError(f"{what} has unknown keys: {', '.join(extra)}")
    version = _expect_str(obj["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise DocumentSyntaxError(
            f"unsupported format_version {version!r}; this tool reads "
            f"{FORMAT_VERSION!r}"
        )


def _net_document_from_json(obj, what: str = "net document") -> NetDocument:
    if not isinstance(obj, dict):
        raise DocumentSyntaxError(f"{what} must be a JSON object")
    _check_keys(obj, _NET_KEYS, what)
    return NetDocument(
        lineale=_expect_str(obj["lineale"], "lineale"),
        default_weight=_expect_str(obj["default_weight"], "default_weight"),
        places=_expect_label_list(obj["places"], "places"),
        transitions=_expect_label_list(obj["transitions"], "transitions"),
        pre=_expect_triples(obj["pre"], "pre"),
        post=_expect_triples(obj["post"], "post"),
    )


def parse_net_document(text: str) -> NetDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"not valid JSON: {e}") from None
    return _net_document_from_json(obj)


def serialize_net_document(doc: NetDocument) -> str:
    payload = {
        "format_version": FORMAT_VERSION,
        "lineale": doc.lineale,
        "default_weight": doc.default_weight,
        "places": list(doc.places),
        "transitions": list(doc.transitions),
        "pre": [list(t) for t in doc.pre],
        "post": [list(t) for t in doc.post],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _parse_value(lin, text: str, where: str) -> LinealeValue:
    try:
        return lin.parse(text)
    except DialnetError as e:
        raise DocumentSemanticError(f"{where}: {e}") from None


def document_to_net(doc: NetDocument) -> PetriNet:
    """Validate a document and build the net it denotes."""
    try:
        lin = get_lineale(doc.lineale)
    except DialnetError as e:
        raise DocumentSemanticError(str(e)) from None
    for kind, labels in (("place", doc.places), ("transition", doc.transitions)):
        seen = set()
        for lbl in labels:
            if not lbl:
                raise DocumentSemanticError(f"empty {kind} label")
            if lbl in seen:
                raise DocumentSemanticError(f"duplicate {kind} label {lbl!r}")
            seen.add(lbl)
    default = _parse_value(lin, doc.default_weight, "default_weight")
    place_set = set(doc.places)
    transition_set = set(doc.transitions)

    def arcs(triples, part: str):
        out = {}
        for i, (p, t, v) in enumerate(triples):
            where = f"{part}[{i}]"
            if p not in place_set:
                raise DocumentSemanticError(f"{where}: unknown place label {p!r}")
            if t not in transition_set:
                raise DocumentSemanticError(
                    f"{where}: unknown transition label {t!r}"
                )
            if (p, t) in out:
                raise DocumentSemanticError(
                    f"{where}: duplicate arc for ({p!r}, {t!r})"
                )
            out[(p, t)] = _parse_value(lin, v, where)
        return out

    return net_from_arcs(
        lin,
        doc.places,
        doc.transitions,
        default,
        arcs(doc.pre, "pre"),
        arcs(doc.post, "post"),
    )


def _modal_weight(net: PetriNet) -> LinealeValue:
    counts: dict[LinealeValue, int] = {}
    for obj in (net.pre, net.post):
        for row in obj.weight:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
    if not counts:
        return net.lin.unit
    # max is stable, so ties go to the first weight encountered
    return max(counts, key=counts.__getitem__)


def net_to_document(
    net: PetriNet, default: Optional[LinealeValue] = None
) -> NetDocument:
    """Render a net sparsely.

    Without an explicit default the most frequent weight across both
    relations is used (ties broken by first appearance), which keeps
    the arc list short.
    """
    if default is None:
        default = _modal_weight(net)

    def triples(obj):
        out = []
        for u in range(net.places.size):
            for x in range(net.transitions.size):
                v = obj.weight[u][x]
                if v != default:
                    out.append(
                        (
                            net.places.label(u),
                            net.transitions.label(x),
                            format_value(v),
                        )
                    )
        return tuple(out)

    return NetDocument(
        lineale=net.lin.tag,
        default_weight=format_value(default),
        places=tuple(net.places.label(i) for i in range(net.places.size)),
        transitions=tuple(net.transitions.label(i) for i in range(net.transitions.size)),
        pre=triples(net.pre),
        post=triples(net.post),
    )


def example_path(name: str) -> Path:
    """Path of a shipped example net document (installed package data)."""
    return Path(__file__).parent / "data" / f"{name}.net"


def load_net(path: Union[str, Path]) -> PetriNet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentSyntaxError(f"cannot read {path}: {e}") from None
    return document_to_net(parse_net_document(text))


def save_net(
    net: PetriNet, path: Union[str, Path], default: Optional[LinealeValue] = None
) -> None:
    Path(path).write_text(
        serialize_net_document(net_to_document(net, default)), encoding="utf-8"
    )


# -- morphism documents --------------------------------------------------------


def _expect_label_map(value, where: str) -> tuple[tuple[str, str], ...]:
    if not isinstance(value, dict):
        raise DocumentSyntaxError(f"{where} must be an object of label pairs")
    out = []
    for k, v in value.items():
        out.append((_expect_str(k, f"{where} key"), _expect_str(v, f"{where}[{k!r}]")))
    return tuple(out)


def parse_morphism_document(text: str) -> MorphismDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"not valid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise DocumentSyntaxError("morphism document must be a JSON object")
    _check_keys(obj, _MOR_KEYS, "morphism document")

    def end(value, which: str):
        if isinstance(value, str):
            return value
        return _net_document_from_json(value, f"{which} net")

    return MorphismDocument(
        source=end(obj["source"], "source"),
        target=end(obj["target"], "target"),
        place_map=_expect_label_map(obj["f"], "f"),
        transition_map=_expect_label_map(obj["F"], "F"),
    )


def _resolve_end(end: Union[str, NetDocument], base_dir: Path) -> PetriNet:
    if isinstance(end, NetDocument):
        return document_to_net(end)
    path = Path(end)
    if not path.is_absolute():
        path = base_dir / path
    return load_net(path)


def resolve_morphism_document(
    mdoc: MorphismDocument, base_dir: Union[str, Path] = "."
) -> tuple[PetriNet, PetriNet, FnTable, FnTable]:
    """Load both ends and turn the label maps into tables.

    f must cover every source place; F must cover every target
    transition.  Anything else is a semantic error.
    """
    base = Path(base_dir)
    source = _resolve_end(mdoc.source, base)
    target = _resolve_end(mdoc.target, base)

    def to_table(pairs, dom, cod, name: str, dom_kind: str, cod_kind: str) -> FnTable:
        mapping = {}
        for k, v in pairs:
            if k in mapping:
                raise DocumentSemanticError(f"{name}: duplicate entry for {k!r}")
            mapping[k] = v
        table = []
        for i in range(dom.size):
            lbl = dom.label(i)
            if lbl not in mapping:
                raise DocumentSemanticError(
                    f"{name}: no entry for {dom_kind} {lbl!r}"
                )
            img = mapping.pop(lbl)
            try:
                table.append(cod.index_of(img))
            except DialnetError:
                raise DocumentSemanticError(
                    f"{name}: unknown {cod_kind} {img!r} (image of {lbl!r})"
                ) from None
        if mapping:
            stray = ", ".join(repr(k) for k in mapping)
            raise DocumentSemanticError(f"{name}: unknown {dom_kind}(s) {stray}")
        return FnTable(dom, cod, tuple(table))

    fwd = to_table(
        mdoc.place_map, source.places, target.places, "f", "source place", "target place"
    )
    bwd = to_table(
        mdoc.transition_map,
        target.transitions,
        source.transitions,
        "F",
        "target transition",
        "source transition",
    )
    return source, target, fwd, bwd


# -- DOT export -----------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(net: PetriNet, default: Optional[LinealeValue] = None) -> str:
    """Graphviz text: places as circles, transitions as boxes.

    Arcs carrying the default weight are left out, matching the sparse
    document form.  Output is deterministic for a given net.
    """
    if default is None:
        default = _modal_weight(net)
    lines = ["digraph net {", "  rankdir=LR;"]
    for i in range(net.places.size):
        lbl = net.places.label(i)
        lines.append(f"  {_quote('p:' + lbl)} [shape=circle, label={_quote(lbl)}];")
    for i in range(net.transitions.size):
        lbl = net.transitions.label(i)
        lines.append(f"  {_quote('t:' + lbl)} [shape=box, label={_quote(lbl)}];")
    for u in range(net.places.size):
        for x in range(net.transitions.size):
            v = net.pre.weight[u][x]
            if v != default:
                lines.append(
                    f"  {_quote('p:' + net.places.label(u))} -> "
                    f"{_quote('t:' + net.transitions.label(x))} "
                    f"[label={_quote(format_value(v))}];"
                )
    for u in range(net.places.size):
        for x in range(net.transitions.size):
            v = net.post.weight[u][x]
            if v != default:
                lines.append(
                    f"  {_quote('t:' + net.transitions.label(x))} -> "
                    f"{_quote('p:' + net.places.label(u))} "
                    f"[label={_quote(format_value(v))}];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"

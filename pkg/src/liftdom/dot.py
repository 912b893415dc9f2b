"""Deterministic DOT export: Hasse edges only, stages as clusters."""
from __future__ import annotations

from .order import FinPoset, MonotoneMap
from .presheaf import InternalPoset, NatTrans
from .report import fmt


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _poset_body(P: FinPoset, prefix: str, lines: list):
    for i, e in enumerate(P.elements):
        lines.append(f"  {prefix}{i} [label={_quote(fmt(e))}];")
    for x, y in P.covers():
        lines.append(f"  {prefix}{P.index(x)} -> {prefix}{P.index(y)};")


def export_dot(obj) -> str:
    """Render a poset, an internal poset (one cluster per stage), or a map."""
    lines = ["digraph G {", "  rankdir=BT;"]
    if isinstance(obj, FinPoset):
        _poset_body(obj, "n", lines)
    elif isinstance(obj, InternalPoset):
        for k, p in enumerate(obj.base.stages):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append(f"    label={_quote(str(p))};")
            P = obj.stage_poset(p)
            for i, e in enumerate(P.elements):
                lines.append(f"    s{k}_{i} [label={_quote(fmt(e))}];")
            for x, y in P.covers():
                lines.append(f"    s{k}_{P.index(x)} -> s{k}_{P.index(y)};")
            lines.append("  }")
    elif isinstance(obj, MonotoneMap):
        lines.append("  subgraph cluster_dom {")
        lines.append('    label="dom";')
        for i, e in enumerate(obj.dom.elements):
            lines.append(f"    d{i} [label={_quote(fmt(e))}];")
        for x, y in obj.dom.covers():
            lines.append(f"    d{obj.dom.index(x)} -> d{obj.dom.index(y)};")
        lines.append("  }")
        lines.append("  subgraph cluster_cod {")
        lines.append('    label="cod";')
        for i, e in enumerate(obj.cod.elements):
            lines.append(f"    c{i} [label={_quote(fmt(e))}];")
        for x, y in obj.cod.covers():
            lines.append(f"    c{obj.cod.index(x)} -> c{obj.cod.index(y)};")
        lines.append("  }")
        for i, e in enumerate(obj.dom.elements):
            lines.append(f"  d{i} -> c{obj.cod.index(obj(e))} [style=dashed];")
    elif isinstance(obj, NatTrans):
        for k, p in enumerate(obj.dom.base.stages):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append(f"    label={_quote(str(p))};")
            D = obj.dom.stage_poset(p)
            C = obj.cod.stage_poset(p)
            for i, e in enumerate(D.elements):
                lines.append(f"    s{k}d{i} [label={_quote(fmt(e))}];")
            for x, y in D.covers():
                lines.append(f"    s{k}d{D.index(x)} -> s{k}d{D.index(y)};")
            for i, e in enumerate(C.elements):
                lines.append(f"    s{k}c{i} [label={_quote(fmt(e))}];")
            for x, y in C.covers():
                lines.append(f"    s{k}c{C.index(x)} -> s{k}c{C.index(y)};")
            for i, e in enumerate(D.elements):
                lines.append(
                    f"    s{k}d{i} -> s{k}c{C.index(obj.apply(p, e))} [style=dashed];"
                )
            lines.append("  }")
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"

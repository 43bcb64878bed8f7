"""String diagrams as port graphs, with equality up to symmetric monoidal coherence.

A :class:`PortGraph` has generator nodes with ordered input and output ports,
wires carrying one tensor factor each, and ordered boundaries.  Symmetries and
identities become wire routing, so two terms that differ only by the laws of a
symmetric strict monoidal category (associativity, units, interchange,
naturality and involutivity of the symmetry) produce isomorphic graphs.
``bang(...)`` boxes are nodes that hold a nested graph.

Equality is decided by an exact canonical code: the part of the graph reachable
from the boundary is traversed breadth-first from the ordered boundary wires,
numbering nodes in discovery order; components that do not touch the boundary
are coded from every possible root and the smallest code is kept.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import GraphError
from .objects import ObjExpr, factors
from .terms import (
    BangBox, Comp, Gen, Id, Lin, MorTerm, Neg, Sum, Sym, Ten, ZeroMor, infer_type,
    pretty_print,
)

# A port reference: ("in", k) / ("out", k) for boundary positions, or
# (node_index, port_index).
PortRef = tuple


@dataclass
class Node:
    label: str
    in_types: tuple[ObjExpr, ...]
    out_types: tuple[ObjExpr, ...]
    term: MorTerm
    inner: "PortGraph | None" = None
    key: str = ""

    @property
    def dom(self):
        from .objects import tensor
        return tensor(*self.in_types)

    @property
    def cod(self):
        from .objects import tensor
        return tensor(*self.out_types)


@dataclass
class Wire:
    type: ObjExpr
    src: PortRef
    tgt: PortRef | None = None


@dataclass
class PortGraph:
    inputs: tuple[ObjExpr, ...]
    outputs: tuple[ObjExpr, ...]
    nodes: list[Node] = field(default_factory=list)
    wires: list[Wire] = field(default_factory=list)
    # wire ids feeding each node input port / leaving each node output port
    node_in: list[list[int]] = field(default_factory=list)
    node_out: list[list[int]] = field(default_factory=list)
    in_wires: list[int] = field(default_factory=list)
    out_wires: list[int] = field(default_factory=list)
    _code: tuple | None = field(default=None, repr=False, compare=False)

    def canonical_code(self) -> tuple:
        if self._code is None:
            self._code = _canonical_code(self)
        return self._code

    def check(self) -> None:
        """Verify the structural invariants; raise GraphError on violation."""
        for w in self.wires:
            if w.tgt is None:
                raise GraphError(f"dangling wire from {w.src}")
        for k, ws in enumerate(self.node_in):
            for p, w in enumerate(ws):
                if self.wires[w].type != self.nodes[k].in_types[p]:
                    raise GraphError(f"wire type mismatch at node {k} input {p}")
        # acyclic by construction: every node input comes from an earlier node
        for k, ws in enumerate(self.node_in):
            for w in ws:
                src = self.wires[w].src
                if src[0] != "in" and src[0] >= k:
                    raise GraphError(f"node {k} consumes a wire from a later node")


# -- construction -------------------------------------------------------------------


def term_to_graph(t: MorTerm) -> PortGraph:
    """Build the port graph of a sum-free term."""
    dom, cod = infer_type(t)
    g = PortGraph(factors(dom), factors(cod))
    ins = []
    for k, ty in enumerate(g.inputs):
        g.wires.append(Wire(ty, ("in", k)))
        ins.append(len(g.wires) - 1)
    g.in_wires = list(ins)
    outs = _build(g, t, ins)
    for k, w in enumerate(outs):
        g.wires[w].tgt = ("out", k)
    g.out_wires = list(outs)
    g.check()
    return g


def _build(g: PortGraph, t: MorTerm, ins: list[int]) -> list[int]:
    if isinstance(t, Id):
        return ins
    if isinstance(t, Sym):
        nl = len(factors(t.left))
        return ins[nl:] + ins[:nl]
    if isinstance(t, Comp):
        for p in t.parts:
            ins = _build(g, p, ins)
        return ins
    if isinstance(t, Ten):
        outs: list[int] = []
        pos = 0
        for p in t.parts:
            n = len(factors(infer_type(p)[0]))
            outs.extend(_build(g, p, ins[pos:pos + n]))
            pos += n
        return outs
    if isinstance(t, (Sum, Neg, ZeroMor)):
        raise GraphError(f"sums have no graph form: {pretty_print(t)}")
    dom, cod = infer_type(t)
    if isinstance(t, Gen):
        label = pretty_print(t)
        node = Node(label, factors(dom), factors(cod), t)
    elif isinstance(t, Lin):
        key = f"lin {t.name} : {t.dom} -> {t.cod} {_entries_key(t)}"
        node = Node(f"lin {t.name}", factors(dom), factors(cod), t, key=key)
    elif isinstance(t, BangBox):
        node = Node("bang", factors(dom), factors(cod), t, term_to_graph(t.inner))
    else:
        raise GraphError(f"not a term: {t!r}")
    k = len(g.nodes)
    g.nodes.append(node)
    g.node_in.append(list(ins))
    for p, w in enumerate(ins):
        g.wires[w].tgt = (k, p)
    outs = []
    for p, ty in enumerate(node.out_types):
        g.wires.append(Wire(ty, (k, p)))
        outs.append(len(g.wires) - 1)
    g.node_out.append(outs)
    return outs


def _entries_key(t: Lin) -> str:
    return repr(sorted((i.key, o.key, str(c)) for i, o, c in t.entries))


# -- canonical form -----------------------------------------------------------------


def _node_label(g: PortGraph, k: int) -> tuple:
    node = g.nodes[k]
    if node.inner is not None:
        return ("bang", node.inner.canonical_code())
    return (node.key or node.label,)


def _traverse(g: PortGraph, seeds_wires: list[int], root: int | None) -> tuple[list[int], dict]:
    """Breadth-first discovery order of nodes from boundary wires or a root node."""
    order: list[int] = []
    num: dict[int, int] = {}
    queue: deque[int] = deque()

    def visit(k):
        if k not in num:
            num[k] = len(order)
            order.append(k)
            queue.append(k)

    def visit_wire(w):
        wire = g.wires[w]
        for end in (wire.src, wire.tgt):
            if end is not None and end[0] not in ("in", "out"):
                visit(end[0])

    if root is not None:
        visit(root)
    for w in seeds_wires:
        visit_wire(w)
        while queue:
            k = queue.popleft()
            for w2 in g.node_in[k]:
                visit_wire(w2)
            for w2 in g.node_out[k]:
                visit_wire(w2)
    while queue:
        k = queue.popleft()
        for w2 in g.node_in[k]:
            visit_wire(w2)
        for w2 in g.node_out[k]:
            visit_wire(w2)
    return order, num


def _ref(end: PortRef, num: dict) -> tuple:
    if end[0] == "in":
        return (0, end[1])
    if end[0] == "out":
        return (1, end[1])
    return (2, num[end[0]], end[1])


def _code_of(g: PortGraph, order: list[int], num: dict) -> tuple:
    code = []
    for k in order:
        srcs = tuple(_ref(g.wires[w].src, num) for w in g.node_in[k])
        code.append((_node_label(g, k), srcs))
    return tuple(code)


def _canonical_code(g: PortGraph) -> tuple:
    seeds = list(g.in_wires) + list(g.out_wires)
    order, num = _traverse(g, seeds, None)
    anchored = _code_of(g, order, num)
    boundary = tuple(_ref(g.wires[w].src, num) for w in g.out_wires)
    rest = [k for k in range(len(g.nodes)) if k not in num]
    floating = []
    while rest:
        best = None
        best_nodes: set[int] = set()
        for root in rest:
            o2, n2 = _traverse(g, [], root)
            c = _code_of(g, o2, n2)
            if best is None or repr(c) < repr(best):
                best = c
                best_nodes = set(o2)
        floating.append(best)
        rest = [k for k in rest if k not in best_nodes]
    floating.sort(key=repr)
    types = (tuple(map(str, g.inputs)), tuple(map(str, g.outputs)))
    return (types, anchored, boundary, tuple(floating))


def graphs_equal(g1: PortGraph, g2: PortGraph) -> bool:
    """True iff the graphs are isomorphic respecting boundaries, ports and nesting."""
    if g1.inputs != g2.inputs or g1.outputs != g2.outputs:
        raise GraphError(
            f"boundary types differ: {_sig(g1)} vs {_sig(g2)}")
    return g1.canonical_code() == g2.canonical_code()


def terms_graph_equal(t1: MorTerm, t2: MorTerm) -> bool:
    return graphs_equal(term_to_graph(t1), term_to_graph(t2))


def _sig(g: PortGraph) -> str:
    return f"[{', '.join(map(str, g.inputs))}] -> [{', '.join(map(str, g.outputs))}]"


def topological_order(g: PortGraph) -> list[int]:
    """Node indices in an order where every wire runs forward (construction order)."""
    return list(range(len(g.nodes)))


# -- DOT output ---------------------------------------------------------------------


def emit_dot(g: PortGraph, name: str = "diagram") -> str:
    """Graphviz description; boundary points are ranked in their boundary order."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    counter = [0]
    _emit_body(g, "", lines, counter, "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_body(g: PortGraph, prefix: str, lines: list[str], counter: list[int], ind: str):
    def bname(side, k):
        return f"{prefix}{side}{k}"

    for side, types in (("in", g.inputs), ("out", g.outputs)):
        if types:
            names = [bname(side, k) for k in range(len(types))]
            for k, ty in enumerate(types):
                lines.append(f'{ind}{names[k]} [shape=point, xlabel="{side} {k}: {ty}"];')
            lines.append(f"{ind}{{ rank=same; {' -> '.join(names)} [style=invis]; }}"
                         if len(names) > 1 else f"{ind}{{ rank=same; {names[0]}; }}")

    node_names = []
    for k, node in enumerate(g.nodes):
        nm = f"{prefix}n{k}"
        node_names.append(nm)
        if node.inner is None:
            lines.append(f'{ind}{nm} [label="{_esc(node.label)}"];')
        else:
            counter[0] += 1
            cid = counter[0]
            lines.append(f"{ind}subgraph cluster_{cid} {{")
            lines.append(f'{ind}  label="bang";')
            lines.append(f'{ind}  {nm} [shape=point, label=""];')
            _emit_body(node.inner, f"{prefix}b{cid}_", lines, counter, ind + "  ")
            lines.append(f"{ind}}}")

    def endpoint(ref):
        if ref[0] == "in":
            return bname("in", ref[1])
        if ref[0] == "out":
            return bname("out", ref[1])
        return node_names[ref[0]]

    for w in g.wires:
        lines.append(f'{ind}{endpoint(w.src)} -> {endpoint(w.tgt)} [label="{_esc(str(w.type))}"];')


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


__all__ = [
    "Node", "PortGraph", "Wire", "emit_dot", "graphs_equal", "term_to_graph",
    "terms_graph_equal", "topological_order",
]

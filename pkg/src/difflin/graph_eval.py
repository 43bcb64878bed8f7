"""Evaluation of port graphs and support-bound inference.

This is a second, independent route to the matrix of a sum-free term: instead of
following the term tree, it eliminates the wires of the term's port graph one
node at a time (outputs first), so composition, tensor and symmetry are handled
purely by wiring.  Agreement with :class:`difflin.model.Model` is part of the
test suite.

:func:`infer_support` narrows each wire of a graph to the finite set of basis
elements that can carry a nonzero coefficient for a fixed boundary entry,
propagating generator rows forward and generator columns backward until
nothing changes.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product

from .basis import MSet, BasisElem, finite_basis, join, split
from .diagram import PortGraph
from .model import UNBOUNDED, Model
from .objects import has_bang

# products larger than this are not expanded during support propagation; the
# affected wires simply keep their previous (sound) candidate set
_PRODUCT_LIMIT = 20000


@dataclass
class SupportBounds:
    """Per-wire candidate sets (a frozenset, or ``UNBOUNDED``)."""

    wires: dict[int, object]

    def is_bounded(self) -> bool:
        return all(v is not UNBOUNDED for v in self.wires.values())

    def __getitem__(self, w: int):
        return self.wires[w]


class GraphEvaluator:
    """Column (``pull``) evaluation of port graphs under a model."""

    def __init__(self, model: Model):
        self.model = model
        self._cache: dict[tuple[int, BasisElem], dict] = {}
        self._keep: list[PortGraph] = []

    # node-level tables
    def node_column(self, g: PortGraph, k: int, out: BasisElem) -> dict:
        node = g.nodes[k]
        model = self.model
        if node.inner is not None:
            return self._box_column(node.inner, out)
        t = node.term
        return model.compile(t).pull(out)

    def node_row(self, g: PortGraph, k: int, i: BasisElem):
        node = g.nodes[k]
        if node.inner is not None:
            rows = []
            for a in i.items:
                r = self.row(node.inner, a)
                if r is UNBOUNDED:
                    return UNBOUNDED
                rows.append(r)
            return frozenset(MSet(c) for c in product(*rows))
        return self.model.compile(node.term).row(i)

    def _box_column(self, inner: PortGraph, out: MSet) -> dict:
        ring = self.model.ring
        cols = []
        for b in out.items:
            c = self.pull(inner, b)
            if not c:
                return {}
            cols.append(list(c.items()))
        result: dict = {}
        for combo in product(*cols):
            v = ring.one
            for _, c in combo:
                v = ring.mul(v, c)
            key = MSet(x for x, _ in combo)
            result[key] = ring.add(result[key], v) if key in result else v
        return {x: v for x, v in result.items() if not ring.is_zero(v)}

    # graph-level evaluation
    def pull(self, g: PortGraph, out: BasisElem, bounds: SupportBounds | None = None) -> dict:
        """Column of the graph at boundary output ``out``."""
        key = (id(g), out)
        if bounds is None and key in self._cache:
            return self._cache[key]
        ring = self.model.ring
        parts = split(out, list(g.outputs)) if len(g.outputs) != 1 else (out,)
        if not g.outputs:
            parts = ()
        start = tuple(sorted(zip(g.out_wires, parts)))
        states: dict[tuple, object] = {start: ring.one}
        for k in reversed(range(len(g.nodes))):
            node = g.nodes[k]
            outs = g.node_out[k]
            ins = g.node_in[k]
            nxt: dict[tuple, object] = {}
            for state, coeff in states.items():
                assign = dict(state)
                out_elem = join([assign.pop(w) for w in outs], list(node.out_types))
                for in_elem, c in self.node_column(g, k, out_elem).items():
                    in_parts = split(in_elem, list(node.in_types))
                    new = dict(assign)
                    ok = True
                    for w, e in zip(ins, in_parts):
                        if bounds is not None:
                            cand = bounds.wires.get(w, UNBOUNDED)
                            if cand is not UNBOUNDED and e not in cand:
                                ok = False
                                break
                        new[w] = e
                    if not ok:
                        continue
                    s2 = tuple(sorted(new.items()))
                    v = ring.mul(coeff, c)
                    nxt[s2] = ring.add(nxt[s2], v) if s2 in nxt else v
            states = {s: v for s, v in nxt.items() if not ring.is_zero(v)}
            if not states:
                break
        result: dict = {}
        for state, coeff in states.items():
            assign = dict(state)
            elem = join([assign[w] for w in g.in_wires], list(g.inputs))
            result[elem] = ring.add(result[elem], coeff) if elem in result else coeff
        result = {x: v for x, v in result.items() if not ring.is_zero(v)}
        if bounds is None:
            self._cache[key] = result
            self._keep.append(g)
        return result

    def entry(self, g: PortGraph, i: BasisElem, o: BasisElem):
        bounds = infer_support(g, i, o, self)
        return self.pull(g, o, bounds).get(i, self.model.ring.zero)

    def row(self, g: PortGraph, i: BasisElem):
        """Superset of the outputs reachable from input ``i``, or UNBOUNDED."""
        bounds = infer_support(g, i, None, self)
        sets = [bounds.wires[w] for w in g.out_wires]
        if any(s is UNBOUNDED for s in sets):
            return UNBOUNDED
        return frozenset(join(list(c), list(g.outputs)) for c in product(*sets))


def _initial(g: PortGraph, dims: Mapping[str, int]) -> dict[int, object]:
    sets: dict[int, object] = {}
    for w, wire in enumerate(g.wires):
        if has_bang(wire.type):
            sets[w] = UNBOUNDED
        else:
            sets[w] = frozenset(finite_basis(wire.type, dims))
    return sets


def _meet(a, b):
    if a is UNBOUNDED:
        return b
    if b is UNBOUNDED:
        return a
    return a & b


def _product_size(sets) -> int:
    n = 1
    for s in sets:
        n *= len(s)
    return n


def infer_support(g: PortGraph, i: BasisElem | None, o: BasisElem | None,
                  evaluator: GraphEvaluator | Model) -> SupportBounds:
    """Candidate basis elements per wire for boundary entry ``(i, o)``.

    Either boundary may be ``None`` (unconstrained).  Wires the propagation cannot
    bound are reported as ``UNBOUNDED``.
    """
    ev = evaluator if isinstance(evaluator, GraphEvaluator) else GraphEvaluator(evaluator)
    dims = ev.model.dims
    sets = _initial(g, dims)
    if i is not None:
        parts = split(i, list(g.inputs))
        for w, e in zip(g.in_wires, parts):
            sets[w] = _meet(sets[w], frozenset([e]))
    if o is not None:
        parts = split(o, list(g.outputs))
        for w, e in zip(g.out_wires, parts):
            sets[w] = _meet(sets[w], frozenset([e]))
    changed = True
    while changed:
        changed = False
        for k in range(len(g.nodes)):
            node = g.nodes[k]
            ins = [sets[w] for w in g.node_in[k]]
            if any(s is UNBOUNDED for s in ins) or _product_size(ins) > _PRODUCT_LIMIT:
                continue
            images: list[set] = [set() for _ in g.node_out[k]]
            bounded = True
            for combo in product(*ins):
                r = ev.node_row(g, k, join(list(combo), list(node.in_types)))
                if r is UNBOUNDED:
                    bounded = False
                    break
                for out in r:
                    for p, e in enumerate(split(out, list(node.out_types))):
                        images[p].add(e)
            if not bounded:
                continue
            for w, img in zip(g.node_out[k], images):
                new = _meet(sets[w], frozenset(img))
                if new != sets[w]:
                    sets[w] = new
                    changed = True
        for k in reversed(range(len(g.nodes))):
            node = g.nodes[k]
            outs = [sets[w] for w in g.node_out[k]]
            if any(s is UNBOUNDED for s in outs) or _product_size(outs) > _PRODUCT_LIMIT:
                continue
            pre: list[set] = [set() for _ in g.node_in[k]]
            for combo in product(*outs):
                col = ev.node_column(g, k, join(list(combo), list(node.out_types)))
                for x in col:
                    for p, e in enumerate(split(x, list(node.in_types))):
                        pre[p].add(e)
            for w, img in zip(g.node_in[k], pre):
                new = _meet(sets[w], frozenset(img))
                if new != sets[w]:
                    sets[w] = new
                    changed = True
    return SupportBounds(sets)


def graph_entry(model: Model, g: PortGraph, i: BasisElem, o: BasisElem):
    return GraphEvaluator(model).entry(g, i, o)


__all__ = ["GraphEvaluator", "SupportBounds", "graph_entry", "infer_support"]

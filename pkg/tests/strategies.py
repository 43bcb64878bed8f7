"""Hypothesis strategies for basis elements and well-typed terms over base A."""

from __future__ import annotations

from hypothesis import strategies as st

from difflin.basis import basis_enum
from difflin.objects import I, Bang, Base, Tensor, factors, tensor
from difflin.terms import Gen, Id, Sym, comp, ten, BangBox, infer_type

A = Base("A")
DIMS = {"A": 2}


def steps_from(obj, negatives=True):
    """Single-step terms whose domain is ``obj`` (kept small on purpose)."""
    out = []
    if obj == A:
        out += [Gen("eta", (A,)), Id(A)]
    if obj == I:
        out += [Gen("u", (A,)), Gen("mI", ())]
    if isinstance(obj, Bang):
        x = obj.inner
        out += [Gen("eps", (x,)), Gen("copy", (x,)), Gen("weak", (x,)), Gen("delta", (x,))]
        if negatives:
            out.append(Gen("S", (x,)))
        if x == A:
            out.append(BangBox(Gen("eta", (A,))))
    fs = factors(obj)
    if len(fs) == 2:
        a, b = fs
        out.append(Sym(a, b))
        if isinstance(a, Bang) and isinstance(b, Bang) and a == b:
            out.append(Gen("nabla", (a.inner,)))
        if isinstance(a, Bang) and isinstance(b, Bang):
            out.append(Gen("m", (a.inner, b.inner)))
        if isinstance(a, Bang) and b == a.inner:
            out.append(Gen("d", (b,)))
        for s in steps_from(a, negatives):
            out.append(ten(s, Id(b)))
    return out


@st.composite
def chains(draw, start=None, max_len=3, negatives=True):
    obj = start if start is not None else draw(st.sampled_from(
        [A, Bang(A), tensor(Bang(A), Bang(A)), tensor(Bang(A), A)]))
    parts = []
    for _ in range(draw(st.integers(1, max_len))):
        opts = steps_from(obj, negatives)
        opts = [s for s in opts if len(factors(infer_type(s)[1])) <= 3
                and _depth(infer_type(s)[1]) <= 2]
        if not opts:
            break
        s = draw(st.sampled_from(opts))
        parts.append(s)
        obj = infer_type(s)[1]
    if not parts:
        return Id(obj)
    return comp(*parts)


def _depth(obj):
    if isinstance(obj, Bang):
        return 1 + _depth(obj.inner)
    if isinstance(obj, Tensor):
        return max(_depth(f) for f in obj.factors)
    return 0


def elems(obj, cap=4, dims=DIMS):
    return st.sampled_from(basis_enum(obj, dims, cap))

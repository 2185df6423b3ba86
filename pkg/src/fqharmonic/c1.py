"""Filtered F_q-spaces with integer-indexed filtrations, at window level.

A model describes a filtered space through the multiplicities of its graded
pieces: filtration index i selects the span of all graded slots strictly
below the cut i.  A window (lo, hi) identifies the finite quotient
F(hi)/F(lo) with a coordinate space over the graded slots in [lo, hi).

Function representatives carry a window and a dense table.  The limit
structure of the six functional spaces is realized by table transport between
windows; the transport direction depends on the kind of representative:

* compactly-supported functions (tag ``D``) move to enclosing windows by
  pulling back below and extending by zero above;
* locally-constant germs (tags ``E``/``ET``) move by pulling back below and
  slicing above;
* pairing tables of distributions move to smaller windows by slicing above
  and summing fibers below; growth beyond the stored window requires an
  extension rule (point masses at canonical lifts, or a Haar profile).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from fqharmonic import tables
from fqharmonic.exactnum import CycNum, DomainError, FqField
from fqharmonic.tables import Table


class WindowError(DomainError):
    """A representative cannot be moved to the requested window."""


class CapabilityError(DomainError):
    """A side condition of an operation is violated by the given models."""


# ---------------------------------------------------------------------------
# model descriptors
# ---------------------------------------------------------------------------
#
# desc grammar (after normalization no 'shift' nodes remain):
#   ('full',)            every cut has one graded slot
#   ('empty',)
#   ('below', c)         slots at k < c
#   ('atleast', c)       slots at k >= c
#   ('segment', a, b)    slots at a <= k < b
#   ('sum', d1, d2)      slot lists concatenated per cut (d1 slots first)


def normalize_desc(desc: tuple) -> tuple:
    kind = desc[0]
    if kind in ("full", "empty", "below", "atleast"):
        return desc
    if kind == "segment":
        a, b = desc[1], desc[2]
        return ("empty",) if a >= b else desc
    if kind == "sum":
        d1, d2 = normalize_desc(desc[1]), normalize_desc(desc[2])
        if d1 == ("empty",):
            return d2
        if d2 == ("empty",):
            return d1
        return ("sum", d1, d2)
    if kind == "shift":
        inner, s = normalize_desc(desc[1]), desc[2]
        if s == 0:
            return inner
        ik = inner[0]
        if ik in ("full", "empty"):
            return inner
        if ik == "below":
            return ("below", inner[1] + s)
        if ik == "atleast":
            return ("atleast", inner[1] + s)
        if ik == "segment":
            return ("segment", inner[1] + s, inner[2] + s)
        if ik == "sum":
            return (
                "sum",
                normalize_desc(("shift", inner[1], s)),
                normalize_desc(("shift", inner[2], s)),
            )
    raise DomainError(f"unknown descriptor {desc!r}")


def desc_mult(desc: tuple, k: int) -> int:
    kind = desc[0]
    if kind == "full":
        return 1
    if kind == "empty":
        return 0
    if kind == "below":
        return 1 if k < desc[1] else 0
    if kind == "atleast":
        return 1 if k >= desc[1] else 0
    if kind == "segment":
        return 1 if desc[1] <= k < desc[2] else 0
    if kind == "sum":
        return desc_mult(desc[1], k) + desc_mult(desc[2], k)
    raise DomainError(f"unknown descriptor {desc!r}")


def desc_count(desc: tuple, a: int, b: int) -> int:
    """Number of graded slots with cut in [a, b), a <= b."""
    if a >= b:
        return 0
    kind = desc[0]
    if kind == "full":
        return b - a
    if kind == "empty":
        return 0
    if kind == "below":
        return max(0, min(b, desc[1]) - a)
    if kind == "atleast":
        return max(0, b - max(a, desc[1]))
    if kind == "segment":
        return max(0, min(b, desc[2]) - max(a, desc[1]))
    if kind == "sum":
        return desc_count(desc[1], a, b) + desc_count(desc[2], a, b)
    raise DomainError(f"unknown descriptor {desc!r}")


def desc_bounds(desc: tuple) -> tuple[Optional[int], Optional[int]]:
    """(inf, sup): slots vanish below inf / at or above sup; None = unbounded."""
    kind = desc[0]
    if kind == "full":
        return None, None
    if kind == "empty":
        return 0, 0
    if kind == "below":
        return None, desc[1]
    if kind == "atleast":
        return desc[1], None
    if kind == "segment":
        return desc[1], desc[2]
    if kind == "sum":
        lo1, hi1 = desc_bounds(desc[1])
        lo2, hi2 = desc_bounds(desc[2])
        lo = None if lo1 is None or lo2 is None else min(lo1, lo2)
        hi = None if hi1 is None or hi2 is None else max(hi1, hi2)
        return lo, hi
    raise DomainError(f"unknown descriptor {desc!r}")


def dual_desc(desc: tuple) -> tuple:
    """Mirror of the slot set under k -> -k-1."""
    kind = desc[0]
    if kind in ("full", "empty"):
        return desc
    if kind == "below":
        return ("atleast", -desc[1])
    if kind == "atleast":
        return ("below", -desc[1])
    if kind == "segment":
        return ("segment", -desc[2], -desc[1])
    if kind == "sum":
        return ("sum", dual_desc(desc[1]), dual_desc(desc[2]))
    raise DomainError(f"unknown descriptor {desc!r}")


@dataclass(frozen=True, eq=False)
class C1Model:
    """Integer-indexed filtered space, described by its graded slot pattern."""

    field: FqField
    desc: tuple
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "desc", normalize_desc(self.desc))
        if not self.label:
            object.__setattr__(self, "label", str(self.desc))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, C1Model)
            and self.field == other.field
            and self.desc == other.desc
        )

    def __hash__(self) -> int:
        return hash((self.field, self.desc))

    def __repr__(self) -> str:
        return f"C1Model({self.label})"

    def mult(self, k: int) -> int:
        return desc_mult(self.desc, k)

    def dim_between(self, i: int, j: int) -> int:
        """dim F(j)/F(i), signed when j < i."""
        if i <= j:
            return desc_count(self.desc, i, j)
        return -desc_count(self.desc, j, i)

    @property
    def bounds(self) -> tuple[Optional[int], Optional[int]]:
        return desc_bounds(self.desc)

    @property
    def is_discrete(self) -> bool:
        return self.bounds[0] is not None

    @property
    def is_compact(self) -> bool:
        return self.bounds[1] is not None


def laurent_model(field: FqField, label: str = "K") -> C1Model:
    return C1Model(field, ("full",), label)


def lattice_model(field: FqField, cut: int = 0, label: str = "") -> C1Model:
    """Compact model with slots below the cut (t^{-cut} O inside K)."""
    return C1Model(field, ("below", cut), label or f"O<{cut}")


def colattice_model(field: FqField, cut: int = 0, label: str = "") -> C1Model:
    """Discrete model with slots at or above the cut (K modulo a lattice)."""
    return C1Model(field, ("atleast", cut), label or f"Q>={cut}")


def segment_model(field: FqField, a: int, b: int, label: str = "") -> C1Model:
    return C1Model(field, ("segment", a, b), label or f"S[{a},{b})")


def sum_model(m1: C1Model, m2: C1Model, label: str = "") -> C1Model:
    if m1.field != m2.field:
        raise DomainError("summands over different fields")
    return C1Model(m1.field, ("sum", m1.desc, m2.desc), label or f"({m1.label}+{m2.label})")


def shift_model(m: C1Model, s: int, label: str = "") -> C1Model:
    return C1Model(m.field, ("shift", m.desc, s), label or f"{m.label}>>{s}")


def dual_model(m: C1Model) -> C1Model:
    """Index-reversed dual: slots mirrored under k -> -k-1."""
    return C1Model(m.field, dual_desc(m.desc), f"dual({m.label})")


# ---------------------------------------------------------------------------
# windows and positions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise WindowError(f"window ({self.lo},{self.hi}) has lo > hi")

    def contains(self, other: "Window") -> bool:
        return self.lo <= other.lo and self.hi >= other.hi

    def union(self, other: "Window") -> "Window":
        return Window(min(self.lo, other.lo), max(self.hi, other.hi))


def dual_window(w: Window) -> Window:
    return Window(-w.hi, -w.lo)


def positions(model: C1Model, w: Window) -> tuple[tuple[int, int], ...]:
    """Graded slots (cut, slot) of the window quotient, in cut-major order."""
    return tuple(
        (k, s) for k in range(w.lo, w.hi) for s in range(model.mult(k))
    )


def window_dim(model: C1Model, w: Window) -> int:
    return desc_count(model.desc, w.lo, w.hi)


def dual_perm(model: C1Model, w: Window) -> list[int]:
    """For each dual-window position, the index of its paired primal position.

    The dual window of (lo, hi) is (-hi, -lo) on the dual model; dual slot
    (k', s) pairs with primal slot (-k'-1, s).
    """
    src = positions(model, w)
    index_of = {pos: r for r, pos in enumerate(src)}
    dm = dual_model(model)
    return [index_of[(-k - 1, s)] for (k, s) in positions(dm, dual_window(w))]


# ---------------------------------------------------------------------------
# function and distribution representatives
# ---------------------------------------------------------------------------

FN_TAGS = ("D", "E", "ET")
DIST_TAGS = ("Dp", "Ep", "ETp", "Haar")


@dataclass(frozen=True, eq=False)
class C1Fn:
    model: C1Model
    tag: str
    window: Window
    table: Table

    def __post_init__(self) -> None:
        if self.tag not in FN_TAGS:
            raise DomainError(f"bad function tag {self.tag!r}")
        if len(self.table) != self.model.field.q ** window_dim(self.model, self.window):
            raise DomainError("table length does not match the window")

    @property
    def p(self) -> int:
        return self.model.field.p

    def at(self, w: Window) -> "C1Fn":
        return fn_at(self, w)

    def __add__(self, other: "C1Fn") -> "C1Fn":
        if self.model != other.model or self.tag != other.tag:
            raise DomainError("mismatched representatives")
        w = _common_fn_window(self, other)
        return C1Fn(self.model, self.tag, w, tables.add(fn_at(self, w).table, fn_at(other, w).table))

    def __mul__(self, other):
        if isinstance(other, C1Fn):
            return fn_mul(self, other)
        return C1Fn(self.model, self.tag, self.window, tables.scale(self.table, other))

    __rmul__ = __mul__

    def __neg__(self) -> "C1Fn":
        return self * Fraction(-1)

    def check(self) -> "C1Fn":
        dim = window_dim(self.model, self.window)
        return C1Fn(
            self.model,
            self.tag,
            self.window,
            tables.check_table(self.table, self.model.field.q, dim, self.model.field),
        )

    def is_zero(self) -> bool:
        return tables.is_zero(self.table)


@dataclass(frozen=True, eq=False)
class C1Dist:
    model: C1Model
    tag: str
    window: Window
    table: Table  # pairing table: <G, f> = sum table * f-table
    extension: Optional[tuple] = None  # None | ('zero_up',) | ('haar', value, ref)

    def __post_init__(self) -> None:
        if self.tag not in DIST_TAGS:
            raise DomainError(f"bad distribution tag {self.tag!r}")
        if len(self.table) != self.model.field.q ** window_dim(self.model, self.window):
            raise DomainError("table length does not match the window")

    @property
    def p(self) -> int:
        return self.model.field.p

    def at(self, w: Window) -> "C1Dist":
        return dist_at(self, w)

    def __add__(self, other: "C1Dist") -> "C1Dist":
        if self.model != other.model:
            raise DomainError("mismatched models")
        if self.window != other.window:
            raise WindowError("sum of distributions needs a common window")
        return C1Dist(
            self.model, self.tag, self.window, tables.add(self.table, other.table)
        )

    def __mul__(self, other) -> "C1Dist":
        return C1Dist(
            self.model, self.tag, self.window, tables.scale(self.table, other), self.extension
        )

    __rmul__ = __mul__

    def check(self) -> "C1Dist":
        dim = window_dim(self.model, self.window)
        return C1Dist(
            self.model,
            self.tag,
            self.window,
            tables.check_table(self.table, self.model.field.q, dim, self.model.field),
            self.extension,
        )

    def is_zero(self) -> bool:
        return tables.is_zero(self.table)


# -- table transport


def fn_at(f: C1Fn, w: Window) -> C1Fn:
    if w == f.window:
        return f
    src_w = f.window
    if f.tag == "D":
        if not (w.lo <= src_w.lo and w.hi >= src_w.hi):
            raise WindowError(f"D representative at {src_w} cannot move to {w}")
    else:
        if not (w.lo <= src_w.lo and w.hi <= src_w.hi):
            raise WindowError(f"{f.tag} representative at {src_w} cannot move to {w}")
    model, q = f.model, f.model.field.q
    src_pos = positions(model, src_w)
    dst_pos = positions(model, w)
    src_index = {pos: r for r, pos in enumerate(src_pos)}
    p = model.field.p
    zero = CycNum.zero(p)
    out = []
    for idx in range(q ** len(dst_pos)):
        digs = tables.decode(idx, q, len(dst_pos))
        src_digits = [0] * len(src_pos)
        dead = False
        for j, pos in enumerate(dst_pos):
            r = src_index.get(pos)
            if r is not None:
                src_digits[r] = digs[j]
            elif pos[0] >= src_w.hi and digs[j]:
                # above the source window: a D-function vanishes there
                dead = True
                break
            # below the source window: the value does not depend on it
        out.append(zero if dead else f.table[tables.encode(src_digits, q)])
    return C1Fn(model, f.tag, w, tuple(out))


def dist_at(G: C1Dist, w: Window) -> C1Dist:
    if w == G.window:
        return G
    model, q = G.model, G.model.field.q
    if G.extension and G.extension[0] == "haar":
        _, value, ref = G.extension
        const = value * Fraction(q) ** model.dim_between(ref, w.lo)
        dim = window_dim(model, w)
        return C1Dist(model, G.tag, w, tables.const_table(CycNum.from_rational(model.field.p, const), q, dim), G.extension)
    grows = w.lo < G.window.lo or w.hi > G.window.hi
    if grows and not (G.extension and G.extension[0] == "zero_up"):
        raise WindowError(f"distribution at {G.window} cannot grow to {w}")
    src_w = G.window
    src_pos = positions(model, src_w)
    dst_pos = positions(model, w)
    dst_index = {pos: j for j, pos in enumerate(dst_pos)}
    p = model.field.p
    zero = CycNum.zero(p)
    # source positions below the target window get summed over; source
    # positions above it are sliced at zero
    summed = [r for r, pos in enumerate(src_pos) if pos[0] < w.lo]
    out = []
    for idx in range(q ** len(dst_pos)):
        digs = tables.decode(idx, q, len(dst_pos))
        # target positions outside the source window carry point masses at
        # canonical lifts only (zero_up), so any nonzero digit there kills it
        if any(
            digs[j]
            for j, pos in enumerate(dst_pos)
            if not (src_w.lo <= pos[0] < src_w.hi)
        ):
            out.append(zero)
            continue
        base = [0] * len(src_pos)
        for r, pos in enumerate(src_pos):
            j = dst_index.get(pos)
            if j is not None:
                base[r] = digs[j]
        acc = CycNum.zero(p)
        for combo in itertools.product(range(q), repeat=len(summed)):
            for r, d in zip(summed, combo):
                base[r] = d
            acc = acc + G.table[tables.encode(base, q)]
        out.append(acc)
    return C1Dist(model, G.tag, w, tuple(out), G.extension)


def _common_fn_window(a: C1Fn, b: C1Fn) -> Window:
    if a.tag == "D" and b.tag == "D":
        return a.window.union(b.window)
    lo = min(a.window.lo, b.window.lo)
    hi = min(a.window.hi, b.window.hi)
    if a.tag == "D" and hi < a.window.hi:
        raise WindowError("cannot slice a compactly-supported representative")
    if b.tag == "D" and hi < b.window.hi:
        raise WindowError("cannot slice a compactly-supported representative")
    return Window(lo, hi)


def fn_mul(f: C1Fn, g: C1Fn) -> C1Fn:
    """Pointwise product; a D-factor makes the product compactly supported."""
    if f.model != g.model:
        raise DomainError("mismatched models")
    if f.tag != "D" and g.tag == "D":
        f, g = g, f
    if f.tag == "D":
        # product lives at f's support; g only needs to be defined there
        if g.tag == "D":
            w = f.window.union(g.window)
        else:
            if g.window.hi < f.window.hi:
                raise WindowError("germ factor not defined on the support")
            w = Window(min(f.window.lo, g.window.lo), f.window.hi)
        tag = "D"
    else:
        w = _common_fn_window(f, g)
        tag = "E" if "E" in (f.tag, g.tag) else "ET"
    return C1Fn(f.model, tag, w, tables.mul_pointwise(fn_at(f, w).table, fn_at(g, w).table))


def mul_dist(f: C1Fn, G: C1Dist) -> C1Dist:
    """f . G with (f.G)(g) = G(f g), for a germ f; pointwise on pairing tables."""
    Gw = dist_at(G, G.window)
    w = G.window
    fw = fn_at(f, w)
    return C1Dist(G.model, G.tag, w, tables.mul_pointwise(fw.table, Gw.table), None)


def canonical_fn(f: C1Fn) -> C1Fn:
    """Trim a compactly-supported representative to its minimal window."""
    if f.tag != "D":
        raise DomainError("only D representatives have a canonical trim")
    model, q = f.model, f.model.field.q
    cur = f
    # trim the top while the outermost slots carry no support
    while cur.window.hi > cur.window.lo:
        w = Window(cur.window.lo, cur.window.hi - 1)
        outer = [r for r, pos in enumerate(positions(model, cur.window)) if pos[0] >= w.hi]
        dim = window_dim(model, cur.window)
        supported = any(
            c and any(tables.decode(i, q, dim)[r] for r in outer)
            for i, c in enumerate(cur.table)
        )
        if supported:
            break
        cur = C1Fn(model, "D", w, tables.contract(cur.table, q, dim, [r for r in range(dim) if r not in outer], "slice"))
    # raise the bottom while the table is invariant along the lowest slots
    while cur.window.lo < cur.window.hi:
        w = Window(cur.window.lo + 1, cur.window.hi)
        low = [r for r, pos in enumerate(positions(model, cur.window)) if pos[0] < w.lo]
        dim = window_dim(model, cur.window)
        keep = [r for r in range(dim) if r not in low]
        sliced = tables.contract(cur.table, q, dim, keep, "slice")
        candidate = C1Fn(model, "D", w, sliced)
        if fn_at(candidate, cur.window).table != cur.table:
            break
        cur = candidate
    return cur


def fn_equal(a: C1Fn, b: C1Fn) -> bool:
    if a.model != b.model:
        return False
    if a.tag == "D" and b.tag == "D":
        w = a.window.union(b.window)
        return fn_at(a, w).table == fn_at(b, w).table
    w = _common_fn_window(a, b)
    return fn_at(a, w).table == fn_at(b, w).table


def pairing1(G: C1Dist, f: C1Fn) -> CycNum:
    """<G, f>: the distribution applied to the function."""
    if G.model != f.model:
        raise DomainError("mismatched models")
    w = f.window
    if G.extension is None:
        if f.tag == "D":
            if not G.window.contains(f.window):
                raise WindowError("fixed-window distribution cannot see the function")
        else:
            w = Window(max(G.window.lo, f.window.lo), min(G.window.hi, f.window.hi))
            if w.lo > f.window.lo:
                raise WindowError("germ is not defined far enough down")
    elif G.extension[0] == "zero_up" and f.tag != "D":
        if G.window.hi > f.window.hi:
            raise WindowError("support of the distribution escapes the germ window")
        w = Window(f.window.lo, f.window.hi)
    return tables.dot(dist_at(G, w).table, fn_at(f, w).table, G.p)


# ---------------------------------------------------------------------------
# points, translation, evaluation, characters
# ---------------------------------------------------------------------------

Point = dict  # {(cut, slot): field element index}


def normalize_point(model: C1Model, a) -> Point:
    out: Point = {}
    for key, v in dict(a).items():
        pos = (key, 0) if isinstance(key, int) else tuple(key)
        if model.mult(pos[0]) <= pos[1]:
            raise DomainError(f"point component at missing slot {pos}")
        if v % model.field.q:
            out[pos] = v % model.field.q
    return out


def point_window(a: Point) -> Optional[int]:
    """Smallest cut h with the point inside F(h), or None for the origin."""
    return max((k + 1 for (k, _s) in a), default=None)


def _shift_digits(model: C1Model, w: Window, a: Point) -> list[int]:
    return [a.get(pos, 0) for pos in positions(model, w)]


def translate_fn(f: C1Fn, a) -> C1Fn:
    a = normalize_point(f.model, a)
    need = point_window(a)
    w = f.window
    if need is not None and need > w.hi:
        if f.tag != "D":
            raise WindowError("translation leaves the germ window")
        w = Window(w.lo, need)
    moved = fn_at(f, w)
    dim = window_dim(f.model, w)
    return C1Fn(
        f.model,
        f.tag,
        w,
        tables.translate(moved.table, f.model.field.q, dim, _shift_digits(f.model, w, a), f.model.field),
    )


def translate_dist(G: C1Dist, a) -> C1Dist:
    """T_a(G)(f) = G(T_{-a} f); pairing tables shift by -a."""
    a = normalize_point(G.model, a)
    need = point_window(a)
    w = G.window
    if need is not None and need > w.hi:
        w = Window(w.lo, need)
    moved = dist_at(G, w)
    fld = G.model.field
    neg = {pos: fld.neg_idx(v) for pos, v in a.items()}
    dim = window_dim(G.model, w)
    ext = G.extension
    if ext and ext[0] == "zero_up" and any(k < w.lo for (k, _s) in a):
        ext = None
    return C1Dist(
        G.model,
        G.tag,
        w,
        tables.translate(moved.table, fld.q, dim, _shift_digits(G.model, w, neg), fld),
        ext,
    )


def translate(x, a):
    if isinstance(x, C1Fn):
        return translate_fn(x, a)
    return translate_dist(x, a)


def eval_fn_at(f: C1Fn, point) -> CycNum:
    a = normalize_point(f.model, point)
    outside = [pos for pos in a if pos[0] >= f.window.hi]
    if outside:
        if f.tag == "D":
            return CycNum.zero(f.p)
        raise WindowError("germ value not determined at this point")
    digits = _shift_digits(f.model, f.window, a)
    return f.table[tables.encode(digits, f.model.field.q)]


def dist_vanishes_at(G: C1Dist, point) -> bool:
    """Support test: G vanishes near the point iff the coset entry is zero."""
    a = normalize_point(G.model, point)
    need = point_window(a)
    w = G.window if need is None or need <= G.window.hi else Window(G.window.lo, need)
    moved = dist_at(G, w)
    digits = _shift_digits(G.model, w, a)
    return not moved.table[tables.encode(digits, G.model.field.q)]


def character_fn(model: C1Model, w: Window, b) -> C1Fn:
    """psi_b restricted to the window; b is a point of the dual model.

    The dual-model component at cut k' pairs with the primal slot at
    -k'-1, so well-definedness requires supp(b) within [-w.hi, -w.lo).
    """
    dm = dual_model(model)
    b = normalize_point(dm, b)
    for (k, _s) in b:
        if not (-w.hi <= k < -w.lo):
            raise WindowError("character component outside the dual window")
    digits = [b.get((-k - 1, s), 0) for (k, s) in positions(model, w)]
    return C1Fn(model, "ET", w, tables.psi_linear(model.field, window_dim(model, w), digits))


# ---------------------------------------------------------------------------
# Haar measures and integration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HaarMeasure:
    """Invariant measure pinned by its value on one filtration member."""

    model: C1Model
    ref: int
    value: Fraction

    def __post_init__(self) -> None:
        if self.value == 0:
            raise DomainError("the zero measure is not allowed here")

    def value_at(self, i: int) -> Fraction:
        return self.value * Fraction(self.model.field.q) ** self.model.dim_between(self.ref, i)

    def as_dist(self, w: Window) -> C1Dist:
        const = CycNum.from_rational(self.model.field.p, self.value_at(w.lo))
        dim = window_dim(self.model, w)
        return C1Dist(
            self.model,
            "Haar",
            w,
            tables.const_table(const, self.model.field.q, dim),
            ("haar", self.value, self.ref),
        )

    def scaled(self, c: Fraction) -> "HaarMeasure":
        return HaarMeasure(self.model, self.ref, self.value * c)

    def inverse_on_dual(self) -> "HaarMeasure":
        """mu^{-1} on the dual model: mu^{-1}(F(i)^perp) = 1 / mu(F(i))."""
        return HaarMeasure(dual_model(self.model), -self.ref, Fraction(1) / self.value)


def integrate(f: C1Fn, mu: HaarMeasure) -> CycNum:
    """Integral of a compactly-supported function against the measure."""
    if f.model != mu.model:
        raise DomainError("measure on a different model")
    if f.tag != "D":
        raise CapabilityError("only compactly supported functions integrate")
    acc = CycNum.zero(f.p)
    for c in f.table:
        acc = acc + c
    return acc * mu.value_at(f.window.lo)


def i_mu(f: C1Fn, mu: HaarMeasure) -> C1Dist:
    """Density map f -> f d(mu); pairing table = f's table scaled by mu(F(lo))."""
    if f.model != mu.model:
        raise DomainError("measure on a different model")
    tag = "Ep" if f.tag == "D" else "Dp"
    return C1Dist(
        f.model,
        tag,
        f.window,
        tables.scale(f.table, mu.value_at(f.window.lo)),
        None,
    )


def delta_lattice(model: C1Model, i: int) -> C1Fn:
    """Indicator of F(i) as a compactly-supported representative."""
    return C1Fn(model, "D", Window(i, i), (CycNum.one(model.field.p),))


def delta_point_dist(model: C1Model, point, w: Optional[Window] = None) -> C1Dist:
    """Evaluation distribution at a point with canonical-lift extension."""
    a = normalize_point(model, point)
    need = point_window(a)
    base = w or Window(min((k for (k, _s) in a), default=0), need or 0)
    if need is not None and base.hi < need:
        base = Window(base.lo, need)
    dim = window_dim(model, base)
    q = model.field.q
    p = model.field.p
    target = tables.encode(_shift_digits(model, base, a), q)
    table = tuple(
        CycNum.one(p) if i == target else CycNum.zero(p) for i in range(q**dim)
    )
    return C1Dist(model, "ETp", base, table, ("zero_up",))


# ---------------------------------------------------------------------------
# Fourier transforms
# ---------------------------------------------------------------------------


def _rev_fourier(model: C1Model, w: Window, table: Table) -> Table:
    """Dot-pairing transform followed by the dual-window slot matching."""
    q = model.field.q
    dim = window_dim(model, w)
    ft = tables.fourier(table, q, dim, model.field)
    return tables.apply_perm(ft, q, dual_perm(model, w))


def fourier1(f: C1Fn, mu: HaarMeasure) -> C1Fn:
    """F_mu on compactly-supported functions; lands on the dual model."""
    if f.tag != "D":
        raise CapabilityError("fourier1 applies to compactly-supported functions")
    if f.model != mu.model:
        raise DomainError("measure on a different model")
    out_table = tables.scale(_rev_fourier(f.model, f.window, f.table), mu.value_at(f.window.lo))
    return C1Fn(dual_model(f.model), "D", dual_window(f.window), out_table)


def fourier1_dist(G: C1Dist, mu: HaarMeasure) -> C1Dist:
    """F_{mu^{-1}} on distributions, via adjointness on pairing tables."""
    if G.model != mu.model:
        raise DomainError("measure on a different model")
    out_table = tables.scale(
        _rev_fourier(G.model, G.window, G.table), Fraction(1) / mu.value_at(G.window.hi)
    )
    ext = ("zero_up",) if G.tag == "Haar" else None
    return C1Dist(dual_model(G.model), "Dp", dual_window(G.window), out_table, ext)


def fourier_e(f: C1Fn) -> C1Dist:
    """F on locally-constant germs, landing in compact-dual pairing tables.

    Measure-independent: the density and inverse-measure scalings cancel to
    1/q^dim on the window.
    """
    if f.tag not in ("E", "ET"):
        raise CapabilityError("fourier_e applies to locally-constant germs")
    q = f.model.field.q
    dim = window_dim(f.model, f.window)
    out_table = tables.scale(_rev_fourier(f.model, f.window, f.table), Fraction(1, q**dim))
    tag = "ETp" if f.tag == "E" else "Ep"
    return C1Dist(dual_model(f.model), tag, dual_window(f.window), out_table, None)


def fourier_ep(G: C1Dist) -> C1Fn:
    """F on compactly-supported distributions, landing in germs (unscaled)."""
    if G.tag not in ("Ep", "ETp"):
        raise CapabilityError("fourier_ep applies to compactly-supported distributions")
    out_table = _rev_fourier(G.model, G.window, G.table)
    tag = "E" if G.tag == "ETp" else "ET"
    return C1Fn(dual_model(G.model), tag, dual_window(G.window), out_table)

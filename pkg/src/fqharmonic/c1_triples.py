"""Admissible triples of integer-indexed filtered spaces, at window level.

A triple 0 -> E1 -> E2 -> E3 -> 0 in this package is graded: every graded
slot of the middle model is assigned to the sub or to the quotient, and the
index maps between the three filtrations are the identity on cuts (models are
pre-normalized so that filtration index = cut).  Each window of the middle
model then induces an exact sequence of finite quotients, and the eight
direct/inverse images act by slot bookkeeping on tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from fqharmonic import tables
from fqharmonic.c1 import (
    C1Dist,
    C1Fn,
    CapabilityError,
    HaarMeasure,
    Window,
    WindowError,
    C1Model,
    dist_at,
    dual_model,
    dual_window,
    fn_at,
    fourier1_dist,
    positions,
    sum_model,
    window_dim,
)
from fqharmonic.exactnum import CycNum, DomainError


@dataclass(frozen=True, eq=False)
class TripleC1:
    """Graded short exact sequence sub -> mid -> quot."""

    mid: C1Model
    sub: C1Model
    quot: C1Model
    is_sub: Callable[[int, int], bool]
    label: str = ""

    def __post_init__(self) -> None:
        if not (self.mid.field == self.sub.field == self.quot.field):
            raise DomainError("triple members over different fields")

    def split(self, w: Window) -> tuple[list[int], list[int]]:
        """Indices of sub and quot slots inside the mid window positions."""
        pos = positions(self.mid, w)
        sub_idx = [r for r, (k, s) in enumerate(pos) if self.is_sub(k, s)]
        quot_idx = [r for r in range(len(pos)) if r not in set(sub_idx)]
        if len(sub_idx) != window_dim(self.sub, w) or len(quot_idx) != window_dim(
            self.quot, w
        ):
            raise DomainError(f"graded split inconsistent on window {w}")
        return sub_idx, quot_idx


def interval_triple(mid: C1Model, sub: C1Model, label: str = "") -> TripleC1:
    """Triple with the sub given by its own slot pattern inside the mid."""
    quot_desc = _desc_minus(mid.desc, sub.desc)
    quot = C1Model(mid.field, quot_desc, f"{mid.label}/{sub.label}")

    def is_sub(k: int, s: int) -> bool:
        return s < sub.mult(k)

    for k in range(-8, 9):
        if sub.mult(k) > mid.mult(k):
            raise DomainError("sub pattern exceeds the mid pattern")
    return TripleC1(mid, sub, quot, is_sub, label or f"{sub.label}<{mid.label}")


def _interval_of(desc: tuple):
    kind = desc[0]
    if kind == "full":
        return (None, None)
    if kind == "empty":
        return (0, 0)
    if kind == "below":
        return (None, desc[1])
    if kind == "atleast":
        return (desc[1], None)
    if kind == "segment":
        return (desc[1], desc[2])
    raise DomainError(f"not an interval pattern: {desc!r}")


def _desc_of_interval(lo, hi) -> tuple:
    if lo is None and hi is None:
        return ("full",)
    if lo is None:
        return ("below", hi)
    if hi is None:
        return ("atleast", lo)
    return ("segment", lo, hi) if lo < hi else ("empty",)


def _desc_minus(mid: tuple, sub: tuple) -> tuple:
    if sub == ("empty",):
        return mid
    m1, m2 = _interval_of(mid)
    s1, s2 = _interval_of(sub)
    left = _desc_of_interval(m1, s1) if not (m1 is None and s1 is None) and s1 is not None else ("empty",)
    if s1 is not None and m1 is not None and s1 <= m1:
        left = ("empty",)
    right = _desc_of_interval(s2, m2) if s2 is not None else ("empty",)
    if s2 is None:
        right = ("empty",)
    if left == ("empty",):
        return right
    if right == ("empty",):
        return left
    return ("sum", left, right)


def direct_sum_triple(sub: C1Model, quot: C1Model, label: str = "") -> TripleC1:
    """Split extension with the sub slots listed first at every cut."""
    mid = sum_model(sub, quot)

    def is_sub(k: int, s: int) -> bool:
        return s < sub.mult(k)

    return TripleC1(mid, sub, quot, is_sub, label or f"{sub.label}(+){quot.label}")


def dual_triple(T: TripleC1) -> TripleC1:
    """0 -> quot* -> mid* -> sub* -> 0 with mirrored slot assignment."""

    def is_sub(k: int, s: int) -> bool:
        return not T.is_sub(-k - 1, s)

    return TripleC1(
        dual_model(T.mid),
        dual_model(T.quot),
        dual_model(T.sub),
        is_sub,
        f"dual({T.label})",
    )


# -- composition and base-change plumbing


def _slot_within(pred: Callable[[int, int], bool], mid: C1Model, k: int, s: int, value: bool) -> int:
    """Index of slot (k, s) within the slots of the same truth value at cut k."""
    return sum(1 for s2 in range(s) if pred(k, s2) == value)


def _nth_slot(pred: Callable[[int, int], bool], mid: C1Model, k: int, j: int, value: bool) -> int:
    cnt = 0
    for s in range(mid.mult(k)):
        if pred(k, s) == value:
            if cnt == j:
                return s
            cnt += 1
    raise DomainError("slot index out of range")


def compose_epi(T_inner: TripleC1, T_outer: TripleC1, label: str = "") -> TripleC1:
    """Composite epimorphism H -> E2 -> E3.

    T_outer is L -> H -> E2 and T_inner is E1 -> E2 -> E3; the result is the
    triple ker -> H -> E3 with ker = the pullback of E1 to H.
    """
    if T_outer.quot != T_inner.mid:
        raise DomainError("outer quotient must be the inner middle model")
    ker = sum_model(T_outer.sub, T_inner.sub, label=f"ker({label})" if label else "")

    def is_sub(k: int, s: int) -> bool:
        if T_outer.is_sub(k, s):
            return True
        j = _slot_within(T_outer.is_sub, T_outer.mid, k, s, False)
        return T_inner.is_sub(k, j)

    return TripleC1(T_outer.mid, ker, T_inner.quot, is_sub, label or "compose_epi")


def compose_mono(T_inner: TripleC1, T_outer: TripleC1, label: str = "") -> TripleC1:
    """Composite monomorphism E1 -> E2 -> H'.

    T_inner is E1 -> E2 -> E3 and T_outer is E2 -> H' -> L'; the result is
    E1 -> H' -> coker with coker = E3 pushed out along H'.
    """
    if T_outer.sub != T_inner.mid:
        raise DomainError("outer sub must be the inner middle model")
    coker = sum_model(T_inner.quot, T_outer.quot, label=f"coker({label})" if label else "")

    def is_sub(k: int, s: int) -> bool:
        if not T_outer.is_sub(k, s):
            return False
        j = _slot_within(T_outer.is_sub, T_outer.mid, k, s, True)
        return T_inner.is_sub(k, j)

    return TripleC1(T_outer.mid, T_inner.sub, coker, is_sub, label or "compose_mono")


def base_change(T: TripleC1, Tg: TripleC1, label: str = ""):
    """Pull the triple T back along an admissible mono into its quotient.

    T is E1 -> E2 -> E3 and Tg is D -> E3 -> B.  Returns (T_fiber, T_mono)
    where T_fiber is E1 -> X' -> D on the fibered product X' and T_mono is
    X' -> E2 -> B.
    """
    if Tg.mid != T.quot:
        raise DomainError("the mono must land in the quotient of the triple")
    X = sum_model(T.sub, Tg.sub, label=f"fib({label})" if label else "")

    def in_x(k: int, s: int) -> bool:
        if T.is_sub(k, s):
            return True
        j = _slot_within(T.is_sub, T.mid, k, s, False)
        return Tg.is_sub(k, j)

    def fiber_is_sub(k: int, s: int) -> bool:
        mid_slot = _nth_slot(in_x, T.mid, k, s, True)
        return T.is_sub(k, mid_slot)

    T_mono = TripleC1(T.mid, X, Tg.quot, in_x, (label or "bc") + ":mono")
    T_fiber = TripleC1(X, T.sub, Tg.sub, fiber_is_sub, (label or "bc") + ":fiber")
    return T_fiber, T_mono


# ---------------------------------------------------------------------------
# direct and inverse images
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CapabilityError(msg)


def _fn_images(kind: str, T: TripleC1, x: C1Fn, mu1: Optional[HaarMeasure]) -> C1Fn:
    q = T.mid.field.q
    if kind == "alpha_pull":
        if x.model != T.mid:
            raise DomainError("alpha_pull expects a function on the middle model")
        w = x.window
        sub_idx, _ = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Fn(T.sub, x.tag, w, tables.contract(x.table, q, dim, sub_idx, "slice"))
    if kind == "alpha_push":
        if x.model != T.sub:
            raise DomainError("alpha_push expects a function on the sub model")
        q_inf = T.quot.bounds[0]
        _require(q_inf is not None, "alpha_push needs a discrete quotient")
        w = Window(min(x.window.lo, q_inf), x.window.hi)
        moved = fn_at(x, w)
        sub_idx, _ = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Fn(T.mid, x.tag, w, tables.expand(moved.table, q, dim, sub_idx, "zero"))
    if kind == "beta_pull":
        if x.model != T.quot:
            raise DomainError("beta_pull expects a function on the quotient model")
        s_sup = T.sub.bounds[1]
        if x.tag == "D":
            _require(s_sup is not None, "beta_pull on compact support needs a compact sub")
            w = Window(x.window.lo, max(x.window.hi, s_sup))
        else:
            w = x.window
        moved = fn_at(x, w)
        _, quot_idx = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Fn(T.mid, x.tag, w, tables.expand(moved.table, q, dim, quot_idx, "pullback"))
    if kind == "beta_push":
        if x.model != T.mid:
            raise DomainError("beta_push expects a function on the middle model")
        if mu1 is None or mu1.model != T.sub:
            raise DomainError("beta_push consumes a measure on the sub model")
        w = x.window
        if x.tag != "D":
            s_sup = T.sub.bounds[1]
            _require(s_sup is not None, "beta_push on germs needs a compact sub")
            if w.hi < s_sup:
                raise WindowError("germ window does not cover the fibers")
        sub_idx, quot_idx = T.split(w)
        dim = window_dim(T.mid, w)
        summed = tables.contract(x.table, q, dim, quot_idx, "sum")
        return C1Fn(T.quot, x.tag, w, tables.scale(summed, mu1.value_at(w.lo)))
    raise DomainError(f"unknown image kind {kind!r}")


def _dist_images(kind: str, T: TripleC1, x: C1Dist, mu1: Optional[HaarMeasure]) -> C1Dist:
    q = T.mid.field.q
    if kind == "alpha_push":
        if x.model != T.sub:
            raise DomainError("alpha_push expects a distribution on the sub model")
        w = x.window
        sub_idx, _ = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Dist(T.mid, x.tag if x.tag != "Haar" else "Dp", w,
                      tables.expand(x.table, q, dim, sub_idx, "zero"), None)
    if kind == "beta_push":
        if x.model != T.mid:
            raise DomainError("beta_push expects a distribution on the middle model")
        s_sup = T.sub.bounds[1]
        if s_sup is not None:
            w = Window(x.window.lo, max(x.window.hi, s_sup))
            moved = dist_at(x, w)
        else:
            _require(x.tag in ("Ep", "ETp"),
                     "beta_push of a general distribution needs a compact sub")
            w = x.window
            moved = x
        sub_idx, quot_idx = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Dist(T.quot, moved.tag if moved.tag != "Haar" else "Dp", w,
                      tables.contract(moved.table, q, dim, quot_idx, "sum"), None)
    if kind == "alpha_pull":
        if x.model != T.mid:
            raise DomainError("alpha_pull expects a distribution on the middle model")
        q_inf = T.quot.bounds[0]
        _require(q_inf is not None, "alpha_pull on distributions needs a discrete quotient")
        w = Window(min(x.window.lo, q_inf), x.window.hi)
        moved = dist_at(x, w)
        sub_idx, _ = T.split(w)
        dim = window_dim(T.mid, w)
        return C1Dist(T.sub, moved.tag if moved.tag != "Haar" else "Dp", w,
                      tables.contract(moved.table, q, dim, sub_idx, "slice"), None)
    if kind == "beta_pull":
        if x.model != T.quot:
            raise DomainError("beta_pull expects a distribution on the quotient model")
        if mu1 is None or mu1.model != T.sub:
            raise DomainError("beta_pull consumes a measure on the sub model")
        w = x.window
        _, quot_idx = T.split(w)
        dim = window_dim(T.mid, w)
        lifted = tables.expand(x.table, q, dim, quot_idx, "pullback")
        return C1Dist(T.mid, x.tag if x.tag != "Haar" else "Dp", w,
                      tables.scale(lifted, mu1.value_at(w.lo)), None)
    raise DomainError(f"unknown image kind {kind!r}")


def images1(kind: str, T: TripleC1, x, mu1: Optional[HaarMeasure] = None):
    """The eight direct/inverse images along a graded triple.

    kind is one of alpha_pull, alpha_push, beta_pull, beta_push; functions
    and distributions dispatch to the mutually conjugate realizations.
    """
    if isinstance(x, C1Fn):
        return _fn_images(kind, T, x, mu1)
    if isinstance(x, C1Dist):
        return _dist_images(kind, T, x, mu1)
    raise DomainError("images act on function or distribution representatives")


def tensor_haar(T: TripleC1, mu1: HaarMeasure, mu3: HaarMeasure, ref: int = 0) -> HaarMeasure:
    """The product measure on the middle model: value = sub value * quot value."""
    if mu1.model != T.sub or mu3.model != T.quot:
        raise DomainError("tensor factors on the wrong models")
    return HaarMeasure(T.mid, ref, mu1.value_at(ref) * mu3.value_at(ref))


def char_dist1(T: TripleC1, mu1: HaarMeasure, w: Window) -> C1Dist:
    """The characteristic distribution of the sub: push forward its measure."""
    return images1("alpha_push", T, mu1.as_dist(w))


# ---------------------------------------------------------------------------
# the one-dimensional Poisson identity
# ---------------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, identity: str, context: str, expected: str = "", actual: str = "") -> None:
        self.failures.append(
            {"identity": identity, "context": context, "expected": expected, "actual": actual}
        )


def poisson1_verify(
    T: TripleC1,
    mu1: HaarMeasure,
    mu2: HaarMeasure,
    cut_lo: int = -3,
    cut_hi: int = 3,
    max_points: int = 256,
    corrupt: Optional[str] = None,
) -> CheckReport:
    """Check that the transform of the sub's characteristic distribution is
    the dual quotient's characteristic distribution, window by window.

    The right-hand side is built from the independent profile formula
    value(j) = mu1(F1(j)) / mu2(F2(j)) on the dual-sub lattice.
    """
    report = CheckReport("poisson1")
    if mu1.model != T.sub or mu2.model != T.mid:
        raise DomainError("measures on the wrong models")
    q = T.mid.field.q
    p = T.mid.field.p
    Td = dual_triple(T)
    for a in range(cut_lo, cut_hi + 1):
        for b in range(a, cut_hi + 1):
            w = Window(a, b)
            if q ** window_dim(T.mid, w) > max_points:
                continue
            report.cases += 1
            haar = mu1.as_dist(w)
            if corrupt == "transition":
                bad = mu1.value_at(w.lo + 1)
                haar = C1Dist(
                    T.sub, "Haar", w,
                    tables.const_table(CycNum.from_rational(p, bad), q, window_dim(T.sub, w)),
                    ("haar", mu1.value, mu1.ref),
                )
            delta = images1("alpha_push", T, haar)
            mu2_used = mu2.scaled(Fraction(q)) if corrupt == "measure" else mu2
            lhs = fourier1_dist(delta, mu2_used)
            # independent oracle on the dual window
            wd = dual_window(w)
            val = mu1.value_at(b) / mu2.value_at(b)
            sub_idx, _ = Td.split(wd)
            dim = window_dim(Td.mid, wd)
            const = tables.const_table(CycNum.from_rational(p, val), q, len(sub_idx))
            expect = tables.expand(const, q, dim, sub_idx, "zero")
            if lhs.table != expect:
                report.fail(
                    "poisson1_characteristic_transform",
                    f"window {w}",
                    str(expect[:4]),
                    str(lhs.table[:4]),
                )
            else:
                # cross-check the oracle against the dual-side pipeline
                nu = HaarMeasure(Td.sub, wd.lo, val)
                rhs = images1("alpha_push", Td, nu.as_dist(wd))
                if rhs.table != expect:
                    report.fail("poisson1_dual_pipeline", f"window {w}")
    return report

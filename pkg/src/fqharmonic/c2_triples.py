"""Graded short exact sequences of doubly-filtered spaces and their images.

The sub and quotient of a triple partition the middle region column by
column.  Direct and inverse images act by slot bookkeeping on bi-window
tables; every measure identification required by the class hypotheses
(fiberwise compact or discrete sides trivialize their virtual-measure
factors through the canonical mass-1 or point-mass elements) shows up as an
explicit power of q on the twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from fqharmonic import tables
from fqharmonic.c1 import CapabilityError, WindowError
from fqharmonic.c2 import (
    BiWindow,
    C2Model,
    D2Dist,
    D2Elem,
    VirtualMeasure,
    bw_dim,
    d2_equal,
    d2dist_equal,
    dual_model2,
    fourier2,
    positions2,
)
from fqharmonic.c1_triples import CheckReport
from fqharmonic.exactnum import CycNum, DomainError


@dataclass(frozen=True, eq=False)
class GradedC2Triple:
    mid: C2Model
    sub: C2Model
    quot: C2Model
    label: str = ""

    def __post_init__(self) -> None:
        if not (self.mid.field == self.sub.field == self.quot.field):
            raise DomainError("triple members over different fields")
        for a in range(-6, 7):
            for b in range(-6, 7):
                in_mid = self.mid.in_region(a, b)
                in_sub = self.sub.in_region(a, b)
                in_quot = self.quot.in_region(a, b)
                if in_sub and in_quot:
                    raise DomainError(f"sub and quot overlap at {(a, b)}")
                if in_mid != (in_sub or in_quot):
                    raise DomainError(f"region partition fails at {(a, b)}")

    def split(self, bw: BiWindow) -> tuple[list[int], list[int]]:
        pos = positions2(self.mid, bw)
        sub_idx = [r for r, (a, b) in enumerate(pos) if self.sub.in_region(a, b)]
        quot_idx = [r for r in range(len(pos)) if r not in set(sub_idx)]
        return sub_idx, quot_idx

    # signed canonical-element exponents between two outer cuts
    def w_sub(self, f: int, t: int) -> int:
        return self.sub.count_above(f, t) if f <= t else -self.sub.count_above(t, f)

    def v_quot(self, f: int, t: int) -> int:
        return self.quot.count_below(f, t) if f <= t else -self.quot.count_below(t, f)


def dual_triple2(T: GradedC2Triple) -> GradedC2Triple:
    return GradedC2Triple(
        dual_model2(T.mid), dual_model2(T.quot), dual_model2(T.sub), f"dual({T.label})"
    )


def outer_cut_triple(mid: C2Model, cut: int, label: str = "") -> GradedC2Triple:
    sub_boxes, quot_boxes = [], []
    for (a1, a2, b1, b2) in mid.boxes:
        lo = a1 if a1 is not None else None
        sub_boxes.append((lo, cut if a2 is None else min(a2, cut), b1, b2))
        quot_boxes.append((cut if a1 is None else max(a1, cut), a2, b1, b2))
    sub = C2Model(mid.field, tuple(sub_boxes), f"{mid.label}|a<{cut}")
    quot = C2Model(mid.field, tuple(quot_boxes), f"{mid.label}|a>={cut}")
    return GradedC2Triple(mid, sub, quot, label or f"outer@{cut}")


def inner_cut_triple(mid: C2Model, cut: int, label: str = "") -> GradedC2Triple:
    sub_boxes, quot_boxes = [], []
    for (a1, a2, b1, b2) in mid.boxes:
        sub_boxes.append((a1, a2, b1, cut if b2 is None else min(b2, cut)))
        quot_boxes.append((a1, a2, cut if b1 is None else max(b1, cut), b2))
    sub = C2Model(mid.field, tuple(sub_boxes), f"{mid.label}|b<{cut}")
    quot = C2Model(mid.field, tuple(quot_boxes), f"{mid.label}|b>={cut}")
    return GradedC2Triple(mid, sub, quot, label or f"inner@{cut}")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CapabilityError(msg)


def _check_measure(vm: Optional[VirtualMeasure], model: C2Model, src: int, dst: Optional[int], what: str) -> VirtualMeasure:
    if vm is None:
        raise DomainError(f"{what} requires a virtual measure")
    if vm.model != model or vm.src != src:
        raise DomainError(f"{what}: measure endpoints do not match")
    # an empty side makes every cut equivalent, so any endpoint is fine
    if dst is not None and vm.dst != dst and not model.is_empty:
        raise DomainError(f"{what}: measure endpoints do not match")
    return vm


# ---------------------------------------------------------------------------
# the four images on twisted functions and their four conjugates
# ---------------------------------------------------------------------------


def _elem_images(kind: str, T: GradedC2Triple, x: D2Elem, aux: Optional[VirtualMeasure]) -> D2Elem:
    model, q = T.mid, T.mid.field.q
    bw = x.bw
    if kind == "beta_push":
        if x.model != T.mid:
            raise DomainError("beta_push expects a representative on the middle model")
        top = T.sub.outer_sup
        _require(top is not None, "beta_push needs an outer-compact sub")
        mu = _check_measure(aux, T.sub, x.o, top, "beta_push")
        if bw.i < top:
            raise WindowError("window top must cover the whole sub")
        sub_idx, quot_idx = T.split(bw)
        dim = bw_dim(model, bw)
        factor = Fraction(q) ** T.sub.sigma(bw.l, bw.i, bw.m)
        table = tables.scale(tables.contract(x.table, q, dim, quot_idx, "sum"), factor)
        return D2Elem(
            T.quot, x.o, bw, table,
            VirtualMeasure(T.quot, bw.l, x.o, x.twist.scalar * mu.scalar),
        )
    if kind == "alpha_pull":
        if x.model != T.mid:
            raise DomainError("alpha_pull expects a representative on the middle model")
        bot = T.quot.outer_inf
        _require(bot is not None, "alpha_pull needs an outer-discrete quotient")
        nu = _check_measure(aux, T.quot, x.o, bot, "alpha_pull")
        if bw.l > bot:
            raise WindowError("window bottom must sit below the whole quotient")
        sub_idx, _ = T.split(bw)
        dim = bw_dim(model, bw)
        table = tables.contract(x.table, q, dim, sub_idx, "slice")
        return D2Elem(
            T.sub, x.o, bw, table,
            VirtualMeasure(T.sub, bw.l, x.o, x.twist.scalar * nu.scalar),
        )
    if kind == "beta_pull":
        if x.model != T.quot:
            raise DomainError("beta_pull expects a representative on the quotient model")
        _require(T.sub.is_cf, "beta_pull needs a fiberwise compact sub")
        sup = T.sub.inner_sup(bw.l, bw.i)
        n_out = bw.n if sup is None else max(bw.n, sup)
        moved = x.at(BiWindow(bw.l, bw.i, bw.m, n_out))
        bw2 = moved.bw
        sub_idx, quot_idx = T.split(bw2)
        dim = bw_dim(model, bw2)
        table = tables.expand(moved.table, q, dim, quot_idx, "pullback")
        scalar = moved.twist.scalar * Fraction(q) ** (-T.w_sub(bw2.l, x.o))
        return D2Elem(T.mid, x.o, bw2, table, VirtualMeasure(T.mid, bw2.l, x.o, scalar))
    if kind == "alpha_push":
        if x.model != T.sub:
            raise DomainError("alpha_push expects a representative on the sub model")
        _require(T.quot.is_df, "alpha_push needs a fiberwise discrete quotient")
        inf = T.quot.inner_inf(bw.l, bw.i)
        m_out = bw.m if inf is None else min(bw.m, inf)
        moved = x.at(BiWindow(bw.l, bw.i, m_out, bw.n))
        bw2 = moved.bw
        sub_idx, _ = T.split(bw2)
        dim = bw_dim(model, bw2)
        table = tables.expand(moved.table, q, dim, sub_idx, "zero")
        scalar = moved.twist.scalar * Fraction(q) ** T.v_quot(bw2.l, x.o)
        return D2Elem(T.mid, x.o, bw2, table, VirtualMeasure(T.mid, bw2.l, x.o, scalar))
    raise DomainError(f"unknown image kind {kind!r}")


def _dist_images(kind: str, T: GradedC2Triple, x: D2Dist, aux: Optional[VirtualMeasure]) -> D2Dist:
    model, q = T.mid, T.mid.field.q
    bw = x.bw
    if kind == "beta_pull":
        if x.model != T.quot:
            raise DomainError("beta_pull expects a distribution on the quotient model")
        top = T.sub.outer_sup
        _require(top is not None, "beta_pull needs an outer-compact sub")
        mu = _check_measure(aux, T.sub, x.o, top, "beta_pull")
        moved = x.at(BiWindow(bw.l, max(bw.i, top), bw.m, bw.n))
        bw2 = moved.bw
        _, quot_idx = T.split(bw2)
        dim = bw_dim(model, bw2)
        factor = Fraction(q) ** T.sub.sigma(bw2.l, bw2.i, bw2.m)
        table = tables.scale(tables.expand(moved.table, q, dim, quot_idx, "pullback"), factor)
        return D2Dist(
            T.mid, x.o, bw2, table,
            VirtualMeasure(T.mid, x.o, bw2.l, moved.twist.scalar * mu.scalar),
        )
    if kind == "alpha_push":
        if x.model != T.sub:
            raise DomainError("alpha_push expects a distribution on the sub model")
        bot = T.quot.outer_inf
        _require(bot is not None, "alpha_push needs an outer-discrete quotient")
        nu = _check_measure(aux, T.quot, x.o, bot, "alpha_push")
        moved = x.at(BiWindow(min(bw.l, bot), bw.i, bw.m, bw.n))
        bw2 = moved.bw
        sub_idx, _ = T.split(bw2)
        dim = bw_dim(model, bw2)
        table = tables.expand(moved.table, q, dim, sub_idx, "zero")
        return D2Dist(
            T.mid, x.o, bw2, table,
            VirtualMeasure(T.mid, x.o, bw2.l, moved.twist.scalar * nu.scalar),
        )
    if kind == "beta_push":
        if x.model != T.mid:
            raise DomainError("beta_push expects a distribution on the middle model")
        _require(T.sub.is_cf, "beta_push of distributions needs a fiberwise compact sub")
        sup = T.sub.inner_sup(bw.l, bw.i)
        if sup is not None and bw.n < sup:
            raise WindowError("inner window must cover the fibers")
        sub_idx, quot_idx = T.split(bw)
        dim = bw_dim(model, bw)
        table = tables.contract(x.table, q, dim, quot_idx, "sum")
        scalar = x.twist.scalar * Fraction(q) ** (-T.w_sub(bw.l, x.o))
        return D2Dist(T.quot, x.o, bw, table, VirtualMeasure(T.quot, x.o, bw.l, scalar))
    if kind == "alpha_pull":
        if x.model != T.mid:
            raise DomainError("alpha_pull expects a distribution on the middle model")
        _require(T.quot.is_df, "alpha_pull of distributions needs a fiberwise discrete quotient")
        inf = T.quot.inner_inf(bw.l, bw.i)
        if inf is not None and bw.m > inf:
            raise WindowError("inner window must reach below the quotient slots")
        sub_idx, _ = T.split(bw)
        dim = bw_dim(model, bw)
        table = tables.contract(x.table, q, dim, sub_idx, "slice")
        scalar = x.twist.scalar * Fraction(q) ** T.v_quot(bw.l, x.o)
        return D2Dist(T.sub, x.o, bw, table, VirtualMeasure(T.sub, x.o, bw.l, scalar))
    raise DomainError(f"unknown image kind {kind!r}")


def images2(kind: str, T: GradedC2Triple, x, aux: Optional[VirtualMeasure] = None):
    """Direct/inverse images along a graded triple of doubly-filtered spaces.

    * beta_push / alpha_pull consume a virtual measure on the outer-compact
      sub resp. the outer-discrete quotient;
    * beta_pull / alpha_push need a fiberwise compact sub resp. fiberwise
      discrete quotient and trivialize the matching measure factor through
      the canonical elements.
    Distributions dispatch to the conjugate realizations.
    """
    if isinstance(x, D2Elem):
        return _elem_images(kind, T, x, aux)
    if isinstance(x, D2Dist):
        return _dist_images(kind, T, x, aux)
    raise DomainError("images act on twisted representatives")


# ---------------------------------------------------------------------------
# canonical elements and characteristic distributions
# ---------------------------------------------------------------------------


def one_fn(model: C2Model, o: int, bw: BiWindow) -> D2Elem:
    """The constant 1 of a fiberwise compact model, canonically twisted."""
    if not model.is_cf:
        raise CapabilityError("the constant 1 needs a fiberwise compact model")
    sup = model.inner_sup(bw.l, bw.i)
    if sup is not None and bw.n < sup:
        raise WindowError("window must contain the column tops")
    q = model.field.q
    dim = bw_dim(model, bw)
    w = model.count_above(bw.l, o) if bw.l <= o else -model.count_above(o, bw.l)
    return D2Elem(
        model, o, bw,
        tables.const_table(CycNum.one(model.field.p), q, dim),
        VirtualMeasure(model, bw.l, o, Fraction(q) ** (-w)),
    )


def delta0_fn(model: C2Model, o: int, bw: BiWindow) -> D2Elem:
    """The unit point mass at 0 of a fiberwise discrete model."""
    if not model.is_df:
        raise CapabilityError("the point mass needs a fiberwise discrete model")
    inf = model.inner_inf(bw.l, bw.i)
    if inf is not None and bw.m > inf:
        raise WindowError("window must reach below the column bottoms")
    q = model.field.q
    p = model.field.p
    dim = bw_dim(model, bw)
    table = tuple(CycNum.one(p) if i == 0 else CycNum.zero(p) for i in range(q**dim))
    v = model.count_below(bw.l, o) if bw.l <= o else -model.count_below(o, bw.l)
    return D2Elem(model, o, bw, table, VirtualMeasure(model, bw.l, o, Fraction(q) ** v))


def one_mu(model: C2Model, mu: VirtualMeasure, bw: BiWindow) -> D2Dist:
    """The measure of an outer-compact model as a distribution on it."""
    top = model.outer_sup
    _require(top is not None, "the measure profile needs an outer-compact model")
    _check_measure(mu, model, mu.src, top, "one_mu")
    if bw.i < top:
        raise WindowError("window top must cover the whole model")
    q = model.field.q
    dim = bw_dim(model, bw)
    value = mu.scalar * Fraction(q) ** model.sigma(bw.l, bw.i, bw.m)
    return D2Dist(
        model, mu.src, bw,
        tables.const_table(CycNum.from_rational(model.field.p, value), q, dim),
        VirtualMeasure(model, mu.src, bw.l, Fraction(1)),
    )


def delta_nu(model: C2Model, nu: VirtualMeasure, bw: BiWindow) -> D2Dist:
    """The evaluation at 0 of an outer-discrete model, scaled by the measure."""
    bot = model.outer_inf
    _require(bot is not None, "the point evaluation needs an outer-discrete model")
    _check_measure(nu, model, nu.src, bot, "delta_nu")
    if bw.l > bot:
        raise WindowError("window bottom must sit below the whole model")
    q = model.field.q
    p = model.field.p
    dim = bw_dim(model, bw)
    one = CycNum.from_rational(p, nu.scalar)
    table = tuple(one if i == 0 else CycNum.zero(p) for i in range(q**dim))
    return D2Dist(model, nu.src, bw, table, VirtualMeasure(model, nu.src, bw.l, Fraction(1)))


def char_dist(T: GradedC2Triple, mu: VirtualMeasure, nu: VirtualMeasure, bw: BiWindow) -> D2Dist:
    """The characteristic distribution of the sub inside the middle model."""
    return images2("alpha_push", T, one_mu(T.sub, mu, bw), nu)


def char_fn(T: GradedC2Triple, o: int, bw: BiWindow) -> D2Elem:
    """The characteristic function of a fiberwise compact sub (twist-free)."""
    return images2("alpha_push", T, one_fn(T.sub, o, bw))


# ---------------------------------------------------------------------------
# the two-dimensional Poisson identities
# ---------------------------------------------------------------------------


def _sweep(T: GradedC2Triple, cut_lo: int, cut_hi: int, max_points: int):
    q = T.mid.field.q
    for l in range(cut_lo, cut_hi + 1):
        for i in range(l, cut_hi + 1):
            for m in range(cut_lo, cut_hi + 1):
                for n in range(m, cut_hi + 1):
                    bw = BiWindow(l, i, m, n)
                    if q ** bw_dim(T.mid, bw) <= max_points:
                        yield bw


def poisson2_verify(
    which: str,
    T: GradedC2Triple,
    mu: Optional[VirtualMeasure] = None,
    nu: Optional[VirtualMeasure] = None,
    o: int = 0,
    cut_lo: int = -2,
    cut_hi: int = 2,
    max_points: int = 256,
    corrupt: Optional[str] = None,
) -> CheckReport:
    """Check the transform of the sub's characteristic object against the
    dual quotient's, bi-window by bi-window, through two independent
    pipelines (the primal construction transformed, and the dual-triple
    construction built directly)."""
    report = CheckReport(f"poisson2_{which}")
    Td = dual_triple2(T)
    q = T.mid.field.q
    if which == "II":
        _require(T.sub.is_cf, "the twist-free identity needs a fiberwise compact sub")
        _require(T.quot.is_df, "the twist-free identity needs a fiberwise discrete quotient")
    elif which == "I":
        _require(T.sub.is_c, "the twisted identity needs an outer-compact sub")
        _require(T.quot.is_d, "the twisted identity needs an outer-discrete quotient")
        if mu is None or nu is None:
            raise DomainError("the twisted identity consumes both measures")
    else:
        raise DomainError("which must be 'I' or 'II'")
    for bw in _sweep(T, cut_lo, cut_hi, max_points):
        primal = bw.dual()
        if which == "II":
            # enlarge to the smallest windows carrying both representatives
            sup = T.sub.inner_sup(primal.l, primal.i)
            primal_adj = BiWindow(
                primal.l, primal.i, primal.m, primal.n if sup is None else max(primal.n, sup)
            )
            dsup = Td.sub.inner_sup(bw.l, bw.i)
            bw_adj = BiWindow(bw.l, bw.i, bw.m, bw.n if dsup is None else max(bw.n, dsup))
            if q ** bw_dim(T.mid, primal_adj) > max_points:
                continue
            if q ** bw_dim(Td.mid, bw_adj) > max_points:
                continue
            report.cases += 1
            lhs = fourier2(char_fn(T, o, primal_adj))
            if corrupt == "transition":
                lhs = lhs * Fraction(q)
            rhs = char_fn(Td, -o, bw_adj)
            same = d2_equal(lhs, rhs)
        else:
            top = T.sub.outer_sup
            primal_adj = BiWindow(primal.l, max(primal.i, top), primal.m, primal.n)
            dtop = Td.sub.outer_sup
            bw_adj = BiWindow(bw.l, max(bw.i, dtop), bw.m, bw.n)
            if q ** bw_dim(T.mid, primal_adj) > max_points:
                continue
            if q ** bw_dim(Td.mid, bw_adj) > max_points:
                continue
            report.cases += 1
            delta = char_dist(T, mu, nu, primal_adj)
            if corrupt == "measure":
                delta = delta * Fraction(q)
            lhs = fourier2(delta)
            rhs = char_dist(Td, nu.on_dual(), mu.on_dual(), bw_adj)
            same = d2dist_equal(lhs, rhs)
        if not same:
            report.fail(
                f"poisson2_{which}_characteristic_transform",
                f"bi-window {bw}",
            )
    return report

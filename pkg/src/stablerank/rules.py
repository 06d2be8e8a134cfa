"""The rule catalog.

Each rule is a function ``(run, nid)`` that reads the state of node ``nid``
and its graph neighbours and tightens enclosures through ``run``.  Rules are
monotone: they only ever meet new bounds into the current state, so the
fixpoint does not depend on the order in which they fire.
"""

from __future__ import annotations

from . import algebras as al
from . import spaces as sp
from .core import INF, RankInterval, TriBool, ceil_div
from .dsl import format_space
from .homotopy import fd_inj, fd_inj_space, fd_surj, slots_sphere_tensor
from .nccw import csr_upper_nccw, lower_to_pullback

YES, NO = TriBool.YES, TriBool.NO

# slot degrees beyond this are left unknown
MAX_DEGREE = 512

ANCHORS = {
    "R1": "direct sums: gsr(A(+)B) = max{gsr(A), gsr(B)}, likewise csr and tsr",
    "R2": "order: gsr(A) <= csr(A) <= tsr(A) + 1",
    "R3": "matrix algebras: csr(M_n(A)) <= ceil((csr(A)-1)/n) + 1, likewise gsr",
    "R4": "split epimorphism C(X)(x)A -> A: csr(C(X)(x)A) >= csr(A), likewise gsr",
    "R5": "extensions 0->J->A->B->0: csr(A) <= max{csr(J), csr(B)}, gsr(A) <= max{gsr(J), csr(B)}",
    "R6": "inductive limits: csr(lim A_i) <= liminf csr(A_i), likewise gsr",
    "R7": "finiteness: gsr(A) = 1 implies A stably finite; A finite and gsr(A) <= 2 implies gsr(A) = 1",
    "R8": "K_1: csr(A) = 1 implies K_1(A) = 0, with the converse when tsr(A) = 1",
    "R9": "tsr(A) = 1 gives cancellation of projections, so gsr(A) = 1",
    "R10": "pullbacks (Brown-Pedersen): tsr(B (+)_D C) <= max{tsr(B), tsr(C)}",
    "R11": "pullback gsr estimate: gsr(A) <= max{csr(B), csr(C), inj_0(D)}, "
           "and <= max{gsr(B), gsr(C), inj_0(D)} when K_1(D) = 0",
    "R12": "pullback csr estimate: csr(A) <= max{csr(B), csr(C), inj_0(D), surj_1(D)}",
    "R13": "inj_0(C(X)(x)A) = inj_X(A)",
    "R14": "suspensions: gsr(C(SX)(x)A) = max{gsr(A), inj_X(A)}",
    "R15": "dim X <= n: csr(C(X)(x)A) <= max{csr(A), surj_k(A), inj_{k-1}(A) : 1 <= k <= n}",
    "R16": "weak-equivalence class: gsr(C(X)(x)A) = gsr(A); csr(C(X)(x)A) = csr(A) "
           "if csr(A) >= 2, else 1 or 2",
    "R17": "weak-equivalence class members: A(x)Z, irrational rotation algebras, A(x)O_n, "
           "tensors with simple infinite-dimensional AF algebras, Kirchberg algebras, "
           "corners of purely infinite simple algebras",
    "R18": "wedges: gsr(C(X v Y)) = max{gsr(C(X)), gsr(C(Y))}, likewise csr",
    "R19": "circle products: gsr(C(T x X)) = max{gsr(C(X)), gsr(C(SX))}",
    "R20": "homotopy domination: A dominates B gives csr(A) >= csr(B), gsr(A) >= gsr(B); "
           "equality for homotopy equivalent algebras",
    "R21": "Nistor: dim X <= n gives csr(C(X)) <= ceil(n/2) + 1",
    "R22": "dim X <= 4 gives gsr(C(X)) = 1",
    "R23": "closed forms: gsr(C(S^d)) = 1 (d<=4), ceil(d/2) (4|d), ceil(d/2)+1 (else); "
           "gsr(C(T^d)) = 1 (d<=4), ceil(d/2)+1 (d>4); csr(C(T^d)) = ceil(d/2) + 1",
    "R24": "base algebras: csr(F) = 1 for finite-dimensional F; irrational rotation gsr = 1, "
           "csr = 2; Kirchberg with IBN gsr = csr = 2; no IBN gives gsr = csr = inf; "
           "real rank zero gives inj_0 = 1",
    "R25": "quotients A -> B: csr(B) <= max{csr(A), tsr(A)}, gsr(B) <= max{gsr(A), tsr(A)}",
    "R26": "scalars: tsr(C) = gsr(C) = csr(C) = 1, K_1(C) = 0",
    "AXIOM": "user-supplied axiom",
}


def citation(rule_id: str, detail: str = "") -> str:
    text = f"{rule_id}: {ANCHORS[rule_id]}"
    return f"{text} [{detail}]" if detail else text


# graph construction


def inj_key(x: sp.SpaceExpr) -> str | None:
    """Slot name for inj_X; None when X is contractible to the base point."""
    n = sp.normalize_space(x)
    if isinstance(n, sp.Pt):
        return None
    if isinstance(n, sp.Sphere):
        return f"inj_{n.d}"
    return f"inj[{format_space(n)}]"


def _note_space(run, x: sp.SpaceExpr):
    run.max_degree = max(run.max_degree, min(sp.dim_upper(x) + 1, MAX_DEGREE))
    key = inj_key(x)
    if key is not None and not isinstance(sp.normalize_space(x), sp.Sphere):
        run.space_slots[key] = sp.normalize_space(x)


def _is_normal(x: sp.SpaceExpr) -> bool:
    return sp.normalize_space(x) == x


def tensor_with_circle(d: al.AlgebraExpr) -> al.AlgebraExpr:
    if isinstance(d, al.TensorCommutative):
        return al.TensorCommutative(sp.normalize_space(sp.Prod(sp.Torus(1), d.space)), d.a)
    return al.TensorCommutative(sp.Torus(1), d)


def _link(run, nid, name, target):
    run.links[nid].setdefault(name, []).append(target)
    run.connect(nid, target)


def _expand(run, nid):
    e = run.exprs[nid]
    for c in al.children(e):
        run.connect(nid, run.node(c))

    if isinstance(e, al.TensorCommutative):
        x, a = e.space, e.a
        xn = sp.normalize_space(x)
        _note_space(run, x)
        if isinstance(x, sp.Pt):
            _link(run, nid, "iso", run.node(a))
        elif xn != x:
            _link(run, nid, "homotopic", run.node(al.TensorCommutative(xn, a)))
        if isinstance(a, al.TensorCommutative):
            _link(run, nid, "iso", run.node(al.TensorCommutative(sp.Prod(x, a.space), a.a)))
        if xn == x:
            base = sp.suspension_base(x)
            if base is not None:
                _note_space(run, base)
            if isinstance(a, al.Scalars):
                if isinstance(x, sp.Wedge):
                    _link(run, nid, "wedge", run.node(al.TensorCommutative(x.left, a)))
                    _link(run, nid, "wedge", run.node(al.TensorCommutative(x.right, a)))
                rest = sp.circle_split(x)
                if rest is not None:
                    _link(run, nid, "circle", run.node(al.TensorCommutative(rest, a)))
                    _link(run, nid, "circle", run.node(
                        al.TensorCommutative(sp.normalize_space(sp.Susp(rest)), a)))
            for y in sp.dominated_spaces(x):
                if not isinstance(x, sp.Wedge) or not isinstance(a, al.Scalars):
                    _link(run, nid, "dominated", run.node(al.TensorCommutative(y, a)))

    elif isinstance(e, al.Pullback):
        _link(run, nid, "circle_d", run.node(tensor_with_circle(e.d)))

    elif isinstance(e, al.Nccw):
        _link(run, nid, "iso", run.node(lower_to_pullback(e.complex)))

    elif isinstance(e, al.RealRankZero):
        _link(run, nid, "iso", run.node(e.a))


def build_graph(run):
    while run.pending:
        _expand(run, run.pending.popleft())


# helpers


def _degrees(run):
    return range(0, run.max_degree + 1)


def _child(run, nid, i=0):
    return run.ids[al.children(run.exprs[nid])[i]]


def _link_targets(run, nid, name):
    return run.links[nid].get(name, [])


def _equate_slots(run, a, b, rule_id, detail):
    for q in sorted(set(run.slot_names(a)) | set(run.slot_names(b))):
        run.equate(a, q, b, q, rule_id, detail)


# R1 - R26


def r1_direct_sum(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.DirectSum):
        return
    a, b = _child(run, nid, 0), _child(run, nid, 1)
    for q in ("tsr", "gsr", "csr"):
        run.max_equation(nid, q, [(a, q), (b, q)], "R1")
    for q in sorted(set(run.slot_names(a)) | set(run.slot_names(b)) | set(run.slot_names(nid))):
        run.max_equation(nid, q, [(a, q), (b, q)], "R1", "GL_m(A(+)B) = GL_m(A) x GL_m(B)")
    for flag in ("k1_zero", "finite", "stably_finite", "real_rank_zero"):
        fa, fb = run.get(a, flag), run.get(b, flag)
        if fa is YES and fb is YES:
            run.set_flag(nid, flag, YES, "R1", [(a, flag), (b, flag)], "summands")
        elif NO in (fa, fb):
            src = a if fa is NO else b
            run.set_flag(nid, flag, NO, "R1", [(src, flag)], "summands")


def r2_order(run, nid):
    g, c, t = run.get(nid, "gsr"), run.get(nid, "csr"), run.get(nid, "tsr")
    run.cap(nid, "gsr", c.hi, "R2", [(nid, "csr")])
    run.cap(nid, "csr", t.hi + 1, "R2", [(nid, "tsr")])
    run.floor(nid, "csr", g.lo, "R2", [(nid, "gsr")])
    run.floor(nid, "tsr", c.lo - 1, "R2", [(nid, "csr")])


def r3_matrix(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.Matrix):
        return
    a = _child(run, nid)
    for q in ("csr", "gsr"):
        hi = run.get(a, q).hi
        if hi != INF:
            run.cap(nid, q, ceil_div(hi - 1, e.n) + 1, "R3", [(a, q)])


def r4_split_epi(run, nid):
    if not isinstance(run.exprs[nid], al.TensorCommutative):
        return
    a = _child(run, nid)
    for q in ("csr", "gsr"):
        run.floor(nid, q, run.get(a, q).lo, "R4", [(a, q)])


def r5_extension(run, nid):
    if not isinstance(run.exprs[nid], al.Extension):
        return
    j, b = _child(run, nid, 0), _child(run, nid, 1)
    run.cap(nid, "csr", max(run.get(j, "csr").hi, run.get(b, "csr").hi), "R5",
            [(j, "csr"), (b, "csr")])
    run.cap(nid, "gsr", max(run.get(j, "gsr").hi, run.get(b, "csr").hi), "R5",
            [(j, "gsr"), (b, "csr")])


def r6_inductive_limit(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.InductiveLimitCofinal):
        return
    items = [run.ids[i] for i in e.items]
    for q in ("csr", "gsr"):
        best = min(items, key=lambda i: run.get(i, q).hi)
        run.cap(nid, q, run.get(best, q).hi, "R6", [(best, q)])


def r7_finiteness(run, nid):
    e = run.exprs[nid]
    g = run.get(nid, "gsr")
    if g.hi == 1:
        run.set_flag(nid, "stably_finite", YES, "R7", [(nid, "gsr")])
    if run.get(nid, "finite") is YES and g.hi <= 2:
        run.cap(nid, "gsr", 1, "R7", [(nid, "finite"), (nid, "gsr")])
    sf = run.get(nid, "stably_finite")
    if sf is NO:
        run.floor(nid, "gsr", 2, "R7", [(nid, "stably_finite")])
    elif sf is YES:
        run.set_flag(nid, "finite", YES, "R7", [(nid, "stably_finite")], "stably finite is finite")
    if run.get(nid, "finite") is NO:
        run.set_flag(nid, "stably_finite", NO, "R7", [(nid, "finite")], "stably finite is finite")
    if isinstance(e, al.TensorCommutative):
        a = _child(run, nid)
        if run.get(a, "stably_finite") is YES:
            detail = "C(X)(x)A is stably finite when A is"
            run.set_flag(nid, "stably_finite", YES, "R7", [(a, "stably_finite")], detail)
    elif isinstance(e, al.Matrix):
        run.equate_flag(nid, _child(run, nid), "stably_finite", "R7", "M_k(M_n(A)) = M_kn(A)")


def r8_k1(run, nid):
    e = run.exprs[nid]
    c = run.get(nid, "csr")
    if c.hi == 1:
        run.set_flag(nid, "k1_zero", YES, "R8", [(nid, "csr")])
    k1 = run.get(nid, "k1_zero")
    if run.get(nid, "tsr").hi == 1 and k1 is YES:
        run.cap(nid, "csr", 1, "R8", [(nid, "tsr"), (nid, "k1_zero")])
    if k1 is NO:
        run.floor(nid, "csr", 2, "R8", [(nid, "k1_zero")])
    if isinstance(e, al.TensorCommutative) and sp.has_odd_cohomology_retract(e.space):
        a = _child(run, nid)
        if run.get(a, "stably_finite") is YES:
            run.set_flag(nid, "k1_zero", NO, "R8", [(a, "stably_finite")],
                         "K_1 contains K_0(A), and [1] != 0 for stably finite A")


def r9_tsr_one(run, nid):
    if run.get(nid, "tsr").hi == 1:
        run.cap(nid, "gsr", 1, "R9", [(nid, "tsr")])


def r10_pullback_tsr(run, nid):
    if not isinstance(run.exprs[nid], al.Pullback):
        return
    b, c = _child(run, nid, 0), _child(run, nid, 1)
    run.cap(nid, "tsr", max(run.get(b, "tsr").hi, run.get(c, "tsr").hi), "R10",
            [(b, "tsr"), (c, "tsr")])


def r11_pullback_gsr(run, nid):
    if not isinstance(run.exprs[nid], al.Pullback):
        return
    b, c, d = (_child(run, nid, i) for i in range(3))
    inj0 = run.get(d, "inj_0").hi
    run.cap(nid, "gsr", max(run.get(b, "csr").hi, run.get(c, "csr").hi, inj0), "R11",
            [(b, "csr"), (c, "csr"), (d, "inj_0")])
    if run.get(d, "k1_zero") is YES:
        run.cap(nid, "gsr", max(run.get(b, "gsr").hi, run.get(c, "gsr").hi, inj0), "R11",
                [(b, "gsr"), (c, "gsr"), (d, "inj_0"), (d, "k1_zero")], "K_1(D) = 0")
    for td in _link_targets(run, nid, "circle_d"):
        run.cap(d, "inj_0", run.get(td, "gsr").hi, "R11", [(td, "gsr")], "inj_0(D) <= gsr(TD)")


def r12_pullback_csr(run, nid):
    e = run.exprs[nid]
    run.cap(nid, "surj_0", run.get(nid, "csr").hi, "R12", [(nid, "csr")], "surj_0(D) <= csr(D)")
    if isinstance(e, al.Nccw):
        run.cap(nid, "csr", csr_upper_nccw(e.complex), "R12",
                detail="NCCW cells: csr <= max_k ceil(k/(2 d_k)) + 1")
    if not isinstance(e, al.Pullback):
        return
    b, c, d = (_child(run, nid, i) for i in range(3))
    run.cap(nid, "csr", max(run.get(b, "csr").hi, run.get(c, "csr").hi,
                            run.get(d, "inj_0").hi, run.get(d, "surj_1").hi), "R12",
            [(b, "csr"), (c, "csr"), (d, "inj_0"), (d, "surj_1")])
    for td in _link_targets(run, nid, "circle_d"):
        hi = run.get(td, "csr").hi
        detail = "max{inj_0(D), surj_1(D)} <= csr(TD)"
        run.cap(d, "inj_0", hi, "R12", [(td, "csr")], detail)
        run.cap(d, "surj_1", hi, "R12", [(td, "csr")], detail)


def r13_slot_transfer(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.TensorCommutative):
        return
    key = inj_key(e.space)
    if key is not None:
        run.equate(nid, "inj_0", _child(run, nid), key, "R13")


def r14_suspension(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.TensorCommutative) or not _is_normal(e.space):
        return
    base = sp.suspension_base(e.space)
    if base is None:
        return
    a = _child(run, nid)
    key = inj_key(base)
    if key is None:
        run.equate(nid, "gsr", a, "gsr", "R14", "inj_pt = 1")
    else:
        run.max_equation(nid, "gsr", [(a, "gsr"), (a, key)], "R14")


def r15_finite_dim_spectrum(run, nid):
    e = run.exprs[nid]
    if not isinstance(e, al.TensorCommutative):
        return
    a = _child(run, nid)
    n = sp.dim_upper(e.space)
    if n <= MAX_DEGREE:
        parts = [(a, "csr")]
        for k in range(1, n + 1):
            parts += [(a, f"surj_{k}"), (a, f"inj_{k - 1}")]
        run.cap(nid, "csr", max(run.get(m, q).hi for m, q in parts), "R15", parts)
    xn = sp.normalize_space(e.space)
    if isinstance(xn, sp.Sphere):
        m = xn.d + 1
        slots = {q: run.get(a, q) for q in ("surj_1", f"surj_{m}", f"inj_{m - 1}")}
        bound = slots_sphere_tensor(slots, m)
        inputs = [(a, q) for q in slots]
        detail = "sphere tensor: max{inj_0, surj_1} <= max{surj_1(A), surj_n(A), inj_{n-1}(A)}"
        run.cap(nid, "inj_0", bound, "R15", inputs, detail)
        run.cap(nid, "surj_1", bound, "R15", inputs, detail)


def r16_class_F(run, nid):
    e = run.exprs[nid]
    if run.get(nid, "class_F") is YES:
        detail = "GL_{m-1}(A) -> GL_m(A) weak equivalence for m >= 2"
        for k in _degrees(run):
            run.exact(nid, f"inj_{k}", 1, "R16", [(nid, "class_F")], detail)
            run.cap(nid, f"surj_{k}", 2, "R16", [(nid, "class_F")], detail)
        for key in sorted(run.space_slots):
            run.exact(nid, key, 1, "R16", [(nid, "class_F")], detail)
    if not isinstance(e, al.TensorCommutative):
        return
    a = _child(run, nid)
    if run.get(a, "class_F") is not YES:
        return
    run.equate(nid, "gsr", a, "gsr", "R16")
    run.cap(nid, "csr", max(2, run.get(a, "gsr").hi), "R16", [(a, "class_F"), (a, "gsr")])
    if run.get(a, "csr").lo >= 2:
        run.cap(nid, "csr", run.get(a, "csr").hi, "R16", [(a, "class_F"), (a, "csr")])


def r17_class_F_members(run, nid):
    e = run.exprs[nid]
    members = (al.JiangSuStable, al.IrrationalRotation, al.Cuntz, al.CuntzInfinity,
               al.KirchbergIBN, al.SimpleInfDimAF, al.PurelyInfiniteSimpleCorner)
    if isinstance(e, members) or al.absorbs_class_F(e):
        run.set_flag(nid, "class_F", YES, "R17")


def r18_wedge(run, nid):
    parts = _link_targets(run, nid, "wedge")
    if len(parts) == 2:
        for q in ("gsr", "csr"):
            run.max_equation(nid, q, [(parts[0], q), (parts[1], q)], "R18")


def r19_circle_product(run, nid):
    parts = _link_targets(run, nid, "circle")
    if len(parts) == 2:
        run.max_equation(nid, "gsr", [(parts[0], "gsr"), (parts[1], "gsr")], "R19")


def r20_homotopy(run, nid):
    for other in _link_targets(run, nid, "iso"):
        detail = "isomorphic algebras"
        for q in ("tsr", "gsr", "csr"):
            run.equate(nid, q, other, q, "R20", detail)
        _equate_slots(run, nid, other, "R20", detail)
        for flag in ("k1_zero", "finite", "stably_finite", "ibn", "class_F", "real_rank_zero"):
            run.equate_flag(nid, other, flag, "R20", detail)
    for other in _link_targets(run, nid, "homotopic"):
        detail = "homotopy equivalent spaces"
        for q in ("gsr", "csr"):
            run.equate(nid, q, other, q, "R20", detail)
        _equate_slots(run, nid, other, "R20", detail)
        run.equate_flag(nid, other, "k1_zero", "R20", detail)
    for other in _link_targets(run, nid, "dominated"):
        for q in ("gsr", "csr"):
            run.floor(nid, q, run.get(other, q).lo, "R20", [(other, q)], "domination")


def _commutative(run, nid):
    e = run.exprs[nid]
    return isinstance(e, al.TensorCommutative) and isinstance(e.a, al.Scalars)


def r21_nistor(run, nid):
    if _commutative(run, nid):
        n = sp.dim_upper(run.exprs[nid].space)
        run.cap(nid, "csr", sp.nistor_bound(n), "R21", detail=f"dim <= {n}")


def r22_low_dimension(run, nid):
    if _commutative(run, nid):
        n = sp.dim_upper(run.exprs[nid].space)
        if n <= 4:
            run.cap(nid, "gsr", 1, "R22", detail=f"dim <= {n}")


def r23_closed_forms(run, nid):
    e = run.exprs[nid]
    if isinstance(e, al.Scalars):
        detail = "inj_X(C) = gsr(C(SX))"
        for k in _degrees(run):
            run.exact(nid, f"inj_{k}", sp.gsr_commutative_sphere(k + 1), "R23", detail=detail)
        for key, x in sorted(run.space_slots.items()):
            run.tighten(nid, key, sp.inj_space_scalars(x), "R23", detail=detail)
        return
    if not _commutative(run, nid) or not _is_normal(e.space):
        return
    x = e.space
    if isinstance(x, sp.Sphere):
        run.exact(nid, "gsr", sp.gsr_commutative_sphere(x.d), "R23", detail=f"sphere d = {x.d}")
    elif isinstance(x, sp.Torus):
        run.exact(nid, "gsr", sp.gsr_commutative_torus(x.d), "R23", detail=f"torus d = {x.d}")
        run.exact(nid, "csr", sp.csr_commutative_torus(x.d), "R23", detail=f"torus d = {x.d}")


def _fd_facts(run, nid, blocks, rule_id):
    for q in ("tsr", "gsr", "csr"):
        run.exact(nid, q, 1, rule_id, detail="finite-dimensional")
    for flag in ("k1_zero", "finite", "stably_finite", "ibn", "real_rank_zero"):
        run.set_flag(nid, flag, YES, rule_id, detail="finite-dimensional")
    run.set_flag(nid, "class_F", NO, rule_id, detail="finite-dimensional")
    detail = f"Bott periodicity, min block {min(blocks)}"
    for k in _degrees(run):
        run.tighten(nid, f"inj_{k}", fd_inj(blocks, k), rule_id, detail=detail)
        run.tighten(nid, f"surj_{k}", fd_surj(blocks, k), rule_id, detail=detail)
    for key, x in sorted(run.space_slots.items()):
        run.tighten(nid, key, fd_inj_space(blocks, sp.dim_upper(x)), rule_id, detail=detail)


def r24_base_atoms(run, nid):
    e = run.exprs[nid]
    blocks = al.block_sizes(e)
    if blocks is not None and not isinstance(e, al.Scalars):
        _fd_facts(run, nid, blocks, "R24")
    elif isinstance(e, al.IrrationalRotation):
        d = "irrational rotation algebra"
        run.exact(nid, "tsr", 1, "R24", detail=d)
        run.exact(nid, "gsr", 1, "R24", detail=d)
        run.exact(nid, "csr", 2, "R24", detail=d)
        run.set_flag(nid, "k1_zero", NO, "R24", detail=d)
        run.set_flag(nid, "stably_finite", YES, "R24", detail=d)
        run.set_flag(nid, "ibn", YES, "R24", detail=d)
    elif isinstance(e, (al.KirchbergIBN, al.CuntzInfinity)):
        d = "Kirchberg algebra with IBN"
        run.exact(nid, "gsr", 2, "R24", detail=d)
        run.exact(nid, "csr", 2, "R24", detail=d)
        run.set_flag(nid, "ibn", YES, "R24", detail=d)
        run.set_flag(nid, "finite", NO, "R24", detail="purely infinite")
    elif isinstance(e, al.Cuntz):
        run.set_flag(nid, "ibn", NO, "R24", detail=f"[1] has finite order in K_0(O_{e.n})")
        run.set_flag(nid, "finite", NO, "R24", detail="purely infinite")
    elif isinstance(e, al.PurelyInfiniteSimpleCorner):
        run.set_flag(nid, "finite", NO, "R24", detail="purely infinite")
    elif isinstance(e, al.SimpleInfDimAF):
        d = "simple infinite-dimensional AF algebra"
        run.exact(nid, "tsr", 1, "R24", detail=d)
        run.exact(nid, "csr", 1, "R24", detail=d)
        run.set_flag(nid, "stably_finite", YES, "R24", detail=d)
        run.set_flag(nid, "real_rank_zero", YES, "R24", detail=d)
        run.set_flag(nid, "ibn", YES, "R24", detail=d)
    elif isinstance(e, al.RealRankZero):
        run.set_flag(nid, "real_rank_zero", YES, "R24", detail="asserted")
    if run.get(nid, "real_rank_zero") is YES:
        run.exact(nid, "inj_0", 1, "R24", [(nid, "real_rank_zero")], "real rank zero")
    if run.get(nid, "ibn") is NO:
        for q in ("gsr", "csr"):
            run.exact(nid, q, INF, "R24", [(nid, "ibn")], "no IBN")


def r25_quotient(run, nid):
    if not isinstance(run.exprs[nid], al.Extension):
        return
    b = _child(run, nid, 1)
    t = run.get(nid, "tsr").hi
    run.cap(b, "csr", max(run.get(nid, "csr").hi, t), "R25", [(nid, "csr"), (nid, "tsr")])
    run.cap(b, "gsr", max(run.get(nid, "gsr").hi, t), "R25", [(nid, "gsr"), (nid, "tsr")])


def r26_scalars(run, nid):
    if isinstance(run.exprs[nid], al.Scalars):
        _fd_facts(run, nid, (1,), "R26")


CATALOG = (
    ("R26", r26_scalars),
    ("R24", r24_base_atoms),
    ("R23", r23_closed_forms),
    ("R17", r17_class_F_members),
    ("R1", r1_direct_sum),
    ("R2", r2_order),
    ("R3", r3_matrix),
    ("R4", r4_split_epi),
    ("R5", r5_extension),
    ("R6", r6_inductive_limit),
    ("R7", r7_finiteness),
    ("R8", r8_k1),
    ("R9", r9_tsr_one),
    ("R10", r10_pullback_tsr),
    ("R11", r11_pullback_gsr),
    ("R12", r12_pullback_csr),
    ("R13", r13_slot_transfer),
    ("R14", r14_suspension),
    ("R15", r15_finite_dim_spectrum),
    ("R16", r16_class_F),
    ("R18", r18_wedge),
    ("R19", r19_circle_product),
    ("R20", r20_homotopy),
    ("R21", r21_nistor),
    ("R22", r22_low_dimension),
    ("R25", r25_quotient),
)

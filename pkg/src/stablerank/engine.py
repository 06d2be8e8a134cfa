"""Worklist fixpoint over rank enclosures with derivation traces."""

from __future__ import annotations

import os
import random
from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import algebras as al
from .core import (INF, InconsistencyError, RankInterval, TriBool, UNKNOWN_INTERVAL,
                   interval_meet)
from .dsl import format_expr

RANKS = ("tsr", "gsr", "csr")
FLAGS = ("k1_zero", "finite", "stably_finite", "ibn", "class_F", "real_rank_zero")

ENGINE_VERSION = "1.0.0"
DEFAULT_MAX_NODES = 10000


class SizeLimitError(Exception):
    pass


def max_nodes_from_env() -> int:
    raw = os.environ.get("STABLERANK_MAX_NODES")
    if not raw:
        return DEFAULT_MAX_NODES
    try:
        value = int(raw)
    except ValueError:
        raise SizeLimitError(f"STABLERANK_MAX_NODES is not an integer: {raw!r}") from None
    if value < 1:
        raise SizeLimitError("STABLERANK_MAX_NODES must be positive")
    return value


@dataclass(frozen=True)
class Step:
    rule_id: str
    citation: str
    node: str
    quantity: str
    old: str
    new: str
    inputs: tuple[tuple[str, str], ...] = ()

    def to_json(self) -> dict:
        return {
            "rule": self.rule_id,
            "citation": self.citation,
            "node": self.node,
            "quantity": self.quantity,
            "old": self.old,
            "new": self.new,
            "inputs": [list(i) for i in self.inputs],
        }


@dataclass
class Derivation:
    steps: list[Step] = field(default_factory=list)

    def for_quantity(self, node: str, quantity: str) -> list[Step]:
        return [s for s in self.steps if s.node == node and s.quantity == quantity]


@dataclass(frozen=True)
class RankState:
    tsr: RankInterval = UNKNOWN_INTERVAL
    gsr: RankInterval = UNKNOWN_INTERVAL
    csr: RankInterval = UNKNOWN_INTERVAL
    slots: Mapping[str, RankInterval] = field(default_factory=dict)
    k1_zero: TriBool = TriBool.UNKNOWN
    finite: TriBool = TriBool.UNKNOWN
    stably_finite: TriBool = TriBool.UNKNOWN
    ibn: TriBool = TriBool.UNKNOWN
    class_F: TriBool = TriBool.UNKNOWN
    real_rank_zero: TriBool = TriBool.UNKNOWN

    def flags(self) -> dict[str, str]:
        return {f: getattr(self, f).value for f in FLAGS}


@dataclass(frozen=True)
class Axiom:
    """User assertion: ``quantity`` of the subexpression at ``path`` lies in
    ``interval`` (or, for a flag, equals ``flag_value``)."""

    path: str
    quantity: str
    interval: RankInterval | None = None
    flag_value: TriBool | None = None


@dataclass
class InferenceResult:
    root: al.AlgebraExpr
    states: dict[al.AlgebraExpr, RankState]
    derivation: Derivation
    node_text: dict[al.AlgebraExpr, str]

    @property
    def root_state(self) -> RankState:
        return self.states[self.root]

    def state_of(self, expr: al.AlgebraExpr) -> RankState:
        return self.states[expr]


def _is_slot(q: str) -> bool:
    return q.startswith("inj") or q.startswith("surj")


class Run:
    """Mutable state of a single inference run.  Rules call ``get``,
    ``tighten`` and ``set_flag``; the run tracks what changed."""

    def __init__(self, max_nodes: int | None = None):
        self.max_nodes = max_nodes if max_nodes is not None else max_nodes_from_env()
        self.exprs: list[al.AlgebraExpr] = []
        self.ids: dict[al.AlgebraExpr, int] = {}
        self.text: list[str] = []
        self.values: list[dict] = []
        self.neighbors: list[set[int]] = []
        self.links: list[dict] = []
        self.last_step: dict[tuple[int, str], Step] = {}
        self.derivation = Derivation()
        self.dirty: set[int] = set()
        self.pending: deque[int] = deque()
        self.max_degree = 1
        self.space_slots: dict[str, object] = {}

    # graph construction

    def node(self, expr: al.AlgebraExpr) -> int:
        nid = self.ids.get(expr)
        if nid is not None:
            return nid
        if len(self.exprs) >= self.max_nodes:
            raise SizeLimitError(f"more than {self.max_nodes} nodes")
        nid = len(self.exprs)
        self.ids[expr] = nid
        self.exprs.append(expr)
        self.text.append(format_expr(expr))
        self.values.append({})
        self.neighbors.append(set())
        self.links.append({})
        self.pending.append(nid)
        return nid

    def connect(self, a: int, b: int):
        if a != b:
            self.neighbors[a].add(b)
            self.neighbors[b].add(a)

    # state access

    def get(self, nid: int, q: str):
        if q in FLAGS:
            return self.values[nid].get(q, TriBool.UNKNOWN)
        return self.values[nid].get(q, UNKNOWN_INTERVAL)

    def slot_names(self, nid: int) -> list[str]:
        return sorted(q for q in self.values[nid] if _is_slot(q))

    def _record(self, nid, q, old, new, rule_id, detail, inputs):
        from .rules import citation

        step = Step(rule_id, citation(rule_id, detail), self.text[nid], q, str(old), str(new),
                    tuple((self.text[i], iq) for i, iq in inputs))
        self.derivation.steps.append(step)
        self.last_step[(nid, q)] = step
        self.dirty.add(nid)

    def tighten(self, nid: int, q: str, interval: RankInterval, rule_id: str,
                inputs: Sequence[tuple[int, str]] = (), detail: str = "") -> bool:
        old = self.get(nid, q)
        try:
            new = interval_meet(old, interval)
        except InconsistencyError as exc:
            prev = self.last_step.get((nid, q))
            where = f"{q} of {self.text[nid]}"
            prior = f"{prev.rule_id} ({prev.citation})" if prev else "initial state"
            raise InconsistencyError(
                f"inconsistent bounds on {where}: current {old} from {prior}, "
                f"new {interval} from {rule_id}",
                first=prev, second=rule_id,
            ) from exc
        if new == old:
            return False
        self.values[nid][q] = new
        self._record(nid, q, old, new, rule_id, detail, inputs)
        return True

    def cap(self, nid, q, hi, rule_id, inputs=(), detail=""):
        if hi == INF:
            return False
        return self.tighten(nid, q, RankInterval(1, hi), rule_id, inputs, detail)

    def floor(self, nid, q, lo, rule_id, inputs=(), detail=""):
        if lo <= 1:
            return False
        return self.tighten(nid, q, RankInterval(lo, INF), rule_id, inputs, detail)

    def exact(self, nid, q, value, rule_id, inputs=(), detail=""):
        return self.tighten(nid, q, RankInterval.exact(value), rule_id, inputs, detail)

    def set_flag(self, nid: int, flag: str, value: TriBool, rule_id: str,
                 inputs: Sequence[tuple[int, str]] = (), detail: str = "") -> bool:
        old = self.get(nid, flag)
        try:
            new = old.refine(value)
        except InconsistencyError as exc:
            prev = self.last_step.get((nid, flag))
            prior = f"{prev.rule_id}" if prev else "initial state"
            raise InconsistencyError(
                f"inconsistent flag {flag} of {self.text[nid]}: {old.value} from {prior}, "
                f"{value.value} from {rule_id}", first=prev, second=rule_id,
            ) from exc
        if new is old:
            return False
        self.values[nid][flag] = new
        self._record(nid, flag, old.value, new.value, rule_id, detail, inputs)
        return True

    # combinators shared by several rules

    def max_equation(self, target: int, tq: str, parts: Sequence[tuple[int, str]], rule_id: str,
                     detail: str = ""):
        """Impose target = max(parts) in both directions."""
        vals = [self.get(n, q) for n, q in parts]
        self.tighten(target, tq, RankInterval(max(v.lo for v in vals), max(v.hi for v in vals)),
                     rule_id, parts, detail)
        t = self.get(target, tq)
        for i, (n, q) in enumerate(parts):
            self.cap(n, q, t.hi, rule_id, [(target, tq)], detail)
            others = [self.get(m, r).hi for j, (m, r) in enumerate(parts) if j != i]
            if all(o < t.lo for o in others):
                self.floor(n, q, t.lo, rule_id, [(target, tq)] + [p for j, p in enumerate(parts)
                                                                  if j != i], detail)

    def equate(self, a: int, qa: str, b: int, qb: str, rule_id: str, detail: str = ""):
        self.tighten(a, qa, self.get(b, qb), rule_id, [(b, qb)], detail)
        self.tighten(b, qb, self.get(a, qa), rule_id, [(a, qa)], detail)

    def equate_flag(self, a: int, b: int, flag: str, rule_id: str, detail: str = ""):
        fa, fb = self.get(a, flag), self.get(b, flag)
        if fb.known:
            self.set_flag(a, flag, fb, rule_id, [(b, flag)], detail)
        if fa.known:
            self.set_flag(b, flag, fa, rule_id, [(a, flag)], detail)


def _apply_axioms(run: Run, root: al.AlgebraExpr, axioms: Iterable[Axiom]):
    for ax in axioms:
        try:
            target = al.subexpr_at(root, ax.path)
        except (KeyError, ValueError) as exc:
            raise ValueError(f"axiom path {ax.path!r}: {exc}") from None
        nid = run.node(target)
        if ax.quantity in FLAGS:
            if ax.flag_value is None:
                raise ValueError(f"axiom on flag {ax.quantity} needs a value")
            run.set_flag(nid, ax.quantity, ax.flag_value, "AXIOM")
        else:
            if ax.quantity not in RANKS and not _is_slot(ax.quantity):
                raise ValueError(f"unknown quantity {ax.quantity!r}")
            if ax.interval is None:
                raise ValueError(f"axiom on {ax.quantity} needs an interval")
            run.tighten(nid, ax.quantity, ax.interval, "AXIOM")


def infer(expr: al.AlgebraExpr, axioms: Iterable[Axiom] = (), *, seed: int | None = None,
          max_nodes: int | None = None) -> InferenceResult:
    """Assign sound rank enclosures to every node reachable from ``expr``.

    ``seed`` permutes the rule order and the initial worklist; the resulting
    enclosures do not depend on it.
    """
    from . import rules

    limit = max_nodes if max_nodes is not None else max_nodes_from_env()
    if al.expr_size(expr) > limit:
        raise SizeLimitError(f"expression size {al.expr_size(expr)} exceeds {limit}")
    run = Run(limit)
    run.node(expr)
    rules.build_graph(run)

    catalog = list(rules.CATALOG)
    order = list(range(len(run.exprs)))
    order.sort(key=lambda i: (al.expr_size(run.exprs[i]), i))
    if seed is not None:
        rng = random.Random(seed)
        rng.shuffle(catalog)
        rng.shuffle(order)

    _apply_axioms(run, expr, axioms)
    # axioms may name subexpressions that were not materialized yet
    rules.build_graph(run)

    seen = set(order)
    queue = deque(order + [i for i in range(len(run.exprs)) if i not in seen])
    queued = set(queue)
    while queue:
        nid = queue.popleft()
        queued.discard(nid)
        run.dirty.clear()
        for _, fn in catalog:
            fn(run, nid)
        for changed in sorted(run.dirty):
            for m in [changed, *sorted(run.neighbors[changed])]:
                if m not in queued:
                    queued.add(m)
                    queue.append(m)

    states = {}
    for nid, e in enumerate(run.exprs):
        vals = run.values[nid]
        states[e] = RankState(
            tsr=run.get(nid, "tsr"), gsr=run.get(nid, "gsr"), csr=run.get(nid, "csr"),
            slots=MappingProxyType({q: vals[q] for q in run.slot_names(nid)}),
            **{f: run.get(nid, f) for f in FLAGS},
        )
    return InferenceResult(expr, states, run.derivation,
                           {e: run.text[i] for i, e in enumerate(run.exprs)})


def explain(derivation: Derivation, node: str | al.AlgebraExpr, quantity: str) -> list[Step]:
    """Steps whose outputs feed the final bound on ``quantity`` of ``node``,
    in the order they fired."""
    if not isinstance(node, str):
        node = format_expr(node)
    steps = derivation.steps
    if not derivation.for_quantity(node, quantity):
        raise KeyError(f"no derivation steps for {quantity} of {node}")

    chosen: set[int] = set()
    stack = [(node, quantity, len(steps))]
    while stack:
        n, q, before = stack.pop()
        need = {"lo", "hi"}
        for i in range(before - 1, -1, -1):
            s = steps[i]
            if s.node != n or s.quantity != q:
                continue
            moved = {end for end in ("lo", "hi") if _moves(s, end)} & need
            if not moved:
                continue
            need -= moved
            if i not in chosen:
                chosen.add(i)
                stack.extend((inode, iq, i) for inode, iq in s.inputs)
            if not need:
                break
    return [steps[i] for i in sorted(chosen)]


def _parse_interval_text(text: str):
    text = text.strip()
    if not text.startswith("["):
        return (text, text)
    lo, hi = text[1:-1].split(",")
    return (lo.strip(), hi.strip())


def _moves(step: Step, end: str) -> bool:
    if step.old in ("yes", "no", "unknown"):
        return True
    old, new = _parse_interval_text(step.old), _parse_interval_text(step.new)
    return old[0] != new[0] if end == "lo" else old[1] != new[1]


def check_consistency(states: Mapping[object, RankState]) -> list[str]:
    """Violations of gsr <= csr <= tsr + 1 among upper bounds."""
    out = []
    for key, st in states.items():
        for name in RANKS:
            iv = getattr(st, name)
            if not isinstance(iv, RankInterval) or iv.lo > iv.hi or iv.lo < 1:
                out.append(f"{key}: invalid {name} interval {iv}")
        if st.gsr.hi > st.csr.hi:
            out.append(f"{key}: gsr upper bound {st.gsr.hi} exceeds csr upper bound {st.csr.hi}")
        if st.csr.hi > st.tsr.hi + 1:
            out.append(f"{key}: csr upper bound {st.csr.hi} exceeds tsr upper bound + 1")
        for q, iv in st.slots.items():
            if iv.lo > iv.hi:
                out.append(f"{key}: invalid slot {q} interval {iv}")
    return out

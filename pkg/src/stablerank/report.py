"""Reports for a single query: stable JSON shape and a plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import RankInterval, TriBool
from .engine import ENGINE_VERSION, FLAGS, RANKS, Axiom, InferenceResult, Step, infer
from .dsl import parse


@dataclass(frozen=True)
class Report:
    query: str
    tsr: RankInterval
    gsr: RankInterval
    csr: RankInterval
    flags: dict = field(default_factory=dict)
    trace: tuple[Step, ...] = ()
    engine_version: str = ENGINE_VERSION

    def interval(self, name: str) -> RankInterval:
        return getattr(self, name)

    def to_json(self) -> dict:
        out = {"query": self.query}
        for name in RANKS:
            out[name] = self.interval(name).to_json()
        out["flags"] = dict(self.flags)
        out["trace"] = [s.to_json() for s in self.trace]
        out["engine_version"] = self.engine_version
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"query: {self.query}"]
        lines += [f"{name} = {self.interval(name)}" for name in RANKS]
        known = [f"{k}={v}" for k, v in self.flags.items() if v != TriBool.UNKNOWN.value]
        lines.append("flags: " + (", ".join(known) if known else "none known"))
        if self.trace:
            lines.append("trace:")
            for s in self.trace:
                lines.append(f"  {s.node} :: {s.quantity} {s.old} -> {s.new}  by {s.citation}")
        return "\n".join(lines)


def build_report(query: str, result: InferenceResult, *, trace: bool = False) -> Report:
    st = result.root_state
    return Report(
        query=query,
        tsr=st.tsr,
        gsr=st.gsr,
        csr=st.csr,
        flags={f: getattr(st, f).value for f in FLAGS},
        trace=tuple(result.derivation.steps) if trace else (),
    )


def rank_query(text: str, axioms: list[Axiom] | tuple = (), *, trace: bool = False,
               seed: int | None = None) -> Report:
    """Parse, infer and report in one call."""
    expr = parse(text)
    return build_report(text, infer(expr, axioms, seed=seed), trace=trace)


def load_axioms(data) -> list[Axiom]:
    """Axioms from decoded JSON: a list of objects with ``node`` (dotted child
    path, "" for the root) plus either ``quantity``/``lo``/``hi`` or
    ``flag``/``value``."""
    if not isinstance(data, list):
        raise ValueError("axioms file must hold a JSON list")
    out = []
    for i, item in enumerate(data):
        if not isinstance(item, dict):
            raise ValueError(f"axiom {i}: expected an object")
        path = str(item.get("node", ""))
        try:
            if "flag" in item:
                if item["flag"] not in FLAGS:
                    raise ValueError(f"unknown flag {item['flag']!r}")
                out.append(Axiom(path, item["flag"], flag_value=TriBool(item["value"])))
            else:
                interval = RankInterval.from_json({"lo": item.get("lo", 1),
                                                   "hi": item.get("hi", "inf")})
                out.append(Axiom(path, item["quantity"], interval))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"axiom {i}: {exc}") from None
    return out

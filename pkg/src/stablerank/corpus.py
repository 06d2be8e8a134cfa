"""Seeded expression corpus and the self-check suite behind ``stablerank check``."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from . import algebras as al
from . import spaces as sp
from .core import InconsistencyError, RankInterval
from .dsl import ParseError, format_expr, parse
from .engine import RANKS, Axiom, check_consistency, infer
from .nccw import csr_upper_nccw
from .report import build_report

# literal values of the closed-form tables, used as an independent oracle
SPHERE_GSR = {1: 1, 2: 1, 3: 1, 4: 1, 5: 4, 6: 4, 7: 5, 8: 4, 9: 6, 10: 6, 11: 7, 12: 6}
TORUS_GSR = {1: 1, 2: 1, 3: 1, 4: 1, 5: 4, 6: 4, 7: 5, 8: 5, 9: 6, 10: 6}
TORUS_CSR = {1: 2, 2: 2, 3: 3, 4: 3, 5: 4, 6: 4, 7: 5, 8: 5, 9: 6, 10: 6}


@dataclass(frozen=True)
class CorpusItem:
    text: str
    expr: al.AlgebraExpr
    axioms: tuple[Axiom, ...] = ()


def random_space(rng: random.Random, depth: int = 2) -> sp.SpaceExpr:
    leaves = [
        lambda: sp.Pt(),
        lambda: sp.Sphere(rng.randint(0, 10)),
        lambda: sp.Torus(rng.randint(1, 9)),
        lambda: sp.Disk(rng.randint(1, 6)),
        lambda: sp.Cube(rng.randint(1, 4)),
        lambda: sp.CwSkeleton(rng.randint(0, 8)),
    ]
    if depth <= 0 or rng.random() < 0.6:
        return rng.choice(leaves)()
    kind = rng.choice(("prod", "wedge", "susp"))
    if kind == "susp":
        return sp.Susp(random_space(rng, depth - 1))
    left, right = random_space(rng, depth - 1), random_space(rng, depth - 1)
    return sp.Prod(left, right) if kind == "prod" else sp.Wedge(left, right)


def _blocks(rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))


def _real_rank_zero_candidate(rng: random.Random) -> al.AlgebraExpr:
    # only algebras that really have real rank zero
    return rng.choice([
        lambda: al.FiniteDim(_blocks(rng)),
        lambda: al.SimpleInfDimAF(),
        lambda: al.CuntzInfinity(),
        lambda: al.Cuntz(rng.randint(2, 5)),
        lambda: al.Matrix(rng.randint(2, 3), al.SimpleInfDimAF()),
    ])()


def random_algebra(rng: random.Random, depth: int = 3) -> al.AlgebraExpr:
    leaves = [
        lambda: al.Scalars(),
        lambda: al.FiniteDim(_blocks(rng)),
        lambda: al.IrrationalRotation(),
        lambda: al.Cuntz(rng.randint(2, 5)),
        lambda: al.CuntzInfinity(),
        lambda: al.KirchbergIBN(),
        lambda: al.SimpleInfDimAF(),
        lambda: al.PurelyInfiniteSimpleCorner(),
        lambda: al.Nccw(al.NccwComplex(_blocks(rng), tuple(
            (k, _blocks(rng)) for k in sorted(rng.sample(range(1, 7), rng.randint(0, 3)))))),
        lambda: al.RealRankZero(_real_rank_zero_candidate(rng)),
    ]
    if depth <= 0 or rng.random() < 0.3:
        return rng.choice(leaves)()
    sub = lambda: random_algebra(rng, depth - 1)  # noqa: E731
    kind = rng.choice(("matrix", "sum", "tensor", "tensor", "pullback", "ext", "limit", "zstable"))
    if kind == "matrix":
        return al.Matrix(rng.randint(1, 4), sub())
    if kind == "sum":
        return al.DirectSum(sub(), sub())
    if kind == "tensor":
        inner = al.Scalars() if rng.random() < 0.5 else sub()
        if rng.random() < 0.3:
            return al.TensorCommutative(rng.choice((sp.Sphere, sp.Torus))(rng.randint(1, 10)), inner)
        return al.TensorCommutative(random_space(rng), inner)
    if kind == "pullback":
        return al.Pullback(sub(), sub(), sub())
    if kind == "ext":
        return al.Extension(sub(), sub())
    if kind == "limit":
        return al.InductiveLimitCofinal(tuple(sub() for _ in range(rng.randint(1, 3))))
    return al.JiangSuStable(sub())


def _paths(e: al.AlgebraExpr, prefix: str = ""):
    yield prefix
    for i, c in enumerate(al.children(e)):
        yield from _paths(c, f"{prefix}.{i}" if prefix else str(i))


def _tsr_of_commutative(e: al.AlgebraExpr) -> int | None:
    """tsr(C(X)) = floor(dim X / 2) + 1 for a sphere or torus X, a fact the
    rules never derive on their own."""
    if isinstance(e, al.TensorCommutative) and isinstance(e.a, al.Scalars):
        if isinstance(e.space, (sp.Sphere, sp.Torus)) and e.space.d >= 1:
            return e.space.d // 2 + 1
    return None


def _true_axioms(rng: random.Random, expr: al.AlgebraExpr) -> tuple[Axiom, ...]:
    """Axioms that hold by construction, placed on a proper subexpression so
    that every bound in the root report still comes from a rule."""
    paths = [p for p in _paths(expr) if p]
    if not paths or rng.random() < 0.5:
        return ()
    path = rng.choice(paths)
    sub = al.subexpr_at(expr, path)
    tsr = _tsr_of_commutative(sub)
    if tsr is not None:
        return (Axiom(path, "tsr", RankInterval.exact(tsr)),)
    state = infer(sub).root_state
    return tuple(Axiom(path, q, getattr(state, q)) for q in RANKS
                 if getattr(state, q).is_exact)


def generate(count: int = 1000, seed: int = 20240917) -> list[CorpusItem]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        expr = random_algebra(rng)
        out.append(CorpusItem(format_expr(expr), expr, _true_axioms(rng, expr)))
    return out


# malformed input fuzzing


def mutate(rng: random.Random, text: str) -> str:
    op = rng.randrange(5)
    if op == 0 or not text:
        return text[: rng.randrange(len(text) + 1)]
    i = rng.randrange(len(text))
    if op == 1:
        return text[:i] + text[i + 1:]
    if op == 2:
        return text[:i] + rng.choice("()(+),;:*xyz0123456789 ") + text[i:]
    if op == 3:
        return text[:i] + "99999999" + text[i:]
    return "".join(rng.choice(string.printable) for _ in range(rng.randint(0, 20)))


def fuzz_parse(texts: list[str], seed: int = 7, rounds: int = 3) -> list[str]:
    """Parse mutated inputs; returns descriptions of crashes or unlocated errors."""
    rng = random.Random(seed)
    failures = []
    cases = [mutate(rng, t) for t in texts for _ in range(rounds)]
    cases += ["", "(", "(+)", "M(2,", "F()", "F(0)", "cuntz(1)", "Cx(S(-1))", "(" * 500 + "C"]
    for case in cases:
        try:
            parse(case)
        except ParseError as exc:
            if not 0 <= exc.offset <= len(case):
                failures.append(f"offset {exc.offset} outside input {case!r}")
        except Exception as exc:  # a crash is exactly what this looks for
            failures.append(f"crash on {case!r}: {type(exc).__name__}: {exc}")
    return failures


# the check suite


def closed_form_cases() -> list[tuple[str, str, RankInterval]]:
    """(expression, quantity, expected enclosure) from closed-form values."""
    cases = [("C", q, RankInterval.exact(1)) for q in RANKS]
    cases += [("F(2, 3)", q, RankInterval.exact(1)) for q in RANKS]
    cases += [(f"Cx(S({d}))", "gsr", RankInterval.exact(v)) for d, v in SPHERE_GSR.items()]
    cases += [(f"Cx(T({d}))", "gsr", RankInterval.exact(v)) for d, v in TORUS_GSR.items()]
    cases += [(f"Cx(T({d}))", "csr", RankInterval.exact(v)) for d, v in TORUS_CSR.items()]
    cases += [("Cx(S(5))", "csr", RankInterval.exact(4)),
              ("M(3, Cx(T(6)))", "csr", RankInterval(1, 2)),
              ("Cx(cw(6)) * Oinf", "gsr", RankInterval.exact(2)),
              ("Cx(cw(6)) * Oinf", "csr", RankInterval.exact(2)),
              ("Cx(T(1)) * AF", "csr", RankInterval.exact(2))]
    for n in range(0, 9):
        cases += [(f"Cx(cw({n})) * kirchberg_ibn", "gsr", RankInterval.exact(2)),
                  (f"Cx(cw({n})) * kirchberg_ibn", "csr", RankInterval.exact(2)),
                  (f"Cx(cw({n})) * rot", "gsr", RankInterval.exact(1)),
                  (f"Cx(cw({n})) * rot", "csr", RankInterval.exact(2))]
    return cases


def report_violations(item: CorpusItem, report) -> list[str]:
    out = []
    iv = {q: report.interval(q) for q in RANKS}
    for q, x in iv.items():
        if not x.lo <= x.hi:
            out.append(f"{item.text}: {q} has lo > hi")
    if iv["gsr"].hi > iv["csr"].hi or iv["csr"].hi > iv["tsr"].hi + 1:
        out.append(f"{item.text}: order violated {iv['gsr']} / {iv['csr']} / {iv['tsr']}")
    for ax in item.axioms:
        if ax.path == "" and ax.interval is not None and ax.interval.is_exact:
            if not iv[ax.quantity].contains(ax.interval.lo):
                out.append(f"{item.text}: axiom {ax.quantity} = {ax.interval} not contained")
    return out


def run_check(corpus_size: int = 200, injected: dict | None = None) -> list[str]:
    """Run the self-check; returns failure descriptions (empty means pass).

    ``injected`` maps expression text to extra axioms for the closed-form
    cases, which lets tests confirm that a false axiom is caught."""
    injected = injected or {}
    failures: list[str] = []

    for text, q, expected in closed_form_cases():
        try:
            res = infer(parse(text), injected.get(text, ()))
        except InconsistencyError as exc:
            failures.append(f"{text}: inconsistency: {exc}")
            continue
        got = getattr(res.root_state, q)
        if got != expected:
            failures.append(f"{text}: {q} = {got}, expected {expected}")

    for n in range(1, 11):
        cx = al.NccwComplex((1,), tuple((k, (1,)) for k in range(1, n + 1)))
        if csr_upper_nccw(cx) != -(-n // 2) + 1:
            failures.append(f"nccw n = {n}: bound {csr_upper_nccw(cx)}")

    corpus = generate(corpus_size)
    for item in corpus:
        try:
            a = infer(item.expr, item.axioms, seed=1)
            b = infer(item.expr, item.axioms, seed=2)
        except InconsistencyError as exc:
            failures.append(f"{item.text}: inconsistency: {exc}")
            continue
        if a.states != b.states:
            failures.append(f"{item.text}: rule order changed the result")
        failures += report_violations(item, build_report(item.text, a))
        failures += [f"{item.text}: {v}" for v in check_consistency(a.states)]
        if parse(item.text) != item.expr or format_expr(parse(item.text)) != item.text:
            failures.append(f"{item.text}: round trip changed the expression")

    failures += fuzz_parse([c.text for c in corpus])
    return failures


__all__ = ["CorpusItem", "fuzz_parse", "generate", "closed_form_cases", "random_algebra",
           "random_space", "run_check"]

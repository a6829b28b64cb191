"""Lower-bound formulas and the coloring recipes that witness them.

Four recipes, identified by the method codes used in trace JSON:

  CH        clique blocks inside a complete host; classical (non-induced)
            semantics, so it bounds the ordinary Ramsey number.
  T1        recursive clique extraction for connected patterns, descending
            on the blue-side clique budget.
  L2        the two-clique case split for independence 2, isolate-free.
  T3        clique peeling for isolate-free patterns, descending on the
            red-side independence budget; delegates to L2 at the bottom.

Every recipe returns an EdgeColoring plus a ConstructionTrace recording the
cliques and sets it committed to, and certifies its output before returning.
L2 backs off to a complete constrained search (method Fallback) when its
literal case split fails to certify; at independence 2 that search is
exhaustive over all colorings whose red components are cliques, so a
ConstructionError from it means no certifiable coloring exists at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrowing import NotFoundBelow, ramsey_number_exact
from .coloring import (
    ORACLE_ORDER_LIMIT,
    RED,
    EdgeColoring,
    blue_clique_free,
    find_mono_induced,
    red_component_independence_ok,
    red_isolatefree_independence_ok,
)
from .errors import ConstructionError, PreconditionError
from .graphs import (
    Graph,
    chromatic_number,
    clique_number,
    cliques_of_size,
    complete,
    emit_graph6,
    find_subgraph_embedding,
    has_isolated_vertex,
    independence_number,
    induced_subgraph,
    is_clique,
    is_connected,
    lex_least_clique,
)

METHOD_CLIQUE_BLOCKS = "CH"
METHOD_CONNECTED = "T1"
METHOD_TWO_CLIQUE = "L2"
METHOD_ISOLATEFREE = "T3"
METHOD_FALLBACK = "Fallback"

# step kinds: disjoint-clique steps must be pairwise disjoint across a trace,
# plain clique steps may overlap them, sets/recurse/note carry context only.
KIND_DISJOINT_CLIQUE = "disjoint-clique"
KIND_CLIQUE = "clique"
KIND_SET = "set"
KIND_RECURSE = "recurse"
KIND_NOTE = "note"


@dataclass(frozen=True)
class TraceStep:
    role: str
    vertices: tuple[int, ...]
    kind: str


@dataclass(frozen=True)
class ConstructionTrace:
    method: str
    steps: tuple[TraceStep, ...]

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "steps": [{"role": s.role, "vertices": list(s.vertices)} for s in self.steps],
        }


def validate_trace(host: Graph, trace: ConstructionTrace) -> None:
    """Raise unless recorded cliques are cliques of host and extraction
    cliques are pairwise vertex-disjoint."""
    taken: list[set[int]] = []
    for step in trace.steps:
        for v in step.vertices:
            if not 0 <= v < host.n:
                raise ConstructionError(f"trace step {step.role!r} names vertex {v} outside the host")
        if step.kind in (KIND_CLIQUE, KIND_DISJOINT_CLIQUE):
            if not is_clique(host, step.vertices):
                raise ConstructionError(f"trace step {step.role!r} is not a clique of the host")
        if step.kind == KIND_DISJOINT_CLIQUE:
            verts = set(step.vertices)
            for prev in taken:
                if prev & verts:
                    raise ConstructionError(f"trace step {step.role!r} overlaps an earlier extraction clique")
            taken.append(verts)


# ---------------------------------------------------------------------------
# bound formulas

def lower_bound_connected(alpha: int, omega: int) -> int:
    if alpha < 2 or omega < 2:
        raise PreconditionError("needs independence >= 2 and clique budget >= 2")
    return (alpha - 1) * omega * (omega - 1) // 2 + omega


def lower_bound_isolatefree(alpha: int, omega: int) -> int:
    if alpha < 2 or omega < 2:
        raise PreconditionError("needs independence >= 2 and clique budget >= 2")
    return alpha * omega


def chvatal_harary_bound(g: Graph, h: Graph) -> int:
    if g.edge_count() == 0 or h.edge_count() == 0:
        raise PreconditionError("patterns must have at least one edge")
    if not is_connected(g):
        raise PreconditionError("first pattern must be connected")
    return (g.n - 1) * (chromatic_number(h) - 1) + 1


# ---------------------------------------------------------------------------
# colorings

def _with_rest_blue(f: Graph, red_pairs) -> EdgeColoring:
    red = {(min(u, v), max(u, v)) for u, v in red_pairs}
    blue = [e for e in f.edges() if e not in red]
    return EdgeColoring.of(f.n, sorted(red), blue)


def _certifies(f: Graph, c: EdgeColoring, alpha: int, omega: int) -> bool:
    return red_component_independence_ok(f, c, alpha) and blue_clique_free(f, c, omega)


def chvatal_harary_coloring(g: Graph, h: Graph) -> tuple[Graph, EdgeColoring, ConstructionTrace]:
    """Complete host split into red clique blocks, blue in between.

    Red components are too small to hold g; a blue copy of h would hand h a
    proper coloring with one color per block, one short of its chromatic
    number. Classical containment, so the check is non-induced.
    """
    if g.edge_count() == 0 or h.edge_count() == 0:
        raise PreconditionError("patterns must have at least one edge")
    if not is_connected(g):
        raise PreconditionError("first pattern must be connected")
    blocks = chromatic_number(h) - 1
    size = g.n - 1
    n = blocks * size
    host = complete(n)
    steps = []
    red: list[tuple[int, int]] = []
    for i in range(blocks):
        verts = tuple(range(i * size, (i + 1) * size))
        steps.append(TraceStep(f"red-block-{i}", verts, KIND_DISJOINT_CLIQUE))
        red.extend(combinations(verts, 2))
    c = _with_rest_blue(host, red)
    if find_subgraph_embedding(c.red_graph(), g) is not None:
        raise ConstructionError("clique-block coloring admits a red copy of the first pattern")
    if find_subgraph_embedding(c.blue_graph(), h) is not None:
        raise ConstructionError("clique-block coloring admits a blue copy of the second pattern")
    trace = ConstructionTrace(METHOD_CLIQUE_BLOCKS, tuple(steps))
    validate_trace(host, trace)
    return host, c, trace


def theorem1_coloring(f: Graph, alpha: int, omega: int) -> tuple[EdgeColoring, ConstructionTrace]:
    """Recursive clique extraction for connected red patterns.

    Pulls out one clique of size omega plus alpha-2 of size omega-1, colors
    everything among them red, recurses on the rest with the clique budget
    lowered, and colors the leftovers blue. Red components then contain at
    most alpha-1 of the extracted cliques each, and a blue clique would need
    omega-1 vertices from a level that has none to give.
    """
    bound = lower_bound_connected(alpha, omega)
    if f.n > bound - 1:
        raise PreconditionError(
            f"host on {f.n} vertices is too large; this recipe handles at most {bound - 1}"
        )
    steps: list[TraceStep] = []
    red: set[tuple[int, int]] = set()
    _paint_connected(f, alpha, omega, list(range(f.n)), red, steps)
    c = _with_rest_blue(f, red)
    trace = ConstructionTrace(METHOD_CONNECTED, tuple(steps))
    validate_trace(f, trace)
    if not _certifies(f, c, alpha, omega):
        raise ConstructionError("clique extraction produced an uncertified coloring")
    return c, trace


def _paint_connected(f: Graph, alpha: int, omega: int, avail: list[int], red, steps) -> None:
    if omega == 2:
        for u, v in combinations(avail, 2):
            if f.has_edge(u, v):
                red.add((u, v))
        steps.append(TraceStep("floor-all-red", tuple(avail), KIND_NOTE))
        return
    sub = induced_subgraph(f, avail)
    if clique_number(sub) < omega:
        steps.append(TraceStep("clique-free-all-blue", tuple(avail), KIND_NOTE))
        return
    sizes = [omega] + [omega - 1] * (alpha - 2)
    remaining = list(avail)
    taken: list[tuple[int, ...]] = []
    stalled = False
    for idx, size in enumerate(sizes):
        local = lex_least_clique(induced_subgraph(f, remaining), size)
        if local is None:
            stalled = True
            break
        verts = tuple(remaining[i] for i in local)
        taken.append(verts)
        steps.append(TraceStep(f"K^{idx}", verts, KIND_DISJOINT_CLIQUE))
        remaining = [v for v in remaining if v not in verts]
    union = sorted(v for vs in taken for v in vs)
    for u, v in combinations(union, 2):
        if f.has_edge(u, v):
            red.add((u, v))
    if stalled:
        # no further clique to extract, so the leftovers cannot complete a
        # blue clique either; stop here and let them go blue
        steps.append(TraceStep("extraction-stalled-rest-blue", tuple(remaining), KIND_NOTE))
        return
    assert len(remaining) <= lower_bound_connected(alpha, omega - 1) - 1
    steps.append(
        TraceStep(f"recurse-alpha-{alpha}-omega-{omega - 1}", tuple(remaining), KIND_RECURSE)
    )
    _paint_connected(f, alpha, omega - 1, remaining, red, steps)


def lemma2_coloring(f: Graph, omega: int) -> tuple[EdgeColoring, ConstructionTrace]:
    """Certified coloring for red independence 2 on up to 2*omega-1 vertices.

    Case split: an oversize clique goes red whole; with no omega-clique at
    all everything goes blue; otherwise the host splits into a clique K^1 of
    size omega and a remainder, and the split hinges on how omega-cliques
    straddle the two. Whenever the literal split fails to certify, a complete
    search over clique-partition colorings takes over (method Fallback); if
    that search comes up empty no certifiable coloring exists, which does
    happen for some hosts when omega = 2.
    """
    if omega < 2:
        raise PreconditionError("clique budget must be at least 2")
    if f.n > 2 * omega - 1:
        raise PreconditionError(
            f"host on {f.n} vertices is too large; this recipe handles at most {2 * omega - 1}"
        )
    t = clique_number(f)
    if t > omega:
        big = lex_least_clique(f, t)
        c = _with_rest_blue(f, combinations(big, 2))
        trace = ConstructionTrace(
            METHOD_TWO_CLIQUE, (TraceStep("oversize-clique", big, KIND_DISJOINT_CLIQUE),)
        )
        if _certifies(f, c, 2, omega):
            validate_trace(f, trace)
            return c, trace
        return _fallback_coloring(f, omega)
    if t < omega:
        c = EdgeColoring.of(f.n, [], f.edges())
        trace = ConstructionTrace(
            METHOD_TWO_CLIQUE, (TraceStep("clique-free-all-blue", tuple(range(f.n)), KIND_NOTE),)
        )
        if _certifies(f, c, 2, omega):
            return c, trace
        return _fallback_coloring(f, omega)

    k1 = lex_least_clique(f, omega)
    k1set = set(k1)
    rest = tuple(v for v in range(f.n) if v not in k1set)
    steps = [TraceStep("K^1", k1, KIND_DISJOINT_CLIQUE)]

    def k1_red_rest_blue(note: str):
        c = _with_rest_blue(f, combinations(k1, 2))
        trace = ConstructionTrace(
            METHOD_TWO_CLIQUE, tuple(steps + [TraceStep(note, rest, KIND_NOTE)])
        )
        if _certifies(f, c, 2, omega):
            validate_trace(f, trace)
            return c, trace
        return _fallback_coloring(f, omega)

    if len(rest) < omega - 1:
        # too few leftover vertices to ever complete a blue clique
        return k1_red_rest_blue("remainder-too-small")
    if not is_clique(f, rest):
        # a blue clique would need all the leftover vertices pairwise
        # adjacent, and they are not
        return k1_red_rest_blue("remainder-not-clique")
    steps.append(TraceStep("K^2", rest, KIND_DISJOINT_CLIQUE))
    completers = [a for a in k1 if all(f.has_edge(a, w) for w in rest)]
    if not completers:
        # every other omega-clique must take two vertices from K^1 and so
        # carries a red edge
        return k1_red_rest_blue("no-single-vertex-completion")

    mixed = [q for q in cliques_of_size(f, omega) if set(q) != k1set]
    s_best = max(len(set(q) & k1set) for q in mixed)
    k3 = next(q for q in mixed if len(set(q) & k1set) == s_best)
    a_side = tuple(sorted(set(k3) & k1set))
    c_side = tuple(sorted(set(k3) - k1set))
    b_side = tuple(sorted(k1set - set(a_side)))
    d_side = tuple(sorted(set(rest) - set(c_side)))
    s = len(a_side)
    steps.extend(
        [
            TraceStep("K^3", k3, KIND_CLIQUE),
            TraceStep("A", a_side, KIND_SET),
            TraceStep("B", b_side, KIND_SET),
            TraceStep("C", c_side, KIND_SET),
            TraceStep("D", d_side, KIND_SET),
            TraceStep(f"s={s}", (), KIND_NOTE),
        ]
    )

    red_edges: list[tuple[int, int]] | None = None
    if s == 1 and len(c_side) >= 2:
        # two cliques sharing the single vertex a; one red edge inside each
        # spoils every omega-clique, and the red side is a pair of disjoint
        # edges whose host neighborhoods intersect inside K^3
        a = a_side[0]
        red_edges = [(a, b_side[0]), (c_side[0], c_side[1])]
    elif s >= 2:
        a = next(
            (x for x in a_side if is_clique(f, b_side + d_side + (x,))),
            a_side[0],
        )
        cc = next(
            (x for x in c_side if is_clique(f, b_side + d_side + (x,))),
            c_side[0],
        )
        a1 = next(x for x in a_side if x != a)
        red_edges = [(a, a1), (a, b_side[0]), (cc, d_side[0])]
    if red_edges is not None:
        c = _with_rest_blue(f, red_edges)
        trace = ConstructionTrace(METHOD_TWO_CLIQUE, tuple(steps))
        if _certifies(f, c, 2, omega):
            validate_trace(f, trace)
            return c, trace
    return _fallback_coloring(f, omega)


def _clique_partitions(f: Graph):
    """All partitions of V(f) into cliques, larger parts tried first."""

    def rec(unused: list[int], acc: list[tuple[int, ...]]):
        if not unused:
            yield list(acc)
            return
        v = unused[0]
        others = unused[1:]
        for size in range(len(unused), 0, -1):
            for extra in combinations(others, size - 1):
                part = (v,) + extra
                if not is_clique(f, part):
                    continue
                acc.append(part)
                left = [u for u in others if u not in set(extra)]
                yield from rec(left, acc)
                acc.pop()

    yield from rec(list(range(f.n)), [])


def _fallback_coloring(f: Graph, omega: int) -> tuple[EdgeColoring, ConstructionTrace]:
    """Complete search at independence 2: a coloring passes the red-side
    predicate exactly when its red components are cliques, i.e. when it
    paints the inside of a clique partition red and the rest blue."""
    for parts in _clique_partitions(f):
        red = [e for p in parts for e in combinations(p, 2)]
        c = _with_rest_blue(f, red)
        if blue_clique_free(f, c, omega):
            steps = tuple(
                TraceStep(f"part-{i}", p, KIND_DISJOINT_CLIQUE)
                for i, p in enumerate(parts)
                if len(p) >= 2
            )
            trace = ConstructionTrace(METHOD_FALLBACK, steps)
            validate_trace(f, trace)
            if not _certifies(f, c, 2, omega):
                raise ConstructionError("fallback produced an uncertified coloring")
            return c, trace
    raise ConstructionError(
        f"no coloring of this {f.n}-vertex host passes both predicates at clique budget {omega}"
    )


def theorem3_coloring(f: Graph, alpha: int, omega: int) -> tuple[EdgeColoring, ConstructionTrace]:
    """Clique peeling for isolate-free red patterns on up to alpha*omega-1
    vertices.

    Peels one red clique of size omega per level, descending on alpha until
    the two-clique recipe takes over, then paints every edge not colored
    along the way red. The blue side is certified by predicate; the red side
    has no component-local certificate, so it is checked against the
    exhaustive subset oracle (small hosts) or a sweep of concrete isolate-free
    patterns (large ones).
    """
    if alpha < 2 or omega < 2:
        raise PreconditionError("needs independence >= 2 and clique budget >= 2")
    if f.n > alpha * omega - 1:
        raise PreconditionError(
            f"host on {f.n} vertices is too large; this recipe handles at most {alpha * omega - 1}"
        )
    steps: list[TraceStep] = []
    red: set[tuple[int, int]] = set()
    blue: set[tuple[int, int]] = set()
    _paint_isolatefree(f, alpha, omega, list(range(f.n)), red, blue, steps)
    leftover = [e for e in f.edges() if e not in red and e not in blue]
    if leftover:
        steps.append(TraceStep("uncolored-to-red", (), KIND_NOTE))
        red.update(leftover)
    c = EdgeColoring.of(f.n, sorted(red), sorted(blue))
    trace = ConstructionTrace(METHOD_ISOLATEFREE, tuple(steps))
    validate_trace(f, trace)
    if not blue_clique_free(f, c, omega):
        raise ConstructionError("clique peeling left a blue clique standing")
    _certify_red_side(f, c, alpha)
    return c, trace


def _paint_isolatefree(f: Graph, alpha: int, omega: int, avail: list[int], red, blue, steps) -> None:
    sub = induced_subgraph(f, avail)
    if alpha == 2:
        steps.append(TraceStep(f"delegate-omega-{omega}", tuple(avail), KIND_RECURSE))
        sub_coloring, sub_trace = lemma2_coloring(sub, omega)
        for u, v in sub_coloring.red:
            red.add((avail[u], avail[v]))
        for u, v in sub_coloring.blue:
            blue.add((avail[u], avail[v]))
        for step in sub_trace.steps:
            steps.append(
                TraceStep(step.role, tuple(avail[v] for v in step.vertices), step.kind)
            )
        return
    if clique_number(sub) < omega:
        for u, v in combinations(avail, 2):
            if f.has_edge(u, v):
                blue.add((u, v))
        steps.append(TraceStep("clique-free-all-blue", tuple(avail), KIND_NOTE))
        return
    local = lex_least_clique(sub, omega)
    verts = tuple(avail[i] for i in local)
    for pair in combinations(verts, 2):
        red.add(pair)
    steps.append(TraceStep("K^0", verts, KIND_DISJOINT_CLIQUE))
    remaining = [v for v in avail if v not in set(verts)]
    steps.append(TraceStep(f"recurse-alpha-{alpha - 1}-omega-{omega}", tuple(remaining), KIND_RECURSE))
    _paint_isolatefree(f, alpha - 1, omega, remaining, red, blue, steps)


def _certify_red_side(f: Graph, c: EdgeColoring, alpha: int) -> None:
    if f.n <= ORACLE_ORDER_LIMIT:
        if not red_isolatefree_independence_ok(f, c, alpha):
            raise ConstructionError(
                "red side induces an isolate-free subgraph at the independence target"
            )
        return
    for g in _small_isolatefree_patterns(alpha):
        if find_mono_induced(f, c, g, RED) is not None:
            raise ConstructionError(
                f"red side contains an induced copy of a {g.n}-vertex isolate-free pattern"
            )


def _small_isolatefree_patterns(alpha: int, max_order: int = 5) -> list[Graph]:
    from .search import bundled_catalog

    catalog = bundled_catalog()
    out = []
    for order in range(1, max_order + 1):
        for g in catalog.graphs(order):
            if g.edge_count() == 0 or has_isolated_vertex(g):
                continue
            if independence_number(g) == alpha:
                out.append(g)
    return out


# ---------------------------------------------------------------------------
# clique packing and the bound report

def required_subgraph_check(f: Graph, alpha: int, omega: int) -> bool:
    """Does f pack the disjoint cliques the extraction recipe consumes?

    One clique of each size omega-j plus alpha-2 of size omega-j-1, for every
    level j down to size 2, all vertex-disjoint.
    """
    if alpha < 2 or omega < 2:
        raise PreconditionError("needs independence >= 2 and clique budget >= 2")
    sizes: list[int] = []
    for j in range(omega - 1):
        sizes.append(omega - j)
        sizes.extend([omega - j - 1] * (alpha - 2))
    return _has_clique_packing(f, sizes)


def _has_clique_packing(f: Graph, sizes: list[int]) -> bool:
    if sum(sizes) > f.n:
        return False
    order = sorted(sizes, reverse=True)

    def place(i: int, used: int, floor: int) -> bool:
        if i == len(order):
            return True
        k = order[i]
        avail = [v for v in range(f.n) if not used >> v & 1]
        # interchangeable equal-size parts: force ascending anchors
        anchor_floor = floor if i > 0 and order[i] == order[i - 1] else 0
        for verts in combinations(avail, k):
            if verts[0] < anchor_floor:
                continue
            if not is_clique(f, verts):
                continue
            mask = 0
            for v in verts:
                mask |= 1 << v
            if place(i + 1, used | mask, verts[0]):
                return True
        return False

    return place(0, 0, 0)


@dataclass(frozen=True)
class Bound:
    name: str
    value: int | None
    applicable: bool
    reason: str


@dataclass(frozen=True)
class BoundReport:
    pair: tuple[str, str]
    bounds: tuple[Bound, ...]
    best: int

    def to_json_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "bounds": [
                {"name": b.name, "value": b.value, "applicable": b.applicable, "reason": b.reason}
                for b in self.bounds
            ],
            "best": self.best,
        }


def bound_report(g: Graph, h: Graph, ramsey_budget: int = 6) -> BoundReport:
    """Every lower bound on the induced value this library knows, with the
    reasons the inapplicable ones do not fire."""
    if g.edge_count() == 0 or h.edge_count() == 0:
        raise PreconditionError("patterns must have at least one edge")
    alpha = independence_number(g)
    omega = clique_number(h)
    connected = is_connected(g)
    isolatefree = not has_isolated_vertex(g)
    bounds = [
        Bound(
            "order",
            max(g.n, h.n),
            True,
            "an arrowing host contains both patterns induced",
        )
    ]
    r = ramsey_number_exact(g, h, ramsey_budget)
    if isinstance(r, NotFoundBelow):
        bounds.append(
            Bound("R", None, False, f"classical value not settled by order {ramsey_budget}")
        )
    else:
        bounds.append(Bound("R", r, True, "exact classical value; the induced variant dominates it"))
    if connected:
        bounds.append(Bound("CH", chvatal_harary_bound(g, h), True, "clique-block coloring"))
    else:
        bounds.append(Bound("CH", None, False, "first pattern is disconnected"))
    if connected and alpha >= 2:
        bounds.append(
            Bound(
                "T1",
                lower_bound_connected(alpha, omega),
                True,
                f"connected pattern, independence {alpha}, clique budget {omega}",
            )
        )
    else:
        reason = "first pattern is disconnected" if not connected else "independence below 2"
        bounds.append(Bound("T1", None, False, reason))
    if isolatefree and alpha >= 2:
        bounds.append(
            Bound(
                "T3",
                lower_bound_isolatefree(alpha, omega),
                True,
                f"isolate-free pattern, independence {alpha}, clique budget {omega}",
            )
        )
    else:
        reason = "first pattern has an isolated vertex" if not isolatefree else "independence below 2"
        bounds.append(Bound("T3", None, False, reason))
    best = max(b.value for b in bounds if b.applicable)
    return BoundReport((emit_graph6(g), emit_graph6(h)), tuple(bounds), best)

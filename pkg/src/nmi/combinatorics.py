"""Clutters and graphs: blockers, minors, cliques, odd cycles and the
combinatorial normality criteria for edge ideals and ideals of covers.

Vertices are arbitrary sortable labels (ints in practice).  When a clutter
is turned into an ideal, variable ``t_k`` is the ``k``-th vertex in sorted
order.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import UnsupportedInput
from .ideal import MonomialIdeal, dual_star, make_ideal, power_membership, unit_ideal, zero_ideal

Edge = FrozenSet[int]


def _minimal_sets(sets):
    sets = sorted(set(frozenset(s) for s in sets), key=len)
    kept = []
    for s in sets:
        if not any(k <= s for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class Clutter:
    """A vertex set with an antichain of edges.

    The only edge allowed to be empty is the sole edge of the blocker of an
    edgeless clutter; its edge ideal is the unit ideal.
    """

    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        edges = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        vs = set(verts)
        for e in edges:
            if not e <= vs:
                raise ValueError(f"edge {sorted(e)} uses vertices outside {list(verts)}")
        for e in edges:
            for f in edges:
                if e != f and e <= f:
                    raise ValueError(f"edges {sorted(e)} and {sorted(f)} are not an antichain")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def sorted_edges(self):
        return sorted((tuple(sorted(e)) for e in self.edges), key=lambda e: (len(e), e))

    def index(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def clutter(vertices, edges) -> Clutter:
    """Build a clutter, keeping only the inclusion-minimal edges."""
    return Clutter(tuple(vertices), _minimal_sets(edges))


class Graph(Clutter):
    """A simple graph: a clutter whose edges all have two vertices."""

    def __post_init__(self):
        super().__post_init__()
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"graph edge {sorted(e)} does not have two vertices")
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    def neighbors(self, v) -> FrozenSet[int]:
        return self._adj[v]

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def neighborhood(self, vs) -> FrozenSet[int]:
        """Open neighbourhood of a vertex set: every vertex adjacent to one of them."""
        out = set()
        for v in vs:
            out |= self._adj[v]
        return frozenset(out)

    def isolated(self) -> Tuple[int, ...]:
        return tuple(v for v in self.vertices if not self._adj[v])

    def induced(self, keep) -> "Graph":
        keep = set(keep)
        return Graph(tuple(v for v in self.vertices if v in keep), frozenset(e for e in self.edges if e <= keep))

    def delete(self, vs) -> "Graph":
        vs = set(vs)
        return self.induced(v for v in self.vertices if v not in vs)


def graph(n_or_vertices, edges) -> Graph:
    """Graph on ``1..n`` (or on the given vertex labels) with the given edge pairs."""
    verts = tuple(range(1, n_or_vertices + 1)) if isinstance(n_or_vertices, int) else tuple(n_or_vertices)
    es = set()
    for a, b in edges:
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        es.add(frozenset((a, b)))
    return Graph(verts, frozenset(es))


def cycle_graph(n, start=1) -> Graph:
    vs = list(range(start, start + n))
    return graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n, start=1) -> Graph:
    vs = list(range(start, start + n))
    return graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n, start=1) -> Graph:
    vs = list(range(start, start + n))
    return graph(vs, combinations(vs, 2))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    if set(G.vertices) & set(H.vertices):
        raise ValueError("graphs share vertex labels")
    return Graph(G.vertices + H.vertices, G.edges | H.edges)


# -- ideals -----------------------------------------------------------------------


def edge_ideal(C: Clutter) -> MonomialIdeal:
    """One squarefree generator per edge; no edges gives the zero ideal."""
    s = C.num_vertices
    if not C.edges:
        return zero_ideal(s)
    return make_ideal(s, [tuple(1 if v in e else 0 for v in C.vertices) for e in C.edges])


def blocker(C: Clutter) -> Clutter:
    """The clutter of minimal vertex covers (minimal transversals).

    Branches on an uncovered edge with the fewest admissible vertices;
    vertices already tried at a branch point are forbidden in later
    siblings, so each transversal is produced once.  Non-minimal results
    are filtered at the end.  An edgeless clutter has the single empty cover.
    """
    edges = [frozenset(e) for e in C.edges]
    if not edges:
        return Clutter(C.vertices, frozenset([frozenset()]))
    if any(not e for e in edges):
        return Clutter(C.vertices, frozenset())  # nothing meets the empty edge
    found = set()

    def branch(T, forbidden, uncovered):
        if not uncovered:
            found.add(T)
            return
        e = min(uncovered, key=lambda f: (len(f - forbidden), sorted(f)))
        choices = sorted(e - forbidden)
        banned = set(forbidden)
        for v in choices:
            rest = [f for f in uncovered if v not in f]
            if not any(f <= banned for f in rest):
                branch(T | {v}, frozenset(banned), rest)
            banned.add(v)

    branch(frozenset(), frozenset(), edges)
    minimal = []
    for T in found:
        if all(any(e & T == {w} for e in edges) for w in T):
            minimal.append(T)
    return Clutter(C.vertices, frozenset(minimal))


def cover_ideal(C: Clutter) -> MonomialIdeal:
    """Edge ideal of the blocker; an edgeless clutter gives the unit ideal."""
    return edge_ideal(blocker(C))


def is_transversal(T, C: Clutter) -> bool:
    return all(e & set(T) for e in C.edges)


# -- minors -----------------------------------------------------------------------


def _check_vertex(C, v):
    if v not in C.vertices:
        raise ValueError(f"unknown vertex {v}")


def deletion(C: Clutter, v) -> Clutter:
    """Edges avoiding ``v``, on the vertex set without ``v``."""
    _check_vertex(C, v)
    verts = tuple(u for u in C.vertices if u != v)
    edges = frozenset(e for e in C.edges if v not in e)
    if isinstance(C, Graph):
        return Graph(verts, edges)
    return Clutter(verts, edges)


def contraction(C: Clutter, v) -> Clutter:
    """Minimal elements of ``{e \\ {v}}``, on the vertex set without ``v``."""
    _check_vertex(C, v)
    verts = tuple(u for u in C.vertices if u != v)
    return Clutter(verts, _minimal_sets(e - {v} for e in C.edges))


# -- graph operations -----------------------------------------------------------------


def complement(G: Graph) -> Graph:
    return Graph(
        G.vertices,
        frozenset(frozenset(p) for p in combinations(G.vertices, 2) if not G.adjacent(*p)),
    )


def connected_components(G: Graph) -> List[Graph]:
    seen = set()
    comps = []
    for v in G.vertices:
        if v in seen:
            continue
        stack, comp = [v], {v}
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(G.induced(comp))
    return comps


def cone_over(G: Graph, apex=None) -> Graph:
    """Add a vertex adjacent to every vertex of ``G`` (default label: max + 1)."""
    if apex is None:
        apex = max(G.vertices, default=0) + 1
    if apex in G.vertices:
        raise ValueError(f"apex {apex} already a vertex")
    return Graph(G.vertices + (apex,), G.edges | {frozenset((apex, v)) for v in G.vertices})


def maximal_cliques(G: Graph) -> List[FrozenSet[int]]:
    """Bron-Kerbosch with pivoting."""
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: len(P & G.neighbors(u)))
        for v in sorted(P - G.neighbors(pivot)):
            N = G.neighbors(v)
            bk(R | {v}, P & N, X & N)
            P = P - {v}
            X = X | {v}

    if G.vertices:
        bk(set(), set(G.vertices), set())
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def clique_clutter(G: Graph) -> Clutter:
    return Clutter(G.vertices, frozenset(maximal_cliques(G)))


def cover_ideal_via_cliques(G: Graph) -> MonomialIdeal:
    """``I_c(G)`` as the dual of the edge ideal of the clique clutter of the complement."""
    cl = clique_clutter(complement(G))
    if not cl.edges:
        return unit_ideal(G.num_vertices)  # no vertices at all
    return dual_star(edge_ideal(cl))


def independence_number(G: Graph) -> int:
    """Exact size of a largest stable set, by branch and bound.

    The bound for a candidate set is the number of cliques in a greedy
    clique cover of it (a stable set meets each clique at most once).
    """
    best = 0

    def clique_cover_size(cands):
        count = 0
        left = sorted(cands)
        while left:
            clique = [left[0]]
            for v in left[1:]:
                if all(G.adjacent(v, u) for u in clique):
                    clique.append(v)
            left = [v for v in left if v not in clique]
            count += 1
        return count

    def grow(size, cands):
        nonlocal best
        if not cands:
            best = max(best, size)
            return
        if size + clique_cover_size(cands) <= best:
            return
        v = min(cands, key=lambda u: (len(G.neighbors(u) & cands), u))
        grow(size + 1, cands - G.neighbors(v) - {v})
        grow(size, cands - {v})

    grow(0, frozenset(G.vertices))
    return best


# -- odd cycles and Hochster configurations ----------------------------------------------


def induced_odd_cycles(G: Graph, max_len: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All chordless odd cycles of length at most ``max_len``.

    Each cycle is listed once, starting at its smallest vertex and oriented
    so that the second vertex is smaller than the last.  Cycles are grown as
    induced paths from the start vertex ``s`` through larger vertices; inner
    path vertices are kept non-adjacent to ``s`` and to all earlier path
    vertices except their predecessor.
    """
    n = G.num_vertices
    max_len = n if max_len is None else min(max_len, n)
    out = []
    for s in G.vertices:
        Ns = G.neighbors(s)

        def extend(path, blocked):
            last = path[-1]
            for w in sorted(G.neighbors(last)):
                if w <= s or w in blocked:
                    continue
                if w in Ns:
                    if len(path) >= 2 and path[1] < w and (len(path) + 1) % 2 == 1 and len(path) + 1 <= max_len:
                        out.append(tuple(path) + (w,))
                    continue
                if len(path) + 2 > max_len:
                    continue
                # w's neighbours among earlier path vertices (except last) would be chords
                extend(path + [w], blocked | G.neighbors(last) | {last})

        for p1 in sorted(Ns):
            if p1 > s:
                extend([s, p1], frozenset({s}))
    return sorted(out, key=lambda c: (len(c), c))


@dataclass(frozen=True)
class HochsterConfig:
    """Two induced odd cycles with no vertex of one in or next to the other.

    ``forward`` records ``cycle1 ∩ N(cycle2) = ∅`` and ``backward`` the
    same with the roles swapped.
    """

    cycle1: Tuple[int, ...]
    cycle2: Tuple[int, ...]
    forward: bool = True
    backward: bool = True


def hochster_configurations(G: Graph, max_len: Optional[int] = None, first_only: bool = False) -> List[HochsterConfig]:
    """All unordered pairs of induced odd cycles meeting the configuration condition.

    The condition is checked in both orders and a pair is kept when either
    holds.  (They always coincide: each cycle lies inside its own open
    neighbourhood, so either condition says the cycles are disjoint with no
    edge between them.)
    """
    cycles = induced_odd_cycles(G, max_len)
    nbhd = [G.neighborhood(c) for c in cycles]
    sets = [frozenset(c) for c in cycles]
    out = []
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            fwd = not (sets[i] & nbhd[j])
            bwd = not (sets[j] & nbhd[i])
            if fwd or bwd:
                out.append(HochsterConfig(cycles[i], cycles[j], fwd, bwd))
                if first_only:
                    return out
    return out


def edge_ideal_normality_combinatorial(G: Graph) -> bool:
    """``I(G)`` is normal iff ``G`` has no Hochster configuration."""
    return not hochster_configurations(G, first_only=True)


def m_monomial(G: Graph, c1, c2) -> Tuple[Tuple[int, ...], int]:
    """Exponent of ``prod_{C1} t_i * prod_{C2} t_i`` and its level ``(|C1|+|C2|)/2``."""
    c1, c2 = tuple(c1), tuple(c2)
    for c in (c1, c2):
        if len(c) % 2 == 0:
            raise ValueError(f"cycle {c} is not odd")
        if len(set(c)) != len(c) or any(v not in G.vertices for v in c):
            raise ValueError(f"{c} is not a cycle of the graph")
    if len(set(c1) & set(c2)) > 1:
        raise ValueError("cycles share more than one vertex")
    idx = G.index()
    a = [0] * G.num_vertices
    for v in c1 + c2:
        a[idx[v]] += 1
    return tuple(a), (len(c1) + len(c2)) // 2


def m_monomial_in_rees(G: Graph, c1, c2) -> bool:
    """Whether ``t^a z^level`` for the pair's monomial lies in the Rees algebra, i.e. ``t^a in I^level``."""
    a, level = m_monomial(G, c1, c2)
    return power_membership(edge_ideal(G), a, level).member


# -- reductions and criteria for ideals of covers -------------------------------------------


def _is_minimal_cover(G: Graph, C) -> bool:
    C = set(C)
    if not is_transversal(C, G):
        return False
    return all(not is_transversal(C - {v}, G) for v in C)


def qualifying_vertices(G: Graph) -> List[int]:
    """Non-isolated vertices whose neighbour set is a minimal vertex cover."""
    return [v for v in G.vertices if G.neighbors(v) and _is_minimal_cover(G, G.neighbors(v))]


@dataclass(frozen=True)
class ReductionChain:
    """Vertices removed one by one (each with a minimal-cover neighbour set).

    ``normal`` is True when the chain ends in an edgeless graph (unit ideal
    of covers); otherwise it is the residual verdict when one was requested,
    else None (no conclusion).
    """

    chain: Tuple[int, ...]
    residual: Graph
    normal: Optional[bool]
    residual_decided_by: str = ""


def neighbor_mvc_reduction(G: Graph, decide_residual: bool = False, budget=None) -> ReductionChain:
    """Strip vertices whose neighbour set is a minimal vertex cover.

    Removing such a vertex preserves normality of the ideal of covers in
    both directions, so the verdict for ``G`` equals that of the residual.
    """
    chain = []
    H = G
    while H.edges:
        q = qualifying_vertices(H)
        if not q:
            break
        chain.append(q[0])
        H = H.delete([q[0]])
    if not H.edges:
        return ReductionChain(tuple(chain), H, True, "edgeless residual")
    if not decide_residual:
        return ReductionChain(tuple(chain), H, None)
    from .cone import normality_via_rees

    verdict = normality_via_rees(cover_ideal(H), budget).normal
    return ReductionChain(tuple(chain), H, verdict, "rees")


@dataclass(frozen=True)
class DualityReport:
    independence_number: int
    normal: bool
    complement_configurations: Tuple[HochsterConfig, ...]


def duality_criterion(G: Graph) -> DualityReport:
    """For ``beta_0(G) <= 2``: ``I_c(G)`` normal iff the complement has no Hochster configuration."""
    b = independence_number(G)
    if b > 2:
        raise UnsupportedInput(
            f"the duality criterion needs independence number at most 2, this graph has {b} "
            "(the Kaiser graph H4 shows the equivalence fails beyond 2)"
        )
    configs = tuple(hochster_configurations(complement(G)))
    return DualityReport(b, not configs, configs)


@dataclass(frozen=True)
class NecessaryConditionReport:
    verdict: str  # "not normal" or "inconclusive"
    configuration: Optional[HochsterConfig]


def necessary_condition_check(G: Graph) -> NecessaryConditionReport:
    """A Hochster configuration of the complement with both cycles of length >= 5 rules out normality of ``I_c(G)``."""
    for cfg in hochster_configurations(complement(G)):
        if len(cfg.cycle1) >= 5 and len(cfg.cycle2) >= 5:
            return NecessaryConditionReport("not normal", cfg)
    return NecessaryConditionReport("inconclusive", None)


@dataclass(frozen=True)
class MinorScan:
    base_normal: bool
    minors_checked: int
    violations: Tuple[Clutter, ...] = field(default_factory=tuple)


def _cover_normal(C: Clutter, budget=None) -> bool:
    from .cone import normality_via_rees

    I = cover_ideal(C)
    if I.kind != "proper":
        return True
    return normality_via_rees(I, budget).normal


def minor_normality_scan(C: Clutter, depth: int, budget=None) -> MinorScan:
    """If ``I_c(C)`` is normal, check ``I_c`` of every minor within ``depth`` steps."""
    if not _cover_normal(C, budget):
        return MinorScan(False, 0)
    level = {C}
    seen = {C}
    violations = []
    for _ in range(depth):
        nxt = set()
        for H in level:
            for v in H.vertices:
                for M in (deletion(H, v), contraction(H, v)):
                    key = Clutter(M.vertices, M.edges)
                    if key in seen:
                        continue
                    seen.add(key)
                    nxt.add(key)
                    if not _cover_normal(key, budget):
                        violations.append(key)
        level = nxt
    return MinorScan(True, len(seen) - 1, tuple(violations))

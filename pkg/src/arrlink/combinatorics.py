"""Abstract line-arrangement combinatorics and its symmetries.

A combinatorics is the multiplicity-two-or-more incidence data of an
arrangement: which sets of lines meet in a common point.  Projective duality
forces every pair of lines to meet exactly once, so the supports form an
exact cover of the index pairs; validation leans on that.
"""

from __future__ import annotations

from .errors import ArrlinkError


class InvalidCombinatorics(ArrlinkError):
    """Supports fail the exact pair-coverage requirement."""


class DegreeMismatch(ArrlinkError):
    """Permutation degree differs from the structure it acts on."""


def perm_from_cycles(n: int, cycles) -> tuple[int, ...]:
    """Build a 1-based permutation tuple from disjoint cycles."""
    img = list(range(1, n + 1))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return tuple(img)


def cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(1, len(perm) + 1):
        if seen[start - 1] or perm[start - 1] == start:
            continue
        cyc = [start]
        seen[start - 1] = True
        nxt = perm[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt - 1] = True
            nxt = perm[nxt - 1]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p after q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


class PermGroup:
    """A permutation group on 1..n, materialized by closure (desk scale)."""

    __slots__ = ("degree", "generators", "elements")

    def __init__(self, degree: int, generators):
        self.degree = degree
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(1, degree + 1)):
                raise DegreeMismatch(f"not a permutation of 1..{degree}: {g}")
        identity = tuple(range(1, degree + 1))
        elements = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    h = perm_compose(g, e)
                    if h not in elements:
                        elements.add(h)
                        nxt.append(h)
            frontier = nxt
        self.elements = frozenset(elements)
        self.generators = self._reduce_generators(gens)

    def _reduce_generators(self, gens) -> tuple[tuple[int, ...], ...]:
        identity = tuple(range(1, self.degree + 1))
        kept: list[tuple[int, ...]] = []
        span = {identity}
        for g in sorted(self.elements):
            if g in span:
                continue
            kept.append(g)
            frontier = list(span)
            span.add(g)
            new = [g]
            while new:
                cur = []
                for e in new:
                    for h in kept:
                        for x in (perm_compose(h, e), perm_compose(e, h)):
                            if x not in span:
                                span.add(x)
                                cur.append(x)
                new = cur
            if len(span) == len(self.elements):
                break
        return tuple(kept) if kept else (identity,)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        gens = " ".join(cycle_notation(g) for g in self.generators)
        return f"PermGroup(order={self.order}, <{gens}>)"


class Combinatorics:
    """Line count plus the supports of all singular points (1-based)."""

    __slots__ = ("n", "supports", "_support_set", "_pair_size")

    def __init__(self, n: int, supports):
        sups = tuple(sorted(tuple(sorted(set(s))) for s in supports))
        if n < 3:
            raise InvalidCombinatorics("need at least 3 lines")
        pair_size: dict[tuple[int, int], int] = {}
        for s in sups:
            if len(s) < 2:
                raise InvalidCombinatorics(f"support {s} has fewer than 2 lines")
            if s[0] < 1 or s[-1] > n:
                raise InvalidCombinatorics(f"support {s} out of range 1..{n}")
            for a in range(len(s)):
                for b in range(a + 1, len(s)):
                    key = (s[a], s[b])
                    if key in pair_size:
                        raise InvalidCombinatorics(f"pair {key} covered twice")
                    pair_size[key] = len(s)
        if len(pair_size) != n * (n - 1) // 2:
            raise InvalidCombinatorics(
                f"{len(pair_size)} pairs covered, expected {n * (n - 1) // 2}"
            )
        self.n = n
        self.supports = sups
        self._support_set = frozenset(sups)
        self._pair_size = pair_size

    def pair_size(self, i: int, j: int) -> int:
        """Multiplicity of the singular point where lines i and j meet."""
        if i == j:
            raise ArrlinkError("a line does not pair with itself")
        return self._pair_size[(i, j) if i < j else (j, i)]

    def line_profile(self, i: int) -> tuple[int, ...]:
        """Sorted multiset of support sizes through line i (an invariant)."""
        return tuple(sorted(len(s) for s in self.supports if i in s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Combinatorics):
            return NotImplemented
        return self.n == other.n and self.supports == other.supports

    def __hash__(self) -> int:
        return hash((self.n, self.supports))

    def __repr__(self) -> str:
        return f"Combinatorics(n={self.n}, points={len(self.supports)})"


def comb_from_arrangement(arr) -> Combinatorics:
    return Combinatorics(arr.n, arr.supports())


class IncidenceGraph:
    """Bipartite graph: one vertex per singular point, one per line.

    Edges are oriented point-to-line.  The cycle space H_1 is presented by
    spanning-forest chord cycles as signed edge vectors.
    """

    __slots__ = ("comb", "edges", "connected", "components", "cycle_rank")

    def __init__(self, comb: Combinatorics):
        self.comb = comb
        self.edges = tuple(
            (s, line) for s in comb.supports for line in s
        )
        adj: dict = {("P", s): [] for s in comb.supports}
        for i in range(1, comb.n + 1):
            adj[("L", i)] = []
        for s, line in self.edges:
            adj[("P", s)].append(("L", line))
            adj[("L", line)].append(("P", s))
        seen = set()
        components = 0
        for v in adj:
            if v in seen:
                continue
            components += 1
            stack = [v]
            seen.add(v)
            while stack:
                cur = stack.pop()
                for w in adj[cur]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        self.connected = components == 1
        self.components = components
        v_count = len(adj)
        self.cycle_rank = len(self.edges) - v_count + components

    def cycle_basis(self) -> list[dict[tuple, int]]:
        """Chord cycles of a spanning forest, as {edge: sign} vectors.

        Edge (s, line) is oriented point-to-line; a +1 coefficient means the
        cycle traverses it that way.  Each vector has zero signed boundary at
        every vertex; there are exactly cycle_rank of them and they are
        independent since each owns a private chord.
        """
        adj: dict = {}
        for s, line in self.edges:
            adj.setdefault(("P", s), []).append((("L", line), (s, line)))
            adj.setdefault(("L", line), []).append((("P", s), (s, line)))
        parent: dict = {}
        parent_edge: dict = {}
        depth: dict = {}
        tree_edges = set()
        for root in sorted(adj):
            if root in parent:
                continue
            parent[root] = None
            parent_edge[root] = None
            depth[root] = 0
            queue = [root]
            while queue:
                cur = queue.pop(0)
                for nbr, edge in adj[cur]:
                    if nbr not in parent:
                        parent[nbr] = cur
                        parent_edge[nbr] = edge
                        depth[nbr] = depth[cur] + 1
                        tree_edges.add(edge)
                        queue.append(nbr)

        def step_up(v):
            # sign of traversing the tree edge from v toward its parent
            return parent[v], parent_edge[v], (1 if v[0] == "P" else -1)

        basis = []
        for edge in self.edges:
            if edge in tree_edges:
                continue
            s, line = edge
            vec = {edge: 1}
            a, b = ("L", line), ("P", s)
            a_part: list[tuple] = []
            b_part: list[tuple] = []
            while depth[a] > depth[b]:
                a, e, sg = step_up(a)
                a_part.append((e, sg))
            while depth[b] > depth[a]:
                b, e, sg = step_up(b)
                b_part.append((e, sg))
            while a != b:
                a, e, sg = step_up(a)
                a_part.append((e, sg))
                b, e2, sg2 = step_up(b)
                b_part.append((e2, sg2))
            # cycle runs chord P->L, then a's path upward, then b's downward
            for e, sg in a_part:
                vec[e] = vec.get(e, 0) + sg
            for e, sg in b_part:
                vec[e] = vec.get(e, 0) - sg
            basis.append({e: c for e, c in vec.items() if c})
        return basis


def incidence_graph(comb: Combinatorics) -> IncidenceGraph:
    return IncidenceGraph(comb)


def _search_isomorphisms(c1: Combinatorics, c2: Combinatorics):
    """Yield all line bijections carrying supports of c1 onto supports of c2."""
    if c1.n != c2.n:
        return
    if sorted(map(len, c1.supports)) != sorted(map(len, c2.supports)):
        return
    n = c1.n
    profiles2: dict[tuple, list[int]] = {}
    for j in range(1, n + 1):
        profiles2.setdefault(c2.line_profile(j), []).append(j)
    candidates = []
    for i in range(1, n + 1):
        cand = profiles2.get(c1.line_profile(i), [])
        if not cand:
            return
        candidates.append(cand)
    order = sorted(range(1, n + 1), key=lambda i: len(candidates[i - 1]))
    assign: dict[int, int] = {}
    used = set()

    def backtrack(k: int):
        if k == n:
            img = tuple(assign[i] for i in range(1, n + 1))
            for s in c1.supports:
                mapped = tuple(sorted(assign[x] for x in s))
                if mapped not in c2._support_set:
                    return
            yield img
            return
        i = order[k]
        for j in candidates[i - 1]:
            if j in used:
                continue
            ok = True
            for i2, j2 in assign.items():
                if c1.pair_size(i, i2) != c2.pair_size(j, j2):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used.add(j)
                yield from backtrack(k + 1)
                del assign[i]
                used.discard(j)

    yield from backtrack(0)


def comb_automorphisms(comb: Combinatorics) -> PermGroup:
    """The full symmetry group of a combinatorics."""
    autos = list(_search_isomorphisms(comb, comb))
    group = PermGroup(comb.n, autos)
    assert group.order == len(autos)
    return group


def comb_isomorphism(c1: Combinatorics, c2: Combinatorics) -> tuple[int, ...] | None:
    """Some support-preserving line bijection, or None."""
    for img in _search_isomorphisms(c1, c2):
        return img
    return None


def perm_act(sigma, obj):
    """Relabel a Combinatorics or reorder an Arrangement by sigma(i) = new index."""
    from .arrangement import Arrangement

    sigma = tuple(sigma)
    if isinstance(obj, Combinatorics):
        if len(sigma) != obj.n:
            raise DegreeMismatch(f"permutation degree {len(sigma)} != {obj.n}")
        return Combinatorics(
            obj.n, [tuple(sigma[x - 1] for x in s) for s in obj.supports]
        )
    if isinstance(obj, Arrangement):
        if len(sigma) != obj.n:
            raise DegreeMismatch(f"permutation degree {len(sigma)} != {obj.n}")
        new_lines = [None] * obj.n
        for i, ln in enumerate(obj.lines, start=1):
            new_lines[sigma[i - 1] - 1] = ln
        return Arrangement(obj.field, new_lines, name=obj.name)
    raise ArrlinkError(f"cannot act on {type(obj).__name__}")


def _graph_automorphisms(adjacency: dict) -> list[dict]:
    """All automorphisms of a small simple graph given as vertex -> set."""
    verts = sorted(adjacency)
    degs = {v: len(adjacency[v]) for v in verts}
    nbr_profile = {
        v: tuple(sorted(degs[w] for w in adjacency[v])) for v in verts
    }
    # BFS order from a max-degree vertex keeps candidates constrained early
    order: list = []
    placed = set()
    for seed in sorted(verts, key=lambda v: (-degs[v], v)):
        if seed in placed:
            continue
        queue = [seed]
        placed.add(seed)
        while queue:
            cur = queue.pop(0)
            order.append(cur)
            for w in sorted(adjacency[cur], key=lambda v: (-degs[v], v)):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    results = []
    assign: dict = {}
    used = set()

    def backtrack(k: int):
        if k == len(order):
            results.append(dict(assign))
            return
        v = order[k]
        for w in verts:
            if w in used or degs[w] != degs[v] or nbr_profile[w] != nbr_profile[v]:
                continue
            ok = True
            for v2, w2 in assign.items():
                if (v2 in adjacency[v]) != (w2 in adjacency[w]):
                    ok = False
                    break
            if ok:
                assign[v] = w
                used.add(w)
                backtrack(k + 1)
                del assign[v]
                used.discard(w)

    backtrack(0)
    return results


def blowup_dual_graph(comb: Combinatorics) -> dict:
    """Dual graph after blowing up dense points.

    Vertices: ("L", i) for strict transforms, ("E", support) for exceptional
    components over points of multiplicity >= 3.  A double point keeps its
    line-line intersection; a dense point separates its lines, which all meet
    the exceptional component instead.
    """
    adj: dict = {("L", i): set() for i in range(1, comb.n + 1)}
    for s in comb.supports:
        if len(s) == 2:
            a, b = s
            adj[("L", a)].add(("L", b))
            adj[("L", b)].add(("L", a))
        else:
            ev = ("E", s)
            adj[ev] = set()
            for i in s:
                adj[ev].add(("L", i))
                adj[("L", i)].add(ev)
    return adj


def blowup_stable(comb: Combinatorics) -> tuple[dict, bool]:
    """Decide combinatorial stability under blow-up.

    Stable means the dual-graph automorphisms (computed with no vertex
    colors, so line and exceptional vertices may a priori mix) all preserve
    the line/exceptional partition and restrict bijectively onto the
    combinatorial automorphism group.
    """
    adj = blowup_dual_graph(comb)
    graph_autos = _graph_automorphisms(adj)
    comb_autos = comb_automorphisms(comb)
    restrictions = set()
    for g in graph_autos:
        for v, w in g.items():
            if v[0] != w[0]:
                return adj, False
        restricted = tuple(g[("L", i)][1] for i in range(1, comb.n + 1))
        if restricted not in comb_autos:
            return adj, False
        restrictions.add(restricted)
    stable = (
        len(restrictions) == len(graph_autos)
        and restrictions == set(comb_autos.elements)
    )
    return adj, stable

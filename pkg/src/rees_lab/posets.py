"""Ranked posets: divisibility posets of monomial algebras, divisor
lattices, Cartesian products, maximum antichains (Dilworth via bipartite
matching), level matchings, the normalized matching property via max
flow, brute-force LYM, and log-concavity."""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .bipartite import Dinic, hopcroft_karp, koenig_cover
from .monomials import (
    InputError,
    MonomialIdeal,
    mon_shift,
    mon_str,
    quotient_basis,
)


class SizeError(ValueError):
    """Poset too large for an exhaustive oracle."""


@dataclass(frozen=True)
class RankedPoset:
    """Levels of element labels plus up-edges between consecutive levels.

    edges[k] holds (i, j) index pairs meaning levels[k][i] < levels[k+1][j];
    general comparability is the transitive closure of these.
    """

    levels: tuple[tuple[str, ...], ...]
    edges: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        if len(self.edges) != max(len(self.levels) - 1, 0):
            raise InputError("edge layers must pair consecutive levels")
        seen = set()
        for level in self.levels:
            for lab in level:
                if lab in seen:
                    raise InputError(f"duplicate element label {lab!r}")
                seen.add(lab)

    @property
    def size(self) -> int:
        return sum(len(level) for level in self.levels)

    @property
    def nranks(self) -> int:
        return len(self.levels)

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def element_ids(self) -> dict[tuple[int, int], int]:
        """Flat ids in (rank, index) order."""
        ids = {}
        c = 0
        for k, level in enumerate(self.levels):
            for i in range(len(level)):
                ids[(k, i)] = c
                c += 1
        return ids

    def flat_labels(self) -> list[tuple[int, str]]:
        return [(k, lab) for k, level in enumerate(self.levels) for lab in level]

    def above_masks(self) -> list[int]:
        """Bitmask of all elements strictly above each element (flat ids)."""
        ids = self.element_ids()
        n = self.size
        masks = [0] * n
        for k in range(len(self.levels) - 2, -1, -1):
            up: dict[int, int] = {}
            for (i, j) in self.edges[k]:
                tgt = ids[(k + 1, j)]
                up[i] = up.get(i, 0) | (1 << tgt) | masks[tgt]
            for i, m in up.items():
                masks[ids[(k, i)]] = m
        return masks


def poset_from_algebra(ideal: MonomialIdeal) -> RankedPoset:
    """Divisibility poset of the standard monomials of an Artinian quotient."""
    basis = quotient_basis(ideal)
    levels = tuple(tuple(mon_str(m) for m in level) for level in basis.levels)
    edges = []
    for k in range(len(basis.levels) - 1):
        idx = {m: j for j, m in enumerate(basis.levels[k + 1])}
        layer = set()
        for i, m in enumerate(basis.levels[k]):
            for v in range(ideal.nvars):
                j = idx.get(mon_shift(m, v))
                if j is not None:
                    layer.add((i, j))
        edges.append(frozenset(layer))
    return RankedPoset(levels, tuple(edges))


def divisor_lattice(*exponents: int) -> RankedPoset:
    """Divisors of x1^e1 ... xm^em ranked by degree; the same poset as the
    quotient modulo the (e_i + 1)-st pure powers."""
    if not exponents or any(e < 1 for e in exponents):
        raise InputError("divisor lattice needs positive exponents")
    n = len(exponents)
    gens = []
    for i, e in enumerate(exponents):
        g = [0] * n
        g[i] = e + 1
        gens.append(tuple(g))
    return poset_from_algebra(MonomialIdeal(n, tuple(sorted(gens, reverse=True))))


def product(P: RankedPoset, Q: RankedPoset) -> RankedPoset:
    """Cartesian product: rank adds, (a,b) <= (a',b') componentwise."""
    nr = P.nranks + Q.nranks - 1
    levels: list[list[str]] = [[] for _ in range(nr)]
    index: dict[tuple[int, int, int, int], tuple[int, int]] = {}
    for kp, lp in enumerate(P.levels):
        for kq, lq in enumerate(Q.levels):
            k = kp + kq
            for i, a in enumerate(lp):
                for j, b in enumerate(lq):
                    index[(kp, i, kq, j)] = (k, len(levels[k]))
                    levels[k].append(f"({a},{b})")
    edges: list[set[tuple[int, int]]] = [set() for _ in range(nr - 1)]
    for kp, lp in enumerate(P.levels):
        for kq, lq in enumerate(Q.levels):
            for i in range(len(lp)):
                for j in range(len(lq)):
                    k, src = index[(kp, i, kq, j)]
                    if kp + 1 < P.nranks:
                        for (a, b) in P.edges[kp]:
                            if a == i:
                                _, tgt = index[(kp + 1, b, kq, j)]
                                edges[k].add((src, tgt))
                    if kq + 1 < Q.nranks:
                        for (a, b) in Q.edges[kq]:
                            if a == j:
                                _, tgt = index[(kp, i, kq + 1, b)]
                                edges[k].add((src, tgt))
    return RankedPoset(tuple(tuple(l) for l in levels),
                       tuple(frozenset(e) for e in edges))


@dataclass(frozen=True)
class Matching:
    """Matching between levels k-1 and k; pairs are (label, label)."""

    k: int
    pairs: tuple[tuple[str, str], ...]
    size: int
    full: bool


@dataclass(frozen=True)
class AntichainWitness:
    members: tuple[tuple[int, str], ...]  # (rank, label)

    def __len__(self) -> int:
        return len(self.members)


def full_matching_at(P: RankedPoset, k: int) -> Matching:
    """Maximum matching between levels k-1 and k along up-edges, flagged
    full iff it reaches min of the level sizes."""
    if not 1 <= k <= P.nranks - 1:
        raise InputError(f"degree {k} out of range")
    left = P.levels[k - 1]
    right = P.levels[k]
    adj: list[list[int]] = [[] for _ in left]
    for (i, j) in sorted(P.edges[k - 1]):
        adj[i].append(j)
    size, match_l, _ = hopcroft_karp(adj, len(right))
    pairs = tuple(
        (left[i], right[j]) for i, j in enumerate(match_l) if j != -1
    )
    return Matching(k, pairs, size, size == min(len(left), len(right)))


def max_antichain(P: RankedPoset) -> tuple[int, AntichainWitness]:
    """Dilworth: |P| minus a maximum matching of the strict-comparability
    bipartite graph; the witness comes from a minimum vertex cover and is
    re-verified pairwise incomparable."""
    n = P.size
    if n == 0:
        return 0, AntichainWitness(())
    masks = P.above_masks()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        m = masks[u]
        while m:
            low = m & -m
            adj[u].append(low.bit_length() - 1)
            m ^= low
    size, match_l, match_r = hopcroft_karp(adj, n)
    cover_l, cover_r = koenig_cover(adj, match_l, match_r)
    flat = P.flat_labels()
    members = tuple(
        flat[u] for u in range(n) if u not in cover_l and u not in cover_r
    )
    # certificate check: the extracted set really is an antichain of the
    # claimed size
    chosen = [u for u in range(n) if u not in cover_l and u not in cover_r]
    for a in range(len(chosen)):
        for b in range(a + 1, len(chosen)):
            u, v = chosen[a], chosen[b]
            if masks[u] >> v & 1 or masks[v] >> u & 1:
                raise AssertionError("antichain witness failed verification")
    if len(members) != n - size:
        raise AssertionError("vertex cover does not certify the matching")
    return n - size, AntichainWitness(members)


def max_antichain_brute(P: RankedPoset) -> int:
    """Exhaustive maximum antichain (independent set in comparability)."""
    if P.size > 22:
        raise SizeError("poset too large for exhaustive antichain search")
    masks = P.above_masks()
    n = P.size
    comp = [0] * n
    for u in range(n):
        m = masks[u]
        comp[u] |= m
        while m:
            low = m & -m
            comp[low.bit_length() - 1] |= 1 << u
            m ^= low
    best = 0

    def go(i: int, allowed: int, count: int) -> None:
        nonlocal best
        if count + bin(allowed >> i).count("1") <= best:
            return
        if i >= n:
            best = max(best, count)
            return
        if allowed >> i & 1:
            go(i + 1, allowed & ~comp[i], count + 1)
        go(i + 1, allowed, count)
        best = max(best, count)

    go(0, (1 << n) - 1, 0)
    return best


def nabla(P: RankedPoset, k: int, members: Iterable[str]) -> set[str]:
    """Upper shadow of a subset of level k through the up-edges."""
    if not 0 <= k < P.nranks:
        raise InputError(f"rank {k} out of range")
    level = {lab: i for i, lab in enumerate(P.levels[k])}
    chosen = set()
    for lab in members:
        if lab not in level:
            raise InputError(f"element {lab!r} is not in level {k}")
        chosen.add(level[lab])
    if k == P.nranks - 1:
        return set()
    out = {j for (i, j) in P.edges[k] if i in chosen}
    return {P.levels[k + 1][j] for j in out}


def nmp_check(P: RankedPoset) -> list[bool]:
    """Per consecutive level pair: does |V|/|P_k| <= |nabla V|/|P_{k+1}|
    hold for every V?  Decided by max flow: source->a with capacity
    |P_{k+1}|, up-edges with infinite capacity, b->sink with capacity
    |P_k|; the level passes iff the flow saturates |P_k| * |P_{k+1}|."""
    out = []
    for k in range(P.nranks - 1):
        A = len(P.levels[k])
        B = len(P.levels[k + 1])
        n = A + B + 2
        s, t = n - 2, n - 1
        net = Dinic(n)
        for i in range(A):
            net.add_edge(s, i, B)
        for j in range(B):
            net.add_edge(A + j, t, A)
        big = A * B + 1
        for (i, j) in P.edges[k]:
            net.add_edge(i, A + j, big)
        out.append(net.max_flow(s, t) == A * B)
    return out


def lym_brute(P: RankedPoset) -> bool:
    """Exhaustive check that every antichain A has
    sum over A of 1/|P_{rank a}| at most 1 (exact arithmetic)."""
    n = P.size
    if n > 22:
        raise SizeError("poset too large for exhaustive LYM enumeration")
    if n == 0:
        return True
    masks = P.above_masks()
    comp = [0] * n
    for u in range(n):
        m = masks[u]
        comp[u] |= m
        while m:
            low = m & -m
            comp[low.bit_length() - 1] |= 1 << u
            m ^= low
    sizes = P.level_sizes()
    # integer weights over the common denominator prod of level sizes
    denom = 1
    for s in sizes:
        denom *= s
    flat_rank = [k for k, level in enumerate(P.levels) for _ in level]
    weight = [denom // sizes[flat_rank[u]] for u in range(n)]

    ok = True

    def go(i: int, allowed: int, total: int) -> bool:
        nonlocal ok
        for u in range(i, n):
            if allowed >> u & 1:
                if total + weight[u] > denom:
                    ok = False
                    return False
                if not go(u + 1, allowed & ~comp[u] & ~((1 << (u + 1)) - 1),
                          total + weight[u]):
                    return False
        return True

    go(0, (1 << n) - 1, 0)
    return ok


def log_concave(P: RankedPoset) -> bool:
    """level sizes satisfy s_i^2 >= s_{i-1} s_{i+1}, out-of-range as 0."""
    s = P.level_sizes()
    return all(s[i] * s[i] >= s[i - 1] * s[i + 1] for i in range(1, len(s) - 1))


def is_unimodal(values: Sequence[int]) -> bool:
    rising = True
    for a, b in zip(values, values[1:]):
        if rising and b < a:
            rising = False
        elif not rising and b > a:
            return False
    return True


# ---------------------------------------------------------------------------
# dump format: element lines "rank<TAB>label", then edge lines "label<TAB>label"


def dump(P: RankedPoset) -> str:
    lines = []
    for k, level in enumerate(P.levels):
        for lab in level:
            lines.append(f"{k}\t{lab}")
    for k, layer in enumerate(P.edges):
        for (i, j) in sorted(layer):
            lines.append(f"{P.levels[k][i]}\t{P.levels[k + 1][j]}")
    return "\n".join(lines) + "\n"


def parse_dump(text: str) -> RankedPoset:
    ranks: dict[str, int] = {}
    order: list[list[str]] = []
    edge_lines: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two tab-separated fields")
        a, b = parts
        # element lines introduce a new label; all elements precede edges,
        # so a second field already seen as a label means an edge line
        if b not in ranks:
            if not a.isdigit():
                raise InputError(
                    f"line {lineno}: unknown element {b!r} or malformed rank"
                )
            k = int(a)
            while len(order) <= k:
                order.append([])
            ranks[b] = k
            order[k].append(b)
        else:
            edge_lines.append((a, b))
    if any(not level for level in order):
        raise InputError("empty level in poset dump")
    idx = {lab: i for level in order for i, lab in enumerate(level)}
    edges: list[set[tuple[int, int]]] = [set() for _ in range(max(len(order) - 1, 0))]
    for a, b in edge_lines:
        if a not in ranks or b not in ranks:
            raise InputError(f"edge references unknown element {a!r} or {b!r}")
        ka, kb = ranks[a], ranks[b]
        if kb != ka + 1:
            raise InputError(f"edge {a!r}->{b!r} does not step one rank up")
        edges[ka].add((idx[a], idx[b]))
    return RankedPoset(tuple(tuple(l) for l in order),
                       tuple(frozenset(e) for e in edges))


def random_ranked_poset(rng: Random, max_size: int = 20, max_levels: int = 4,
                        edge_prob: float = 0.4) -> RankedPoset:
    """Small random ranked poset for oracle comparisons."""
    nlevels = rng.randint(1, max_levels)
    sizes = []
    remaining = max_size
    for j in range(nlevels):
        hi = max(1, remaining - (nlevels - j - 1))
        s = rng.randint(1, max(1, min(hi, max_size // nlevels + 2)))
        sizes.append(s)
        remaining -= s
    levels = tuple(
        tuple(f"e{k}_{i}" for i in range(s)) for k, s in enumerate(sizes)
    )
    edges = []
    for k in range(nlevels - 1):
        layer = {
            (i, j)
            for i in range(sizes[k])
            for j in range(sizes[k + 1])
            if rng.random() < edge_prob
        }
        edges.append(frozenset(layer))
    return RankedPoset(levels, tuple(edges))

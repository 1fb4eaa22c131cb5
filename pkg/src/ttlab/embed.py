"""Subdigraph containment: embeddings, freeness, partition checks.

Containment here is ordinary subdigraph containment, never induced: an
embedding of H into G is an injective vertex map under which every arc of
H lands on an arc of G.  Extra arcs of G (including digons covering a
single required arc) are always allowed.

Freeness tests for blow-ups of transitive tournaments do not go through
the generic embedding search.  A copy of blowup(k, t) in G is the same
thing as a chain of k pairwise disjoint t-sets S_1, ..., S_k such that
every vertex of S_p sends an arc to every vertex of S_q whenever p < q.
Writing T(S) for the common out-neighbourhood of S, the chain condition
is S_q subset of T(S_p) for all p < q, so the search walks down

    allowed_1 = V,   S_j subset of allowed_j,   allowed_{j+1} = allowed_j & T(S_j)

choosing one t-set per level.  Disjointness is automatic (a vertex never
sends an arc to itself, so S_j is disjoint from every earlier set), and
memoising on (allowed, levels remaining) keeps the walk small.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import BlowupSpec, CapacityError, Digraph, Partition

COUNT_MAX_VERTICES = 10  # exhaustive embedding counts refuse larger hosts


@dataclass(frozen=True)
class Embedding:
    """Injective arc-preserving map; mapping[u] is the image of H-vertex u."""

    mapping: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))


# ======================================================================
# generic embedding search
# ======================================================================

def _in_masks(g: Digraph) -> list[int]:
    masks = [0] * g.n
    for u in range(g.n):
        m = g.out_masks[u]
        while m:
            v = (m & -m).bit_length() - 1
            masks[v] |= 1 << u
            m &= m - 1
    return masks


def _candidates(g: Digraph, h: Digraph) -> list[list[int]]:
    """Per H-vertex candidate images, filtered by out/in-degree bounds."""
    g_in = _in_masks(g)
    h_in = _in_masks(h)
    cand = []
    for u in range(h.n):
        od, idg = h.out_masks[u].bit_count(), h_in[u].bit_count()
        cand.append([
            w for w in range(g.n)
            if g.out_masks[w].bit_count() >= od and g_in[w].bit_count() >= idg
        ])
    return cand


def contains(g: Digraph, h: Digraph) -> Embedding | None:
    """First embedding of H into G in lexicographic map order, or None.

    H-vertices are assigned in index order with images tried in increasing
    order, so the witness returned is the lexicographically least
    injective arc-preserving map (deterministic across runs).
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return Embedding(())
    cand = _candidates(g, h)
    image = [-1] * h.n
    used = 0

    def place(u: int) -> bool:
        nonlocal used
        for w in cand[u]:
            if used >> w & 1:
                continue
            ok = True
            for v in range(u):
                if h.has_arc(u, v) and not g.has_arc(w, image[v]):
                    ok = False
                    break
                if h.has_arc(v, u) and not g.has_arc(image[v], w):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = w
            used |= 1 << w
            if u + 1 == h.n or place(u + 1):
                return True
            used &= ~(1 << w)
        image[u] = -1
        return False

    if place(0):
        return Embedding(tuple(image))
    return None


def count_embeddings(g: Digraph, h: Digraph) -> int:
    """Number of injective arc-preserving maps of H into G (exhaustive).

    Hosts above 10 vertices are refused; an H larger than G simply has
    zero embeddings.
    """
    if g.n > COUNT_MAX_VERTICES:
        raise CapacityError(
            f"embedding counts are exhaustive and capped at {COUNT_MAX_VERTICES} host vertices"
        )
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    cand = _candidates(g, h)
    image = [-1] * h.n
    used = 0
    total = 0

    def place(u: int):
        nonlocal used, total
        for w in cand[u]:
            if used >> w & 1:
                continue
            ok = True
            for v in range(u):
                if h.has_arc(u, v) and not g.has_arc(w, image[v]):
                    ok = False
                    break
                if h.has_arc(v, u) and not g.has_arc(image[v], w):
                    ok = False
                    break
            if not ok:
                continue
            if u + 1 == h.n:
                total += 1
            else:
                image[u] = w
                used |= 1 << w
                place(u + 1)
                used &= ~(1 << w)
                image[u] = -1

    place(0)
    return total


def automorphism_count(h: Digraph) -> int:
    """|Aut(H)|; an injective arc-preserving self-map is an automorphism."""
    return count_embeddings(h, h)


def count_copies(g: Digraph, h: Digraph) -> int:
    """Copies of H in G up to automorphism: embeddings / |Aut(H)|."""
    emb = count_embeddings(g, h)
    aut = automorphism_count(h)
    if emb % aut:  # cannot happen: Aut(H) acts freely on embeddings
        raise AssertionError(f"embedding count {emb} not divisible by |Aut| {aut}")
    return emb // aut


# ======================================================================
# blow-up freeness via the level-chain search
# ======================================================================

def chain_exists(out_masks, allowed: int, levels: int, t: int, memo=None) -> bool:
    """Is there a chain of `levels` disjoint t-sets inside `allowed`?

    out_masks is indexable by vertex; `allowed` is a vertex bitmask.  A
    fresh memo dict is used unless one is passed in (callers testing many
    masks of the same digraph share one).
    """
    if memo is None:
        memo = {}

    def can(allowed: int, r: int) -> bool:
        if r == 0:
            return True
        if allowed.bit_count() < r * t:
            return False
        key = (allowed, r)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bits = []
        m = allowed
        while m:
            bits.append((m & -m).bit_length() - 1)
            m &= m - 1
        result = False
        for sel in combinations(bits, t):
            nxt = allowed
            for u in sel:
                nxt &= out_masks[u]
                if nxt.bit_count() < (r - 1) * t:
                    break
            else:
                if can(nxt, r - 1):
                    result = True
                    break
        memo[key] = result
        return result

    return can(allowed, levels)


def is_free(g: Digraph, spec: BlowupSpec) -> bool:
    """True iff G contains no copy of blowup(spec.k, spec.t)."""
    if spec.vertex_count > g.n:
        return True
    return not chain_exists(g.out_masks, (1 << g.n) - 1, spec.k, spec.t)


def arc_completes_blowup(out_masks, n: int, k: int, t: int, u: int, v: int) -> bool:
    """Does the digraph given by out_masks contain a copy of blowup(k, t)
    that places u at a strictly earlier level than v?

    This is the incremental freeness test used by the counting and
    branch-and-bound searches: when the arc u -> v is the newest arc of a
    previously free digraph, any fresh copy of the blow-up must map some
    between-level arc onto u -> v, i.e. place u before v.  Copies putting
    u and v on a common level need no arc between them and would have
    existed before the arc was added.
    """
    if k < 2 or k * t > n:
        return False
    full = (1 << n) - 1
    memo: dict[tuple[int, int, int], bool] = {}

    # phase 0: u unplaced; phase 1: u placed, v pending; phase 2: both placed
    def can(allowed: int, r: int, phase: int) -> bool:
        if r == 0:
            return phase == 2
        if allowed.bit_count() < r * t:
            return False
        if phase == 0 and (not allowed >> u & 1 or r < 2):
            return False
        if phase <= 1 and not allowed >> v & 1:
            return False
        key = (allowed, r, phase)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = False
        if phase == 0:
            pool = allowed & ~(1 << u) & ~(1 << v)
        elif phase == 1:
            pool = allowed & ~(1 << v)
        else:
            pool = allowed
        bits = []
        m = pool
        while m:
            bits.append((m & -m).bit_length() - 1)
            m &= m - 1

        def descend(sel, nxt_phase):
            nxt = allowed
            for w in sel:
                nxt &= out_masks[w]
            return can(nxt, r - 1, nxt_phase)

        if phase == 0:
            # either this level hosts u (v comes later), or it precedes u
            for rest in combinations(bits, t - 1):
                if descend((u, *rest), 1):
                    result = True
                    break
            if not result:
                for sel in combinations(bits, t):
                    if descend(sel, 0):
                        result = True
                        break
        elif phase == 1:
            for rest in combinations(bits, t - 1):
                if descend((v, *rest), 2):
                    result = True
                    break
            if not result:
                for sel in combinations(bits, t):
                    if descend(sel, 1):
                        result = True
                        break
        else:
            for sel in combinations(bits, t):
                if descend(sel, 2):
                    result = True
                    break
        memo[key] = result
        return result

    return can(full, k, 0)


# ======================================================================
# partitions
# ======================================================================

def partition_ok(g: Digraph, p: Partition, t: int) -> bool:
    """True iff every class of P induces a blowup(2, t)-free subdigraph."""
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices, digraph has {g.n}")
    spec = BlowupSpec(2, t)  # validates t >= 1
    memo: dict = {}
    for mask in p.class_masks():
        if chain_exists(g.out_masks, mask, spec.k, spec.t, memo):
            return False
    return True

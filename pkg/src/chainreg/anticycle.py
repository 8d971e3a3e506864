"""Construction of long induced anticycles inside expanded chain graphs.

For chains whose generators all have gap at least 2 and whose largest endpoint
exceeds the last small-left-endpoint generator's endpoint by exactly one, the
expanded graph G_{n+r} contains an induced complement-of-cycle for every
n >= 2r.  The vertices are produced greedily: a head segment walks from left
of the widest window up to the narrowest one (or is given in closed form when
the narrowest window already starts right of the widest), and a tail segment
then advances in steps of gap-1 through windows rearranged by increasing gap
until it clears the top window.  Each piece is driven by a pivot rearrangement
of the generator positions, returned in full for golden comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import ChainSpec, chain_indices, expand
from .errors import CaseMismatch, HypothesisViolated, IndexTooSmall, StartOutOfRange
from .graphs import AnticycleWitness, verify_anticycle


@dataclass(frozen=True)
class JTrace:
    """Rearrangement of generator positions toward smaller left endpoints.

    ``sets[t]`` lists the positions (1-based) picked at step t + 1; the pivot
    of each step is the smallest position of its set.
    """

    sets: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def beta(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class KTrace:
    """Rearrangement of generator positions toward larger right endpoints.

    The pivot of each step is the largest position of its set; the final pivot
    is always the last position carrying the maximal right endpoint.
    """

    sets: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def gamma(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class AnticycleTrace:
    """Full record of one construction run."""

    case: str
    epsilon: int
    d: int
    initial: tuple[int, ...]
    vertices: tuple[int, ...]
    j_trace: JTrace | None
    k_trace: KTrace

    @property
    def m(self) -> int:
        return len(self.vertices)


def _require_hypotheses(spec: ChainSpec) -> None:
    if spec.min_gap < 2:
        raise HypothesisViolated(
            f"every generator gap must be at least 2, found gap {spec.min_gap}"
        )
    idx = chain_indices(spec)
    j_q = spec.edges[idx.q - 1][1]
    if spec.max_endpoint != j_q + 1:
        raise HypothesisViolated(
            f"largest endpoint must be j_q + 1 = {j_q + 1}, found {spec.max_endpoint}"
        )


def build_J_sets(spec: ChainSpec) -> JTrace:
    """Head-segment rearrangement (applies when i_b <= i_h).

    Starting from the minimum-gap positions, each step collects, among the
    untouched positions strictly left of the current pivot, those of smallest
    gap; the walk stops once the pivot's left endpoint drops below i_b.
    """
    _require_hypotheses(spec)
    idx = chain_indices(spec)
    edges = spec.edges
    i_b = edges[idx.b - 1][0]
    i_h = edges[idx.h - 1][0]
    if i_h < i_b:
        raise CaseMismatch(
            f"i_h = {i_h} < i_b = {i_b}: the closed-form head applies instead"
        )
    sets = [tuple(idx.J1)]
    pivots = [idx.h]
    used = set(idx.J1)
    while edges[pivots[-1] - 1][0] >= i_b:
        bound = edges[pivots[-1] - 1][0]
        cands = [
            t
            for t in range(1, spec.s + 1)
            if t not in used and edges[t - 1][0] < bound
        ]
        if not cands:
            raise HypothesisViolated("head rearrangement ran out of candidates")
        g = min(edges[t - 1][1] - edges[t - 1][0] for t in cands)
        nxt = tuple(t for t in cands if edges[t - 1][1] - edges[t - 1][0] == g)
        sets.append(nxt)
        pivots.append(nxt[0])
        used.update(nxt)
    return JTrace(tuple(sets), tuple(pivots))


def build_K_sets(spec: ChainSpec) -> KTrace:
    """Tail-segment rearrangement.

    Starting again from the minimum-gap positions, each step collects, among
    the untouched positions with right endpoint beyond the current pivot's,
    those of smallest gap, until the pivot reaches the maximal right endpoint.
    When the minimum-gap block already contains it, nothing happens.
    """
    if spec.min_gap < 2:
        raise HypothesisViolated(
            f"every generator gap must be at least 2, found gap {spec.min_gap}"
        )
    idx = chain_indices(spec)
    edges = spec.edges
    j_B = edges[idx.B - 1][1]
    sets = [tuple(idx.J1)]
    pivots = [idx.H]
    used = set(idx.J1)
    while edges[pivots[-1] - 1][1] < j_B:
        bound = edges[pivots[-1] - 1][1]
        cands = [
            t
            for t in range(1, spec.s + 1)
            if t not in used and edges[t - 1][1] > bound
        ]
        if not cands:
            raise HypothesisViolated("tail rearrangement ran out of candidates")
        g = min(edges[t - 1][1] - edges[t - 1][0] for t in cands)
        nxt = tuple(t for t in cands if edges[t - 1][1] - edges[t - 1][0] == g)
        sets.append(nxt)
        pivots.append(nxt[-1])
        used.update(nxt)
    if pivots[-1] != idx.B:
        raise HypothesisViolated("tail rearrangement did not end at position B")
    return KTrace(tuple(sets), tuple(pivots))


def _head_start(i_anchor: int, gap: int, i_b: int) -> tuple[int, int]:
    """Largest multiple start eps*(gap-1) + i_anchor staying left of i_b."""
    step = gap - 1
    eps = (i_b - i_anchor - 1) // step
    return eps, eps * step + i_anchor


def initial_vertices(spec: ChainSpec, n: int) -> list[int]:
    """Head segment a_1 .. a_{d+1} (requires i_b <= i_h and n >= 2r).

    a_1 sits just left of i_b on the ladder of the last head pivot; each later
    vertex advances by gap-1 of the first pivot whose left endpoint has been
    reached, stopping once i_h is passed.
    """
    if n < 2 * spec.r:
        raise IndexTooSmall(f"need n >= 2r = {2 * spec.r}, got {n}")
    jt = build_J_sets(spec)
    idx = chain_indices(spec)
    edges = spec.edges
    i_b = edges[idx.b - 1][0]
    i_h = edges[idx.h - 1][0]
    u_beta = jt.pivots[-1]
    i_u, j_u = edges[u_beta - 1]
    _, a = _head_start(i_u, j_u - i_u, i_b)
    seq = [a]
    term = a
    while term < i_h:
        t = next(u for u in jt.pivots if edges[u - 1][0] <= term)
        i_t, j_t = edges[t - 1]
        term += j_t - i_t - 1
        seq.append(term)
    return seq


def final_vertices(spec: ChainSpec, n: int, a_index: int) -> list[int]:
    """Tail segment from a_index through a_m = n + j_B (requires n >= 2r).

    While the running vertex has not cleared n + i_B, advance by gap-1 of the
    first tail pivot whose window still reaches it, then close with n + j_B.
    """
    if n < 2 * spec.r:
        raise IndexTooSmall(f"need n >= 2r = {2 * spec.r}, got {n}")
    kt = build_K_sets(spec)
    idx = chain_indices(spec)
    edges = spec.edges
    i_h = edges[idx.h - 1][0]
    i_B, j_B = edges[idx.B - 1]
    if not (i_h <= a_index <= n + i_B):
        raise StartOutOfRange(
            f"start {a_index} must lie in [i_h, n + i_B] = [{i_h}, {n + i_B}]"
        )
    seq = [a_index]
    term = a_index
    while term <= n + i_B:
        t = next(v for v in kt.pivots if term <= n + edges[v - 1][0])
        i_t, j_t = edges[t - 1]
        term += j_t - i_t - 1
        seq.append(term)
    seq.append(n + j_B)
    return seq


def construct_anticycle(spec: ChainSpec, n: int) -> tuple[AnticycleWitness, AnticycleTrace]:
    """Build and verify an induced anticycle of G_{n+r} (n >= 2r).

    Case I (i_b <= i_h) chains the head and tail segments; case II starts the
    tail directly from a closed-form first pair.  The returned witness is
    always re-verified against the expanded graph before being handed back.
    """
    _require_hypotheses(spec)
    if n < 2 * spec.r:
        raise IndexTooSmall(f"need n >= 2r = {2 * spec.r}, got {n}")
    idx = chain_indices(spec)
    edges = spec.edges
    i_b = edges[idx.b - 1][0]
    i_h, j_h = edges[idx.h - 1]
    kt = build_K_sets(spec)
    if i_b <= i_h:
        jt = build_J_sets(spec)
        i_u, j_u = edges[jt.pivots[-1] - 1]
        eps, _ = _head_start(i_u, j_u - i_u, i_b)
        head = initial_vertices(spec, n)
        tail = final_vertices(spec, n, head[-1])
        vertices = tuple(head[:-1]) + tuple(tail)
        trace = AnticycleTrace(
            case="I",
            epsilon=eps,
            d=len(head) - 1,
            initial=tuple(head),
            vertices=vertices,
            j_trace=jt,
            k_trace=kt,
        )
    else:
        eps, a1 = _head_start(i_h, j_h - i_h, i_b)
        a2 = a1 + j_h - i_h - 1
        tail = final_vertices(spec, n, a2)
        vertices = (a1,) + tuple(tail)
        trace = AnticycleTrace(
            case="II",
            epsilon=eps,
            d=1,
            initial=(a1, a2),
            vertices=vertices,
            j_trace=None,
            k_trace=kt,
        )
    witness = AnticycleWitness(vertices)
    if not verify_anticycle(expand(spec, n + spec.r), witness):
        raise RuntimeError("constructed vertex sequence failed anticycle verification")
    return witness, trace

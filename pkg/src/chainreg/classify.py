"""Decision procedure for the limit regularity of a chain, with thresholds.

The eventual regularity of a chain of nonzero edge ideals is 2 or 3, and which
one is read off the (index-reduced) generator window: it is 2 exactly when the
last generator sharing the smallest left endpoint already carries the largest
endpoint, or when some generator has gap 1 and G_{3r} has no induced pair of
far-apart edges.  Every verdict comes with a case-specific onset index n0, the
uniform constancy threshold N, and its coarse bound in terms of r alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import ChainSpec, chain_indices, expand, q_invariant, reduce_index
from .errors import SubsetBudgetExceeded
from .graphs import find_induced_kK2, is_cochordal
from .oracle import DEFAULT_SUBSET_BUDGET, regularity

CASE_JQ_MAX = "jq-is-max"
CASE_GAP1 = "gap1-and-indmatch1"
CASE_ELSE = "else-reg3"


@dataclass(frozen=True)
class ClassifierVerdict:
    """Limit regularity with the case that decided it and all thresholds.

    ``n0`` is the index from which the verdict value is guaranteed; ``N`` the
    uniform constancy threshold max(5r, 2r(r-2), 4(r + q)); ``coarse`` its
    bound 2(r^2 + 5r).  ``reduced_r`` is the index after re-presentation,
    ``presented_r`` the one handed in.
    """

    limit_reg: int
    case: str
    n0: int
    N: int
    coarse: int
    limit_indmatch: int
    reduced_r: int
    presented_r: int

    def to_json(self) -> dict:
        return {
            "limit_reg": self.limit_reg,
            "case": self.case,
            "n0": self.n0,
            "N": self.N,
            "coarse": self.coarse,
            "limit_indmatch": self.limit_indmatch,
            "reduced_r": self.reduced_r,
        }


def stabilization_threshold(spec: ChainSpec) -> tuple[int, int]:
    """(N, coarse bound) for the given presentation."""
    r = spec.r
    N = max(5 * r, 2 * r * (r - 2), 4 * (r + q_invariant(spec)))
    return N, 2 * (r * r + 5 * r)


def limit_indmatch(spec: ChainSpec) -> int:
    """Eventual induced matching number, read off G_{3r}; always 1 or 2."""
    g = expand(spec, 3 * spec.r)
    return 2 if find_induced_kK2(g, 2) is not None else 1


def limit_regularity(spec: ChainSpec) -> ClassifierVerdict:
    """Classify the eventual regularity of the chain.

    The spec is index-reduced first, since the window pattern test is only
    meaningful at the minimal regeneration index.  Verdict-2 cases report the
    smaller threshold when both hold; verdict 3 reports 4r when G_{3r} already
    shows two far-apart edges, else 4(r + q).
    """
    presented_r = spec.r
    spec = reduce_index(spec)
    r = spec.r
    idx = chain_indices(spec)
    j_q = spec.edges[idx.q - 1][1]
    N, coarse = stabilization_threshold(spec)
    im = limit_indmatch(spec)
    if j_q == spec.max_endpoint:
        limit, case, n0 = 2, CASE_JQ_MAX, 3 * r
    elif spec.min_gap == 1 and im == 1:
        limit, case, n0 = 2, CASE_GAP1, max(5 * r, 2 * r * (r - 2))
    else:
        limit, case = 3, CASE_ELSE
        n0 = 4 * r if im == 2 else 4 * (r + q_invariant(spec))
    return ClassifierVerdict(
        limit_reg=limit,
        case=case,
        n0=n0,
        N=N,
        coarse=coarse,
        limit_indmatch=im,
        reduced_r=r,
        presented_r=presented_r,
    )


def sweep_verify(
    spec: ChainSpec,
    n_lo: int,
    n_hi: int,
    field_char: int = 2,
    oracle_cap: int = DEFAULT_SUBSET_BUDGET,
) -> dict:
    """Cross-validate the verdict against per-index evidence on [n_lo, n_hi].

    Every index gets the polynomial cochordality check; indices up to
    ``oracle_cap`` also get the full homology oracle.  Rows at or beyond the
    verdict threshold n0 are flagged when the observed value (or, lacking one,
    the cochordality status) contradicts the predicted limit.  The window
    below n0 is unconstrained and never flagged.
    """
    if not (spec.r <= n_lo <= n_hi):
        raise ValueError(f"need r <= n_lo <= n_hi, got r={spec.r}, [{n_lo}, {n_hi}]")
    verdict = limit_regularity(spec)
    rows = []
    violations = []
    for n in range(n_lo, n_hi + 1):
        g = expand(spec, n)
        coch = is_cochordal(g)
        reg_val = None
        method = None
        if n <= oracle_cap:
            try:
                rep = regularity(g, field_char=field_char, subset_budget=oracle_cap)
                reg_val, method = rep.value, rep.method
            except SubsetBudgetExceeded:
                pass
        if reg_val is None and coch:
            reg_val, method = 2, "froeberg"
        row = {"n": n, "cochordal": coch, "reg": reg_val, "method": method, "flag": False}
        if reg_val is None and not coch:
            row["reg_lower"] = 3
        if n >= verdict.n0:
            if reg_val is not None:
                row["flag"] = reg_val != verdict.limit_reg
            else:
                row["flag"] = coch != (verdict.limit_reg == 2)
        rows.append(row)
        if row["flag"]:
            violations.append(n)
    return {
        "spec": spec.to_json(),
        "field_char": field_char,
        "oracle_cap": oracle_cap,
        "verdict": verdict.to_json(),
        "rows": rows,
        "violations": violations,
    }

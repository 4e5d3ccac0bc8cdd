"""End-to-end report for one member of the two-generator link family.

Ties the pieces together: build the presentation, check the zero-linking
hypothesis on the family's 2-component surgery data, certify the group
(abelianization plus coset enumeration), run the bounded trivialization
search, and list candidate partner slopes.  The search can only ever
certify facts relative to its bounds; the fixed caveat below rides along in
every report.
"""

from __future__ import annotations

import time

from . import acsearch
from .acsearch import SearchConfig
from .certify import abelianization, todd_coxeter, verify_coset_table
from .framedlinks import zero_model
from .presentations import ak_presentation
from .slopes import enumerate_candidates

CAVEAT = ("A search that exhausts its bounds, or runs out of budget, certifies "
          "only that no trivialization exists within those bounds; it says "
          "nothing about the Andrews-Curtis class itself, for which no "
          "distinguishing invariant is known.")

DEFAULT_COSET_BUDGET = 100_000
DEFAULT_MAX_Q = 3


def default_search_config(p, max_total_length=None, max_depth=5,
                          conjugator_depth=1, node_budget=5_000,
                          stabilizations=0, workers=1) -> SearchConfig:
    """Desk-scale defaults; the length cap leaves room for one relator to be
    multiplied through another."""
    if max_total_length is None:
        max_total_length = p.total_relator_length() + 8
    return SearchConfig(max_total_length=max_total_length, max_depth=max_depth,
                        conjugator_depth=conjugator_depth,
                        node_budget=node_budget,
                        stabilizations=stabilizations, workers=workers)


def run_pipeline(n: int, w: str = "y x", search_cfg: SearchConfig | None = None,
                 coset_budget: int = DEFAULT_COSET_BUDGET,
                 max_q: int = DEFAULT_MAX_Q) -> dict:
    """Produce the full JSON-ready report for family member n."""
    start = time.time()
    p = ak_presentation(n, w)
    if search_cfg is None:
        search_cfg = default_search_config(p)

    gpr = zero_model(2).gpr_hypothesis_check()
    ab = abelianization(p)
    coset = todd_coxeter(p, coset_budget)
    coset_json = coset.to_json()
    if coset.closed():
        coset_json["verified"] = verify_coset_table(coset, p)

    outcome = acsearch.search(p, search_cfg)

    report = {
        "input": {"n": n, "w": w},
        "presentation": p.to_json(),
        "gpr_hypothesis": gpr.to_json(),
        "abelianization": ab.to_json(),
        "coset": coset_json,
        "search": {"config": search_cfg.to_json(), **outcome.to_json()},
        "candidate_slopes": {"max_q": max_q,
                             "slopes": [str(s) for s in enumerate_candidates(max_q)]},
        "caveat": CAVEAT,
        "meta": {"timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
                 "elapsed_seconds": round(time.time() - start, 3),
                 "kernel": acsearch.KERNEL_IMPL},
    }
    return report


def summarize(report: dict) -> str:
    """Human-readable digest of a pipeline report."""
    lines = []
    inp = report["input"]
    lines.append(f"family member n={inp['n']}, w={inp['w']!r}")
    gpr = report["gpr_hypothesis"]
    lines.append("zero-linking hypothesis on the 2-component data: "
                 + ("passes" if gpr["passes"] else "FAILS"))
    ab = report["abelianization"]
    h1 = "trivial" if ab["rank"] == 0 and not ab["torsion"] else \
        f"rank {ab['rank']}, torsion {ab['torsion']}"
    lines.append(f"abelianization: {h1}")
    coset = report["coset"]
    if coset["status"] == "closed":
        lines.append(f"coset enumeration: closed, group order {coset['order']} "
                     f"({coset['defined']} cosets defined, "
                     f"verified={coset.get('verified')})")
    else:
        lines.append(f"coset enumeration: budget exhausted "
                     f"({coset['live']} live / {coset['defined']} defined)")
    s = report["search"]
    lines.append(f"trivialization search: {s['status']} "
                 f"(nodes={s['stats']['nodes_expanded']}, "
                 f"forms={s['stats']['distinct_keys']})")
    if s["status"] == "trivialized":
        lines.append(f"  trace length {len(s['trace'])}")
    cand = report["candidate_slopes"]
    lines.append(f"candidate slopes up to q={cand['max_q']}: "
                 + ", ".join(cand["slopes"]))
    lines.append(report["caveat"])
    return "\n".join(lines)

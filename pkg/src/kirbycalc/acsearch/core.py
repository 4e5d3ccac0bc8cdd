"""Bounded breadth-first search for Andrews-Curtis trivializations.

Nodes are balanced presentations deduplicated by a canonical form that folds
in relator order, cyclic rotation, and generator relabeling.  Relator
inversion is deliberately NOT folded into the dedup key: inversion is a move,
and multiplication only ever uses r_j itself, so collapsing a node with its
inverted variants would prune reachable successors.  The full-equivalence
key (inversion included) is exposed separately as canonical_key.  Every
reported trivialization is replayed through the public move operations
before it is returned.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .. import presentations as pres
from ..presentations import BalancedPresentation, fresh_generator
from ..words import Word
from . import kernel


class BoundsError(ValueError):
    """Input violates the configured search bounds."""


class TraceError(ValueError):
    """A trace step could not be applied."""

    def __init__(self, step: int, reason: str):
        self.step = step
        super().__init__(f"trace step {step}: {reason}")


@dataclass(frozen=True)
class SearchConfig:
    max_total_length: int
    max_depth: int
    conjugator_depth: int = 1
    node_budget: int = 100_000
    stabilizations: int = 0
    workers: int = 1

    def __post_init__(self):
        for name in ("max_total_length", "max_depth", "conjugator_depth",
                     "stabilizations"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    def to_json(self) -> dict:
        return {"max_total_length": self.max_total_length,
                "max_depth": self.max_depth,
                "conjugator_depth": self.conjugator_depth,
                "node_budget": self.node_budget,
                "stabilizations": self.stabilizations,
                "workers": self.workers}


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    distinct_keys: int = 0
    max_frontier: int = 0

    def to_json(self) -> dict:
        return {"nodes_expanded": self.nodes_expanded,
                "distinct_keys": self.distinct_keys,
                "max_frontier": self.max_frontier}


TRIVIALIZED = "trivialized"
EXHAUSTED = "exhausted"
BUDGET = "budget"


@dataclass
class SearchOutcome:
    status: str
    stats: SearchStats
    trace: Optional[list[dict]] = None

    def to_json(self) -> dict:
        data = {"status": self.status, "stats": self.stats.to_json()}
        if self.trace is not None:
            data["trace"] = self.trace
        return data


# -- encoding ---------------------------------------------------------------

def _encode_word(word: Word, index: dict) -> tuple[int, ...]:
    return tuple((index[sym] << 1) | (0 if sign > 0 else 1)
                 for sym, sign in word.letters)


def _decode_word(code, gens) -> Word:
    return Word([(gens[a >> 1], 1 if a & 1 == 0 else -1) for a in code])


def encode_presentation(p: BalancedPresentation):
    index = {g: i for i, g in enumerate(p.generators)}
    return tuple(_encode_word(r, index) for r in p.relators), p.generators


def canonical_key(p: BalancedPresentation) -> bytes:
    """Stable key, equal exactly for presentations that agree up to relator
    order, relator inversion, cyclic rotation, and generator relabeling."""
    rels, gens = encode_presentation(p)
    return kernel.canonical_key(rels, len(gens))


def is_trivial_form(p: BalancedPresentation) -> bool:
    """True when the relators are, up to order and inversion, exactly the
    generators, each occurring once."""
    rels, gens = encode_presentation(p)
    return kernel.is_trivial_encoded(rels, len(gens))


@lru_cache(maxsize=None)
def _conjugators(n_gens: int, depth: int):
    """Freely reduced conjugator words of length <= depth, in length-lex
    order over the letters x0, X0, x1, X1, ..."""
    words = [()]
    level = [()]
    for _ in range(depth):
        nxt = []
        for w in level:
            for a in range(2 * n_gens):
                if w and w[-1] == a ^ 1:
                    continue
                nxt.append(w + (a,))
        words.extend(nxt)
        level = nxt
    return tuple(words)


# -- move application (symbolic, for replay) --------------------------------

def apply_move(p: BalancedPresentation, move: dict) -> BalancedPresentation:
    kind = move.get("move")
    if kind == "invert":
        return pres.ac_invert(p, move["i"])
    if kind == "conjugate":
        return pres.ac_conjugate(p, move["i"], Word.from_text(move["conj"]))
    if kind == "multiply":
        return pres.ac_multiply(p, move["i"], move["j"], Word.from_text(move["conj"]))
    if kind == "stabilize":
        return pres.stabilize(p)
    if kind == "destabilize":
        return pres.destabilize(p, move["i"])
    raise pres.MoveError(f"unknown move kind {kind!r}")


def replay_trace(p: BalancedPresentation, trace) -> BalancedPresentation:
    """Apply a move sequence, failing with the offending step index."""
    current = p
    for step, move in enumerate(trace):
        try:
            current = apply_move(current, move)
        except (pres.MoveError, KeyError, TypeError) as exc:
            raise TraceError(step, str(exc)) from exc
    return current


# -- expansion --------------------------------------------------------------

def _decode_conj(conj, gens) -> str:
    return _decode_word(conj, gens).to_text()


def _expand(rels, gens, cfg: SearchConfig, base_gens: int):
    """All legal single-move successors, in the fixed enumeration order:
    inversions, single-letter conjugations, multiplications (conjugators in
    length-lex order), stabilization, destabilization."""
    n = len(gens)
    total = sum(len(r) for r in rels)
    cap = cfg.max_total_length
    out = []

    for i in range(len(rels)):
        new = kernel.invert_word(rels[i])
        out.append(({"move": "invert", "i": i},
                    rels[:i] + (new,) + rels[i + 1:], gens))

    for i in range(len(rels)):
        rest = total - len(rels[i])
        for a in range(2 * n):
            new = kernel.conjugate_relator(rels[i], (a,))
            if rest + len(new) <= cap:
                out.append(({"move": "conjugate", "i": i,
                             "conj": _decode_conj((a,), gens)},
                            rels[:i] + (new,) + rels[i + 1:], gens))

    conjugators = _conjugators(n, cfg.conjugator_depth)
    for i in range(len(rels)):
        rest = total - len(rels[i])
        for j in range(len(rels)):
            if i == j:
                continue
            for conj in conjugators:
                new = kernel.multiply_relator(rels[i], rels[j], conj)
                if rest + len(new) <= cap:
                    out.append(({"move": "multiply", "i": i, "j": j,
                                 "conj": _decode_conj(conj, gens)},
                                rels[:i] + (new,) + rels[i + 1:], gens))

    if n - base_gens < cfg.stabilizations and total + 1 <= cap:
        g = fresh_generator(gens)
        out.append(({"move": "stabilize"},
                    rels + ((n << 1,),), gens + (g,)))

    for i in range(len(rels)):
        if len(rels[i]) != 1:
            continue
        sym = rels[i][0] >> 1
        if any(k != i and any(a >> 1 == sym for a in r)
               for k, r in enumerate(rels)):
            continue
        new_rels = tuple(
            tuple(a - 2 if a >> 1 > sym else a for a in r)
            for k, r in enumerate(rels) if k != i)
        new_gens = tuple(g for k, g in enumerate(gens) if k != sym)
        out.append(({"move": "destabilize", "i": i}, new_rels, new_gens))

    return out


# -- the search -------------------------------------------------------------

def search(p: BalancedPresentation, cfg: SearchConfig) -> SearchOutcome:
    """Breadth-first bounded search for a trivializing move sequence.

    The status (trivialized / exhausted / budget) is deterministic for a
    fixed config, independent of the worker count; traces may differ but are
    always validated by replay before being reported.
    """
    if not isinstance(p, BalancedPresentation):
        raise BoundsError("search requires a balanced presentation")
    if p.total_relator_length() > cfg.max_total_length:
        raise BoundsError(
            f"input total relator length {p.total_relator_length()} exceeds "
            f"max_total_length {cfg.max_total_length}")

    rels, gens = encode_presentation(p)
    base_gens = len(gens)
    root_key = kernel.search_key(rels, len(gens))
    stats = SearchStats(nodes_expanded=0, distinct_keys=1, max_frontier=1)

    if kernel.is_trivial_encoded(rels, len(gens)):
        return SearchOutcome(TRIVIALIZED, stats, trace=[])

    parents: dict[bytes, tuple[Optional[bytes], Optional[dict]]] = {root_key: (None, None)}
    frontier = [(root_key, rels, gens)]
    budget_hit = False
    goal: Optional[tuple[bytes, dict]] = None

    def expand_one(node):
        _, nrels, ngens = node
        return _expand(nrels, ngens, cfg, base_gens)

    executor = ThreadPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        for _depth in range(cfg.max_depth):
            if not frontier or goal is not None:
                break
            take = len(frontier)
            if stats.nodes_expanded + take > cfg.node_budget:
                take = cfg.node_budget - stats.nodes_expanded
                budget_hit = True
            batch = frontier[:take]
            if executor is not None:
                expansions = list(executor.map(expand_one, batch))
            else:
                expansions = [expand_one(node) for node in batch]
            stats.nodes_expanded += take

            next_frontier = []
            for (node_key, _, _), children in zip(batch, expansions):
                for move, crels, cgens in children:
                    if goal is None and kernel.is_trivial_encoded(crels, len(cgens)):
                        goal = (node_key, move)
                    key = kernel.search_key(crels, len(cgens))
                    if key not in parents:
                        parents[key] = (node_key, move)
                        next_frontier.append((key, crels, cgens))
            if goal is not None:
                break
            if budget_hit:
                break
            frontier = next_frontier
            stats.max_frontier = max(stats.max_frontier, len(frontier))
            if stats.nodes_expanded >= cfg.node_budget and frontier:
                budget_hit = True
                break
    finally:
        if executor is not None:
            executor.shutdown(wait=False)

    stats.distinct_keys = len(parents)

    if goal is not None:
        node_key, last_move = goal
        moves = [last_move]
        while True:
            parent_key, move = parents[node_key]
            if move is None:
                break
            moves.append(move)
            node_key = parent_key
        trace = list(reversed(moves))
        final = replay_trace(p, trace)
        if not is_trivial_form(final):
            raise AssertionError("search produced a trace that does not replay "
                                 "to a trivial form")
        return SearchOutcome(TRIVIALIZED, stats, trace=trace)

    if budget_hit:
        return SearchOutcome(BUDGET, stats)
    return SearchOutcome(EXHAUSTED, stats)

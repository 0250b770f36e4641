"""Network rewrites.

pre_exchange flips the swap bias of one link by relabeling the two wires it
touches in everything upstream, which is the same as feeding the network a
pre-transposed input: sorting capability is untouched and the target's
exchange probability p becomes 1-p. deoffend drives every link's bias to
at most one half. fuse merges guarded link pairs into fused elements once
the at-most-one-exchange premise is certified. minimize_max_swaps searches
over bias-neutral pre-exchanges for a lower worst case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import engine
from .core import Element, Fused2, Link, Network, check_valid

HALF = Fraction(1, 2)


def _all_links(net: Network, op: str) -> None:
    if any(not isinstance(e, Link) for e in net.elements):
        raise ValueError(f"{op} requires a decomposed (all-link) network")


def _wrapping_element(net: Network, target: int) -> Element | None:
    """An upstream element that makes the transposition unsound, if any.

    Relabeling upstream endpoints only re-routes the input when every
    relabeled comparator keeps its min-to-lower-wire orientation. An
    earlier link on exactly the target pair, or with one endpoint on the
    pair and the other strictly between them, flips orientation under the
    relabeling, and the rewrite would change what the network computes.
    """
    i, j = net.elements[target].endpoints
    for el in net.elements[:target]:
        u, v = el.endpoints
        if {u, v} == {i, j}:
            return el
        shared = {u, v} & {i, j}
        if len(shared) == 1 and i < (({u, v}) - shared).pop() < j:
            return el
    return None


def can_pre_exchange(net: Network, target: int) -> bool:
    """True when the target link admits a function-preserving pre-exchange."""
    if not 0 <= target < len(net.elements):
        raise ValueError(f"target {target} out of range (network has {len(net.elements)} elements)")
    return _wrapping_element(net, target) is None


def pre_exchange(net: Network, target: int) -> Network:
    """Transpose the target link's two wires in every earlier element.

    The target and everything after it stay as written; endpoints are
    re-normalized ascending. The rewrite is the identity on the computed
    function up to a transposition of the input, so sorting capability is
    preserved and the target's exchange probability p becomes 1-p.
    Applying the transform twice at the same target restores the network.

    Raises ValueError for targets where an upstream element wraps the
    pair (see _wrapping_element): there the rewrite could not keep the
    network's function and is refused.
    """
    check_valid(net)
    _all_links(net, "pre_exchange")
    if not 0 <= target < len(net.elements):
        raise ValueError(f"target {target} out of range (network has {len(net.elements)} elements)")
    blocker = _wrapping_element(net, target)
    if blocker is not None:
        raise ValueError(
            f"pre-exchange at element {target} {net.elements[target].endpoints} would "
            f"change the network function: earlier element {blocker.endpoints} wraps "
            "the target pair"
        )
    i, j = net.elements[target].endpoints

    def relabel(el: Element) -> Element:
        swapped = tuple(j if w == i else i if w == j else w for w in el.endpoints)
        return type(el)(*sorted(swapped))

    head = tuple(relabel(e) for e in net.elements[:target])
    return Network(net.order, head + net.elements[target:])


def deoffend(net: Network, max_order: int | None = None) -> Network:
    """Repeatedly pre-exchange the earliest link that swaps more often than
    not, until no link's probability exceeds one half.

    A convergence cap of element-count^2 rounds applies; if it is hit, the
    network with the best average seen so far is returned.
    """
    check_valid(net)
    _all_links(net, "deoffend")
    current = net
    best = net
    best_avg: Fraction | None = None
    for _ in range(len(net.elements) ** 2 + 1):
        report = engine.exhaustive_stats(current, max_order=max_order)
        if best_avg is None or report.avg_swaps < best_avg:
            best, best_avg = current, report.avg_swaps
        offender = next(
            (k for k, ep in enumerate(report.element_probs) if ep.slots[0] > HALF), None
        )
        if offender is None:
            return current
        current = pre_exchange(current, offender)
    return best


def _mergeable(first: Link, second: Link) -> tuple[int, int, int] | None:
    """The (a,b,c) triple if the two links chain through a shared middle wire."""
    shared = set(first.endpoints) & set(second.endpoints)
    if len(shared) != 1:
        return None
    a, b, c = sorted(set(first.endpoints) | set(second.endpoints))
    return (a, b, c) if shared == {b} else None


def _disjoint(x: Element, y: Element) -> bool:
    return not set(x.endpoints) & set(y.endpoints)


def fuse(net: Network, max_order: int | None = None) -> Network:
    """Merge certified non-interfering link pairs into fused pairs.

    A pair (a,b),(b,c) qualifies when every element between the two is
    wire-disjoint from the later link (so it can slide next to the earlier
    one without crossing anything it touches) and the exhaustive check
    proves the two never both exchange. Outputs are unchanged on every
    input; swap statistics are identical and comparisons can only drop.
    """
    check_valid(net)
    elements = list(net.elements)
    changed = True
    while changed:
        changed = False
        for p, ep in enumerate(elements):
            if not isinstance(ep, Link):
                continue
            for q in range(p + 1, len(elements)):
                eq = elements[q]
                if not isinstance(eq, Link):
                    continue
                triple = _mergeable(ep, eq)
                if triple is None:
                    continue
                if not all(_disjoint(elements[r], eq) for r in range(p + 1, q)):
                    continue
                probe = Network(net.order, tuple(elements))
                if not engine.noninterference_check(probe, p, q, max_order=max_order):
                    continue
                del elements[q]
                elements[p] = Fused2(*triple)
                changed = True
                break
            if changed:
                break
    return Network(net.order, tuple(elements), net.name)


@dataclass(frozen=True)
class MinimizeResult:
    network: Network
    max_swaps: int
    avg_swaps: Fraction
    explored: int
    budget_exhausted: bool


def minimize_max_swaps(net: Network, budget: int = 1000) -> MinimizeResult:
    """Breadth-first search over pre-exchanges at even-odds links.

    Only links with exchange probability exactly one half are transposed;
    such a transposition leaves the average swap count unchanged (checked
    on every candidate) while the worst case may drop. Returns the
    reachable network with the smallest maximum, ties broken by smallest
    average and then earliest discovery. `budget` caps the number of
    candidate applications; hitting it returns the best seen with the
    budget_exhausted flag raised.
    """
    check_valid(net)
    _all_links(net, "minimize_max_swaps")
    if net.order > 8:
        raise engine.LimitExceeded(f"order {net.order} exceeds minimize_max_swaps cap 8")
    start = engine.exhaustive_stats(net)
    best = (start.max_swaps, start.avg_swaps)
    best_net = net
    seen = {net.elements}
    frontier = [net]
    explored = 0
    exhausted = False
    while frontier and not exhausted:
        next_frontier = []
        for current in frontier:
            report = engine.exhaustive_stats(current)
            halves = [k for k, ep in enumerate(report.element_probs) if ep.slots[0] == HALF]
            for target in halves:
                if explored >= budget:
                    exhausted = True
                    break
                explored += 1
                candidate = pre_exchange(current, target)
                if candidate.elements in seen:
                    continue
                seen.add(candidate.elements)
                cand_report = engine.exhaustive_stats(candidate)
                assert cand_report.avg_swaps == start.avg_swaps, (
                    "even-odds pre-exchange changed the average swap count"
                )
                if (cand_report.max_swaps, cand_report.avg_swaps) < best:
                    best = (cand_report.max_swaps, cand_report.avg_swaps)
                    best_net = candidate
                next_frontier.append(candidate)
            if exhausted:
                break
        frontier = next_frontier
    return MinimizeResult(best_net, best[0], best[1], explored, exhausted)

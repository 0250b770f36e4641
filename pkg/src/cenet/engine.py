"""Exhaustive network analysis.

Statistics are exact: inputs are enumerated completely (all N! orderings of
distinct keys for swap statistics, all 2^N zero-one vectors for sortedness
and settledness) and every probability or average is a Fraction of integer
counts, so results carry no rounding and are identical across runs and
partitionings of the enumeration. numpy only shuttles the counting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import Fused2, Fused3, Link, Network, check_valid, schedule

PERMUTATION_CAP = 10  # N! enumeration ceiling
ZERO_ONE_CAP = 16  # 2^N enumeration ceiling

DEFAULT_COST_WEIGHT = Fraction(2)  # exchanges priced at twice a comparison


class LimitExceeded(Exception):
    """Requested enumeration is beyond the configured order cap."""


def _check_cap(order: int, cap: int | None, default_cap: int, what: str) -> None:
    limit = default_cap if cap is None else cap
    if order > limit:
        raise LimitExceeded(f"order {order} exceeds {what} cap {limit}")


@lru_cache(maxsize=3)
def _permutation_rows(order: int) -> np.ndarray:
    rows = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(range(1, order + 1))),
        dtype=np.int8,
    )
    rows = rows.reshape(-1, order)
    rows.setflags(write=False)
    return rows


@lru_cache(maxsize=3)
def _binary_rows(order: int) -> np.ndarray:
    codes = np.arange(2**order, dtype=np.uint32)
    rows = ((codes[:, None] >> np.arange(order, dtype=np.uint32)) & 1).astype(np.int8)
    rows.setflags(write=False)
    return rows


def _swap_where(states: np.ndarray, mask: np.ndarray, i: int, j: int) -> None:
    tmp = states[mask, i].copy()
    states[mask, i] = states[mask, j]
    states[mask, j] = tmp


@dataclass
class _Sweep:
    states: np.ndarray
    slot_counts: list[int]  # swaps per constituent link, listing order
    activation_counts: list[int]  # inputs where the element swapped at all
    row_swaps: np.ndarray
    row_comparisons: np.ndarray
    masks: dict[int, np.ndarray]  # element index -> per-row "element swapped"


def _sweep(net: Network, states: np.ndarray, want_masks: frozenset[int] = frozenset()) -> _Sweep:
    """Run every row of `states` through the network at once."""
    states = states.copy()
    nrows = states.shape[0]
    row_swaps = np.zeros(nrows, dtype=np.int16)
    row_comparisons = np.zeros(nrows, dtype=np.int16)
    slot_counts: list[int] = []
    activation_counts: list[int] = []
    masks: dict[int, np.ndarray] = {}
    for idx, el in enumerate(net.elements):
        if isinstance(el, Link):
            i, j = el.i - 1, el.j - 1
            m = states[:, i] > states[:, j]
            _swap_where(states, m, i, j)
            slot_counts.append(int(m.sum()))
            active = m
            row_comparisons += 1
        elif isinstance(el, Fused2):
            a, b, c = el.a - 1, el.b - 1, el.c - 1
            m1 = states[:, a] > states[:, b]
            _swap_where(states, m1, a, b)
            m2 = ~m1 & (states[:, b] > states[:, c])
            _swap_where(states, m2, b, c)
            slot_counts += [int(m1.sum()), int(m2.sum())]
            active = m1 | m2
            row_comparisons += 2 - m1.astype(np.int16)
        else:
            a, b, c, d = el.a - 1, el.b - 1, el.c - 1, el.d - 1
            mc = states[:, b] > states[:, c]
            _swap_where(states, mc, b, c)
            quiet = ~mc
            mw1 = quiet & (states[:, a] > states[:, b])
            _swap_where(states, mw1, a, b)
            mw2 = quiet & (states[:, c] > states[:, d])
            _swap_where(states, mw2, c, d)
            slot_counts += [int(mw1.sum()), int(mc.sum()), int(mw2.sum())]
            active = mc | mw1 | mw2
            row_swaps += mc.astype(np.int16) + mw1 + mw2
            row_comparisons += 3 - 2 * mc.astype(np.int16)
            activation_counts.append(int(active.sum()))
            if idx in want_masks:
                masks[idx] = active
            continue
        row_swaps += active  # Link / Fused2 swap at most once per input
        activation_counts.append(int(active.sum()))
        if idx in want_masks:
            masks[idx] = active
    return _Sweep(states, slot_counts, activation_counts, row_swaps, row_comparisons, masks)


@dataclass(frozen=True)
class ElementProbability:
    """Per-element swap behaviour over the full input enumeration.

    `slots` holds one exchange probability per constituent link (listing
    order); `activation` is the chance the element swapped at all.
    """

    slots: tuple[Fraction, ...]
    activation: Fraction


@dataclass(frozen=True)
class StatsReport:
    order: int
    links: int
    element_probs: tuple[ElementProbability, ...]
    avg_swaps: Fraction
    max_swaps: int
    worst_inputs: tuple[tuple[int, ...], ...]
    avg_comparisons: Fraction
    max_comparisons: int
    histogram: tuple[tuple[int, int], ...]  # (swap count, inputs) pairs, ascending
    settled: frozenset[int]
    disorder: int
    stages: int
    weighted_cost: Fraction

    def histogram_dict(self) -> dict[int, int]:
        return dict(self.histogram)

    def slot_probabilities(self) -> tuple[Fraction, ...]:
        return tuple(p for ep in self.element_probs for p in ep.slots)


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def stats_to_json(report: StatsReport) -> dict:
    """Fixed-field JSON form of a StatsReport (fractions as "num/den")."""
    return {
        "order": report.order,
        "links": report.links,
        "element_probs": [
            {
                "slots": [_fraction_str(p) for p in ep.slots],
                "activation": _fraction_str(ep.activation),
            }
            for ep in report.element_probs
        ],
        "avg_swaps": _fraction_str(report.avg_swaps),
        "max_swaps": report.max_swaps,
        "worst_inputs": [list(w) for w in report.worst_inputs],
        "avg_comparisons": _fraction_str(report.avg_comparisons),
        "max_comparisons": report.max_comparisons,
        "histogram": {str(k): v for k, v in report.histogram},
        "settled": sorted(report.settled),
        "disorder": report.disorder,
        "stages": report.stages,
        "weighted_cost": _fraction_str(report.weighted_cost),
    }


def exhaustive_stats(
    net: Network,
    cost_weight: Fraction = DEFAULT_COST_WEIGHT,
    max_order: int | None = None,
) -> StatsReport:
    """Exact swap/comparison statistics over all order! permutation inputs.

    A wire is "settled" when it holds its sorted rank on every input;
    disorder counts the unsettled wires. The weighted cost prices the
    average run as comparisons + cost_weight * swaps.
    """
    return _stats_cached(net, Fraction(cost_weight), max_order)


@lru_cache(maxsize=128)
def _stats_cached(net: Network, cost_weight: Fraction, max_order: int | None) -> StatsReport:
    check_valid(net)
    _check_cap(net.order, max_order, PERMUTATION_CAP, "permutation enumeration")
    rows = _permutation_rows(net.order)
    nperm = rows.shape[0]
    sweep = _sweep(net, rows)

    element_probs = []
    cursor = 0
    for el, act in zip(net.elements, sweep.activation_counts):
        width = len(el.constituent_links())
        slots = tuple(Fraction(c, nperm) for c in sweep.slot_counts[cursor : cursor + width])
        element_probs.append(ElementProbability(slots, Fraction(act, nperm)))
        cursor += width

    total_swaps = int(sweep.row_swaps.sum(dtype=np.int64))
    max_swaps = int(sweep.row_swaps.max(initial=0))
    worst = tuple(
        tuple(int(v) for v in rows[r]) for r in np.flatnonzero(sweep.row_swaps == max_swaps)
    )
    counts = np.bincount(sweep.row_swaps)
    histogram = tuple((k, int(c)) for k, c in enumerate(counts) if c)
    settled = frozenset(
        w for w in range(1, net.order + 1) if bool((sweep.states[:, w - 1] == w).all())
    )
    avg_swaps = Fraction(total_swaps, nperm)
    avg_comparisons = Fraction(int(sweep.row_comparisons.sum(dtype=np.int64)), nperm)
    return StatsReport(
        order=net.order,
        links=net.link_count,
        element_probs=tuple(element_probs),
        avg_swaps=avg_swaps,
        max_swaps=max_swaps,
        worst_inputs=worst,
        avg_comparisons=avg_comparisons,
        max_comparisons=int(sweep.row_comparisons.max(initial=0)),
        histogram=histogram,
        settled=settled,
        disorder=net.order - len(settled),
        stages=schedule(net).stage_count,
        weighted_cost=avg_comparisons + cost_weight * avg_swaps,
    )


def histogram(net: Network, max_order: int | None = None) -> dict[int, int]:
    """Distribution of total swaps over the full permutation enumeration."""
    check_valid(net)
    _check_cap(net.order, max_order, PERMUTATION_CAP, "permutation enumeration")
    rows = _permutation_rows(net.order)
    sweep = _sweep(net, rows)
    counts = np.bincount(sweep.row_swaps)
    return {k: int(c) for k, c in enumerate(counts) if c}


def verify_sorts(net: Network, max_order: int | None = None) -> bool:
    """True iff the network sorts every input.

    Decided on all 2^order zero-one vectors: a compare-exchange network
    (including the fused elements, which compose monotone exchanges) sorts
    everything iff it sorts every such vector.
    """
    check_valid(net)
    _check_cap(net.order, max_order, ZERO_ONE_CAP, "zero-one enumeration")
    out = _sweep(net, _binary_rows(net.order)).states
    return bool((out[:, :-1] <= out[:, 1:]).all())


def verify_selection(net: Network, rank: int, position: int, max_order: int | None = None) -> bool:
    """True iff output wire `position` carries the rank-th smallest value on
    every permutation input."""
    check_valid(net)
    if not 1 <= rank <= net.order:
        raise ValueError(f"rank {rank} outside 1..{net.order}")
    if not 1 <= position <= net.order:
        raise ValueError(f"position {position} outside 1..{net.order}")
    _check_cap(net.order, max_order, PERMUTATION_CAP, "permutation enumeration")
    out = _sweep(net, _permutation_rows(net.order)).states
    return bool((out[:, position - 1] == rank).all())


def settled_positions(net: Network, max_order: int | None = None) -> frozenset[int]:
    """Wires guaranteed to hold their sorted rank, decided on zero-one vectors."""
    check_valid(net)
    _check_cap(net.order, max_order, ZERO_ONE_CAP, "zero-one enumeration")
    rows = _binary_rows(net.order)
    out = _sweep(net, rows).states
    zeros = net.order - rows.sum(axis=1, dtype=np.int16)
    settled = []
    for p in range(1, net.order + 1):
        ranked = (p > zeros).astype(np.int8)  # sorted vector at position p
        if bool((out[:, p - 1] == ranked).all()):
            settled.append(p)
    return frozenset(settled)


def noninterference_check(
    net: Network, first: int, second: int, max_order: int | None = None
) -> bool:
    """Certify that two wire-sharing links never both exchange on any input.

    Preconditions: both indices name plain links, they share exactly one
    wire, and first precedes second in the element sequence.
    """
    check_valid(net)
    n = len(net.elements)
    if not (0 <= first < n and 0 <= second < n):
        raise ValueError(f"element index out of range (network has {n} elements)")
    if not first < second:
        raise ValueError("first element must precede second")
    e1, e2 = net.elements[first], net.elements[second]
    if not (isinstance(e1, Link) and isinstance(e2, Link)):
        raise ValueError("both elements must be plain links")
    shared = set(e1.endpoints) & set(e2.endpoints)
    if len(shared) != 1:
        raise ValueError(f"links must share exactly one wire, share {sorted(shared)}")
    _check_cap(net.order, max_order, PERMUTATION_CAP, "permutation enumeration")
    masks = _sweep(net, _permutation_rows(net.order), frozenset((first, second))).masks
    return not bool((masks[first] & masks[second]).any())


@dataclass(frozen=True)
class JointSwapTable:
    """2x2 joint swap counts of two elements over all permutation inputs."""

    neither: int
    first_only: int
    second_only: int
    both: int

    @property
    def total(self) -> int:
        return self.neither + self.first_only + self.second_only + self.both

    @property
    def first_marginal(self) -> Fraction:
        return Fraction(self.first_only + self.both, self.total)

    @property
    def second_marginal(self) -> Fraction:
        return Fraction(self.second_only + self.both, self.total)

    def second_given_first(self) -> Fraction:
        hits = self.first_only + self.both
        if hits == 0:
            raise ValueError("first element never swaps; conditional undefined")
        return Fraction(self.both, hits)

    def first_given_second(self) -> Fraction:
        hits = self.second_only + self.both
        if hits == 0:
            raise ValueError("second element never swaps; conditional undefined")
        return Fraction(self.both, hits)


def joint_swap_table(
    net: Network, first: int, second: int, max_order: int | None = None
) -> JointSwapTable:
    """Joint (first swapped?, second swapped?) counts; handing the same index
    twice yields the diagonal table."""
    check_valid(net)
    n = len(net.elements)
    for idx in (first, second):
        if not 0 <= idx < n:
            raise ValueError(f"element index {idx} out of range (network has {n} elements)")
    _check_cap(net.order, max_order, PERMUTATION_CAP, "permutation enumeration")
    masks = _sweep(net, _permutation_rows(net.order), frozenset((first, second))).masks
    m1, m2 = masks[first], masks[second]
    both = int((m1 & m2).sum())
    return JointSwapTable(
        neither=int((~m1 & ~m2).sum()),
        first_only=int((m1 & ~m2).sum()),
        second_only=int((~m1 & m2).sum()),
        both=both,
    )

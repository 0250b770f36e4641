"""Brute-force reference implementations, independent of the package's
vectorized engine. Everything here is plain Python over explicit loops so
the fast paths can be checked against it at small orders."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from cenet.core import Fused2, Fused3, Link, Network


def apply_inplace(element, state):
    """Returns per-constituent-link swap flags (listing order)."""
    if isinstance(element, Link):
        i, j = element.i - 1, element.j - 1
        if state[i] > state[j]:
            state[i], state[j] = state[j], state[i]
            return [True]
        return [False]
    if isinstance(element, Fused2):
        a, b, c = element.a - 1, element.b - 1, element.c - 1
        if state[a] > state[b]:
            state[a], state[b] = state[b], state[a]
            return [True, False]
        if state[b] > state[c]:
            state[b], state[c] = state[c], state[b]
            return [False, True]
        return [False, False]
    a, b, c, d = element.a - 1, element.b - 1, element.c - 1, element.d - 1
    if state[b] > state[c]:
        state[b], state[c] = state[c], state[b]
        return [False, True, False]
    flags = [False, False, False]
    if state[a] > state[b]:
        state[a], state[b] = state[b], state[a]
        flags[0] = True
    if state[c] > state[d]:
        state[c], state[d] = state[d], state[c]
        flags[2] = True
    return flags


def run(net: Network, values):
    state = list(values)
    total = 0
    for el in net.elements:
        total += sum(apply_inplace(el, state))
    return state, total


def all_inputs(order):
    return permutations(range(1, order + 1))


def slot_probabilities(net: Network):
    counts = None
    n = 0
    for p in all_inputs(net.order):
        state = list(p)
        flags = []
        for el in net.elements:
            flags.extend(apply_inplace(el, state))
        if counts is None:
            counts = [0] * len(flags)
        for k, f in enumerate(flags):
            counts[k] += f
        n += 1
    return [Fraction(c, n) for c in (counts or [])]


def swap_histogram(net: Network):
    hist = {}
    for p in all_inputs(net.order):
        _, total = run(net, p)
        hist[total] = hist.get(total, 0) + 1
    return hist


def average_swaps(net: Network):
    total = 0
    n = 0
    for p in all_inputs(net.order):
        total += run(net, p)[1]
        n += 1
    return Fraction(total, n)


def sorts_all_permutations(net: Network):
    return all(run(net, p)[0] == sorted(p) for p in all_inputs(net.order))


def unsorted_permutations(net: Network):
    return [p for p in all_inputs(net.order) if run(net, p)[0] != sorted(p)]


def settled_by_permutations(net: Network):
    settled = set(range(1, net.order + 1))
    for p in all_inputs(net.order):
        out, _ = run(net, p)
        settled -= {w for w in settled if out[w - 1] != w}
        if not settled:
            break
    return frozenset(settled)


def _conflicts(net: Network):
    pairs = set()
    els = net.elements
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            if set(els[a].endpoints) & set(els[b].endpoints):
                pairs.add((a, b))
    return pairs


def minimal_stage_count(net: Network):
    """Smallest stage count over every order-preserving stage assignment,
    by exhaustive search. Only sensible for a handful of elements."""
    els = net.elements
    if not els:
        return 0
    conflicts = _conflicts(net)
    n = len(els)
    best = n  # sequential assignment always works

    def extend(idx, stages):
        nonlocal best
        if idx == n:
            best = min(best, max(stages))
            return
        lower = 1
        for prev in range(idx):
            if (prev, idx) in conflicts:
                lower = max(lower, stages[prev] + 1)
        for stage in range(lower, best + 1):
            # same-stage elements must not share wires
            if any(
                stages[prev] == stage and set(els[prev].endpoints) & set(els[idx].endpoints)
                for prev in range(idx)
            ):
                continue
            if stage >= best:
                break
            extend(idx + 1, stages + [stage])

    extend(0, [])
    return best

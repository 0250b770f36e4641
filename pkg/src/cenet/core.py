"""Network model: comparison-exchange elements, evaluation, scheduling.

A network is an ordered sequence of elements over N wires (wire 1 on top).
Three element kinds exist: a plain compare-exchange link on two wires, a
fused pair of links sharing a middle wire (at most one of the two may
exchange, so the second comparison is skipped when the first fires), and a
fused triple on four wires whose central compare-exchange, when it fires,
is the only active one.

All values are immutable; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Link:
    """Plain compare-exchange: leaves min on wire i, max on wire j."""

    i: int
    j: int

    @property
    def endpoints(self) -> tuple[int, ...]:
        return (self.i, self.j)

    def constituent_links(self) -> tuple[tuple[int, int], ...]:
        return ((self.i, self.j),)


@dataclass(frozen=True)
class Fused2:
    """Fused link pair (a,b),(b,c): the second is skipped if the first swaps.

    Sound only when an upstream guard guarantees at most one of the two
    constituent exchanges can fire on any input.
    """

    a: int
    b: int
    c: int

    @property
    def endpoints(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c)

    def constituent_links(self) -> tuple[tuple[int, int], ...]:
        return ((self.a, self.b), (self.b, self.c))


@dataclass(frozen=True)
class Fused3:
    """Fused link triple (a,b),(b,c),(c,d): the central exchange runs first
    and, if it fires, both wings are skipped; otherwise the wings run on
    disjoint wire pairs."""

    a: int
    b: int
    c: int
    d: int

    @property
    def endpoints(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.d)

    def constituent_links(self) -> tuple[tuple[int, int], ...]:
        # Listing order is (a,b),(b,c),(c,d); execution order is central-first.
        return ((self.a, self.b), (self.b, self.c), (self.c, self.d))


Element = Link | Fused2 | Fused3


def fused_joints(element: Element) -> tuple[int, ...]:
    """Interior wires shared by two constituent links of a fused element."""
    if isinstance(element, Fused2):
        return (element.b,)
    if isinstance(element, Fused3):
        return (element.b, element.c)
    return ()


@dataclass(frozen=True)
class Network:
    """Ordered element sequence over wires 1..order.

    Element order is semantically significant; equality compares order and
    the element sequence, never the optional display name.
    """

    order: int
    elements: tuple[Element, ...]
    name: str | None = field(default=None, compare=False)

    @property
    def link_count(self) -> int:
        """Number of constituent compare-exchange links (fused ops count each)."""
        return sum(len(e.constituent_links()) for e in self.elements)


def network(order: int, elements: Iterable[Element], name: str | None = None) -> Network:
    return Network(order, tuple(elements), name)


@dataclass(frozen=True)
class Violation:
    element_index: int | None
    message: str

    def __str__(self) -> str:
        where = "network" if self.element_index is None else f"element {self.element_index}"
        return f"{where}: {self.message}"


def validate(net: Network) -> list[Violation]:
    """Collect every structural violation; an empty list means the network is valid."""
    out: list[Violation] = []
    if net.order < 1:
        out.append(Violation(None, f"order must be >= 1, got {net.order}"))
    for idx, el in enumerate(net.elements):
        ws = el.endpoints
        for w in ws:
            if not 1 <= w <= net.order:
                out.append(Violation(idx, f"endpoint {w} outside 1..{net.order}"))
        if len(set(ws)) != len(ws):
            out.append(Violation(idx, f"duplicate endpoint in {ws}"))
        elif any(x >= y for x, y in zip(ws, ws[1:])):
            out.append(Violation(idx, f"endpoints {ws} not strictly increasing"))
    return out


def check_valid(net: Network) -> None:
    violations = validate(net)
    if violations:
        raise ValueError("; ".join(str(v) for v in violations))


def mirror(element: Element, order: int) -> Element:
    """Reflect an element top-to-bottom: wire w maps to order+1-w.

    Endpoint order is reversed so endpoints stay increasing; the element
    kind is preserved and applying mirror twice gives the element back.
    """
    flipped = tuple(order + 1 - w for w in reversed(element.endpoints))
    return type(element)(*flipped)


def _apply_flags(element: Element, state: list) -> tuple[tuple[bool, ...], int]:
    """Apply one element in place; returns per-constituent-link swap flags
    (in listing order) and the number of comparisons performed."""
    if isinstance(element, Link):
        i, j = element.i - 1, element.j - 1
        if state[i] > state[j]:
            state[i], state[j] = state[j], state[i]
            return (True,), 1
        return (False,), 1
    if isinstance(element, Fused2):
        a, b, c = element.a - 1, element.b - 1, element.c - 1
        if state[a] > state[b]:
            state[a], state[b] = state[b], state[a]
            return (True, False), 1
        if state[b] > state[c]:
            state[b], state[c] = state[c], state[b]
            return (False, True), 2
        return (False, False), 2
    a, b, c, d = element.a - 1, element.b - 1, element.c - 1, element.d - 1
    if state[b] > state[c]:
        state[b], state[c] = state[c], state[b]
        return (False, True, False), 1
    left = state[a] > state[b]
    if left:
        state[a], state[b] = state[b], state[a]
    right = state[c] > state[d]
    if right:
        state[c], state[d] = state[d], state[c]
    return (left, False, right), 3


def apply_element(element: Element, state: Sequence) -> tuple[list, int, int]:
    """Apply one element to a value sequence.

    Returns (new state, swaps performed, comparisons performed). Ties never
    swap. Raises ValueError if the state is shorter than the element needs.
    """
    if len(state) < max(element.endpoints):
        raise ValueError(
            f"state of length {len(state)} too short for endpoints {element.endpoints}"
        )
    out = list(state)
    flags, comparisons = _apply_flags(element, out)
    return out, sum(flags), comparisons


@dataclass(frozen=True)
class ElementStep:
    swapped: tuple[bool, ...]  # per constituent link, listing order
    comparisons: int


@dataclass(frozen=True)
class EvalTrace:
    output: tuple
    per_element: tuple[ElementStep, ...]
    total_swaps: int
    total_comparisons: int


def run(net: Network, values: Sequence) -> EvalTrace:
    """Evaluate the network on one input, recording per-element behaviour."""
    if len(values) != net.order:
        raise ValueError(f"input length {len(values)} != network order {net.order}")
    state = list(values)
    steps = []
    swaps = 0
    comparisons = 0
    for el in net.elements:
        flags, c = _apply_flags(el, state)
        steps.append(ElementStep(flags, c))
        swaps += sum(flags)
        comparisons += c
    return EvalTrace(tuple(state), tuple(steps), swaps, comparisons)


def decompose(net: Network) -> Network:
    """Replace fused elements by their constituent plain links.

    A fused pair (a,b,c) becomes (a,b),(b,c); a fused triple becomes its
    central link first, then the wings: (b,c),(a,b),(c,d). This preserves
    the network function only where the fusion premise (at most one
    constituent fires) actually holds; certify sites with
    engine.noninterference_check before relying on equivalence.
    """
    out: list[Element] = []
    for el in net.elements:
        if isinstance(el, Link):
            out.append(el)
        elif isinstance(el, Fused2):
            out.append(Link(el.a, el.b))
            out.append(Link(el.b, el.c))
        else:
            out.append(Link(el.b, el.c))
            out.append(Link(el.a, el.b))
            out.append(Link(el.c, el.d))
    return Network(net.order, tuple(out), net.name)


@dataclass(frozen=True)
class Schedule:
    """Partition of element indices into parallel stages (1-based stage order)."""

    stages: tuple[tuple[int, ...], ...]

    @property
    def stage_count(self) -> int:
        return len(self.stages)

    def stage_of(self, element_index: int) -> int:
        for s, members in enumerate(self.stages, start=1):
            if element_index in members:
                return s
        raise IndexError(element_index)


def schedule(net: Network) -> Schedule:
    """Greedy earliest-fit stage assignment.

    Each element lands in the first stage after every earlier element that
    shares a wire with it, so wire-sharing pairs keep their sequence order
    and elements within a stage are wire-disjoint. Executing stages in
    order reproduces sequential evaluation whenever the within-stage
    elements are wire-disjoint (which this construction guarantees).
    """
    check_valid(net)
    last_stage = [0] * (net.order + 1)
    assignment: list[list[int]] = []
    for idx, el in enumerate(net.elements):
        stage = 1 + max(last_stage[w] for w in el.endpoints)
        while len(assignment) < stage:
            assignment.append([])
        assignment[stage - 1].append(idx)
        for w in el.endpoints:
            last_stage[w] = stage
    return Schedule(tuple(tuple(s) for s in assignment))

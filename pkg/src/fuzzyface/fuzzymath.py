"""Numeric kernels: ratio entropy and the fuzzy membership functions.

Entropy here is always taken over the ratio distribution of its inputs,
so only the proportions between values matter, never their scale. The
membership kernels map a value onto [0, 1] according to how close it
sits to their peak.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass


def shannon_entropy(values: Sequence[float]) -> float:
    """Base-2 entropy of the ratio distribution of ``values``.

    Each value is divided by the total to form a probability; zero
    probabilities contribute nothing. The result lies in
    [0, log2(len(values))]. For a two-element input it lies in [0, 1]
    and reaches 1 exactly when both elements are equal.

    Raises ValueError for an empty input, a negative or non-finite
    element, or a zero total.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("entropy needs at least one value")
    for v in vals:
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"entropy values must be finite and non-negative, got {v!r}")
    try:
        total = math.fsum(vals)
    except OverflowError:
        raise ValueError("entropy values overflow when summed") from None
    if total <= 0.0:
        raise ValueError("entropy values must not sum to zero")
    h = 0.0
    for v in vals:
        if v > 0.0:
            p = v / total
            h -= p * math.log2(p)
    # each term is non-negative, so only the upper bound can collect float dust
    return min(h, math.log2(len(vals)))


@dataclass(frozen=True)
class BellKernel:
    """Smooth bump peaking at ``r``: (1 - u) * exp(-u) with u = ((x - r) / r)^2.

    The formula is evaluated literally, without clamping. For x in
    [0, 2r] the value lies in [0, 1]; outside that band it can dip
    slightly negative (global minimum -exp(-2) at |x - r| = r * sqrt(2)).
    """

    r: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise ValueError(f"bell peak must be a positive real, got {self.r!r}")

    def evaluate(self, x: float) -> float:
        u = ((x - self.r) / self.r) ** 2
        return (1.0 - u) * math.exp(-u)


@dataclass(frozen=True)
class TriangleKernel:
    """Linear spike: 0 at p, rising to 1 at r, falling back to 0 at q.

    Zero outside [p, q].
    """

    p: float = 0.0
    r: float = 1.0
    q: float = 2.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.p, self.r, self.q)):
            raise ValueError("triangle breakpoints must be finite")
        if not (self.p < self.r < self.q):
            raise ValueError(
                f"triangle breakpoints must satisfy p < r < q, got {self.p}, {self.r}, {self.q}"
            )

    def evaluate(self, x: float) -> float:
        if x <= self.p or x > self.q:
            return 0.0
        if x <= self.r:
            return (x - self.p) / (self.r - self.p)
        return (self.q - x) / (self.q - self.r)


@dataclass(frozen=True)
class TrapezoidKernel:
    """Ramp up on (p, s], plateau at 1 on (s, t], ramp down on (t, q].

    Zero outside [p, q].
    """

    p: float = 0.0
    s: float = 0.9
    t: float = 1.0
    q: float = 1.1

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.p, self.s, self.t, self.q)):
            raise ValueError("trapezoid breakpoints must be finite")
        if not (self.p < self.s <= self.t < self.q):
            raise ValueError(
                "trapezoid breakpoints must satisfy p < s <= t < q, "
                f"got {self.p}, {self.s}, {self.t}, {self.q}"
            )

    def evaluate(self, x: float) -> float:
        if x <= self.p or x > self.q:
            return 0.0
        if x <= self.s:
            return (x - self.p) / (self.s - self.p)
        if x <= self.t:
            return 1.0
        return (self.q - x) / (self.q - self.t)


MembershipKernel = BellKernel | TriangleKernel | TrapezoidKernel

# selectable pipeline kernels; bell is the scoring default
DEFAULT_KERNELS: dict[str, MembershipKernel] = {
    "bell": BellKernel(),
    "triangle": TriangleKernel(),
    "trapezoid": TrapezoidKernel(),
}


def eval_membership(kernel: MembershipKernel, x: float) -> float:
    """Evaluate a membership kernel at ``x``; ``x`` must be finite."""
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError(f"membership input must be finite, got {x!r}")
    return kernel.evaluate(xf)


def kernel_to_dict(kernel: MembershipKernel) -> dict:
    if isinstance(kernel, BellKernel):
        return {"type": "bell", "r": kernel.r}
    if isinstance(kernel, TriangleKernel):
        return {"type": "triangle", "p": kernel.p, "r": kernel.r, "q": kernel.q}
    if isinstance(kernel, TrapezoidKernel):
        return {"type": "trapezoid", "p": kernel.p, "s": kernel.s, "t": kernel.t, "q": kernel.q}
    raise ValueError(f"unknown kernel {kernel!r}")


def kernel_from_dict(data: dict) -> MembershipKernel:
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError(f"kernel description must be a dict with a 'type', got {data!r}")
    kind = data["type"]
    try:
        if kind == "bell":
            return BellKernel(r=float(data["r"]))
        if kind == "triangle":
            return TriangleKernel(p=float(data["p"]), r=float(data["r"]), q=float(data["q"]))
        if kind == "trapezoid":
            return TrapezoidKernel(
                p=float(data["p"]), s=float(data["s"]), t=float(data["t"]), q=float(data["q"])
            )
    except KeyError as exc:
        raise ValueError(f"kernel description missing field {exc}") from None
    raise ValueError(f"unknown kernel type {kind!r}")

"""Integer partitions in normalized descending form.

A partition is stored as a weakly decreasing tuple of positive parts.  Most
local computations work on the block form: the run-length encoding of the
parts into (size, multiplicity) pairs with strictly decreasing sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """A partition of a positive integer.

    Construct directly only with already-normalized parts; use
    :func:`make_partition` to sort arbitrary input.  Instances are immutable
    and hashable, so they can serve as graph vertices and dict keys.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        for part in self.parts:
            if not isinstance(part, int) or part <= 0:
                raise ValueError(f"every part must be a positive integer, got {part!r}")
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Run-length encoding ((size, multiplicity), ...), sizes strictly decreasing."""
        out: list[tuple[int, int]] = []
        for part in self.parts:
            if out and out[-1][0] == part:
                out[-1] = (part, out[-1][1] + 1)
            else:
                out.append((part, 1))
        return tuple(out)

    @cached_property
    def weight(self) -> int:
        """The integer being partitioned."""
        return sum(self.parts)

    @property
    def support_size(self) -> int:
        """Number of distinct part sizes."""
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(size for size, _ in self.blocks)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.blocks)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)


def make_partition(parts: Iterable[int]) -> Partition:
    """Build a normalized partition from parts given in any order."""
    return Partition(tuple(sorted(parts, reverse=True)))


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, e.g. "4,2,4,2", into a normalized partition."""
    try:
        values = [int(field) for field in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return make_partition(values)


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram: the k-th conjugate part counts parts >= k."""
    cols = [0] * p.parts[0]
    for part in p.parts:
        for k in range(part):
            cols[k] += 1
    return Partition(tuple(cols))


def gaps(p: Partition) -> tuple[int, ...]:
    """Differences of consecutive distinct sizes, the last size taken down to zero.

    All gaps are >= 1 and the size of block i is the suffix sum of the gaps
    from i on.
    """
    sizes = p.block_sizes() + (0,)
    return tuple(sizes[k] - sizes[k + 1] for k in range(len(sizes) - 1))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first, all-ones last."""
    if n <= 0:
        raise ValueError(f"weight must be a positive integer, got {n}")
    return [Partition(parts) for parts in _descending_parts(n, n)]


def _descending_parts(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _descending_parts(remaining - first, first):
            yield (first, *rest)

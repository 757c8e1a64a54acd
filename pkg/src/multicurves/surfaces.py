"""Elementary arithmetic of compact orientable surfaces Sigma_{g,b}."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SurfaceSig:
    """Topological type of a compact orientable surface: genus and boundary count."""

    g: int
    b: int

    def __post_init__(self):
        if self.g < 0 or self.b < 0:
            raise ValueError(f"genus and boundary count must be nonnegative, got {self}")

    @property
    def complexity(self) -> int:
        return 3 * self.g - 3 + self.b

    @property
    def euler(self) -> int:
        return 2 - 2 * self.g - self.b

    def __str__(self):
        return f"{self.g},{self.b}"


# A piece of a decomposition is just a signature read as a connected subsurface.
PieceSig = SurfaceSig


def complexity(sig: SurfaceSig) -> int:
    """3g - 3 + b: maximal number of disjoint, pairwise non-isotopic essential curves."""
    return sig.complexity


def euler(sig: SurfaceSig) -> int:
    """Euler characteristic 2 - 2g - b."""
    return sig.euler


def is_graph_admissible(sig: SurfaceSig) -> bool:
    """Multicurve graphs exist only when the surface carries at least one curve."""
    return sig.complexity >= 1


def is_essential_piece(sig: PieceSig) -> bool:
    """A connected subsurface can occur as a decomposition piece iff its Euler
    characteristic is at most -1 (no spheres, disks, annuli, or closed tori)."""
    return sig.euler <= -1


def parse_sig(text: str) -> SurfaceSig:
    """Parse the "g,b" form used on the command line."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'g,b', got {text!r}")
    try:
        g, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected 'g,b' with integer entries, got {text!r}") from None
    return SurfaceSig(g, b)


def sig_to_json(sig: SurfaceSig) -> dict:
    return {"g": sig.g, "b": sig.b}


def sig_from_json(obj: dict) -> SurfaceSig:
    return SurfaceSig(int(obj["g"]), int(obj["b"]))

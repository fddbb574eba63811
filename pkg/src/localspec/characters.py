"""Places of a number field and components of their unitary character groups.

A place is the real line, the complex plane, or a non-archimedean completion
with residue cardinality q > 1.  The connected components of the unitary
character group are labeled by a parity for the real place (trivial / sign
character), an integer N for the complex place (z |-> z^N (z zbar)^(-N/2)),
and by ramification for a finite place.  Ramified components carry no Gamma
data here; only the vanishing of the higher commutator multipliers on them is
exposed.
"""

from dataclasses import dataclass

__all__ = [
    "Place",
    "CharacterComponent",
    "RamifiedComponentError",
    "real_place",
    "complex_place",
    "finite_place",
    "real_even",
    "real_odd",
    "complex_component",
    "unramified",
    "ramified",
]


class RamifiedComponentError(ValueError):
    """Operation not defined on ramified finite-place components."""


@dataclass(frozen=True)
class Place:
    kind: str  # "real" | "complex" | "finite"
    q: float | None = None  # residue cardinality, finite places only

    def __post_init__(self):
        if self.kind not in ("real", "complex", "finite"):
            raise ValueError(f"unknown place kind {self.kind!r}")
        if self.kind == "finite":
            if self.q is None or not self.q > 1:
                raise ValueError("finite place needs residue cardinality q > 1")
        elif self.q is not None:
            raise ValueError("q only makes sense for finite places")


@dataclass(frozen=True)
class CharacterComponent:
    place: Place
    label: str | int  # "even"/"odd" | integer N | "unramified"/"ramified"

    def __post_init__(self):
        kind = self.place.kind
        if kind == "real" and self.label not in ("even", "odd"):
            raise ValueError("real components are 'even' or 'odd'")
        if kind == "complex" and not isinstance(self.label, int):
            raise ValueError("complex components are labeled by an integer")
        if kind == "finite" and self.label not in ("unramified", "ramified"):
            raise ValueError("finite components are 'unramified' or 'ramified'")

    @property
    def is_archimedean(self):
        return self.place.kind in ("real", "complex")

    @property
    def is_ramified(self):
        return self.place.kind == "finite" and self.label == "ramified"

    def inverse(self):
        """Component of the inverse (= conjugate) character."""
        if self.place.kind == "complex":
            return CharacterComponent(self.place, -self.label)
        return self

    def sign_at_minus_one(self):
        """chi(-1): +1 except the sign character and odd complex labels."""
        if self.place.kind == "real":
            return -1 if self.label == "odd" else 1
        if self.place.kind == "complex":
            return -1 if self.label % 2 else 1
        return 1


def real_place():
    return Place("real")


def complex_place():
    return Place("complex")


def finite_place(q):
    return Place("finite", float(q))


def real_even():
    return CharacterComponent(real_place(), "even")


def real_odd():
    return CharacterComponent(real_place(), "odd")


def complex_component(n):
    return CharacterComponent(complex_place(), int(n))


def unramified(q):
    return CharacterComponent(finite_place(q), "unramified")


def ramified(q):
    return CharacterComponent(finite_place(q), "ramified")

"""Built-in delta-vector families with closed-form roots.

Dimension 2 carries the seven reflexive-polytope vectors (1, b, 1) with
b = 1..7; dimension 3 the thirty-three vectors (1, b, b, 1) with b = 1..35
except 33 and 34.  The two strip-violating vectors of degrees 8 and 10 ship
with their published eight-decimal roots.  The b-ranges are hard-coded; no
polytope data is computed or fetched."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedDimensionError
from .polynomial import DeltaVector, validate_delta
from .radicals import QuadraticRoots, solve_quadratic

CATALOG_FORMAT_VERSION = "1"

DIM2_RANGE = tuple(range(1, 8))
DIM3_RANGE = tuple(b for b in range(1, 36) if b not in (33, 34))


@dataclass(frozen=True)
class CatalogEntry:
    """One cataloged vector, optionally with exact or published roots."""

    label: str
    delta: DeltaVector
    closed_form_roots: tuple | None = None  # Fractions and QuadraticRoots
    reference_roots: tuple[complex, ...] | None = None
    note: str = ""

    def to_json_dict(self) -> dict:
        record: dict = {"label": self.label, "delta": self.delta.as_strings()}
        if self.closed_form_roots is not None:
            forms = []
            for item in self.closed_form_roots:
                if isinstance(item, QuadraticRoots):
                    forms.append(
                        {
                            "center": str(item.center),
                            "scale": str(item.scale),
                            "radicand": str(item.radicand),
                        }
                    )
                else:
                    forms.append({"value": str(item)})
            record["closed_form_roots"] = forms
        if self.reference_roots is not None:
            record["reference_roots"] = [[z.real, z.imag] for z in self.reference_roots]
        if self.note:
            record["note"] = self.note
        return record


def closed_form_roots_dim2(b) -> QuadraticRoots:
    """Exact roots -1/2 +/- (1/2)sqrt((b-6)/(b+2)) of the (1, b, 1) family.

    Real pair for b >= 6 (double root -1/2 at b = 6), conjugate pair on the
    line Re = -1/2 below."""
    b = Fraction(b)
    if b < 0:
        raise ValueError("b must be nonnegative")
    return solve_quadratic(b + 2, b + 2, Fraction(2))


def closed_form_roots_dim3(b) -> tuple[Fraction, QuadraticRoots]:
    """Exact roots of the (1, b, b, 1) family: -1/2 plus the pair
    -1/2 +/- (1/2)sqrt((b-23)/(b+1))."""
    b = Fraction(b)
    if b < 0:
        raise ValueError("b must be nonnegative")
    return Fraction(-1, 2), solve_quadratic(b + 1, b + 1, Fraction(6))


def gorenstein_deltas(d: int) -> tuple[CatalogEntry, ...]:
    """Catalog of reflexive-polytope delta-vectors in dimension 2 or 3."""
    if d == 2:
        return tuple(
            CatalogEntry(
                label=f"dim2-b{b}",
                delta=validate_delta((1, b, 1)),
                closed_form_roots=(closed_form_roots_dim2(b),),
            )
            for b in DIM2_RANGE
        )
    if d == 3:
        return tuple(
            CatalogEntry(
                label=f"dim3-b{b}",
                delta=validate_delta((1, b, b, 1)),
                closed_form_roots=closed_form_roots_dim3(b),
            )
            for b in DIM3_RANGE
        )
    raise UnsupportedDimensionError(f"no built-in catalog for dimension {d}")


_D8_REFERENCE = (
    complex(-0.5, 0.44480014),
    complex(-0.5, -0.44480014),
    complex(-0.5, 1.78738687),
    complex(-0.5, -1.78738687),
    complex(3.00099518, 5.29723208),
    complex(3.00099518, -5.29723208),
    complex(-4.00099518, 5.29723208),
    complex(-4.00099518, -5.29723208),
)

_D10_REFERENCE = (complex(4.02470021, 8.22732653),)


def counterexample_deltas() -> tuple[CatalogEntry, CatalogEntry]:
    """The two half-strip violators, with their published approximate roots.

    The degree-8 vector has entry 1 below entry 8, so it cannot arise from
    any lattice polytope; the degree-10 one satisfies that necessary
    condition and still breaks the half-strip bound."""
    entry8 = CatalogEntry(
        label="degree8-half-strip-violator",
        delta=validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)),
        reference_roots=_D8_REFERENCE,
        note="not realizable as a polytope count: entry 1 < entry 8",
    )
    entry10 = CatalogEntry(
        label="degree10-half-strip-violator",
        delta=validate_delta((1, 1, 1, 1, 1, 23, 1, 1, 1, 1, 1)),
        reference_roots=_D10_REFERENCE,
    )
    return entry8, entry10


def delta1_not_below_deltad(v: DeltaVector) -> bool:
    """Necessary condition for polytope realizability: entry 1 >= entry d."""
    if v.degree < 1:
        return True
    return v.entries[1] >= v.entries[v.degree]


def export_catalog() -> dict:
    """All built-in entries as one versioned, JSON-ready record."""
    entries = list(gorenstein_deltas(2)) + list(gorenstein_deltas(3))
    entries += list(counterexample_deltas())
    return {
        "format_version": CATALOG_FORMAT_VERSION,
        "entries": [e.to_json_dict() for e in entries],
    }

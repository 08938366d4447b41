"""
Square-free Polynomials over F2

Elements of H*(Γ, F2) in normal form: finite sets of square-free monomials
in x_1..x_n. A monomial is a bit mask; bit i - 1 stands for x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..linalg import F2Vector, b2_size, b3_size, rank2, rank3


@dataclass(frozen=True, slots=True)
class Monomial:
    """Square-free monomial x_{i1} ... x_{ik} encoded as a variable mask"""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("Monomial mask must be non-negative")

    @classmethod
    def of(cls, *indices: int) -> Monomial:
        mask = 0
        for index in indices:
            if index < 1:
                raise ValueError(f"Variable index must be >= 1, got {index}")
            bit = 1 << (index - 1)
            if mask & bit:
                raise ValueError(f"x_{index} repeated in a square-free monomial")
            mask |= bit
        return cls(mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def variables(self) -> tuple[int, ...]:
        """1-based variable indices in ascending order"""
        found = []
        bits = self.mask
        while bits:
            low = bits & -bits
            found.append(low.bit_length())
            bits ^= low
        return tuple(found)

    def sort_key(self) -> tuple[int, ...]:
        return self.variables()

    def render(self) -> str:
        variables = self.variables()
        if not variables:
            return "1"
        return "*".join(f"x{index}" for index in variables)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, slots=True)
class F2Poly:
    """Polynomial in square-free normal form over n variables"""

    n: int
    terms: frozenset[Monomial]

    def __post_init__(self) -> None:
        limit = 1 << self.n
        for term in self.terms:
            if term.mask >= limit:
                raise ValueError(f"Monomial {term} uses variables beyond x{self.n}")

    @classmethod
    def zero(cls, n: int) -> F2Poly:
        return cls(n, frozenset())

    @classmethod
    def one(cls, n: int) -> F2Poly:
        return cls(n, frozenset({Monomial(0)}))

    @classmethod
    def variable(cls, n: int, index: int) -> F2Poly:
        return cls(n, frozenset({Monomial.of(index)}))

    @classmethod
    def monomial(cls, n: int, *indices: int) -> F2Poly:
        return cls(n, frozenset({Monomial.of(*indices)}))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> F2Poly:
        """Sum of the monomials given by masks; repeated masks cancel"""
        terms: set[int] = set()
        for mask in masks:
            terms ^= {mask}
        return cls(n, frozenset(Monomial(mask) for mask in terms))

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(term.mask for term in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: F2Poly) -> F2Poly:
        if other.n != self.n:
            raise ValueError(f"Polynomials over {self.n} and {other.n} variables")
        return F2Poly(self.n, self.terms ^ other.terms)

    __sub__ = __add__

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, monomial: object) -> bool:
        return monomial in self.terms

    @property
    def degree(self) -> int:
        """Largest monomial degree, -1 for the zero polynomial"""
        return max((term.degree for term in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(term.degree == degree for term in self.terms)

    def component(self, degree: int) -> F2Poly:
        return F2Poly(self.n, frozenset(t for t in self.terms if t.degree == degree))

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=Monomial.sort_key)

    def render(self) -> str:
        """Terms as x1*x3 joined by ' + ' in lexicographic order; '0' when empty"""
        if not self.terms:
            return "0"
        return " + ".join(term.render() for term in self.sorted_terms())

    def __str__(self) -> str:
        return self.render()

    def to_b2_vector(self) -> F2Vector:
        """Coordinates in B2 = {x_i x_j : i < j}"""
        self._require_degree(2)
        return F2Vector.from_indices(
            b2_size(self.n), (rank2(self.n, *term.variables()) for term in self.terms)
        )

    def to_b3_vector(self) -> F2Vector:
        """Coordinates in B3 = {x_i x_j x_k : i < j < k}"""
        self._require_degree(3)
        return F2Vector.from_indices(
            b3_size(self.n), (rank3(self.n, *term.variables()) for term in self.terms)
        )

    def _require_degree(self, degree: int) -> None:
        if not self.is_homogeneous(degree):
            raise ValueError(f"Expected a homogeneous polynomial of degree {degree}: {self}")

"""
Report Models

Pydantic models for the results printed by the CLI.
"""

from typing import Optional

from pydantic import BaseModel, Field, computed_field, model_validator


class AnalysisReport(BaseModel):
    """Invariants of a single real Bott manifold"""

    n: int
    orientable: bool
    b1: int
    b2: int
    h1: str
    h1z: str
    h2z: str
    h1_torsion_rank: int
    h2_free_rank: int
    dim_img_rho2: int
    w1: str
    w2: str
    w2_square_free: Optional[str] = None
    derived_matrix: Optional[str] = None
    failing_columns: list[int] = Field(default_factory=list)
    spin: Optional[bool] = None
    spinc: Optional[bool] = None
    spinc_oracle: str = "combinatorial"
    spinc_by_oracle: dict[str, bool] = Field(default_factory=dict)
    w2_in_square_span: Optional[bool] = None

    @model_validator(mode="after")
    def _check_invariants(self) -> "AnalysisReport":
        if self.dim_img_rho2 != self.n - self.b1 + self.b2:
            raise ValueError("dim img rho2 must equal n - b1 + b2")
        if self.orientable and (self.spin is None or self.spinc is None):
            raise ValueError("Orientable reports carry spin and spin^c flags")
        if self.spin and not self.spinc:
            raise ValueError("A spin manifold is spin^c")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def oracles_agree(self) -> bool:
        return len(set(self.spinc_by_oracle.values())) <= 1


class CensusRow(BaseModel):
    """Counts for one dimension"""

    dimension: int
    orientable: int
    spinc: int
    spin: int
    elapsed: Optional[float] = None
    published_spinc: Optional[int] = None
    published_spin: Optional[int] = None

    @model_validator(mode="after")
    def _check_order(self) -> "CensusRow":
        if not 0 <= self.spin <= self.spinc <= self.orientable:
            raise ValueError(
                f"Expected spin <= spinc <= orientable, got {self.spin}, {self.spinc}, {self.orientable}"
            )
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches_published(self) -> Optional[bool]:
        if self.published_spinc is None or self.published_spin is None:
            return None
        return (self.spinc, self.spin) == (self.published_spinc, self.published_spin)


class VerificationFailure(BaseModel):
    """First counterexample found by the verification harness"""

    check: str
    dimension: int
    matrix: str
    detail: str


class VerificationReport(BaseModel):
    """Outcome of the oracle consistency harness"""

    checked: int = 0
    exhaustive_dimensions: list[int] = Field(default_factory=list)
    sampled_dimensions: list[int] = Field(default_factory=list)
    failure: Optional[VerificationFailure] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def success(self) -> bool:
        return self.failure is None

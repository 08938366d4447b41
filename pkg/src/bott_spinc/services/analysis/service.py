"""
Analysis Service Implementation

Collects homology ranks, characteristic classes and the spin and spin^c
verdicts of one Bott matrix into an AnalysisReport.
"""

from typing import Any

import structlog

from ...cohomology import has_spin, w1, w2_in_square_span, w2_reduced, w2_square_free
from ...core import (
    BottMatrix,
    betti1,
    betti2,
    derived_matrix,
    failing_columns,
    homology_report,
    is_orientable,
    parse,
)
from ...models import AnalysisReport
from ...oracles import ISpincOracle
from .interface import IAnalysisService

logger = structlog.get_logger(__name__)


class AnalysisService(IAnalysisService):
    """Analysis service delegating the spin^c verdict to a primary oracle"""

    def __init__(self, oracles: dict[str, ISpincOracle], primary: str = "combinatorial"):
        if primary not in oracles:
            raise ValueError(f"Unknown spin^c oracle {primary!r}; available: {sorted(oracles)}")
        self.oracles = oracles
        self.primary = primary

    def analyze_text(self, text: str, all_oracles: bool = False) -> AnalysisReport:
        return self.analyze(parse(text), all_oracles)

    def analyze(self, matrix: BottMatrix, all_oracles: bool = False) -> AnalysisReport:
        homology = homology_report(matrix)
        orientable = is_orientable(matrix)
        logger.info("Analyzing matrix", dimension=matrix.n, orientable=orientable)

        report: dict[str, Any] = {
            "n": matrix.n,
            "orientable": orientable,
            "b1": betti1(matrix),
            "b2": betti2(matrix),
            "h1": homology.h1,
            "h1z": homology.h1z,
            "h2z": homology.h2z,
            "h1_torsion_rank": homology.h1_torsion_rank,
            "h2_free_rank": homology.h2_free_rank,
            "dim_img_rho2": homology.dim_img_rho2,
            "w1": w1(matrix).render(),
            "w2": w2_reduced(matrix).render(),
            "spinc_oracle": self.primary,
        }
        if not orientable:
            return AnalysisReport(**report)

        spinc = self.oracles[self.primary].decide(matrix)
        by_oracle: dict[str, bool] = {}
        if all_oracles:
            by_oracle = {name: oracle.decide(matrix) for name, oracle in self.oracles.items()}
            if len(set(by_oracle.values())) > 1:
                logger.warning(
                    "Spin^c oracles disagree", matrix=matrix.to_text(), answers=by_oracle
                )

        return AnalysisReport(
            **report,
            w2_square_free=w2_square_free(matrix).render(),
            derived_matrix=derived_matrix(matrix).to_text().rstrip("\n"),
            failing_columns=failing_columns(matrix),
            spin=has_spin(matrix),
            spinc=spinc,
            spinc_by_oracle=by_oracle,
            w2_in_square_span=w2_in_square_span(matrix),
        )

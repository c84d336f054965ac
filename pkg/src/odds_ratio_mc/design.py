"""Cell probabilities, true odds ratio and expected counts of a study design.

Cells follow the table layout (a: D=0,E=0; b: D=1,E=0; c: D=0,E=1;
d: D=1,E=1), each probability being P(D | E)·P(E).
"""

from odds_ratio_mc.models import ContingencyTable, StudyDesign

# protective (OR_true ≈ .279) and harmful (OR_true ≈ 2.365) exposure, n = 200
PRESETS: dict[str, StudyDesign] = {
    "protective": StudyDesign(
        n=200, p_exposure=0.5, p_disease_exposed=0.075, p_disease_unexposed=0.225
    ),
    "harmful": StudyDesign(
        n=200, p_exposure=0.5, p_disease_exposed=0.2667, p_disease_unexposed=0.1333
    ),
}


def cell_probabilities(design: StudyDesign) -> tuple[float, float, float, float]:
    """Return (pA, pB, pC, pD)."""
    p_e = design.p_exposure
    p_de = design.p_disease_exposed
    p_du = design.p_disease_unexposed
    return (
        (1.0 - p_du) * (1.0 - p_e),
        p_du * (1.0 - p_e),
        (1.0 - p_de) * p_e,
        p_de * p_e,
    )


def true_or(design: StudyDesign) -> float:
    """Odds of disease among exposed over odds among unexposed."""
    p_de = design.p_disease_exposed
    p_du = design.p_disease_unexposed
    return (p_de / (1.0 - p_de)) / (p_du / (1.0 - p_du))


def expected_table(design: StudyDesign) -> ContingencyTable:
    """Table of expected counts n·P(cell)."""
    pa, pb, pc, pd = cell_probabilities(design)
    n = design.n
    return ContingencyTable(a=n * pa, b=n * pb, c=n * pc, d=n * pd)

"""Bernoulli generation of one prospective-study table."""

import numpy as np

from odds_ratio_mc.models import ContingencyTable, StudyDesign
from odds_ratio_mc.streams import RandomStream


def generate_table(design: StudyDesign, stream: RandomStream) -> ContingencyTable:
    """Classify ``design.n`` subjects into the four cells.

    Subject ``i`` uses uniforms ``2i`` (exposure) and ``2i + 1`` (disease);
    an event occurs iff its uniform is below the probability. Consumes
    exactly 2n uniforms.
    """
    n = design.n
    u = stream.uniforms(2 * n).reshape(n, 2)
    exposed = u[:, 0] < design.p_exposure
    p_disease = np.where(exposed, design.p_disease_exposed, design.p_disease_unexposed)
    diseased = u[:, 1] < p_disease

    d = int(np.count_nonzero(exposed & diseased))
    c = int(np.count_nonzero(exposed)) - d
    b = int(np.count_nonzero(diseased)) - d
    a = n - b - c - d
    return ContingencyTable(a=float(a), b=float(b), c=float(c), d=float(d))

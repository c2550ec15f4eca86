"""Restricting symmetric-group blocks to the alternating group.

chi^lam restricts irreducibly to A_n unless lam is self-conjugate, in which
case it splits into two constituents of half the degree. Each block of S_n is
taken to cover a single block of A_n made of these constituents.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blocks import BlockLabel, block_report, defect, defect_shape
from .groupcalc import derived_length, even_part, sylow_symmetric
from .partition import conjugate, legendre, valuation

EXACT_DLQ_MAX_POINTS = 16


@dataclass
class AltBlockView:
    source: BlockLabel
    degrees: list[int]
    heights: list[int]
    q_order_valuation: int
    dl_q: int
    dlq_mode: str  # "exact", "formula" or "skipped"
    k: int

    @property
    def ht_set(self) -> frozenset:
        return frozenset(self.heights)

    @property
    def paper_gap(self) -> bool:
        """True when the S_n family alone cannot account for dl(Q) <= |ht(b)|."""
        return self.k > len(self.ht_set)


@dataclass
class AltCheck:
    ok: bool
    view: AltBlockView

    def to_json(self) -> dict:
        v = self.view
        return {
            "group": "alt",
            "p": v.source.p,
            "core": str(v.source.core),
            "weight": v.source.weight,
            "n": v.source.n,
            "degrees": [str(d) for d in v.degrees],
            "heights": v.heights,
            "dl_q": v.dl_q,
            "dlq_mode": v.dlq_mode,
            "k": v.k,
            "ok": self.ok,
            "paper_gap": v.paper_gap,
        }


@lru_cache(maxsize=None)
def exact_even_sylow_dl(points: int) -> int:
    """Derived length of the even part of a Sylow 2-subgroup of Sym(points)."""
    return derived_length(even_part(sylow_symmetric(points, 2)), cross_check=False)


def restrict_block(label: BlockLabel) -> AltBlockView:
    p, n = label.p, label.n
    if n < 5:
        raise ValueError("restriction to A_n is only handled for n >= 5")
    report = block_report(label)
    d = defect(label)
    k = defect_shape(label).k
    q_val = d - 1 if (p == 2 and label.weight >= 1) else d
    # nu_p(|A_n|) - nu_p(|Q|)
    shift = legendre(n, p) - (p == 2) - q_val

    pair_within = conjugate(label.core) == label.core
    degrees: list[int] = []
    for lam, deg in zip(report.members, report.degrees):
        if not pair_within:
            # lam' sits in B(core', w); each pair restricts to one character
            degrees.append(deg)
            continue
        lam_c = conjugate(lam)
        if lam_c == lam:
            degrees += [deg // 2, deg // 2]
        elif lam > lam_c:
            degrees.append(deg)
    heights = [valuation(x, p) - shift for x in degrees]

    if label.weight == 0:
        dl_q, mode = 0, "formula"
    elif p != 2:
        dl_q, mode = k, "formula"
    elif label.weight * p <= EXACT_DLQ_MAX_POINTS:
        dl_q, mode = exact_even_sylow_dl(label.weight * p), "exact"
    else:
        # dl(Q) <= dl(D) = k; good enough only when k already fits
        dl_q = k
        mode = "formula" if k <= len(set(heights)) else "skipped"
    return AltBlockView(label, degrees, heights, q_val, dl_q, mode, k)


def verify_alt(label: BlockLabel) -> AltCheck:
    view = restrict_block(label)
    if view.dlq_mode == "skipped":
        return AltCheck(True, view)
    return AltCheck(view.dl_q <= len(view.ht_set), view)

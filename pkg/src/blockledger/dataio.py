"""Externally supplied block data and the predicates evaluated on it.

File schema::

    {"group": str, "order": "<integer as string>", "prime": int,
     "blocks": [{"label": str, "defect": int, "degrees": [int, ...],
                 "defect_group_cd": [int, ...]?, "defect_group_dl": int?}]}

Unknown keys are kept and written back unchanged.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import factorial
from pathlib import Path

from .blocks import block_labels, block_report
from .groupcalc import PERMUTATION_BUDGET, character_degrees, sylow_symmetric
from .partition import check_prime, legendre, valuation

GROUP_KEYS = {"group", "order", "prime", "blocks"}
BLOCK_KEYS = {"label", "defect", "degrees", "defect_group_cd", "defect_group_dl"}
CD_ORDER_LIMIT = 2**10


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class ExternalBlock:
    label: str
    defect: int
    degrees: list[int]
    defect_group_cd: list[int] | None = None
    defect_group_dl: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def cd_set(self) -> set[int]:
        return set(self.degrees)


@dataclass
class ExternalBlockData:
    group_name: str
    group_order: int
    prime: int
    blocks: list[ExternalBlock]
    extra: dict = field(default_factory=dict)

    def heights(self, block: ExternalBlock) -> set[int]:
        base = valuation(self.group_order, self.prime) - block.defect
        return {valuation(d, self.prime) - base for d in block.degrees}

    def to_json(self) -> dict:
        blocks = []
        for b in self.blocks:
            row = {"label": b.label, "defect": b.defect, "degrees": list(b.degrees)}
            if b.defect_group_cd is not None:
                row["defect_group_cd"] = list(b.defect_group_cd)
            if b.defect_group_dl is not None:
                row["defect_group_dl"] = b.defect_group_dl
            row.update(b.extra)
            blocks.append(row)
        out = {"group": self.group_name, "order": str(self.group_order), "prime": self.prime, "blocks": blocks}
        out.update(self.extra)
        return out


def _int(value, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(path, f"must be at least {minimum}, got {value}")
    return value


def _int_list(value, path: str) -> list[int]:
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of integers")
    return [_int(x, f"{path}[{i}]", minimum=1) for i, x in enumerate(value)]


def parse(obj) -> ExternalBlockData:
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected an object")
    for key in GROUP_KEYS:
        if key not in obj:
            raise SchemaError(f"$.{key}", "missing")
    if not isinstance(obj["group"], str):
        raise SchemaError("$.group", "expected a string")
    order_text = obj["order"]
    if not isinstance(order_text, str) or not order_text.isdigit() or int(order_text) < 1:
        raise SchemaError("$.order", "expected a positive integer written as a string")
    order = int(order_text)
    p = _int(obj["prime"], "$.prime")
    try:
        check_prime(p)
    except ValueError as exc:
        raise SchemaError("$.prime", str(exc)) from None
    if not isinstance(obj["blocks"], list):
        raise SchemaError("$.blocks", "expected a list")
    full = valuation(order, p)
    blocks = []
    for i, raw in enumerate(obj["blocks"]):
        path = f"$.blocks[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(path, "expected an object")
        for key in ("label", "defect", "degrees"):
            if key not in raw:
                raise SchemaError(f"{path}.{key}", "missing")
        if not isinstance(raw["label"], str):
            raise SchemaError(f"{path}.label", "expected a string")
        d = _int(raw["defect"], f"{path}.defect", minimum=0)
        if d > full:
            raise SchemaError(f"{path}.defect", f"defect {d} exceeds nu_{p}(order) = {full}")
        degrees = _int_list(raw["degrees"], f"{path}.degrees")
        for j, deg in enumerate(degrees):
            if order % deg:
                raise SchemaError(f"{path}.degrees[{j}]", f"{deg} does not divide the group order")
            if valuation(deg, p) < full - d:
                raise SchemaError(f"{path}.degrees[{j}]", f"{deg} would have negative height")
        cd = None
        if raw.get("defect_group_cd") is not None:
            cd = _int_list(raw["defect_group_cd"], f"{path}.defect_group_cd")
            for j, x in enumerate(cd):
                if x != p ** valuation(x, p):
                    raise SchemaError(f"{path}.defect_group_cd[{j}]", f"{x} is not a power of {p}")
        dl = None
        if raw.get("defect_group_dl") is not None:
            dl = _int(raw["defect_group_dl"], f"{path}.defect_group_dl", minimum=0)
        extra = {key: v for key, v in raw.items() if key not in BLOCK_KEYS}
        blocks.append(ExternalBlock(raw["label"], d, degrees, cd, dl, extra))
    extra = {key: v for key, v in obj.items() if key not in GROUP_KEYS}
    return ExternalBlockData(obj["group"], order, p, blocks, extra)


def load(path) -> ExternalBlockData:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"invalid JSON: {exc}") from None
    return parse(obj)


def dump(data: ExternalBlockData, path) -> None:
    Path(path).write_text(json.dumps(data.to_json(), indent=2) + "\n", encoding="utf-8")


def bundled(name: str = "H28431.json") -> ExternalBlockData:
    """A dataset shipped with the package."""
    with resources.files("blockledger.data").joinpath(name).open(encoding="utf-8") as fh:
        return parse(json.load(fh))


@dataclass
class Verdict:
    block: str
    check: str
    status: str
    detail: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status in ("fail", "counterexample")

    def to_json(self) -> dict:
        return {"block": self.block, "check": self.check, "status": self.status, **self.detail}


def check_question_a(data: ExternalBlockData) -> list[Verdict]:
    """dl(D) <= |cd(B)|, falling back on dl(D) <= (defect + 1) / 2 when dl is not given."""
    out = []
    for b in data.blocks:
        ncd = len(b.cd_set)
        if b.defect_group_dl is not None:
            status = "pass" if b.defect_group_dl <= ncd else "fail"
            out.append(Verdict(b.label, "question_a", status, {"dl": b.defect_group_dl, "cd_count": ncd}))
        else:
            # groups of order p^2 are abelian, so each further step of the series costs two factors of p
            bound = (b.defect + 1) // 2
            status = "bound-passed" if bound <= ncd else "needs exact dl"
            out.append(Verdict(b.label, "question_a", status, {"dl_bound": bound, "cd_count": ncd}))
    return out


def check_height_conjecture(data: ExternalBlockData) -> list[Verdict]:
    """With p^a the largest degree of D and b the largest height in B, test a <= b."""
    out = []
    for b in data.blocks:
        if b.defect_group_cd is None:
            out.append(Verdict(b.label, "height_conjecture", "skipped", {"reason": "defect_group_cd missing"}))
            continue
        a = valuation(max(b.defect_group_cd), data.prime)
        top = max(data.heights(b), default=0)
        status = "pass" if a <= top else "counterexample"
        out.append(Verdict(b.label, "height_conjecture", status, {"a": a, "b": top}))
    return out


def check_dl_ht(data: ExternalBlockData) -> list[Verdict]:
    """dl(D) <= |ht(B)|, plus the |cd(D)| >= dl(D) sanity check when cd(D) is known."""
    out = []
    for b in data.blocks:
        if b.defect_group_dl is None:
            out.append(Verdict(b.label, "dl_le_ht", "skipped", {"reason": "defect_group_dl missing"}))
            continue
        nht = len(data.heights(b))
        status = "pass" if b.defect_group_dl <= nht else "fail"
        out.append(Verdict(b.label, "dl_le_ht", status, {"dl": b.defect_group_dl, "ht_count": nht}))
        if b.defect_group_cd is not None:
            ncd = len(set(b.defect_group_cd))
            status = "pass" if ncd >= b.defect_group_dl else "fail"
            out.append(Verdict(b.label, "taketa", status, {"dl": b.defect_group_dl, "defect_cd_count": ncd}))
    return out


def check_all(data: ExternalBlockData) -> list[Verdict]:
    return check_question_a(data) + check_height_conjecture(data) + check_dl_ht(data)


def defect_group_cd(points: int, p: int) -> list[int] | None:
    """Distinct character degrees of a Sylow p-subgroup of Sym(points), if small enough to enumerate."""
    if p ** legendre(points, p) > min(CD_ORDER_LIMIT, PERMUTATION_BUDGET):
        return None
    return sorted(set(character_degrees(sylow_symmetric(points, p))))


def export_symmetric(n: int, p: int, with_cd: bool = True) -> ExternalBlockData:
    """All p-blocks of S_n in the external schema."""
    blocks = []
    for label in block_labels(n, p):
        report = block_report(label)
        cd = defect_group_cd(label.weight * p, p) if with_cd else None
        blocks.append(ExternalBlock(str(label), report.defect, report.degrees, cd, report.dl))
    return ExternalBlockData(f"S{n}", factorial(n), p, blocks)

"""Exhaustive quadruple survey: classify, validate the laws, emit records.

Enumerates all d1 < d2 < d3 < d4 in a range with gcd 1, classifies each
minimal quadruple, and for every symmetric not-complete-intersection
instance re-verifies the whole chain of laws (key identity, Maclaurin
chain, exact threshold, F >= bound, numerator re-expansion). Any violation
aborts the run with a defect report carrying the instance, because the
laws are theorems: a single counterexample means the code is wrong.

Work is partitioned by d1 and merged in order, so output is byte-identical
regardless of worker count.
"""

import multiprocessing
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .bounds import (
    bound_ci,
    bound_ns4,
    bound_symmetric_not_ci,
    exact_threshold_check,
    maclaurin_chain,
    symmetric_functions,
    verify_key_identity,
)
from .core import frobenius, generator_set, genus, is_minimal_generating_set
from .errors import ConfigInvalid, EmptyInput, SurveyDefect
from .hilbert import ClassKind, bresinsky_numerator, classify, numerator

CSV_HEADER = "d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,tightness,identity_ok"

_COUNT_KEYS = (
    "non_symmetric",
    "symmetric_ci",
    "symmetric_not_ci",
    "not_minimal",
    "gcd_not_one",
)


@dataclass(frozen=True)
class SurveyConfig:
    """Inclusive generator range plus behaviour flags.

    The span cap guards against accidental combinatorial blowups; pass
    force=True to lift it deliberately.
    """

    d_min: int
    d_max: int
    require_minimal: bool = True
    emit_all: bool = False
    jobs: int = 1
    span_cap: int = 200
    force: bool = False

    def __post_init__(self):
        if self.d_min < 2:
            raise ConfigInvalid(f"d_min must be at least 2, got {self.d_min}")
        if self.d_max < self.d_min:
            raise ConfigInvalid(f"d_max {self.d_max} below d_min {self.d_min}")
        if not self.force and self.d_max - self.d_min > self.span_cap:
            raise ConfigInvalid(
                f"range span {self.d_max - self.d_min} exceeds cap "
                f"{self.span_cap}; pass force to override"
            )
        if self.jobs < 1:
            raise ConfigInvalid(f"jobs must be at least 1, got {self.jobs}")


@dataclass(frozen=True)
class SurveyRecord:
    """One classified quadruple with its bounds and law-check outcomes."""

    generators: tuple[int, int, int, int]
    frobenius: int
    genus: int
    kind: str
    c: int | None
    a_list: tuple[int, ...] | None
    relation_degrees: tuple[int, int, int] | None
    bound_not_ci: float
    bound_ci: float
    bound_ns: float
    tightness: float | None
    identity_ok: bool | None
    maclaurin_ok: bool | None
    threshold_ok: bool | None


@dataclass(frozen=True)
class SummaryStats:
    """Per-class counts plus tightness statistics over the not-CI instances."""

    counts: dict[str, int]
    tightness_min: float | None = None
    tightness_mean: float | None = None
    tightness_max: float | None = None
    worst_instance: tuple[int, ...] | None = None


def _classify_quadruple(quad, require_minimal, emit_all):
    """Returns (count_key, record_or_None); validates not-CI laws inline."""
    g = generator_set(quad)
    if not is_minimal_generating_set(g):
        if require_minimal:
            return "not_minimal", None
        fr = frobenius(g)
        return "not_minimal", SurveyRecord(
            generators=g.elements,
            frobenius=fr,
            genus=genus(g),
            kind="not_minimal",
            c=None,
            a_list=None,
            relation_degrees=None,
            bound_not_ci=bound_symmetric_not_ci(g),
            bound_ci=bound_ci(g),
            bound_ns=bound_ns4(g),
            tightness=None,
            identity_ok=None,
            maclaurin_ok=None,
            threshold_ok=None,
        )

    cls = classify(g)
    fr = frobenius(g)
    gen = genus(g)
    b_notci = bound_symmetric_not_ci(g)
    b_ci = bound_ci(g)
    b_ns = bound_ns4(g)

    if cls.kind is ClassKind.NON_SYMMETRIC:
        record = None
        if emit_all:
            record = SurveyRecord(
                generators=g.elements,
                frobenius=fr,
                genus=gen,
                kind=cls.kind.value,
                c=None,
                a_list=None,
                relation_degrees=None,
                bound_not_ci=b_notci,
                bound_ci=b_ci,
                bound_ns=b_ns,
                tightness=None,
                identity_ok=None,
                maclaurin_ok=None,
                threshold_ok=None,
            )
        return cls.kind.value, record

    if cls.kind is ClassKind.SYMMETRIC_CI:
        record = SurveyRecord(
            generators=g.elements,
            frobenius=fr,
            genus=gen,
            kind=cls.kind.value,
            c=fr + g.sigma,
            a_list=None,
            relation_degrees=cls.relation_degrees,
            bound_not_ci=b_notci,
            bound_ci=b_ci,
            bound_ns=b_ns,
            tightness=None,
            identity_ok=None,
            maclaurin_ok=None,
            threshold_ok=None,
        )
        return cls.kind.value, record

    # symmetric, not CI: every law must hold or the survey dies loudly
    a_list, c = cls.a_list, cls.c
    identity_ok = verify_key_identity(a_list, c, g.pi)
    maclaurin_ok = maclaurin_chain(symmetric_functions(a_list))
    threshold_ok = exact_threshold_check(c, g.pi)
    reexpanded_ok = bresinsky_numerator(a_list, c) == numerator(g)
    bound_ok = fr >= b_notci
    if not (identity_ok and maclaurin_ok and threshold_ok and reexpanded_ok and bound_ok):
        raise SurveyDefect(
            f"law violated at {g.elements}: F={fr}, c={c}, a={a_list}, "
            f"pi={g.pi}, identity={identity_ok}, maclaurin={maclaurin_ok}, "
            f"threshold={threshold_ok}, reexpansion={reexpanded_ok}, "
            f"F>=bound={bound_ok} (bound {b_notci!r})"
        )
    record = SurveyRecord(
        generators=g.elements,
        frobenius=fr,
        genus=gen,
        kind=cls.kind.value,
        c=c,
        a_list=a_list,
        relation_degrees=None,
        bound_not_ci=b_notci,
        bound_ci=b_ci,
        bound_ns=b_ns,
        tightness=fr / b_notci,
        identity_ok=identity_ok,
        maclaurin_ok=maclaurin_ok,
        threshold_ok=threshold_ok,
    )
    return cls.kind.value, record


def _survey_partition(args):
    """All quadruples with a fixed d1, in lexicographic order."""
    d1, cfg = args
    counts = dict.fromkeys(_COUNT_KEYS, 0)
    records = []
    for rest in combinations(range(d1 + 1, cfg.d_max + 1), 3):
        quad = (d1, *rest)
        if gcd(gcd(quad[0], quad[1]), gcd(quad[2], quad[3])) != 1:
            counts["gcd_not_one"] += 1
            continue
        key, record = _classify_quadruple(quad, cfg.require_minimal, cfg.emit_all)
        counts[key] += 1
        if record is not None:
            records.append(record)
    return counts, records


def run_survey(cfg: SurveyConfig):
    """Enumerate, classify and validate the whole range.

    Returns (records, stats). Records are ordered by (d1, d2, d3, d4)
    regardless of cfg.jobs.
    """
    parts = [(d1, cfg) for d1 in range(cfg.d_min, cfg.d_max - 2)]
    if cfg.jobs > 1 and len(parts) > 1:
        with multiprocessing.Pool(min(cfg.jobs, len(parts))) as pool:
            results = pool.map(_survey_partition, parts)
    else:
        results = [_survey_partition(p) for p in parts]

    counts = dict.fromkeys(_COUNT_KEYS, 0)
    records = []
    for part_counts, part_records in results:
        for key in _COUNT_KEYS:
            counts[key] += part_counts[key]
        records.extend(part_records)
    return records, _stats(records, counts)


def _stats(records, counts) -> SummaryStats:
    ratios = [
        (r.tightness, r.generators)
        for r in records
        if r.kind == ClassKind.SYMMETRIC_NOT_CI.value and r.tightness is not None
    ]
    if not ratios:
        return SummaryStats(counts=counts)
    values = [t for t, _ in ratios]
    worst = max(ratios)
    return SummaryStats(
        counts=counts,
        tightness_min=min(values),
        tightness_mean=sum(values) / len(values),
        tightness_max=worst[0],
        worst_instance=worst[1],
    )


def summarize(records) -> SummaryStats:
    """Statistics over an existing record sequence (counts only what it sees)."""
    if not records:
        raise EmptyInput("no records to summarize")
    counts = dict.fromkeys(_COUNT_KEYS, 0)
    for r in records:
        counts[r.kind] = counts.get(r.kind, 0) + 1
    return _stats(records, counts)


def record_to_csv_row(r: SurveyRecord) -> str:
    """One CSV row; reals carry exactly three decimals, absent fields are empty."""
    d1, d2, d3, d4 = r.generators

    def opt(v, fmt="{}"):
        return "" if v is None else fmt.format(v)

    identity = "" if r.identity_ok is None else ("true" if r.identity_ok else "false")
    return (
        f"{d1},{d2},{d3},{d4},{r.frobenius},{r.genus},{r.kind},{opt(r.c)},"
        f"{r.bound_not_ci:.3f},{r.bound_ci:.3f},{r.bound_ns:.3f},"
        f"{opt(r.tightness, '{:.3f}')},{identity}"
    )


def records_to_csv(records) -> str:
    lines = [CSV_HEADER]
    lines.extend(record_to_csv_row(r) for r in records)
    return "\n".join(lines) + "\n"


def record_to_json_dict(r: SurveyRecord) -> dict:
    """Full-precision JSON form of one record."""
    return {
        "generators": list(r.generators),
        "frobenius": r.frobenius,
        "genus": r.genus,
        "class": r.kind,
        "c": r.c,
        "a_list": list(r.a_list) if r.a_list is not None else None,
        "relation_degrees": list(r.relation_degrees)
        if r.relation_degrees is not None
        else None,
        "bound_not_ci": r.bound_not_ci,
        "bound_ci": r.bound_ci,
        "bound_ns": r.bound_ns,
        "tightness": r.tightness,
        "identity_ok": r.identity_ok,
        "maclaurin_ok": r.maclaurin_ok,
        "threshold_ok": r.threshold_ok,
    }

"""Tabular and JSON records for command output, validated on write and on read."""

import io
import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Type, TypeVar

import pandas as pd
import pandera as pa
from pydantic import BaseModel, ConfigDict

from ..configuration import SampleStats
from ..enumeration import EnumerationResult
from ..genus import GenusReport
from ..moves import FlipWalkReport
from ..utils import get_logger
from ..utils.errors import StructuralInputError

logger = get_logger(__name__)

Record = TypeVar("Record", bound=BaseModel)


def _finite(value: Optional[float]) -> Optional[float]:
    if value is None or math.isnan(value) or math.isinf(value):
        return None
    return float(value)


# Histogram tables

def histogram_schema(count_columns: List[str]) -> pa.DataFrameSchema:
    columns = {"k": pa.Column(pa.Int64, checks=pa.Check.ge(1), unique=True)}
    for name in count_columns:
        columns[name] = pa.Column(pa.Int64, checks=pa.Check.ge(0))
    columns["mean"] = pa.Column(pa.Float64, checks=pa.Check.ge(0))
    columns["poisson_mean"] = pa.Column(pa.Float64, checks=pa.Check.gt(0))
    return pa.DataFrameSchema(
        columns,
        checks=pa.Check(lambda df: df[count_columns].sum(axis=1).nunique() <= 1,
                        error="every row must count the same samples"),
        strict=True,
        ordered=True,
        coerce=True,
    )


def _count_columns(frame: pd.DataFrame) -> List[str]:
    return [c for c in frame.columns if c.startswith("count_")]


def histogram_frame(stats: SampleStats) -> pd.DataFrame:
    """One row per k: counts of X_k = 0..max, empirical mean and Poisson reference."""
    top = max((max(h) for h in stats.circuit_histograms.values() if h), default=0)
    rows = []
    means, references = stats.circuit_means, stats.poisson_means
    for k in sorted(stats.circuit_histograms):
        histogram = stats.circuit_histograms[k]
        row = {"k": k}
        row.update({f"count_{value}": int(histogram.get(value, 0)) for value in range(top + 1)})
        row.update({"mean": float(means[k]), "poisson_mean": float(references[k])})
        rows.append(row)
    frame = pd.DataFrame(rows).astype({"k": "int64", "mean": "float64", "poisson_mean": "float64"})
    return histogram_schema(_count_columns(frame)).validate(frame)


def histogram_to_csv(frame: pd.DataFrame) -> str:
    histogram_schema(_count_columns(frame)).validate(frame)
    return frame.to_csv(index=False, float_format="%.12g", lineterminator="\n")


def histogram_from_csv(text: str) -> pd.DataFrame:
    try:
        frame = pd.read_csv(io.StringIO(text))
        return histogram_schema(_count_columns(frame)).validate(frame)
    except (pa.errors.SchemaError, pd.errors.ParserError, ValueError) as exc:
        raise StructuralInputError(f"histogram table failed validation: {exc}") from exc


# JSON records

class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class SampleStatsRecord(_Record):
    n_vertices: int
    k_max: int
    seed: int
    n_samples: int
    one_puncture: bool
    circuit_histograms: Dict[int, Dict[int, int]]
    circuit_means: Dict[int, float]
    poisson_means: Dict[int, float]
    z_scores: Dict[int, float]
    p_values: Dict[int, float]
    correlations: Dict[str, Optional[float]]
    automorphism_fraction: Optional[float] = None
    subgraph_pattern: Optional[str] = None
    subgraph_copy_mean: Optional[float] = None
    attempts: int = 0
    acceptance_rate: Optional[float] = None

    @classmethod
    def from_stats(cls, stats: SampleStats) -> "SampleStatsRecord":
        ks = sorted(stats.circuit_histograms)
        return cls(
            n_vertices=stats.n_vertices,
            k_max=stats.k_max,
            seed=stats.seed,
            n_samples=stats.n_samples,
            one_puncture=stats.one_puncture,
            circuit_histograms={k: dict(sorted(stats.circuit_histograms[k].items())) for k in ks},
            circuit_means=stats.circuit_means,
            poisson_means=stats.poisson_means,
            z_scores=stats.z_scores,
            p_values=stats.p_values,
            correlations={f"{i},{j}": _finite(stats.correlation(i, j)) for i, j in sorted(stats.cross_sums)},
            automorphism_fraction=stats.automorphism_fraction,
            subgraph_pattern=stats.subgraph_pattern,
            subgraph_copy_mean=stats.subgraph_copy_mean,
            attempts=stats.attempts,
            acceptance_rate=stats.acceptance_rate,
        )


class EnumerationRecord(_Record):
    n_vertices: int
    method: str
    oriented: bool
    filter: str
    n_classes: int
    counts: Dict[str, int]
    pairings_covered: int
    class_codes: List[str]
    class_masses: List[int]

    @classmethod
    def from_result(cls, result: EnumerationResult) -> "EnumerationRecord":
        return cls(
            n_vertices=result.n_vertices,
            method=result.method,
            oriented=result.oriented,
            filter=result.filter,
            n_classes=result.n_classes,
            counts=dict(result.counts),
            pairings_covered=result.pairings_covered,
            class_codes=[code.hex() for code in result.class_codes],
            class_masses=list(result.class_masses),
        )


class GenusRecord(_Record):
    """Raw bounds are exact rationals written as 'a/b'."""
    graph: str
    p: Optional[int]
    q: Optional[int]
    h: Optional[int]
    lower: str
    upper: str
    lower_int: int
    upper_int: int
    exact: Optional[int] = None
    closed_form: Optional[int] = None
    envelope: Optional[float] = None
    upper_to_envelope: Optional[float] = None
    method_notes: str = ""

    @classmethod
    def from_report(cls, report: GenusReport, **extra) -> "GenusRecord":
        girth = report.h
        return cls(
            graph=report.graph,
            p=report.p,
            q=report.q,
            h=None if girth is None or (isinstance(girth, float) and math.isinf(girth)) else int(girth),
            lower=str(report.lower),
            upper=str(report.upper),
            lower_int=report.lower_int,
            upper_int=report.upper_int,
            exact=report.exact,
            method_notes=report.method_notes,
            **extra,
        )

    @property
    def lower_fraction(self) -> Fraction:
        return Fraction(self.lower)

    @property
    def upper_fraction(self) -> Fraction:
        return Fraction(self.upper)


class ModularRecord(_Record):
    kind: str
    genus_param: int
    seed: Optional[int]
    summary: Dict[str, Any]
    genus: GenusRecord
    vertex_labels: List[str]


class EnvelopeRow(_Record):
    argument: int
    log_value: float
    value: Optional[float]
    c1: Optional[float]
    c2: Optional[float]
    p: Optional[int] = None
    q: Optional[int] = None
    upper_bound: Optional[str] = None
    upper_to_envelope: Optional[float] = None


class AsymptoticsRecord(_Record):
    kind: str
    shape: str
    rows: List[EnvelopeRow]


class FlipWalkRecord(_Record):
    n_triangles: int
    steps: int
    seed: int
    n_punctures: int
    genus: int
    distinct_classes: int
    invariant_failures: int
    double_flip_failures: int
    passed: bool

    @classmethod
    def from_report(cls, report: FlipWalkReport) -> "FlipWalkRecord":
        return cls(
            n_triangles=report.n_triangles,
            steps=report.steps,
            seed=report.seed,
            n_punctures=report.invariants.n_punctures,
            genus=report.invariants.genus,
            distinct_classes=report.distinct_classes,
            invariant_failures=report.invariant_failures,
            double_flip_failures=report.double_flip_failures,
            passed=report.passed,
        )


def dump_record(record: BaseModel) -> str:
    """Sorted keys, indent 2, trailing newline."""
    return json.dumps(record.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def load_record(model: Type[Record], text: str) -> Record:
    try:
        return model.model_validate_json(text)
    except ValueError as exc:
        raise StructuralInputError(f"{model.__name__} record failed validation: {exc}") from exc

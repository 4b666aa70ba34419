"""Experiment runner behind the command-line interface."""

import time
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from ..configuration import estimate_circuit_stats
from ..enumeration import brute_force_classes, enumerate_cubic_multigraphs, enumerate_one_vertex_triangulations
from ..genus import EnvelopeKind, envelope, envelope_table, genus_report_for_graph
from ..modular import (
    ModularGraph,
    ModularKind,
    build_modular_curve_graph,
    build_modular_flip_graph,
    build_modular_pants_graph,
    graph_summary,
    modular_genus_report,
    to_dot,
)
from ..moves import random_flip_walk
from ..schema import (
    AsymptoticsRecord,
    EnumerationRecord,
    EnvelopeRow,
    FlipWalkRecord,
    GenusRecord,
    ModularRecord,
    SampleStatsRecord,
    dump_record,
    format_collection,
    format_map,
    format_multigraph,
    histogram_frame,
    histogram_to_csv,
    read_graph_file,
    write_text,
)
from ..surface import builtin_graph, sample_one_puncture
from ..utils import get_logger
from ..utils.errors import DomainError, ModsurfError

logger = get_logger(__name__)


class Command(str, Enum):
    ENUMERATE = "enumerate"
    MODULAR = "modular"
    SAMPLE_STATS = "sample-stats"
    GENUS = "genus"
    ASYMPTOTICS = "asymptotics"
    FLIP_WALK = "flip-walk"


FORMATS: Dict[Command, tuple] = {
    Command.ENUMERATE: ("json", "text"),
    Command.MODULAR: ("json", "dot", "text"),
    Command.SAMPLE_STATS: ("json", "csv", "text"),
    Command.GENUS: ("json", "text"),
    Command.ASYMPTOTICS: ("json", "csv", "text"),
    Command.FLIP_WALK: ("json", "text"),
}

# Largest genus for which asymptotics also builds the modular graph.
COMPUTED_GENUS = {EnvelopeKind.PANTS: 4, EnvelopeKind.FLIP: 2}


class RunConfig(BaseModel):
    """Full flag set of one command; identical configs give identical output."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    genus_or_n: int = 0
    samples: int = 0
    seed: int = 0
    output_path: Optional[Path] = None
    format: str = "json"
    workers: Optional[int] = None
    max_attempts: Optional[int] = None
    max_darts: Optional[int] = None
    options: Dict[str, Any] = {}

    @model_validator(mode="after")
    def _format_matches_command(self) -> "RunConfig":
        allowed = FORMATS[self.command]
        if self.format not in allowed:
            raise ValueError(f"format '{self.format}' is not available for {self.command.value}; "
                             f"choose from {', '.join(allowed)}")
        return self

    @classmethod
    def build(cls, **fields) -> "RunConfig":
        """Validate fields, reporting problems as domain errors."""
        try:
            return cls(**fields)
        except ValidationError as exc:
            messages = "; ".join(error["msg"] for error in exc.errors())
            raise DomainError(messages) from None

    def option(self, name: str, default: Any = None) -> Any:
        return self.options.get(name, default)


def _text_lines(pairs: List[tuple]) -> str:
    width = max(len(str(key)) for key, _ in pairs)
    return "\n".join(f"{str(key):<{width}}  {value}" for key, value in pairs) + "\n"


class ExperimentRunner:
    """Runs one command per RunConfig and renders its output."""

    def __init__(self):
        self.handlers = {
            Command.ENUMERATE: self.run_enumerate,
            Command.MODULAR: self.run_modular,
            Command.SAMPLE_STATS: self.run_sample_stats,
            Command.GENUS: self.run_genus,
            Command.ASYMPTOTICS: self.run_asymptotics,
            Command.FLIP_WALK: self.run_flip_walk,
        }

    def run(self, run_config: RunConfig) -> str:
        """Execute, emit to the output path when one is set, and return the rendered text."""
        command = run_config.command.value
        logger.log_run_start(command, run_config.seed)
        started = time.perf_counter()
        status = "failed"
        try:
            text = self.handlers[run_config.command](run_config)
            if run_config.output_path is not None:
                write_text(run_config.output_path, text)
            status = "completed"
            return text
        except ModsurfError as exc:
            logger.error(f"{command} failed", error=str(exc), exit_code=exc.exit_code)
            raise
        finally:
            logger.log_run_end(command, status, time.perf_counter() - started)

    def run_enumerate(self, run_config: RunConfig) -> str:
        """Classes by orderly generation, the brute-force walk, or one-vertex triangulations of genus g."""
        argument = run_config.genus_or_n
        filter = run_config.option("filter", "all")
        method = run_config.option("method", "orderly")
        if run_config.option("oriented", False) and method != "brute":
            raise DomainError("--oriented counts oriented maps and needs --method brute")
        started = time.perf_counter()
        if method == "triangulations":
            result = enumerate_one_vertex_triangulations(argument)
        elif method == "brute":
            if filter != "all":
                raise DomainError("the brute-force walk reports every class; use --filter all")
            result = brute_force_classes(argument, oriented=bool(run_config.option("oriented", False)))
        else:
            result = enumerate_cubic_multigraphs(argument, filter, workers=run_config.workers)
        logger.log_enumeration(method, result.n_vertices, result.n_classes,
                               time.perf_counter() - started, filter=result.filter)

        if run_config.format == "text":
            formatter = format_map if result.oriented else format_multigraph
            return format_collection(list(result.representatives), formatter)
        return dump_record(EnumerationRecord.from_result(result))

    def _modular_graph(self, run_config: RunConfig) -> ModularGraph:
        kind = ModularKind(run_config.option("kind", "curve"))
        g = run_config.genus_or_n
        if kind is ModularKind.CURVE:
            return build_modular_curve_graph(g)
        if kind is ModularKind.PANTS:
            return build_modular_pants_graph(g, workers=run_config.workers)
        return build_modular_flip_graph(g, seed=run_config.seed, workers=run_config.workers,
                                        max_attempts=run_config.max_attempts)

    def run_modular(self, run_config: RunConfig) -> str:
        graph = self._modular_graph(run_config)
        if run_config.format == "dot":
            return to_dot(graph)

        summary = graph_summary(graph)
        genus = modular_genus_report(graph, bool(run_config.option("exact", False)), run_config.max_darts)
        envelope_value = genus.envelope
        genus_record = GenusRecord.from_report(
            genus.report,
            closed_form=genus.closed_form,
            envelope=envelope_value.log_value if envelope_value else None,
            upper_to_envelope=genus.upper_to_envelope,
        )
        record = ModularRecord(
            kind=graph.kind.value,
            genus_param=graph.genus_param,
            seed=run_config.seed,
            summary=summary.to_dict(),
            genus=genus_record,
            vertex_labels=[graph.labels[code] for code in graph.vertices],
        )
        if run_config.format == "json":
            return dump_record(record)

        rows = [(key, value) for key, value in sorted(record.summary.items())]
        rows += [("genus_lower", f"{genus_record.lower} (>= {genus_record.lower_int})"),
                 ("genus_upper", f"{genus_record.upper} (<= {genus_record.upper_int})"),
                 ("genus_exact", genus_record.exact)]
        if genus_record.closed_form is not None:
            rows.append(("genus_closed_form", genus_record.closed_form))
        if genus_record.upper_to_envelope is not None:
            rows.append(("upper_to_envelope", f"{genus_record.upper_to_envelope:.6g}"))
        rows.append(("seed", run_config.seed))
        return _text_lines(rows)

    def run_sample_stats(self, run_config: RunConfig) -> str:
        pattern_name = run_config.option("pattern")
        stats = estimate_circuit_stats(
            run_config.genus_or_n,
            int(run_config.option("k_max", 3)),
            run_config.samples,
            seed=run_config.seed,
            one_puncture=bool(run_config.option("one_puncture", False)),
            pattern=builtin_graph(pattern_name) if pattern_name else None,
            pattern_name=pattern_name,
            track_automorphisms=bool(run_config.option("automorphisms", False)),
            workers=run_config.workers,
            max_attempts=run_config.max_attempts,
        )
        if run_config.format == "csv":
            return histogram_to_csv(histogram_frame(stats))
        record = SampleStatsRecord.from_stats(stats)
        if run_config.format == "json":
            return dump_record(record)

        rows = [("n_vertices", record.n_vertices), ("n_samples", record.n_samples), ("seed", record.seed)]
        for k in sorted(record.circuit_means):
            rows.append((f"X_{k}", f"mean {record.circuit_means[k]:.6f}  poisson {record.poisson_means[k]:.6f}"
                                   f"  z {record.z_scores[k]:+.3f}  p {record.p_values[k]:.4f}"))
        for key, value in (("automorphism_fraction", record.automorphism_fraction),
                           ("subgraph_copy_mean", record.subgraph_copy_mean),
                           ("acceptance_rate", record.acceptance_rate)):
            if value is not None:
                rows.append((key, f"{value:.6g}"))
        return _text_lines(rows)

    def run_genus(self, run_config: RunConfig) -> str:
        source = run_config.option("file")
        graph = read_graph_file(source) if source else builtin_graph(run_config.option("builtin", ""))
        report = genus_report_for_graph(graph, bool(run_config.option("exact", False)),
                                        run_config.max_darts)
        record = GenusRecord.from_report(report)
        if run_config.format == "json":
            return dump_record(record)
        return _text_lines([
            ("graph", record.graph), ("p", record.p), ("q", record.q), ("h", record.h),
            ("lower", f"{record.lower} (>= {record.lower_int})"),
            ("upper", f"{record.upper} (<= {record.upper_int})"),
            ("exact", record.exact), ("notes", record.method_notes),
        ])

    def _computed_bounds(self, kind: EnvelopeKind, g: int, run_config: RunConfig) -> Dict[str, Any]:
        """(p, q) and the upper bound of the modular graph at small g, against its envelope."""
        if kind not in COMPUTED_GENUS or g > COMPUTED_GENUS[kind]:
            return {}
        if kind is EnvelopeKind.PANTS:
            graph = build_modular_pants_graph(g, workers=run_config.workers)
        else:
            graph = build_modular_flip_graph(g, seed=run_config.seed, workers=run_config.workers,
                                             max_attempts=run_config.max_attempts)
        report = modular_genus_report(graph)
        return {
            "p": report.report.p,
            "q": report.report.q,
            "upper_bound": str(report.report.upper),
            "upper_to_envelope": report.upper_to_envelope,
        }

    def run_asymptotics(self, run_config: RunConfig) -> str:
        kind = EnvelopeKind(run_config.option("kind", "pants"))
        start = run_config.genus_or_n
        stop = int(run_config.option("stop", start))
        if stop < start:
            raise DomainError(f"empty range {start}..{stop}")
        arguments = list(range(start, stop + 1))
        table = envelope_table(kind, arguments)

        rows = []
        for values in table.to_dict(orient="records"):
            argument = int(values["argument"])
            value = values["value"]
            rows.append(EnvelopeRow(
                argument=argument,
                log_value=values["log_value"],
                value=None if value == float("inf") else value,
                c1=None if pd.isna(values["c1"]) else values["c1"],
                c2=None if pd.isna(values["c2"]) else values["c2"],
                **self._computed_bounds(kind, argument, run_config),
            ))
        record = AsymptoticsRecord(kind=kind.value, shape=envelope(kind, start).shape, rows=rows)

        if run_config.format == "json":
            return dump_record(record)
        frame = pd.DataFrame([row.model_dump() for row in rows])
        if run_config.format == "csv":
            return frame.to_csv(index=False, float_format="%.12g", lineterminator="\n")
        return f"{kind.value}: {record.shape}\n" + frame.to_string(index=False) + "\n"

    def run_flip_walk(self, run_config: RunConfig) -> str:
        n = run_config.genus_or_n
        start = sample_one_puncture(n, run_config.seed, run_config.max_attempts)
        report = random_flip_walk(start, run_config.samples, run_config.seed)
        record = FlipWalkRecord.from_report(report)
        if run_config.format == "json":
            return dump_record(record)
        return _text_lines(sorted(record.model_dump().items()))

"""Text formats and validated output records."""

from .formats import (
    format_collection,
    format_map,
    format_multigraph,
    format_pairing,
    parse_collection,
    parse_map,
    parse_multigraph,
    parse_pairing,
    read_graph_file,
    write_text,
)
from .tables import (
    AsymptoticsRecord,
    EnumerationRecord,
    EnvelopeRow,
    FlipWalkRecord,
    GenusRecord,
    ModularRecord,
    SampleStatsRecord,
    dump_record,
    histogram_frame,
    histogram_from_csv,
    histogram_schema,
    histogram_to_csv,
    load_record,
)

__all__ = [
    'format_pairing', 'parse_pairing', 'format_multigraph', 'parse_multigraph', 'format_map',
    'parse_map', 'format_collection', 'parse_collection', 'read_graph_file', 'write_text',
    'histogram_schema', 'histogram_frame', 'histogram_to_csv', 'histogram_from_csv',
    'SampleStatsRecord', 'EnumerationRecord', 'GenusRecord', 'ModularRecord', 'EnvelopeRow',
    'AsymptoticsRecord', 'FlipWalkRecord', 'dump_record', 'load_record',
]

#!/usr/bin/env python3
"""
SUPERCHAR - Result Serializers
Renders computation results as versioned JSON payloads or plain text tables
"""

import json
import logging
from typing import Any, Dict, List

from ..core.grassmann import HarmonicReport
from ..core.series import PowerSeries
from ..core.super_characters import CharacterResult
from ..core.wgroups import SignGroupSpec
from . import compute_config

logger = logging.getLogger(__name__)


class ResultSerializer:
    """
    Converts result objects to output formats.

    Supported formats:
    - json: {"schema", "command", "result"} with sorted keys, no timestamps
    - text: human-readable rendering
    """

    @staticmethod
    def payload(command: str, result: Any) -> Dict[str, Any]:
        """
        Wrap a result in the versioned envelope.

        Args:
            command: Subcommand name
            result: Object with to_json(), a list of them, or plain JSON data

        Returns:
            JSON-compatible dictionary
        """
        return {
            'schema': compute_config.SCHEMA_VERSION,
            'command': command,
            'result': ResultSerializer._jsonable(result),
        }

    @staticmethod
    def _jsonable(result: Any) -> Any:
        if hasattr(result, 'to_json'):
            return result.to_json()
        if isinstance(result, (list, tuple)):
            return [ResultSerializer._jsonable(item) for item in result]
        if isinstance(result, dict):
            return {str(key): ResultSerializer._jsonable(value) for key, value in result.items()}
        return result

    @staticmethod
    def to_json(command: str, result: Any) -> str:
        return json.dumps(ResultSerializer.payload(command, result), sort_keys=True, indent=2,
                          ensure_ascii=False)

    @staticmethod
    def to_text(command: str, result: Any) -> str:
        """Plain text rendering; falls back to compact JSON for unknown types."""
        lines = [f"[{command}]"]
        if isinstance(result, CharacterResult):
            pre = result.prefactor
            lines.append(f"prefactor: (y/z)^({pre['y']})")
            if result.combined_pair:
                lines.append("combined: sum of the modules of lam and its bar partition")
            lines.append(f"series (degree <= {result.cap}): {result.series.pretty()}")
        elif isinstance(result, PowerSeries):
            lines.append(result.pretty())
        elif isinstance(result, SignGroupSpec):
            lines.append(f"index set: {{{', '.join(str(i) for i in result.index_set)}}}")
            lines.append(f"parity: {result.parity.value}")
        elif isinstance(result, HarmonicReport):
            lines.append(f"operators checked: {result.operators_checked}")
            lines.append(f"all zero: {result.all_zero}")
            lines.extend(f"  nonzero: {name}" for name in result.failures)
        elif isinstance(result, list):
            lines.extend(ResultSerializer._report_line(item) for item in result)
        elif hasattr(result, 'status'):
            lines.append(ResultSerializer._report_line(result))
        elif hasattr(result, 'entries'):
            lines.extend(ResultSerializer._table_lines(result.to_json()['entries']))
        else:
            lines.append(json.dumps(ResultSerializer._jsonable(result), sort_keys=True))
        return '\n'.join(lines)

    @staticmethod
    def _report_line(report: Any) -> str:
        line = f"{report.status:<12} {report.identity:<20} {report.terms_checked:>8} terms"
        if report.first_mismatch is not None:
            line += f"  first mismatch: {json.dumps(report.first_mismatch, sort_keys=True)}"
        return line

    @staticmethod
    def _table_lines(rows: List[Dict[str, Any]]) -> List[str]:
        if not rows:
            return ["(empty)"]
        lines = []
        for row in rows:
            label = row.get('partition', row.get('weight'))
            lines.append(f"{str(label):<24} {row['coeff']:>6}")
        return lines

    @staticmethod
    def render(command: str, result: Any, format_name: str = compute_config.DEFAULT_FORMAT) -> str:
        """
        Render a result in the requested format.

        Raises:
            ValueError: If format is not supported
        """
        format_name = format_name.lower()
        converters = {'json': ResultSerializer.to_json, 'text': ResultSerializer.to_text}
        if format_name not in converters:
            raise ValueError(
                f"Unsupported format: {format_name}. "
                f"Supported formats: {', '.join(compute_config.OUTPUT_FORMATS)}"
            )
        return converters[format_name](command, result)

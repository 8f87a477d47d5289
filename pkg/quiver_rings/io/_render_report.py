import csv
import io
import json
from typing import Any, Callable, Dict, List, Mapping

import yaml
from rich.console import Console, ConsoleOptions, RenderResult
from rich.text import Text

__all__ = ("ReportView", "render_report", "dump_report", "matrix_to_csv", "OUTPUT_FORMATS",)

OUTPUT_FORMATS = ("text", "json", "yaml")


def matrix_to_csv(names: List[str], rows: List[List[int]]) -> str:
    """
    Write a square matrix as CSV with a header row and a label column.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([""] + names)
    for name, row in zip(names, rows):
        writer.writerow([name] + row)
    return buffer.getvalue()


def _paths_lines(report: Mapping[str, Any]) -> List[str]:
    lines = [f"paths from {report['source']} to {report['target']}: {report['count']}"]
    lines += [f"  {path}" for path in report["paths"]]
    return lines


def _tensor_lines(report: Mapping[str, Any]) -> List[str]:
    family = report["family"]
    return [f"{family}({report['x']}) ⊗ {family}({report['y']}) = {report['decomposition']}"]


def _pie_list_lines(report: Mapping[str, Any]) -> List[str]:
    lines = [f"{report['count']} PIE objects"]
    for obj in report["objects"]:
        dims = ",".join(str(n) for n in obj["dimension_vector"].values())
        support = obj["support"]
        lines.append(f"  {obj['name']}  kinds={'='.join(obj['kinds'])}  "
                     f"vertices={','.join(support['vertices'])}  "
                     f"arrows={','.join(support['arrows']) or '-'}  dim=({dims})")
    return lines


def _matrix_lines(report: Mapping[str, Any]) -> List[str]:
    return matrix_to_csv(report["objects"], report["rows"]).splitlines()


def _idempotents_lines(report: Mapping[str, Any]) -> List[str]:
    lines = [f"e[{entry['object']}] = {entry['expansion']}" for entry in report["idempotents"]]
    lines.append(f"sum = {report['identity']}")
    return lines


def _realization_lines(report: Mapping[str, Any]) -> List[str]:
    base = report["base"]
    lines = [f"{report['object']} over Q = ({','.join(base['vertices'])}; "
             f"{','.join(a['name'] for a in base['arrows']) or '-'})"]
    lines += [f"  {v} over {label}" for v, label in report["vertexLabel"].items()]
    labels = report["arrowLabel"]
    lines += [f"  {a['name']}: {a['from']} → {a['to']} over {labels[a['name']]}"
              for a in report["total"]["arrows"]]
    return lines


def _linearization_lines(report: Mapping[str, Any]) -> List[str]:
    lines = ["dims: " + ", ".join(f"{v}={n}" for v, n in report["dims"].items())]
    for arrow, rows in report["matrices"].items():
        lines.append(f"{arrow}:")
        lines += [f"  {' '.join(str(entry) for entry in row)}" for row in rows] or ["  (empty)"]
    lines += [f"basis {v}: {', '.join(names) or '-'}" for v, names in report["basis"].items()]
    return lines


def _product_lines(report: Mapping[str, Any]) -> List[str]:
    return [f"{report['x']} ×_Q {report['y']} = {report['decomposition']}",
            f"components: {report['component_count']}"]


def _verify_lines(report: Mapping[str, Any]) -> List[str]:
    lines = [f"seed {report['seed']}"]
    for suite in report["suites"]:
        status = "pass" if suite["passed"] else "FAIL"
        lines.append(f"{suite['name']}: {status} ({suite['cases']} cases)")
        failure = suite["failure"]
        if failure is not None:
            lines.append(f"  invariant: {failure['invariant']}")
            lines += [f"  {line}" for line in failure["detail"].splitlines()]
        lines += [f"  note: {note}" for note in suite["notes"]]
    lines.append("all suites passed" if report["passed"] else "verification failed")
    return lines


_RENDERERS: Dict[str, Callable[[Mapping[str, Any]], List[str]]] = {
    "paths": _paths_lines,
    "tensor-proj": _tensor_lines,
    "pie list": _pie_list_lines,
    "pie homs": _matrix_lines,
    "pie mobius": _matrix_lines,
    "pie idempotents": _idempotents_lines,
    "pie realize": _realization_lines,
    "pie product": _product_lines,
    "linearize": _linearization_lines,
    "verify": _verify_lines,
}


def render_report(report: Mapping[str, Any]) -> List[str]:
    """
    Turn a report into the lines of its text form.

    :param report: A payload built by ``ReportBuilder``.
    :return: Output lines without trailing newlines.
    """
    return _RENDERERS[report["command"]](report)


def dump_report(report: Mapping[str, Any], output_format: str) -> str:
    """
    Serialize a report as text, JSON or YAML.

    :param report: A payload built by ``ReportBuilder``.
    :param output_format: One of ``OUTPUT_FORMATS``.
    :return: The document, ending with a newline.
    """
    if output_format == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if output_format == "yaml":
        return yaml.dump(dict(report), sort_keys=False, allow_unicode=True)
    return "\n".join(render_report(report)) + "\n"


class ReportView:
    """
    Renders a report in a rich console, one plain line per text line.
    """

    def __init__(self, report: Mapping[str, Any], output_format: str = "text") -> None:
        self._report = report
        self._output_format = output_format

    def __rich_console__(self, console: Console, options: ConsoleOptions) -> RenderResult:
        for line in dump_report(self._report, self._output_format).splitlines():
            yield Text(line, no_wrap=True, overflow="ignore")

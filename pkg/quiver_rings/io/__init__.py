from ._quiver_reader import QuiverReader, dump_over_q, dump_quiver
from ._render_report import OUTPUT_FORMATS, ReportView, dump_report, matrix_to_csv, render_report
from ._report_builder import ReportBuilder

__all__ = ("QuiverReader", "dump_quiver", "dump_over_q", "ReportBuilder", "ReportView",
           "render_report", "dump_report", "matrix_to_csv", "OUTPUT_FORMATS",)

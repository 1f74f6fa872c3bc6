"""Mechanical verification harness for the identity catalogue."""

from .registry import (IdentitySpec, all_identities, filter_identities,
                       get_identity)
from .reports import (CheckParams, CheckReport, dump_reports,
                      format_report_line, format_report_table,
                      report_from_json)
from .suite import run_check, run_suite, suite_exit_code, summarize

__all__ = [
    "IdentitySpec", "all_identities", "filter_identities", "get_identity",
    "CheckParams", "CheckReport", "dump_reports", "format_report_line",
    "format_report_table", "report_from_json",
    "run_check", "run_suite", "suite_exit_code", "summarize",
]

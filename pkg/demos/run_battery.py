"""Drive the verification harness through its library API.

Runs the conjecture-and-discrepancy slice of the smoke battery, prints
the report table, and shows the machine-readable summary. Equivalent
CLI:

    hpf suite --level smoke --filter conjecture
"""

from hankelpf.harness import (dump_reports, format_report_table, run_suite,
                              suite_exit_code, summarize)


def main():
    reports = run_suite(level="smoke", filter_tag="conjecture")
    print(format_report_table(reports))
    summary = summarize(reports)
    print()
    print(dump_reports(reports[:1], summary))
    print("exit code would be", suite_exit_code(reports))


if __name__ == "__main__":
    main()

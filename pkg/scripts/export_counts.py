#!/usr/bin/env python3
"""
Export stored tilting and quasi-hereditary counts as CSV.

Usage:
    python3 export_counts.py                 # every stored row to stdout
    python3 export_counts.py 8               # rows with n <= 8
    python3 export_counts.py 8 counts.csv    # write to a file

Rows are written by `cli.py counts --max-n N --store`; the store lives in
QLN_DATA_DIR (default ~/.qln-data).
"""

import csv
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'qln'))

from store import CSV_HEADER, CountRecord, check_db_exists, db_path  # noqa: E402


def export_counts(handle, max_n=None):
    """Write header and stored rows; return the number of rows."""
    records = CountRecord.get_all(max_n=max_n)
    writer = csv.writer(handle, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(record.to_csv_row())
    return len(records)


if __name__ == "__main__":
    if not check_db_exists():
        print(f"Error: no count store at {db_path()}", file=sys.stderr)
        sys.exit(1)

    max_n = None
    if len(sys.argv) > 1:
        try:
            max_n = int(sys.argv[1])
        except ValueError:
            print(f"Error: max n must be an integer, got {sys.argv[1]!r}", file=sys.stderr)
            sys.exit(1)

    if len(sys.argv) > 2:
        with open(sys.argv[2], 'w', newline='', encoding='utf-8') as out:
            written = export_counts(out, max_n)
        print(f"[Export] {written} rows written to {sys.argv[2]}", file=sys.stderr)
    else:
        export_counts(sys.stdout, max_n)

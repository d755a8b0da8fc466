"""CSV persistence for bench records."""
import csv
import io
from typing import Iterable, List

from numtheory.errors import InvalidArgument

from .types import CSV_FIELDS, BenchRecord


def emit_csv(records: Iterable[BenchRecord]) -> bytes:
    """UTF-8 CSV with the fixed header and LF line endings."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.to_row())
    return buffer.getvalue().encode("utf-8")


def parse_csv(data: bytes) -> List[BenchRecord]:
    text = data.decode("utf-8")
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise InvalidArgument(f"unexpected CSV header {reader.fieldnames}")
    return [BenchRecord.from_row(row) for row in reader]

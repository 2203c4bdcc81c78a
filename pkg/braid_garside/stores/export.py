import csv
from typing import Iterable, Type, Union

from . import InvariantReport, ReproduceResult


def to_csv(
    records: Iterable[Union[InvariantReport, ReproduceResult]],
    filename,
    record_type: Type = InvariantReport,
):
    """Writes report records to a csv file, one row per record

    List valued fields (`orbit_sizes`) are joined with spaces.
    """
    with open(filename, "w", newline="") as csvfile:
        fieldnames = list(record_type.__annotations__)
        writer = csv.DictWriter(csvfile, fieldnames=fieldnames)
        writer.writeheader()
        for data in records:
            writer.writerow(
                {
                    key: " ".join(str(v) for v in value) if isinstance(value, list) else value
                    for key, value in data.items()
                }
            )

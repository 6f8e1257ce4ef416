"""
Print rows 1..n of a Mahonian triangle.

    manage.py triangle --type b --n 5 --with-totals
    5,48000,1,5,14,30,...
"""
import io

from mahonian.export import rows_as_records, triangle_rows, write_csv
from mahonian.triangles import TriangleKind

from ..base import KernelCommand


class Command(KernelCommand):
    help = "Print the type-A or type-B Mahonian triangle up to row n."

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="kind", choices=TriangleKind.values, required=True)
        parser.add_argument("--n", type=int, required=True, help="last row to print")
        parser.add_argument("--format", choices=("csv", "json"), default="csv")
        parser.add_argument("--with-totals", action="store_true", help="prepend the inversion total of each row")
        parser.add_argument("--long", action="store_true", help="csv as n,k,value cells with a header")

    def handle(self, *args, **options):
        n = options["n"]
        if n < 1:
            raise self.usage_error(f"--n must be >= 1, got {n}")

        with self.domain_errors():
            rows = triangle_rows(options["kind"], n)

        if options["format"] == "json":
            self.write_json(rows_as_records(rows, with_totals=options["with_totals"]))
            return

        buf = io.StringIO()
        write_csv(rows, buf, with_totals=options["with_totals"], long=options["long"])
        self.stdout.write(buf.getvalue(), ending="")

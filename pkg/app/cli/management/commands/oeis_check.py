"""
Compare generated triangle rows and totals against the bundled reference
tables (A008302 for type A, A128084 for type B).
"""
import csv

from django.core.management.base import CommandError

from mahonian.fixtures import fixtures_dir, load_fixture, compare_with_fixture
from mahonian.triangles import TriangleKind

from ...serializers import VerificationReportSerializer
from ..base import EXIT_FAILED, KernelCommand


class Command(KernelCommand):
    help = "Check generated Mahonian triangles against the bundled reference tables."

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="kind", choices=TriangleKind.values, required=True)
        parser.add_argument("--fixtures-dir", default=None, help="directory holding table_<type>.csv and totals_<type>.csv")
        parser.add_argument("--format", choices=("text", "json"), default="text")

    def handle(self, *args, **options):
        directory = options["fixtures_dir"] or fixtures_dir()
        try:
            fixture = load_fixture(options["kind"], directory)
        except FileNotFoundError as exc:
            raise self.usage_error(f"missing fixture: {exc.filename}") from exc
        except (KeyError, ValueError, csv.Error) as exc:
            raise self.usage_error(f"malformed fixture in {directory}: {exc}") from exc

        with self.domain_errors():
            report = compare_with_fixture(fixture)

        if options["format"] == "json":
            self.write_json(VerificationReportSerializer(report).data)
        elif report.passed:
            self.stdout.write(self.style.SUCCESS(
                f"PASS type {options['kind']}: {len(fixture.rows)} rows, {len(fixture.totals)} totals"
            ))
        else:
            self.stdout.write(self.style.ERROR(f"FAIL type {options['kind']}: {report.first_failure}"))

        if not report.passed:
            raise CommandError(f"mismatch at {report.first_failure}", returncode=EXIT_FAILED)

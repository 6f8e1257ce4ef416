from django.conf import settings
from django.core.management.base import CommandError

from ...checks import CHECK_NAMES, CheckContext, run_checks
from ...serializers import VerificationReportSerializer
from ..base import EXIT_FAILED, KernelCommand


class Command(KernelCommand):
    help = "Run a named verification suite (or all of them) and report pass/fail."

    def add_arguments(self, parser):
        parser.add_argument("--check", choices=CHECK_NAMES, required=True)
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--format", choices=("text", "json"), default="text")
        parser.add_argument(
            "--jobs",
            type=int,
            default=None,
            help=f"worker processes for brute-force checks (default {getattr(settings, 'ENUMERATION_JOBS', 1)})",
        )
        parser.add_argument("--ceiling", type=int, default=None, help="override the enumeration ceiling")
        parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        parser.add_argument("--samples", type=int, default=10_000, help="sample size beyond exhaustive range")
        parser.add_argument("--no-progress", action="store_true")

    def handle(self, *args, **options):
        if options["jobs"] is not None and options["jobs"] < 1:
            raise self.usage_error("--jobs must be >= 1")
        if options["samples"] < 1:
            raise self.usage_error("--samples must be >= 1")

        ctx = CheckContext(
            jobs=options["jobs"],
            progress=None if options["no_progress"] else self.progress_printer(options["check"]),
            ceiling=options["ceiling"],
            seed=options["seed"],
            samples=options["samples"],
        )

        with self.domain_errors():
            reports = run_checks(options["check"], options["n"], ctx)

        if options["format"] == "json":
            self.write_json(VerificationReportSerializer(reports, many=True).data)
        else:
            for report in reports:
                self.stdout.write(self._line(report))

        failed = [r.check_name for r in reports if not r.passed]
        if failed:
            raise CommandError(f"{len(failed)} of {len(reports)} checks failed: {', '.join(failed)}", returncode=EXIT_FAILED)

    def _line(self, report) -> str:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        head = f"{'PASS' if report.passed else 'FAIL'} {report.check_name} {params}".rstrip()
        if report.passed:
            return self.style.SUCCESS(f"{head} ({report.elapsed:.3f}s)")
        return self.style.ERROR(f"{head}: {report.first_failure}")

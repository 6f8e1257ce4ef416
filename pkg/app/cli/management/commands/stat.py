from core.permutations import parse_window

from ...statistics import STAT_KEYS, compute_stats, parse_show
from ..base import KernelCommand


class Command(KernelCommand):
    help = "Print statistics of one signed permutation, one key=value per line."

    def add_arguments(self, parser):
        parser.add_argument("--perm", required=True, help='window, e.g. "7 3 -2 8 -6 -4 -1 5"')
        parser.add_argument(
            "--show",
            default="",
            help=f"comma-separated subset of {','.join(STAT_KEYS)} (default: all)",
        )

    def handle(self, *args, **options):
        with self.domain_errors():
            w = parse_window(options["perm"])
            keys = parse_show(options["show"])

        for key, value in compute_stats(w, keys).items():
            self.stdout.write(f"{key}={value}")

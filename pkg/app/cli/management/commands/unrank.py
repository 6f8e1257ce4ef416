from codes.bijection import unrank
from core.permutations import format_window

from ..base import KernelCommand


class Command(KernelCommand):
    help = "Print the signed permutation of B_n with the given rank."

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--rank", type=int, required=True)

    def handle(self, *args, **options):
        n = options["n"]
        if n < 1:
            raise self.usage_error(f"--n must be >= 1, got {n}")
        with self.domain_errors():
            w = unrank(options["rank"], n)
        self.stdout.write(format_window(w))

from codes.bijection import rank
from core.permutations import parse_window

from ..base import KernelCommand


class Command(KernelCommand):
    help = "Print the mixed-radix rank of a signed permutation."

    def add_arguments(self, parser):
        parser.add_argument("--perm", required=True)

    def handle(self, *args, **options):
        with self.domain_errors():
            w = parse_window(options["perm"])
        self.stdout.write(str(rank(w)))

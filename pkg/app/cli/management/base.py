"""
Shared plumbing for the kernel's management commands.

Exit codes: 0 success, 1 a check or fixture comparison failed, 2 bad
arguments (including any domain error raised while reading them).
"""
from __future__ import annotations

import logging
from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from core.exceptions import HyperoctahedralError

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2


class KernelCommand(BaseCommand):
    requires_system_checks = []

    def usage_error(self, message: str) -> CommandError:
        return CommandError(message, returncode=EXIT_USAGE)

    @contextmanager
    def domain_errors(self):
        try:
            yield
        except HyperoctahedralError as exc:
            logger.debug("%s rejected: %s", self.__module__, exc)
            raise self.usage_error(str(exc)) from exc

    def write_json(self, data) -> None:
        self.stdout.write(JSONRenderer().render(data).decode("utf-8"))

    def progress_printer(self, label: str):
        """Progress hook writing "label: done/total" to stderr."""

        def report(done: int, total: int) -> None:
            self.stderr.write(f"{label}: {done}/{total} ranks ({100 * done // max(total, 1)}%)")

        return report

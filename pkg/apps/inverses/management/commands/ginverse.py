"""
ginverse management command

Computes a generalized inverse (or a determinant, rank or index) of quaternion
matrices read from files and writes a report.

Example:
    python manage.py ginverse wdmp --a fixtures/example/A.txt \\
        --w fixtures/example/W.txt --trace --verify

Exit status: 0 on success, 1 for unreadable or unparsable input, 2 for an
invalid job or a violated precondition, 3 when a requested verification
fails (the report is written first).
"""

import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from apps.inverses.serializers import ALL_VARIANTS, COMMANDS
from apps.inverses.services import InverseService
from apps.oracle.exceptions import InternalOracleFailure
from apps.oracle.verification import SYSTEMS
from apps.quaternions.exceptions import GInverseError, LiteralError

logger = logging.getLogger(__name__)

JOB_FIELDS = (
    'command', 'a', 'w', 'x', 'system', 'variant', 'side', 'index',
    'trace', 'verify', 'json', 'max_dim', 'threads', 'output',
)


def _describe(detail):
    """Flatten a DRF error detail into one line."""
    if isinstance(detail, dict):
        return '; '.join(f'{key}: {_describe(value)}' for key, value in detail.items())
    if isinstance(detail, list):
        return ', '.join(_describe(item) for item in detail)
    return str(detail)


class Command(BaseCommand):
    help = 'Compute generalized inverses of quaternion matrices by row and column determinants.'

    def add_arguments(self, parser):
        parser.add_argument('command', choices=COMMANDS)
        parser.add_argument('--a', required=True, help='matrix A (text or JSON file)')
        parser.add_argument('--w', default=None, help='weight W, n×m for an m×n A')
        parser.add_argument('--x', default=None, help='candidate inverse for the verify command')
        parser.add_argument('--system', default=None, choices=sorted(SYSTEMS),
                            help='characterizing system for the verify command')
        parser.add_argument('--variant', default='auto',
                            choices=['auto', 'general'] + [v.replace('_', '-') for v in ALL_VARIANTS]
                            + list(ALL_VARIANTS))
        parser.add_argument('--side', default=None, choices=['left', 'right'])
        parser.add_argument('--index', type=int, default=None, help='1-based anchor of rdet/cdet')
        parser.add_argument('--trace', action='store_true', help='print named intermediates')
        parser.add_argument('--verify', action='store_true', help='check the characterizing system')
        parser.add_argument('--json', action='store_true', help='write the JSON report')
        parser.add_argument('--max-dim', type=int, default=None, help='dimension cap for determinant sums')
        parser.add_argument('--threads', type=int, default=None, help='worker threads for entrywise sums')
        parser.add_argument('--output', default=None, help='write the report here instead of stdout')

    def handle(self, *args, **options):
        try:
            job = InverseService.validate_job({name: options[name] for name in JOB_FIELDS})
        except serializers.ValidationError as exc:
            raise CommandError(f"invalid job: {_describe(exc.detail)}", returncode=2)

        try:
            report = InverseService.run(job)
        except (LiteralError, serializers.ValidationError) as exc:
            detail = _describe(exc.detail) if isinstance(exc, serializers.ValidationError) else exc
            raise CommandError(f"cannot read input: {detail}", returncode=1)
        except InternalOracleFailure:
            raise
        except GInverseError as exc:
            logger.warning("ginverse %s rejected: %s", job['command'], exc)
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=2)

        text = InverseService.render_json(report) if job['json'] else InverseService.render_text(report)
        if job['output']:
            try:
                with open(job['output'], 'w', encoding='utf-8') as handle:
                    handle.write(text)
            except OSError as exc:
                raise CommandError(f"cannot write {job['output']}: {exc}", returncode=1)
        else:
            self.stdout.write(text, ending='')

        if not report.verified:
            failed = '; '.join(
                f"{verdict.system}: {', '.join(verdict.failed)}"
                for verdict in report.verdicts if not verdict.holds
            )
            raise CommandError(f"verification failed ({failed})", returncode=3)

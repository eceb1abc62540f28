"""
Business Logic Services for Inverses App

This module runs one `ginverse` job: it loads the matrices, dispatches to the
determinantal representations, optionally verifies the result against its
characterizing system through the oracle, and renders the report.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from apps.oracle.verification import verify_system
from apps.quaternions import conf
from apps.quaternions.determinants import cdet, hdet, rdet
from apps.quaternions.exceptions import LiteralError
from apps.quaternions.literals import format_matrix_text, format_quaternion, parse_matrix_text
from apps.quaternions.matrices import QMatrix
from apps.quaternions.scalars import Quaternion
from apps.quaternions.serializers import load_matrix

from . import representations, weighted
from .pairs import WeightedPair
from .serializers import (
    ALL_VARIANTS, VERIFY_SYSTEMS, WEIGHTED_COMMANDS, JobSpecSerializer, ReportSerializer,
)

logger = logging.getLogger(__name__)

SECTION = re.compile(r'^\[(meta|result|trace|verify)\]$')


@dataclass
class Report:
    """Everything one job produced, in the order it is printed."""

    command: str
    meta: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    trace: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)

    @property
    def verified(self):
        return all(verdict.holds for verdict in self.verdicts)


# Variant choices per weighted command: (allowed concrete variants, `general` side)
VARIANT_RULES = {
    'wdrazin': (ALL_VARIANTS, representations.smaller_side),
    'drazin': (ALL_VARIANTS, representations.smaller_side),
    'wcmp': (ALL_VARIANTS, representations.smaller_side),
    'wdmp': (('general_u', 'hermitian_wa'), lambda pair: 'general_u'),
    'wmpd': (('general_v', 'hermitian_aw'), lambda pair: 'general_v'),
}


def _pair_meta(pair, variant=None):
    meta = {
        'r': pair.r,
        'r1': pair.r1,
        'ind_WA': pair.index_u,
        'ind_AW': pair.index_v,
        'k': pair.k,
    }
    if variant is not None:
        meta['variant'] = variant
    return meta


def _resolve(command, pair, variant):
    allowed, general = VARIANT_RULES[command]
    return representations.choose_variant(pair, variant, allowed, general(pair))


def _mp(A, W, job, trace):
    return {'A_dagger': representations.mp_inverse(A, trace=trace)}, {'r': A.rank()}


def _projectors(A, W, job, trace):
    results = {
        'P_A': representations.projector_p(A),
        'Q_A': representations.projector_q(A),
    }
    return results, {'r': A.rank()}


def _wdrazin(A, W, job, trace):
    pair = WeightedPair(A, W)
    variant = _resolve('wdrazin', pair, job['variant'])
    return {'A_dW': representations.wdrazin(pair, variant, trace)}, _pair_meta(pair, variant)


def _drazin(A, W, job, trace):
    pair = WeightedPair.unweighted(A)
    variant = _resolve('drazin', pair, job['variant'])
    meta = {'r': pair.r, 'k': pair.k, 'variant': variant}
    return {'A_D': representations.wdrazin(pair, variant, trace)}, meta


def _core_ep(A, W, job, trace):
    compute = representations.core_ep_right if job['side'] == 'right' else representations.core_ep_left
    X = compute(A, trace)
    k = A.index()
    return {f'core_ep_{job["side"]}': X}, {'k': k, 's': A.power(k).rank()}


def _core(A, W, job, trace):
    compute = representations.core_right if job['side'] == 'right' else representations.core_left
    X = compute(A, trace)
    return {f'core_{job["side"]}': X}, {'k': A.index(), 'r': A.rank()}


def _wcep(A, W, job, trace):
    pair = WeightedPair(A, W)
    compute = weighted.wcep_right if job['side'] == 'right' else weighted.wcep_left
    return {f'wcep_{job["side"]}': compute(pair, trace)}, _pair_meta(pair)


def _weighted(name, compute):
    def handler(A, W, job, trace):
        pair = WeightedPair(A, W)
        variant = _resolve(name, pair, job['variant'])
        return {name: compute(pair, variant, trace)}, _pair_meta(pair, variant)
    return handler


def _rdet(A, W, job, trace):
    return {f'rdet_{job["index"]}': rdet(A, job['index'])}, {}


def _cdet(A, W, job, trace):
    return {f'cdet_{job["index"]}': cdet(A, job['index'])}, {}


def _hdet(A, W, job, trace):
    return {'hdet': hdet(A)}, {}


def _rank(A, W, job, trace):
    return {'rank': A.rank()}, {}


def _index(A, W, job, trace):
    return {'index': A.index()}, {}


HANDLERS = {
    'mp': _mp,
    'projectors': _projectors,
    'wdrazin': _wdrazin,
    'drazin': _drazin,
    'core-ep': _core_ep,
    'core': _core,
    'wcep': _wcep,
    'wdmp': _weighted('wdmp', weighted.wdmp),
    'wmpd': _weighted('wmpd', weighted.wmpd),
    'wcmp': _weighted('wcmp', weighted.wcmp),
    'rdet': _rdet,
    'cdet': _cdet,
    'hdet': _hdet,
    'rank': _rank,
    'index': _index,
}


def _format_scalar(value):
    if isinstance(value, Quaternion):
        return format_quaternion(value)
    return str(value)


def _render_values(values):
    lines = []
    for name, value in values.items():
        if isinstance(value, QMatrix):
            lines.append(f'# {name}')
            lines.extend(format_matrix_text(value).splitlines())
        else:
            lines.append(f'{name} = {_format_scalar(value)}')
    return lines


def is_report(text):
    first = next((line.strip() for line in text.splitlines() if line.strip()), '')
    return first == '[meta]'


def read_report_results(text):
    """
    The named matrices of a report's [result] section.

    Returns:
        dict: name -> QMatrix, in report order
    """
    sections, current = {}, None
    for line in text.splitlines():
        match = SECTION.match(line.strip())
        if match:
            current = match.group(1)
            sections.setdefault(current, [])
        elif current is not None:
            sections[current].append(line)

    results, name, block = {}, None, []
    for line in sections.get('result', []) + ['# ']:
        stripped = line.strip()
        if stripped.startswith('#'):
            if name:
                results[name] = parse_matrix_text('\n'.join(block))
            name, block = stripped[1:].strip(), []
        elif name and stripped and '=' not in stripped:
            block.append(stripped)
    return results


class InverseService:
    """
    Inverse Service

    Handles one job of the `ginverse` command:
    - Validating the job description
    - Loading matrices from text, JSON or earlier reports
    - Computing the requested inverse, determinant, rank or index
    - Verifying results and rendering text or JSON reports
    """

    @staticmethod
    def validate_job(data):
        """
        Validate a job description.

        Raises:
            serializers.ValidationError: on any cross-field rule violation
        """
        serializer = JobSpecSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    @staticmethod
    def read_matrix(path):
        """
        Load a matrix file in the text format, its JSON alternative, or the
        single [result] matrix of a report written by this command.

        Raises:
            LiteralError: unreadable file or text-format problems
            serializers.ValidationError: JSON-format problems
        """
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as exc:
            raise LiteralError(f"cannot read {path}: {exc}") from exc
        if is_report(text):
            results = read_report_results(text)
            if len(results) != 1:
                raise LiteralError(f"{path}: expected one result matrix, found {len(results)}")
            return next(iter(results.values()))
        return load_matrix(text)

    @staticmethod
    def run(job):
        """
        Run a validated job.

        Args:
            job (dict): validated data of JobSpecSerializer

        Returns:
            Report
        """
        command = job['command']
        logger.info("ginverse %s: start", command)
        with conf.limits(max_dim=job['max_dim'], threads=job['threads']):
            A = InverseService.read_matrix(job['a'])
            W = InverseService.read_matrix(job['w']) if job['w'] else None
            report = Report(command, meta={'m': A.rows, 'n': A.cols})
            trace = {} if job['trace'] else None

            if command == 'verify':
                X = InverseService.read_matrix(job['x'])
                report.meta['system'] = job['system']
                report.verdicts.append(verify_system(job['system'], A, W, X))
            else:
                results, meta = HANDLERS[command](A, W, job, trace)
                report.results.update(results)
                report.meta.update(meta)
                if trace:
                    report.trace.update(trace)
                if job['verify']:
                    report.verdicts.extend(InverseService.verify(command, job, A, W, results))

        logger.info("ginverse %s: done (verified=%s)", command, report.verified)
        return report

    @staticmethod
    def verify(command, job, A, W, results):
        """Check each result against the characterizing system of its command."""
        systems = [name.format(side=job['side']) for name in VERIFY_SYSTEMS[command]]
        weight = W if command in WEIGHTED_COMMANDS else None
        return [
            verify_system(system, A, weight, X)
            for system, X in zip(systems, results.values())
        ]

    @staticmethod
    def render_text(report):
        lines = ['[meta]', f'command = {report.command}']
        lines.extend(f'{key} = {value}' for key, value in report.meta.items())
        if report.results:
            lines.extend(['', '[result]'])
            lines.extend(_render_values(report.results))
        if report.trace:
            lines.extend(['', '[trace]'])
            lines.extend(_render_values(report.trace))
        if report.verdicts:
            lines.extend(['', '[verify]'])
            for verdict in report.verdicts:
                lines.append(f'system = {verdict.system}')
                for check in verdict.equations:
                    if check.holds:
                        lines.append(f'{check.label} : holds')
                    else:
                        lines.append(f'{check.label} : fails (residual {format_quaternion(check.residual)})')
                lines.append(f'holds = {str(verdict.holds).lower()}')
        return '\n'.join(lines) + '\n'

    @staticmethod
    def render_json(report):
        data = ReportSerializer(report).data
        return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8') + '\n'


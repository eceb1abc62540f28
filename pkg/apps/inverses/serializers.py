"""
Serializers for Inverses App

JobSpecSerializer validates one command-line job before anything is parsed
or computed; the report serializers build the JSON mirror of a report.
"""

from fractions import Fraction

from rest_framework import serializers

from apps.oracle.verification import SYSTEMS
from apps.quaternions.literals import format_quaternion
from apps.quaternions.matrices import QMatrix
from apps.quaternions.serializers import MatrixSerializer, QuaternionField
from apps.quaternions.scalars import Quaternion

COMMANDS = (
    'mp', 'projectors', 'wdrazin', 'drazin', 'core-ep', 'core', 'wcep',
    'wdmp', 'wmpd', 'wcmp', 'rdet', 'cdet', 'hdet', 'rank', 'index', 'verify',
)
WEIGHTED_COMMANDS = {'wdrazin', 'wcep', 'wdmp', 'wmpd', 'wcmp'}
SIDED_COMMANDS = {'core-ep', 'core', 'wcep'}
ANCHORED_COMMANDS = {'rdet', 'cdet'}

ALL_VARIANTS = ('general_u', 'general_v', 'hermitian_wa', 'hermitian_aw')
VARIANTS_BY_COMMAND = {
    'wdrazin': ALL_VARIANTS,
    'drazin': ALL_VARIANTS,
    'wcmp': ALL_VARIANTS,
    'wdmp': ('general_u', 'hermitian_wa'),
    'wmpd': ('general_v', 'hermitian_aw'),
}

# Characterizing system checked by --verify, per command and side
VERIFY_SYSTEMS = {
    'mp': ('penrose',),
    'projectors': ('projector_p', 'projector_q'),
    'wdrazin': ('wdrazin',),
    'drazin': ('drazin',),
    'core-ep': ('core_ep_{side}',),
    'core': ('core_ep_{side}',),
    'wcep': ('wcep_{side}',),
    'wdmp': ('wdmp',),
    'wmpd': ('wmpd',),
    'wcmp': ('wcmp',),
}


class JobSpecSerializer(serializers.Serializer):
    """
    One `ginverse` invocation.

    Validates cross-field rules: W exactly for weighted commands, a side for
    core-EP/core/wcep, an anchor index for rdet/cdet, X and a system name for
    verify, and a variant the chosen inverse actually has.
    """

    command = serializers.ChoiceField(choices=COMMANDS)
    a = serializers.CharField()
    w = serializers.CharField(required=False, allow_null=True, default=None)
    x = serializers.CharField(required=False, allow_null=True, default=None)
    system = serializers.ChoiceField(choices=sorted(SYSTEMS), required=False, allow_null=True, default=None)
    variant = serializers.ChoiceField(choices=('auto', 'general') + ALL_VARIANTS, default='auto')
    side = serializers.ChoiceField(choices=('left', 'right'), required=False, allow_null=True, default=None)
    index = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    trace = serializers.BooleanField(default=False)
    verify = serializers.BooleanField(default=False)
    json = serializers.BooleanField(default=False)
    max_dim = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    output = serializers.CharField(required=False, allow_null=True, default=None)

    def to_internal_value(self, data):
        # --variant accepts the hyphenated spelling
        if isinstance(data, dict) and isinstance(data.get('variant'), str):
            data = {**data, 'variant': data['variant'].replace('-', '_')}
        return super().to_internal_value(data)

    def validate(self, attrs):
        command = attrs['command']
        errors = {}

        if command in WEIGHTED_COMMANDS and not attrs['w']:
            errors['w'] = f"'{command}' needs a weight matrix (--w)"
        elif command not in WEIGHTED_COMMANDS | {'verify'} and attrs['w']:
            errors['w'] = f"'{command}' takes no weight matrix"

        if command in SIDED_COMMANDS and not attrs['side']:
            errors['side'] = f"'{command}' needs --side left|right"

        if command in ANCHORED_COMMANDS and attrs['index'] is None:
            errors['index'] = f"'{command}' needs the anchor --index"

        if command == 'verify':
            if not attrs['x']:
                errors['x'] = "'verify' needs the candidate matrix (--x)"
            if not attrs['system']:
                errors['system'] = "'verify' needs --system"

        if attrs['variant'] != 'auto' and attrs['variant'] != 'general':
            allowed = VARIANTS_BY_COMMAND.get(command)
            if allowed is None:
                errors['variant'] = f"'{command}' has no formula variants"
            elif attrs['variant'] not in allowed:
                errors['variant'] = f"'{command}' has no variant '{attrs['variant']}'"

        if attrs['verify'] and command not in VERIFY_SYSTEMS:
            errors['verify'] = f"'{command}' has no characterizing system to verify"

        if errors:
            raise serializers.ValidationError(errors)
        return attrs


def represent_value(value):
    """JSON form of a report value: matrices as objects, scalars as literals."""
    if isinstance(value, QMatrix):
        return MatrixSerializer().to_representation(value)
    if isinstance(value, Quaternion):
        return format_quaternion(value)
    if isinstance(value, Fraction):
        return str(value)
    return value


class EquationCheckSerializer(serializers.Serializer):
    label = serializers.CharField()
    holds = serializers.BooleanField()
    residual = QuaternionField()


class VerdictSerializer(serializers.Serializer):
    """A VerificationVerdict with its per-equation residuals."""

    system = serializers.CharField()
    holds = serializers.BooleanField()
    equations = EquationCheckSerializer(many=True)


class ReportSerializer(serializers.Serializer):
    """JSON mirror of the text report."""

    command = serializers.CharField()
    meta = serializers.DictField()
    result = serializers.SerializerMethodField()
    trace = serializers.SerializerMethodField()
    verify = VerdictSerializer(many=True, source='verdicts')

    def get_result(self, report):
        return {name: represent_value(value) for name, value in report.results.items()}

    def get_trace(self, report):
        return {name: represent_value(value) for name, value in report.trace.items()}

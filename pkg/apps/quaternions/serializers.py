"""
Serializers for quaternion matrices.

Handles conversion between QMatrix objects and the JSON matrix format
`{"rows": m, "cols": n, "data": [["0", "i", "0"], ...]}` where every entry
is a quaternion literal string.
"""

import json

from rest_framework import serializers

from .exceptions import LiteralError
from .literals import format_quaternion, parse_matrix_text, parse_quaternion
from .matrices import QMatrix


class QuaternionField(serializers.Field):
    """A quaternion written as a literal string such as `-2+3*j`."""

    default_error_messages = {
        'invalid': 'Not a valid quaternion literal: {reason}',
    }

    def to_internal_value(self, data):
        if not isinstance(data, (str, int)) or isinstance(data, bool):
            self.fail('invalid', reason=f'expected a string, got {type(data).__name__}')
        try:
            return parse_quaternion(str(data))
        except LiteralError as exc:
            self.fail('invalid', reason=str(exc))

    def to_representation(self, value):
        return format_quaternion(value)


class MatrixSerializer(serializers.Serializer):
    """
    Serializer for the JSON matrix format.

    Validation checks that `data` has `rows` rows of `cols` entries each;
    `to_matrix()` returns the validated QMatrix.
    """

    rows = serializers.IntegerField(min_value=0)
    cols = serializers.IntegerField(min_value=0)
    data = serializers.ListField(
        child=serializers.ListField(child=QuaternionField(), allow_empty=True),
        allow_empty=True,
    )

    def validate(self, attrs):
        """Check that the declared shape matches the entries."""
        if len(attrs['data']) != attrs['rows']:
            raise serializers.ValidationError(
                f"declared {attrs['rows']} rows, found {len(attrs['data'])}"
            )
        for number, row in enumerate(attrs['data'], start=1):
            if len(row) != attrs['cols']:
                raise serializers.ValidationError(
                    f"row {number} has {len(row)} entries, expected {attrs['cols']}"
                )
        return attrs

    def to_matrix(self):
        attrs = self.validated_data
        return QMatrix(attrs['data'], shape=(attrs['rows'], attrs['cols']))

    def to_representation(self, instance):
        return {
            'rows': instance.rows,
            'cols': instance.cols,
            'data': [[format_quaternion(q) for q in row] for row in instance.data],
        }


def load_matrix(text):
    """
    Parse a matrix from either the text format or its JSON alternative.

    Raises:
        LiteralError: text format problems
        serializers.ValidationError: JSON format problems
    """
    if text.lstrip().startswith('{'):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise LiteralError(f"invalid JSON matrix: {exc}") from exc
        serializer = MatrixSerializer(data=payload)
        serializer.is_valid(raise_exception=True)
        return serializer.to_matrix()
    return parse_matrix_text(text)

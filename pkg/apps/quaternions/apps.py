"""
Quaternions App Configuration

This app holds the exact scalar and matrix layer: rational quaternions,
dense quaternion matrices, the complex-adjoint embedding and the row/column
determinants every determinantal representation is assembled from.
"""

from django.apps import AppConfig


class QuaternionsConfig(AppConfig):
    """Configuration class for the quaternions app."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.quaternions'
    verbose_name = 'Quaternion Arithmetic'

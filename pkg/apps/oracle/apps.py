"""
Oracle App Configuration

Ground truth for every inverse, computed through the complex-adjoint
embedding without touching the determinant layer.
"""

from django.apps import AppConfig


class OracleConfig(AppConfig):
    """Configuration class for the oracle app."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.oracle'
    verbose_name = 'Embedding Oracle'

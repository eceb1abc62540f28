"""
Inverses App Configuration

This app computes generalized inverses of quaternion matrices from their
determinantal representations and exposes them through the `ginverse`
management command.
"""

from django.apps import AppConfig


class InversesConfig(AppConfig):
    """Configuration class for the inverses app."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.inverses'
    verbose_name = 'Generalized Inverses'
